#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace filtval {

/// Canonical exact encoding of a carrier element. The interpretation is
/// instance-specific (residue, signed integer, low-to-high coefficient list,
/// length-prefixed pair); equality of encodings is element equality.
using Encoding = std::vector<std::int64_t>;

/// A ring or module element, bound to the instance that produced it.
struct Element {
    std::uint32_t instance_tag = 0;
    Encoding enc;

    friend bool operator==(const Element&, const Element&) = default;
};

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct EncodingHash {
    std::size_t operator()(const Encoding& e) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (std::int64_t v : e) {
            for (int i = 0; i < 8; ++i) {
                h ^= static_cast<unsigned char>(v >> (8 * i));
                h *= 1099511628211ull;
            }
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace filtval
