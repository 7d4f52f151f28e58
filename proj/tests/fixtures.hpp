#pragma once

// Deliberately broken instances for exercising FAIL and INCONCLUSIVE paths.

#include <functional>
#include <utility>

#include "filtval/instance.hpp"

namespace fixtures {

using filtval::Element;
using filtval::InstancePtr;

/// Residue carrier with a pluggable level oracle and an optional corrupted
/// addition table.
class ZmodFixture : public filtval::FilteredInstance {
public:
    using LevelFn = std::function<bool(std::int64_t, int)>;
    using AddFn = std::function<std::int64_t(std::int64_t, std::int64_t)>;

    ZmodFixture(std::string id, std::int64_t m, LevelFn level, bool stab_zero,
                std::optional<int> depth, AddFn add_override = nullptr)
        : FilteredInstance(std::move(id), true, stab_zero, depth, static_cast<std::uint64_t>(m),
                           static_cast<std::uint64_t>(m)),
          m_(m),
          level_(std::move(level)),
          add_override_(std::move(add_override)) {}

    Element ring_zero() const override { return make(0); }
    Element ring_one() const override { return make(1); }
    Element ring_add(const Element& a, const Element& b) const override {
        if (add_override_) return make(add_override_(a.enc[0], b.enc[0]));
        return make(a.enc[0] + b.enc[0]);
    }
    Element ring_negate(const Element& a) const override { return make(-a.enc[0]); }
    Element ring_multiply(const Element& a, const Element& b) const override {
        return make(a.enc[0] * b.enc[0]);
    }
    Element module_zero() const override { return ring_zero(); }
    Element module_add(const Element& x, const Element& y) const override { return ring_add(x, y); }
    Element module_negate(const Element& x) const override { return ring_negate(x); }
    Element scalar(const Element& a, const Element& x) const override { return ring_multiply(a, x); }
    bool ring_less(const Element& a, const Element& b) const override { return a.enc[0] < b.enc[0]; }
    bool module_less(const Element& x, const Element& y) const override { return ring_less(x, y); }
    std::vector<Element> ring_elements() const override {
        std::vector<Element> out;
        for (std::int64_t v = 0; v < m_; ++v) out.push_back(make(v));
        return out;
    }
    std::vector<Element> module_elements() const override { return ring_elements(); }
    bool ring_level_member(const Element& a, int level) const override { return level_(a.enc[0], level); }
    bool module_level_member(const Element& x, int level) const override {
        return ring_level_member(x, level);
    }
    std::string ring_to_string(const Element& a) const override { return std::to_string(a.enc[0]); }
    Element ring_parse(std::string_view s) const override { return make(std::stoll(std::string(s))); }
    std::string module_to_string(const Element& x) const override { return ring_to_string(x); }
    Element module_parse(std::string_view s) const override { return ring_parse(s); }

private:
    Element make(std::int64_t v) const { return Element{tag(), {((v % m_) + m_) % m_}}; }

    std::int64_t m_;
    LevelFn level_;
    AddFn add_override_;
};

/// Z/9 with the 3-adic levels but a corrupted addition: 4+5 = 1.
inline InstancePtr corrupt_add() {
    return std::make_shared<ZmodFixture>(
        "fixture_corrupt_add", 9,
        [](std::int64_t v, int n) {
            if (n <= 0) return true;
            return v % (n == 1 ? 3 : 9) == 0;
        },
        true, 2,
        [](std::int64_t a, std::int64_t b) {
            if ((a == 4 && b == 5) || (a == 5 && b == 4)) return std::int64_t{1};
            return (a + b) % 9;
        });
}

/// Z/36 with levels {all, 2Z, 3Z, {0}, ...}: level 2 is not inside level 1.
inline InstancePtr bad_antitone() {
    return std::make_shared<ZmodFixture>(
        "fixture_bad_antitone", 36,
        [](std::int64_t v, int n) {
            if (n <= 0) return true;
            if (n == 1) return v % 2 == 0;
            if (n == 2) return v % 3 == 0;
            return v == 0;
        },
        true, 3);
}

/// Z/9 where level 2 = {0, 4, 5} is closed under negation but not under
/// addition (4 + 4 = 8 escapes).
inline InstancePtr bad_subgroup() {
    return std::make_shared<ZmodFixture>(
        "fixture_bad_subgroup", 9,
        [](std::int64_t v, int n) {
            if (n <= 0) return true;
            if (n == 1) return true;
            if (n == 2) return v == 0 || v == 4 || v == 5;
            return v == 0;
        },
        true, 3);
}

/// Z/9 with levels {all, 3Z, 3Z, {0}, ...}: filtered but not strong, since
/// R1*R1 generates {0} while R2 = 3Z.
inline InstancePtr not_strong() {
    return std::make_shared<ZmodFixture>(
        "fixture_not_strong", 9,
        [](std::int64_t v, int n) {
            if (n <= 0) return true;
            if (n <= 2) return v % 3 == 0;
            return v == 0;
        },
        true, 3);
}

/// Finite carrier with no stabilization metadata: the scan for nu(0) hits the
/// cap and yields a capped infinity, tainting dependent verdicts.
inline InstancePtr capped_nu() {
    return std::make_shared<ZmodFixture>(
        "fixture_capped_nu", 9,
        [](std::int64_t v, int n) {
            if (n <= 0) return true;
            return v % (n == 1 ? 3 : 9) == 0;
        },
        false, std::nullopt);
}

} // namespace fixtures
