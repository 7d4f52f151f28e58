#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include <json.hpp>

#include "filtval/element.hpp"
#include "filtval/errors.hpp"

namespace filtval {

/// How a checker walks its search space. Exhaustive mode enumerates the whole
/// finite carrier and is the ground-truth mode; bounded-random mode draws a
/// fixed number of seeded samples and is replayable: equal seeds give equal
/// element/level sequences.
struct SearchStrategy {
    enum class Kind { Exhaustive, BoundedRandom };

    Kind kind = Kind::Exhaustive;
    std::uint64_t seed = 1;
    int samples = 1000;
    int level_bound = 16;

    static SearchStrategy exhaustive() { return SearchStrategy{}; }
    static SearchStrategy bounded_random(std::uint64_t seed, int samples, int level_bound) {
        SearchStrategy s;
        s.kind = Kind::BoundedRandom;
        s.seed = seed;
        s.samples = samples;
        s.level_bound = level_bound;
        return s;
    }

    bool is_exhaustive() const { return kind == Kind::Exhaustive; }

    nlohmann::json to_json() const {
        nlohmann::json j;
        if (is_exhaustive()) {
            j["kind"] = "exhaustive";
        } else {
            j["kind"] = "bounded-random";
            j["seed"] = seed;
            j["samples"] = samples;
            j["level_bound"] = level_bound;
        }
        return j;
    }

    static SearchStrategy from_json(const nlohmann::json& j);
    static SearchStrategy parse_kind(std::string_view name);
};

/// Deterministic RNG. mt19937_64 has a standardized sequence; draws use plain
/// modulo reduction so replays are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Inclusive bounds.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (hi < lo) throw std::logic_error("Rng::uniform: empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next()); // full 64-bit range
        return lo + static_cast<std::int64_t>(next() % span);
    }

private:
    std::mt19937_64 eng_;
};

// One independent stream per (run seed, claim id).
inline Rng claim_rng(std::uint64_t seed, std::string_view claim_id) {
    return Rng(seed ^ fnv1a64(claim_id));
}

} // namespace filtval
