#include "filtval/valuation.hpp"

#include <mutex>
#include <unordered_map>

namespace filtval {

struct DerivedValuation::Cache {
    mutable std::mutex mu;
    std::unordered_map<Encoding, ExtendedValue, EncodingHash> map;
};

DerivedValuation::DerivedValuation(InstancePtr inst, int cap, bool use_cache)
    : inst_(std::move(inst)), cap_(cap), use_cache_(use_cache), cache_(std::make_shared<Cache>()) {
    if (cap_ < 1) cap_ = 1;
}

ExtendedValue DerivedValuation::compute(const Element& x) const {
    inst_->require_module_element(x);
    if (auto depth = inst_->stabilization_depth()) {
        // Membership is constant from *depth on: a scan to *depth is exact.
        for (int n = 0; n < *depth; ++n)
            if (!inst_->module_level_member(x, n + 1)) return ExtendedValue::finite(n);
        return ExtendedValue::infinity(true);
    }
    if (inst_->stabilizes_to_zero() && x == inst_->module_zero()) return ExtendedValue::infinity(true);
    for (int n = 0; n < cap_; ++n)
        if (!inst_->module_level_member(x, n + 1)) return ExtendedValue::finite(n);
    return ExtendedValue::infinity(false); // capped, unproved
}

ExtendedValue DerivedValuation::operator()(const Element& x) const {
    if (!use_cache_) return compute(x);
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->map.find(x.enc);
        if (it != cache_->map.end()) return it->second;
    }
    ExtendedValue v = compute(x);
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->map.emplace(x.enc, v);
    return v;
}

ExtendedValue DerivedValuation::uncached(const Element& x) const { return compute(x); }

ValueSet value_orbit(const DerivedValuation& nu, const Element& y, const SearchStrategy& strategy) {
    const auto& inst = nu.instance();
    inst->require_module_element(y);
    if (inst->finite()) {
        ValueSet s;
        for (const auto& a : inst->ring_elements()) {
            ExtendedValue v = nu(inst->scalar(a, y));
            if (v.is_infinite()) {
                s.contains_infinity = true;
                if (!v.exact()) s.exact = false;
            } else {
                s.finite_points.insert(v.finite_value());
            }
        }
        return s;
    }
    if (auto closed = inst->orbit_closed_form(y)) return *closed;
    // sampled under-approximation
    ValueSet s;
    s.exact = false;
    Rng rng = claim_rng(strategy.seed, "value_orbit");
    for (int i = 0; i < strategy.samples; ++i) {
        Element a = inst->sample_ring_element(rng);
        ExtendedValue v = nu(inst->scalar(a, y));
        if (v.is_infinite()) s.contains_infinity = true;
        else s.finite_points.insert(v.finite_value());
    }
    return s;
}

Submodule core_submodule(const DerivedValuation& nu) {
    const auto& inst = nu.instance();
    Submodule sub;
    sub.name = "nu^-1(inf)";
    if (inst->finite()) {
        bool all_exact = true;
        std::vector<Element> members;
        for (const auto& x : inst->module_elements()) {
            ExtendedValue v = nu(x);
            if (v.is_infinite()) {
                members.push_back(x);
                if (!v.exact()) all_exact = false;
            }
        }
        sub.exact = all_exact;
        sub.elements = std::move(members);
        sub.contains = [nu](const Element& x) { return nu(x).is_infinite(); };
        return sub;
    }
    if (inst->stabilizes_to_zero()) {
        Element zero = inst->module_zero();
        sub.contains = [inst, zero](const Element& x) {
            inst->require_module_element(x);
            return x == zero;
        };
        return sub;
    }
    sub.exact = false;
    sub.contains = [nu](const Element& x) { return nu(x).is_infinite(); };
    return sub;
}

Submodule full_module(const InstancePtr& inst) {
    Submodule sub;
    sub.name = "M";
    sub.contains = [inst](const Element& x) {
        inst->require_module_element(x);
        return true;
    };
    if (inst->finite()) sub.elements = inst->module_elements();
    return sub;
}

RingSubset colon_ideal(const DerivedValuation& nu, const Submodule& N, const SearchStrategy& strategy) {
    const auto& inst = nu.instance();
    RingSubset out;
    out.name = "(" + N.name + ":M)";
    if (inst->finite()) {
        auto module = inst->module_elements();
        std::vector<Element> members;
        for (const auto& a : inst->ring_elements()) {
            bool in = true;
            for (const auto& x : module) {
                if (!N.contains(inst->scalar(a, x))) {
                    in = false;
                    break;
                }
            }
            if (in) members.push_back(a);
        }
        out.exact = N.exact;
        out.elements = std::move(members);
        auto set = std::make_shared<std::unordered_map<Encoding, int, EncodingHash>>();
        for (const auto& a : *out.elements) set->emplace(a.enc, 1);
        out.contains = [inst, set](const Element& a) {
            inst->require_ring_element(a);
            return set->count(a.enc) > 0;
        };
        return out;
    }
    if (N.name == "nu^-1(inf)") {
        Element probe = inst->ring_zero();
        if (inst->colon_core_closed_form(probe).has_value()) {
            out.contains = [inst](const Element& a) { return *inst->colon_core_closed_form(a); };
            return out;
        }
    }
    // bounded search: evidence only, never exact
    out.exact = false;
    int samples = strategy.samples;
    std::uint64_t seed = strategy.seed;
    out.contains = [inst, N, samples, seed](const Element& a) {
        Rng rng = claim_rng(seed, "colon_ideal");
        for (int i = 0; i < samples; ++i) {
            Element x = inst->sample_module_element(rng);
            if (!N.contains(inst->scalar(a, x))) return false;
        }
        return true;
    };
    return out;
}

} // namespace filtval
