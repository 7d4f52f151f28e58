#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "filtval/instance.hpp"
#include "filtval/value.hpp"

namespace filtval {

/// The valuation derived from a module filtration:
///   nu(x) = the least i with x in M_i but not in M_{i+1},
/// infinity when x lies in every level.
///
/// Infinity detection: with a stabilization depth d, a scan to d is exact.
/// With stabilizes_to_zero, nu(x) = infinity iff x = 0 (exact). Otherwise the
/// scan stops at `cap` and returns a capped (inexact) infinity.
///
/// Pure; the memo cache is guarded and observationally equivalent to
/// recomputation.
class DerivedValuation {
public:
    explicit DerivedValuation(InstancePtr inst, int cap = 64, bool use_cache = true);

    ExtendedValue operator()(const Element& x) const;

    const InstancePtr& instance() const { return inst_; }
    int cap() const { return cap_; }

    /// Same scan without consulting or filling the cache.
    ExtendedValue uncached(const Element& x) const;

private:
    ExtendedValue compute(const Element& x) const;

    InstancePtr inst_;
    int cap_;
    bool use_cache_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

/// The value orbit nu(R y) = {nu(a y) : a in R}. Exhaustive and exact on
/// finite carriers; otherwise the instance's closed form when available, else
/// a sampled under-approximation marked inexact.
ValueSet value_orbit(const DerivedValuation& nu, const Element& y, const SearchStrategy& strategy);

/// Membership predicate for a submodule of M, with an explicit element list
/// on finite carriers.
struct Submodule {
    std::string name;
    bool exact = true;
    std::function<bool(const Element&)> contains;
    std::optional<std::vector<Element>> elements; // element order
};

/// Membership predicate for a subset of R (ideal-shaped uses).
struct RingSubset {
    std::string name;
    bool exact = true;
    std::function<bool(const Element&)> contains;
    std::optional<std::vector<Element>> elements;
};

/// nu^-1(inf): explicit on finite carriers; {0} when the instance proves the
/// levels intersect to zero; otherwise inexact (capped scans).
Submodule core_submodule(const DerivedValuation& nu);

/// The whole module, as a submodule predicate.
Submodule full_module(const InstancePtr& inst);

/// Colon construct (N : M) = {a in R : a M is contained in N}. Exact on
/// finite carriers; on infinite ones uses a closed form when N is the core
/// and the instance provides it, else a bounded inexact search.
RingSubset colon_ideal(const DerivedValuation& nu, const Submodule& N, const SearchStrategy& strategy);

/// The pair (A_nu, P_nu):
///   A_nu = {a : nu(a x) >= nu(x) for all x},
///   P_nu = {a : nu(a x) >  nu(x) for all x outside the core},
/// with the core ideal (nu^-1(inf) : M).
struct ValuationPair {
    RingSubset A;
    RingSubset P;
    RingSubset core_ideal;
    bool exact = true;
};

} // namespace filtval
