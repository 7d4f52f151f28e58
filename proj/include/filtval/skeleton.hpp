#pragma once

#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "filtval/report.hpp"
#include "filtval/valuation.hpp"

namespace filtval {

/// A representation system for the ~ relation on M minus the core, where
///   x ~ y  iff  nu(x) in nu(Ry) and nu(y) in nu(Rx).
/// The relation's axioms are not assumed: reflexivity/symmetry/transitivity
/// are verified per instance and reported; a transitivity failure downgrades
/// the partition to inconclusive.
struct Skeleton {
    std::vector<Element> representatives; // element order; never in the core
    std::unordered_map<Encoding, int, EncodingHash> class_of; // sampled non-core element -> rep index
    bool exact = true;          // orbits used were exact
    Verdict reflexive = Verdict::Pass;
    Verdict symmetric = Verdict::Pass;
    Verdict transitive = Verdict::Pass;
    nlohmann::json relation_witness; // offending elements when an axiom fails
};

/// The adopted equivalence; throws InfiniteElement if either argument lies in
/// the core, CapabilityError if the needed orbits are inexact.
bool nu_equivalent(const DerivedValuation& nu, const Element& x, const Element& y,
                   const SearchStrategy& strategy);

/// Partition `sample` minus the core by the relation; representatives are the
/// least class members in element order. Deterministic. The sample must be
/// the full carrier for exhaustive runs on finite instances.
Skeleton compute_skeleton(const DerivedValuation& nu, const std::vector<Element>& sample,
                          const SearchStrategy& strategy);

} // namespace filtval
