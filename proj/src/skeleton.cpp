#include "filtval/skeleton.hpp"

#include <algorithm>
#include <map>

namespace filtval {

namespace {

struct OrbitCache {
    const DerivedValuation& nu;
    const SearchStrategy& strategy;
    std::unordered_map<Encoding, ValueSet, EncodingHash> memo;

    const ValueSet& get(const Element& y) {
        auto it = memo.find(y.enc);
        if (it != memo.end()) return it->second;
        return memo.emplace(y.enc, value_orbit(nu, y, strategy)).first->second;
    }
};

bool related(const ExtendedValue& vx, const ValueSet& ox, const ExtendedValue& vy, const ValueSet& oy) {
    return oy.contains(vx) && ox.contains(vy);
}

} // namespace

bool nu_equivalent(const DerivedValuation& nu, const Element& x, const Element& y,
                   const SearchStrategy& strategy) {
    ExtendedValue vx = nu(x);
    ExtendedValue vy = nu(y);
    if (vx.is_infinite() || vy.is_infinite())
        throw InfiniteElement("nu_equivalent: arguments must lie outside the core");
    ValueSet ox = value_orbit(nu, x, strategy);
    ValueSet oy = value_orbit(nu, y, strategy);
    if (!ox.exact || !oy.exact)
        throw CapabilityError("nu_equivalent: inexact orbits cannot decide the relation");
    return related(vx, ox, vy, oy);
}

Skeleton compute_skeleton(const DerivedValuation& nu, const std::vector<Element>& sample,
                          const SearchStrategy& strategy) {
    const auto& inst = nu.instance();
    Skeleton sk;

    // Working sample: outside the core, ordered, deduplicated.
    std::vector<Element> work;
    for (const auto& x : sample) {
        ExtendedValue v = nu(x);
        if (v.is_infinite()) {
            if (!v.exact())
                throw CapabilityError("compute_skeleton: capped value cannot be classified");
            continue;
        }
        work.push_back(x);
    }
    std::sort(work.begin(), work.end(),
              [&](const Element& a, const Element& b) { return inst->module_less(a, b); });
    work.erase(std::unique(work.begin(), work.end()), work.end());

    OrbitCache orbits{nu, strategy, {}};
    for (const auto& x : work) {
        if (!orbits.get(x).exact)
            throw CapabilityError("compute_skeleton: orbits are inexact on the sample");
    }

    // Greedy partition: first representative (in element order) related to x.
    for (const auto& x : work) {
        ExtendedValue vx = nu(x);
        const ValueSet& ox = orbits.get(x);
        int found = -1;
        for (std::size_t r = 0; r < sk.representatives.size(); ++r) {
            const Element& rep = sk.representatives[r];
            if (related(vx, ox, nu(rep), orbits.get(rep))) {
                found = static_cast<int>(r);
                break;
            }
        }
        if (found < 0) {
            sk.representatives.push_back(x);
            found = static_cast<int>(sk.representatives.size()) - 1;
        }
        sk.class_of.emplace(x.enc, found);
    }

    // Relation axioms, checked on value/orbit signatures: whether x ~ y
    // depends only on (nu(x), nu(Rx)) and (nu(y), nu(Ry)), so distinct
    // signatures cover the whole sample exactly.
    struct Sig {
        ExtendedValue value;
        ValueSet orbit;
        Element witness;
    };
    std::vector<Sig> sigs;
    for (const auto& x : work) {
        ExtendedValue vx = nu(x);
        const ValueSet& ox = orbits.get(x);
        bool fresh = true;
        for (const auto& s : sigs) {
            if (ExtendedValue::identical(s.value, vx) && s.orbit == ox) {
                fresh = false;
                break;
            }
        }
        if (fresh) sigs.push_back(Sig{vx, ox, x});
    }

    auto elem_str = [&](const Element& x) { return inst->module_to_string(x); };
    for (const auto& s : sigs) {
        if (!related(s.value, s.orbit, s.value, s.orbit)) {
            sk.reflexive = Verdict::Fail;
            sk.relation_witness = nlohmann::json{{"x", elem_str(s.witness)}};
            break;
        }
    }
    // relation is symmetric by construction; assert it on signature pairs anyway
    for (std::size_t i = 0; i < sigs.size() && sk.symmetric == Verdict::Pass; ++i)
        for (std::size_t j = 0; j < sigs.size(); ++j) {
            bool ij = related(sigs[i].value, sigs[i].orbit, sigs[j].value, sigs[j].orbit);
            bool ji = related(sigs[j].value, sigs[j].orbit, sigs[i].value, sigs[i].orbit);
            if (ij != ji) {
                sk.symmetric = Verdict::Fail;
                sk.relation_witness =
                    nlohmann::json{{"x", elem_str(sigs[i].witness)}, {"y", elem_str(sigs[j].witness)}};
                break;
            }
        }
    for (std::size_t i = 0; i < sigs.size() && sk.transitive == Verdict::Pass; ++i)
        for (std::size_t j = 0; j < sigs.size() && sk.transitive == Verdict::Pass; ++j)
            for (std::size_t k = 0; k < sigs.size(); ++k) {
                bool ij = related(sigs[i].value, sigs[i].orbit, sigs[j].value, sigs[j].orbit);
                bool jk = related(sigs[j].value, sigs[j].orbit, sigs[k].value, sigs[k].orbit);
                bool ik = related(sigs[i].value, sigs[i].orbit, sigs[k].value, sigs[k].orbit);
                if (ij && jk && !ik) {
                    sk.transitive = Verdict::Fail;
                    sk.relation_witness = nlohmann::json{{"x", elem_str(sigs[i].witness)},
                                                         {"y", elem_str(sigs[j].witness)},
                                                         {"z", elem_str(sigs[k].witness)}};
                    break;
                }
            }

    return sk;
}

} // namespace filtval
