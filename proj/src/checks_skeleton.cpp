#include "check_util.hpp"

namespace filtval {

namespace {

constexpr const char* kRelationNote = "relation: adopted-convention";

std::string join_note(const std::string& extra) {
    if (extra.empty()) return kRelationNote;
    return std::string(kRelationNote) + "; " + extra;
}

// def2.7 body: S disjoint from the core, and nu(x) outside nu(Ry) for every
// ordered pair of distinct members.
CheckReport independence(const CheckContext& ctx, const std::string& id, const std::vector<Element>& S) {
    const auto& inst = ctx.ref();
    const auto& nu = ctx.nu();
    if (S.empty()) return pass(ctx, id, join_note("empty set"));
    for (const auto& x : S) {
        ExtendedValue v = nu(x);
        if (!v.exact()) return inconclusive(ctx, id, join_note("capped value in S"), true);
        if (v.is_infinite())
            return fail(ctx, id, {{"x", inst.module_to_string(x)}}, join_note("element in core"));
    }
    std::vector<ValueSet> orbits;
    orbits.reserve(S.size());
    for (const auto& y : S) {
        ValueSet o = value_orbit(nu, y, ctx.strategy());
        if (!o.exact) return inconclusive(ctx, id, join_note("inexact orbit"));
        orbits.push_back(std::move(o));
    }
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = 0; j < S.size(); ++j) {
            if (i == j) continue;
            if (orbits[j].contains(nu(S[i])))
                return fail(ctx, id,
                            {{"x", inst.module_to_string(S[i])}, {"y", inst.module_to_string(S[j])}},
                            kRelationNote);
        }
    return pass(ctx, id, kRelationNote);
}

CheckReport prop33_ii(const CheckContext& ctx, const std::string& id) {
    const Skeleton& sk = ctx.skeleton();
    const auto& inst = ctx.ref();
    const auto& nu = ctx.nu();
    if (sk.representatives.empty() && sk.class_of.empty())
        return pass(ctx, id, join_note("empty skeleton"));

    std::vector<ValueSet> rep_orbits;
    for (const auto& rep : sk.representatives) {
        ValueSet o = value_orbit(nu, rep, ctx.strategy());
        if (!o.exact) return inconclusive(ctx, id, join_note("inexact orbit"));
        rep_orbits.push_back(std::move(o));
    }

    // Iterate the classified sample in element order.
    std::vector<Element> domain;
    if (inst.finite()) {
        for (const auto& x : inst.module_elements())
            if (sk.class_of.count(x.enc)) domain.push_back(x);
    } else {
        for (const auto& [enc, idx] : sk.class_of) domain.push_back(Element{inst.tag(), enc});
        std::sort(domain.begin(), domain.end(),
                  [&](const Element& a, const Element& b) { return inst.module_less(a, b); });
    }

    for (const auto& x : domain) {
        ExtendedValue vx = nu(x);
        ValueSet ox = value_orbit(nu, x, ctx.strategy());
        if (!ox.exact) return inconclusive(ctx, id, join_note("inexact orbit"));
        nlohmann::json matches = nlohmann::json::array();
        for (std::size_t r = 0; r < sk.representatives.size(); ++r) {
            bool related = rep_orbits[r].contains(vx) && ox.contains(nu(sk.representatives[r]));
            if (related) matches.push_back(inst.module_to_string(sk.representatives[r]));
        }
        if (matches.size() != 1)
            return fail(ctx, id, {{"matches", matches}, {"x", inst.module_to_string(x)}}, kRelationNote);
    }
    return pass(ctx, id, kRelationNote);
}

// prop3.4: vanishing combinations over distinct representatives must have all
// coefficients in (core : M). Sizes ascending, subsets lexicographic by
// representative index, coefficient tuples lexicographic in element order.
CheckReport prop34(const CheckContext& ctx, const std::string& id) {
    if (!ctx.ref().finite())
        throw CapabilityError("prop3.4 needs a finite carrier for tuple enumeration");
    const Skeleton& sk = ctx.skeleton();
    const Indexed& ix = ctx.indexed();
    const RingSubset& colon = ctx.colon_core();
    if (!colon.exact) return inconclusive(ctx, id, "colon ideal not exact");
    const auto& inst = ctx.ref();

    const int reps = static_cast<int>(sk.representatives.size());
    if (reps == 0) return pass(ctx, id, "empty skeleton");

    std::vector<int> rep_idx;
    rep_idx.reserve(static_cast<std::size_t>(reps));
    for (const auto& rep : sk.representatives) rep_idx.push_back(ix.m_of(rep));
    std::vector<char> in_colon(ix.R.size());
    for (std::size_t a = 0; a < ix.R.size(); ++a)
        in_colon[a] = colon.contains(ix.R[a]) ? 1 : 0;

    const int nr = static_cast<int>(ix.R.size());
    int max_size = std::min(ctx.options().n_max, reps);
    for (int size = 1; size <= max_size; ++size) {
        std::vector<int> subset(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) subset[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::vector<int> coeff(static_cast<std::size_t>(size), 0);
            while (true) {
                int sum = ix.m_zero;
                bool all_in_colon = true;
                for (int i = 0; i < size; ++i) {
                    int term = ix.act[static_cast<std::size_t>(coeff[static_cast<std::size_t>(i)])]
                                     [static_cast<std::size_t>(rep_idx[static_cast<std::size_t>(subset[static_cast<std::size_t>(i)])])];
                    sum = ix.madd[static_cast<std::size_t>(sum)][static_cast<std::size_t>(term)];
                    if (!in_colon[static_cast<std::size_t>(coeff[static_cast<std::size_t>(i)])])
                        all_in_colon = false;
                }
                if (sum == ix.m_zero && !all_in_colon) {
                    nlohmann::json lambdas = nlohmann::json::array();
                    nlohmann::json coeffs = nlohmann::json::array();
                    for (int i = 0; i < size; ++i) {
                        lambdas.push_back(inst.module_to_string(
                            sk.representatives[static_cast<std::size_t>(subset[static_cast<std::size_t>(i)])]));
                        coeffs.push_back(inst.ring_to_string(
                            ix.R[static_cast<std::size_t>(coeff[static_cast<std::size_t>(i)])]));
                    }
                    return fail(ctx, id, {{"coeffs", coeffs}, {"lambdas", lambdas}});
                }
                int pos = size - 1;
                while (pos >= 0 && ++coeff[static_cast<std::size_t>(pos)] == nr) {
                    coeff[static_cast<std::size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 0) break;
            }
            // next subset, lexicographic
            int pos = size - 1;
            while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == reps - size + pos) --pos;
            if (pos < 0) break;
            ++subset[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < size; ++i)
                subset[static_cast<std::size_t>(i)] = subset[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    return pass(ctx, id);
}

} // namespace

CheckReport check_nu_independent(const CheckContext& ctx, const std::vector<Element>& S) {
    return independence(ctx, "def2.7", S);
}

CheckReport run_skeleton_claim(const CheckContext& ctx, const std::string& claim_id) {
    try {
        if (claim_id == "def2.7" || claim_id == "prop3.3.i") {
            const Skeleton& sk = ctx.skeleton();
            CheckReport rep = independence(ctx, claim_id, sk.representatives);
            if (rep.verdict == Verdict::Pass && sk.transitive != Verdict::Pass) {
                rep.verdict = Verdict::Inconclusive;
                rep.note = join_note("relation not transitive; partition inconclusive");
            }
            return rep;
        }
        if (claim_id == "prop3.3.ii") return prop33_ii(ctx, claim_id);
        if (claim_id == "prop3.4") return prop34(ctx, claim_id);
    } catch (const CapabilityError& e) {
        return inconclusive(ctx, claim_id, std::string("capability: ") + e.what());
    }
    throw ConfigError("unknown skeleton claim '" + claim_id + "'");
}

} // namespace filtval
