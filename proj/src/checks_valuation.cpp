#include <algorithm>

#include "check_util.hpp"

namespace filtval {

CheckReport run_filtration_claim(const CheckContext& ctx, const std::string& claim_id);

namespace {

bool exhaustive_mode(const CheckContext& ctx) {
    return ctx.strategy().is_exhaustive() || ctx.ref().finite();
}

std::string rstr(const Indexed& ix, int a) { return ix.inst->ring_to_string(ix.R[static_cast<std::size_t>(a)]); }
std::string mstr(const Indexed& ix, int x) { return ix.inst->module_to_string(ix.M[static_cast<std::size_t>(x)]); }

// Exhaustive scans that consume nu: a violation counts only when every value
// involved is exact; a clean full pass over a carrier with capped values
// settles INCONCLUSIVE instead of PASS.
struct TaintGuard {
    bool touched_inexact = false;

    bool all_exact(std::initializer_list<ExtendedValue> vs) {
        for (const auto& v : vs)
            if (!v.exact()) {
                touched_inexact = true;
                return false;
            }
        return true;
    }

    CheckReport settle_pass(const CheckContext& ctx, const std::string& id) {
        if (touched_inexact) return inconclusive(ctx, id, "capped infinity entered the scan", true);
        return pass(ctx, id);
    }
};

// --- def2.5.i: nu(x+y) >= min(nu(x), nu(y)) --------------------------------

CheckReport axiom_i(const CheckContext& ctx, const std::string& id) {
    if (exhaustive_mode(ctx)) {
        const Indexed& ix = ctx.indexed();
        const int nm = static_cast<int>(ix.M.size());
        TaintGuard guard;
        guard.touched_inexact = !ix.nu_all_exact();
        for (int x = 0; x < nm; ++x)
            for (int y = 0; y < nm; ++y) {
                const ExtendedValue& vx = ix.nu_m[static_cast<std::size_t>(x)];
                const ExtendedValue& vy = ix.nu_m[static_cast<std::size_t>(y)];
                const ExtendedValue& vs = ix.nu_m[static_cast<std::size_t>(ix.madd[x][y])];
                if (vs < min_value(vx, vy) && guard.all_exact({vx, vy, vs}))
                    return fail(ctx, id, {{"x", mstr(ix, x)}, {"y", mstr(ix, y)}});
            }
        return guard.settle_pass(ctx, id);
    }
    SampledOutcome out;
    Rng rng = ctx.rng_for(id);
    const auto& inst = ctx.ref();
    const auto& nu = ctx.nu();
    for (int s = 0; s < ctx.strategy().samples; ++s) {
        Element x = inst.sample_module_element(rng);
        Element y = inst.sample_module_element(rng);
        ExtendedValue vx = nu(x), vy = nu(y), vs = nu(inst.module_add(x, y));
        out.record_values({vx, vy, vs});
        if (vx.exact() && vy.exact() && vs.exact() && vs < min_value(vx, vy)) {
            out.violation({{"x", inst.module_to_string(x)}, {"y", inst.module_to_string(y)}});
            break;
        }
    }
    return out.settle(ctx, id);
}

// --- def2.5.ii: nu(x) <= nu(y) implies nu(ax) <= nu(ay) --------------------

CheckReport axiom_ii(const CheckContext& ctx, const std::string& id) {
    if (exhaustive_mode(ctx)) {
        const Indexed& ix = ctx.indexed();
        const int nm = static_cast<int>(ix.M.size());
        const int nr = static_cast<int>(ix.R.size());
        TaintGuard guard;
        guard.touched_inexact = !ix.nu_all_exact();
        for (int x = 0; x < nm; ++x)
            for (int y = 0; y < nm; ++y) {
                const ExtendedValue& vx = ix.nu_m[static_cast<std::size_t>(x)];
                const ExtendedValue& vy = ix.nu_m[static_cast<std::size_t>(y)];
                if (!(vx <= vy)) continue;
                for (int a = 0; a < nr; ++a) {
                    const ExtendedValue& vax = ix.nu_m[static_cast<std::size_t>(ix.act[a][x])];
                    const ExtendedValue& vay = ix.nu_m[static_cast<std::size_t>(ix.act[a][y])];
                    if (!(vax <= vay) && guard.all_exact({vx, vy, vax, vay}))
                        return fail(ctx, id, {{"a", rstr(ix, a)}, {"x", mstr(ix, x)}, {"y", mstr(ix, y)}});
                }
            }
        return guard.settle_pass(ctx, id);
    }
    SampledOutcome out;
    Rng rng = ctx.rng_for(id);
    const auto& inst = ctx.ref();
    const auto& nu = ctx.nu();
    for (int s = 0; s < ctx.strategy().samples; ++s) {
        Element x = inst.sample_module_element(rng);
        Element y = inst.sample_module_element(rng);
        Element a = inst.sample_ring_element(rng);
        ExtendedValue vx = nu(x), vy = nu(y);
        out.record_values({vx, vy});
        if (!vx.exact() || !vy.exact() || !(vx <= vy)) continue;
        ExtendedValue vax = nu(inst.scalar(a, x)), vay = nu(inst.scalar(a, y));
        out.record_values({vax, vay});
        if (vax.exact() && vay.exact() && !(vax <= vay)) {
            out.violation({{"a", inst.ring_to_string(a)},
                           {"x", inst.module_to_string(x)},
                           {"y", inst.module_to_string(y)}});
            break;
        }
    }
    return out.settle(ctx, id);
}

// --- def2.5.iii / prop2.1.iv / prop2.1.v: premise on z, conclusion over x --
//
// For each (a, b) the quantifiers over z and x are independent, so the first
// violating tuple in (a, b, z, x) order is (a, b, first premise z, first
// violating x).

enum class ZKind { PremiseLeq, PremiseEq, PremiseLt };

CheckReport z_transfer_claim(const CheckContext& ctx, const std::string& id, ZKind kind) {
    if (exhaustive_mode(ctx)) {
        const Indexed& ix = ctx.indexed();
        const int nm = static_cast<int>(ix.M.size());
        const int nr = static_cast<int>(ix.R.size());
        TaintGuard guard;
        guard.touched_inexact = !ix.nu_all_exact();
        for (int a = 0; a < nr; ++a)
            for (int b = 0; b < nr; ++b) {
                int z0 = -1;
                for (int z = 0; z < nm; ++z) {
                    const ExtendedValue& vz = ix.nu_m[static_cast<std::size_t>(z)];
                    if (kind != ZKind::PremiseLt && vz.is_infinite()) continue; // z outside the core
                    const ExtendedValue& vaz = ix.nu_m[static_cast<std::size_t>(ix.act[a][z])];
                    const ExtendedValue& vbz = ix.nu_m[static_cast<std::size_t>(ix.act[b][z])];
                    bool premise = kind == ZKind::PremiseLeq   ? vaz <= vbz
                                   : kind == ZKind::PremiseEq ? vaz == vbz
                                                              : vaz < vbz;
                    if (premise && guard.all_exact({vz, vaz, vbz})) {
                        z0 = z;
                        break;
                    }
                }
                if (z0 < 0) continue;
                for (int x = 0; x < nm; ++x) {
                    const ExtendedValue& vx = ix.nu_m[static_cast<std::size_t>(x)];
                    if (kind == ZKind::PremiseLt && vx.is_infinite()) continue; // conclusion off the core
                    const ExtendedValue& vax = ix.nu_m[static_cast<std::size_t>(ix.act[a][x])];
                    const ExtendedValue& vbx = ix.nu_m[static_cast<std::size_t>(ix.act[b][x])];
                    bool holds = kind == ZKind::PremiseLeq   ? vax <= vbx
                                 : kind == ZKind::PremiseEq ? vax == vbx
                                                            : vax < vbx;
                    if (!holds && guard.all_exact({vx, vax, vbx}))
                        return fail(ctx, id,
                                    {{"a", rstr(ix, a)}, {"b", rstr(ix, b)}, {"x", mstr(ix, x)},
                                     {"z", mstr(ix, z0)}});
                }
            }
        return guard.settle_pass(ctx, id);
    }
    SampledOutcome out;
    Rng rng = ctx.rng_for(id);
    const auto& inst = ctx.ref();
    const auto& nu = ctx.nu();
    for (int s = 0; s < ctx.strategy().samples; ++s) {
        Element a = inst.sample_ring_element(rng);
        Element b = inst.sample_ring_element(rng);
        Element z = inst.sample_module_element(rng);
        Element x = inst.sample_module_element(rng);
        ExtendedValue vz = nu(z);
        out.record_values({vz});
        if (!vz.exact()) continue;
        if (kind != ZKind::PremiseLt && vz.is_infinite()) continue;
        ExtendedValue vaz = nu(inst.scalar(a, z)), vbz = nu(inst.scalar(b, z));
        out.record_values({vaz, vbz});
        if (!vaz.exact() || !vbz.exact()) continue;
        bool premise = kind == ZKind::PremiseLeq   ? vaz <= vbz
                       : kind == ZKind::PremiseEq ? vaz == vbz
                                                  : vaz < vbz;
        if (!premise) continue;
        ExtendedValue vx = nu(x);
        out.record_values({vx});
        if (!vx.exact()) continue;
        if (kind == ZKind::PremiseLt && vx.is_infinite()) continue;
        ExtendedValue vax = nu(inst.scalar(a, x)), vbx = nu(inst.scalar(b, x));
        out.record_values({vax, vbx});
        if (!vax.exact() || !vbx.exact()) continue;
        bool holds = kind == ZKind::PremiseLeq   ? vax <= vbx
                     : kind == ZKind::PremiseEq ? vax == vbx
                                                : vax < vbx;
        if (!holds) {
            out.violation({{"a", inst.ring_to_string(a)}, {"b", inst.ring_to_string(b)},
                           {"x", inst.module_to_string(x)}, {"z", inst.module_to_string(z)}});
            break;
        }
    }
    return out.settle(ctx, id);
}

// --- def2.5.iv: every a off (core:M) has a' with nu((a'a)x) = nu(x) --------

CheckReport axiom_iv(const CheckContext& ctx, const std::string& id) {
    const auto& colon = ctx.colon_core();
    if (exhaustive_mode(ctx)) {
        const Indexed& ix = ctx.indexed();
        const int nm = static_cast<int>(ix.M.size());
        const int nr = static_cast<int>(ix.R.size());
        if (!colon.exact) return inconclusive(ctx, id, "colon ideal not exact");
        if (!ix.nu_all_exact()) return inconclusive(ctx, id, "capped infinity entered the scan", true);
        // value-preserving multipliers
        std::vector<char> preserving(static_cast<std::size_t>(nr), 0);
        for (int b = 0; b < nr; ++b) {
            bool ok = true;
            for (int x = 0; x < nm; ++x)
                if (ix.nu_m[static_cast<std::size_t>(ix.act[b][x])] != ix.nu_m[static_cast<std::size_t>(x)]) {
                    ok = false;
                    break;
                }
            preserving[static_cast<std::size_t>(b)] = ok ? 1 : 0;
        }
        for (int a = 0; a < nr; ++a) {
            if (colon.contains(ix.R[static_cast<std::size_t>(a)])) continue;
            bool found = false;
            for (int ap = 0; ap < nr; ++ap)
                if (preserving[static_cast<std::size_t>(ix.rmul[ap][a])]) {
                    found = true;
                    break;
                }
            if (!found) return fail(ctx, id, {{"a", rstr(ix, a)}});
        }
        return pass(ctx, id);
    }
    // Sampled existential search: absence of a witness within budget is never
    // a refutation on an infinite carrier.
    Rng rng = ctx.rng_for(id);
    const auto& inst = ctx.ref();
    const auto& nu = ctx.nu();
    if (!colon.exact) return inconclusive(ctx, id, "colon ideal not exact");

    std::vector<Element> test_points;
    for (int i = 0; i < 16; ++i) test_points.push_back(inst.sample_module_element(rng));
    if (auto unitish = inst.sample_module_at_level(0, rng)) test_points.push_back(*unitish);

    std::vector<Element> candidates = inst.unit_hints();
    for (int i = 0; i < 64; ++i) candidates.push_back(inst.sample_ring_element(rng));

    bool tainted = false;
    std::vector<Element> subjects;
    for (int i = 0; i < 24; ++i) {
        Element a = inst.sample_ring_element(rng);
        if (std::find(subjects.begin(), subjects.end(), a) == subjects.end()) subjects.push_back(a);
    }
    for (const auto& a : subjects) {
        if (colon.contains(a)) continue;
        bool found = false;
        for (const auto& ap : candidates) {
            Element prod = inst.ring_multiply(ap, a);
            bool ok = true;
            for (const auto& x : test_points) {
                ExtendedValue vx = nu(x);
                ExtendedValue vpx = nu(inst.scalar(prod, x));
                if (!vx.exact() || !vpx.exact()) {
                    tainted = true;
                    ok = false;
                    break;
                }
                if (vpx != vx) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                found = true;
                break;
            }
        }
        if (!found)
            return inconclusive(ctx, id,
                                "no a' found within budget for a=" + inst.ring_to_string(a), tainted);
    }
    if (tainted) return inconclusive(ctx, id, "capped infinity entered the scan", true);
    return pass(ctx, id);
}

// --- def2.5.onto: the image of nu must not be {inf} -------------------------

CheckReport axiom_onto(const CheckContext& ctx, const std::string& id) {
    if (exhaustive_mode(ctx)) {
        const Indexed& ix = ctx.indexed();
        std::set<int> finite_values;
        bool has_inf = false, inexact = false;
        for (const auto& v : ix.nu_m) {
            if (v.is_finite()) finite_values.insert(v.finite_value());
            else {
                has_inf = true;
                if (!v.exact()) inexact = true;
            }
        }
        if (!finite_values.empty()) return pass(ctx, id);
        if (inexact) return inconclusive(ctx, id, "capped infinity entered the scan", true);
        nlohmann::json image = nlohmann::json::array();
        if (has_inf) image.push_back("inf(exact)");
        return fail(ctx, id, {{"image", image}}, "degenerate");
    }
    Rng rng = ctx.rng_for(id);
    const auto& inst = ctx.ref();
    const auto& nu = ctx.nu();
    bool inexact = false;
    for (int s = 0; s < ctx.strategy().samples; ++s) {
        ExtendedValue v = nu(inst.sample_module_element(rng));
        if (v.is_finite()) return pass(ctx, id);
        if (!v.exact()) inexact = true;
    }
    return inconclusive(ctx, id, "no finite value in sample", inexact);
}

// --- prop2.1.i: nu(x) = nu(y) implies nu(ax) = nu(ay) ----------------------

CheckReport prop_i(const CheckContext& ctx, const std::string& id) {
    if (exhaustive_mode(ctx)) {
        const Indexed& ix = ctx.indexed();
        const int nm = static_cast<int>(ix.M.size());
        const int nr = static_cast<int>(ix.R.size());
        TaintGuard guard;
        guard.touched_inexact = !ix.nu_all_exact();
        for (int x = 0; x < nm; ++x)
            for (int y = 0; y < nm; ++y) {
                if (ix.nu_m[static_cast<std::size_t>(x)] != ix.nu_m[static_cast<std::size_t>(y)]) continue;
                for (int a = 0; a < nr; ++a) {
                    const ExtendedValue& vax = ix.nu_m[static_cast<std::size_t>(ix.act[a][x])];
                    const ExtendedValue& vay = ix.nu_m[static_cast<std::size_t>(ix.act[a][y])];
                    if (vax != vay &&
                        guard.all_exact({ix.nu_m[static_cast<std::size_t>(x)],
                                         ix.nu_m[static_cast<std::size_t>(y)], vax, vay}))
                        return fail(ctx, id, {{"a", rstr(ix, a)}, {"x", mstr(ix, x)}, {"y", mstr(ix, y)}});
                }
            }
        return guard.settle_pass(ctx, id);
    }
    SampledOutcome out;
    Rng rng = ctx.rng_for(id);
    const auto& inst = ctx.ref();
    const auto& nu = ctx.nu();
    for (int s = 0; s < ctx.strategy().samples; ++s) {
        Element x = inst.sample_module_element(rng);
        Element y = inst.sample_module_element(rng);
        Element a = inst.sample_ring_element(rng);
        ExtendedValue vx = nu(x), vy = nu(y);
        out.record_values({vx, vy});
        if (!vx.exact() || !vy.exact() || vx != vy) continue;
        ExtendedValue vax = nu(inst.scalar(a, x)), vay = nu(inst.scalar(a, y));
        out.record_values({vax, vay});
        if (vax.exact() && vay.exact() && vax != vay) {
            out.violation({{"a", inst.ring_to_string(a)},
                           {"x", inst.module_to_string(x)},
                           {"y", inst.module_to_string(y)}});
            break;
        }
    }
    return out.settle(ctx, id);
}

// --- prop2.1.ii: nu(-x) = nu(x) ---------------------------------------------

CheckReport prop_ii(const CheckContext& ctx, const std::string& id) {
    if (exhaustive_mode(ctx)) {
        const Indexed& ix = ctx.indexed();
        TaintGuard guard;
        guard.touched_inexact = !ix.nu_all_exact();
        for (std::size_t x = 0; x < ix.M.size(); ++x) {
            const ExtendedValue& vx = ix.nu_m[x];
            const ExtendedValue& vn = ix.nu_m[static_cast<std::size_t>(ix.mneg[x])];
            if (vx != vn && guard.all_exact({vx, vn}))
                return fail(ctx, id, {{"x", mstr(ix, static_cast<int>(x))}});
        }
        return guard.settle_pass(ctx, id);
    }
    SampledOutcome out;
    Rng rng = ctx.rng_for(id);
    const auto& inst = ctx.ref();
    const auto& nu = ctx.nu();
    for (int s = 0; s < ctx.strategy().samples; ++s) {
        Element x = inst.sample_module_element(rng);
        ExtendedValue vx = nu(x), vn = nu(inst.module_negate(x));
        out.record_values({vx, vn});
        if (vx.exact() && vn.exact() && vx != vn) {
            out.violation({{"x", inst.module_to_string(x)}});
            break;
        }
    }
    return out.settle(ctx, id);
}

// --- prop2.1.iii: nu(x) != nu(y) implies nu(x+y) = min ----------------------

CheckReport prop_iii(const CheckContext& ctx, const std::string& id) {
    if (exhaustive_mode(ctx)) {
        const Indexed& ix = ctx.indexed();
        const int nm = static_cast<int>(ix.M.size());
        TaintGuard guard;
        guard.touched_inexact = !ix.nu_all_exact();
        for (int x = 0; x < nm; ++x)
            for (int y = 0; y < nm; ++y) {
                const ExtendedValue& vx = ix.nu_m[static_cast<std::size_t>(x)];
                const ExtendedValue& vy = ix.nu_m[static_cast<std::size_t>(y)];
                if (vx == vy) continue;
                const ExtendedValue& vs = ix.nu_m[static_cast<std::size_t>(ix.madd[x][y])];
                if (vs != min_value(vx, vy) && guard.all_exact({vx, vy, vs}))
                    return fail(ctx, id, {{"x", mstr(ix, x)}, {"y", mstr(ix, y)}});
            }
        return guard.settle_pass(ctx, id);
    }
    SampledOutcome out;
    Rng rng = ctx.rng_for(id);
    const auto& inst = ctx.ref();
    const auto& nu = ctx.nu();
    for (int s = 0; s < ctx.strategy().samples; ++s) {
        Element x = inst.sample_module_element(rng);
        Element y = inst.sample_module_element(rng);
        ExtendedValue vx = nu(x), vy = nu(y);
        out.record_values({vx, vy});
        if (!vx.exact() || !vy.exact() || vx == vy) continue;
        ExtendedValue vs = nu(inst.module_add(x, y));
        out.record_values({vs});
        if (vs.exact() && vs != min_value(vx, vy)) {
            out.violation({{"x", inst.module_to_string(x)}, {"y", inst.module_to_string(y)}});
            break;
        }
    }
    return out.settle(ctx, id);
}

// --- prop3.1: strong + nontrivial image forces a trivial filtration ---------

CheckReport prop31(const CheckContext& ctx, const std::string& id) {
    CheckReport strong = run_filtration_claim(ctx, "def2.2");
    if (strong.verdict == Verdict::Fail) return pass(ctx, id, "skipped: not strong");
    if (strong.verdict == Verdict::Inconclusive)
        return inconclusive(ctx, id, "strongness unresolved", strong.tainted);

    CheckReport onto = axiom_onto(ctx, "def2.5.onto");
    bool degenerate = onto.verdict == Verdict::Fail;
    if (onto.verdict == Verdict::Inconclusive)
        return inconclusive(ctx, id, "image unresolved", onto.tainted);

    // triviality scan: R_n = R for every checked level
    std::optional<nlohmann::json> witness;
    if (exhaustive_mode(ctx)) {
        const Indexed& ix = ctx.indexed();
        for (int n = 1; n <= ctx.level_depth() && !witness; ++n)
            for (std::size_t a = 0; a < ix.R.size(); ++a)
                if (!ix.r_member(static_cast<int>(a), n)) {
                    witness = nlohmann::json{{"a", rstr(ix, static_cast<int>(a))}, {"n", n}};
                    break;
                }
    } else {
        Rng rng = ctx.rng_for(id);
        const auto& inst = ctx.ref();
        int per_level = std::max(1, ctx.strategy().samples / std::max(1, ctx.strategy().level_bound));
        for (int n = 1; n <= ctx.strategy().level_bound && !witness; ++n)
            for (int s = 0; s < per_level; ++s) {
                Element a = inst.sample_ring_element(rng);
                if (!inst.ring_level_member(a, n)) {
                    witness = nlohmann::json{{"a", inst.ring_to_string(a)}, {"n", n}};
                    break;
                }
            }
    }

    if (!witness) return pass(ctx, id, degenerate ? "trivial; degenerate" : "trivial");
    if (degenerate) return pass(ctx, id, "degenerate");
    return fail(ctx, id, *witness, "strong with nontrivial image but filtration not trivial");
}

// --- prop2.1.vii / valuation pair -------------------------------------------

std::pair<ValuationPair, CheckReport> pair_exhaustive(const CheckContext& ctx, const std::string& id) {
    const Indexed& ix = ctx.indexed();
    const int nm = static_cast<int>(ix.M.size());
    const int nr = static_cast<int>(ix.R.size());

    std::vector<char> inA(static_cast<std::size_t>(nr)), inP(static_cast<std::size_t>(nr));
    for (int a = 0; a < nr; ++a) {
        bool all_geq = true, all_gt = true;
        for (int x = 0; x < nm; ++x) {
            const ExtendedValue& vx = ix.nu_m[static_cast<std::size_t>(x)];
            const ExtendedValue& vax = ix.nu_m[static_cast<std::size_t>(ix.act[a][x])];
            if (!(vax >= vx)) all_geq = false;
            if (vx.is_finite() && !(vax > vx)) all_gt = false;
            if (!all_geq && !all_gt) break;
        }
        inA[static_cast<std::size_t>(a)] = all_geq ? 1 : 0;
        inP[static_cast<std::size_t>(a)] = all_gt ? 1 : 0;
    }

    ValuationPair vp;
    auto subset = [&](const std::vector<char>& in, std::string name) {
        RingSubset s;
        s.name = std::move(name);
        std::vector<Element> members;
        for (int a = 0; a < nr; ++a)
            if (in[static_cast<std::size_t>(a)]) members.push_back(ix.R[static_cast<std::size_t>(a)]);
        s.elements = std::move(members);
        auto keys = std::make_shared<std::unordered_map<Encoding, int, EncodingHash>>();
        for (const auto& e : *s.elements) keys->emplace(e.enc, 1);
        auto inst = ctx.inst();
        s.contains = [inst, keys](const Element& a) {
            inst->require_ring_element(a);
            return keys->count(a.enc) > 0;
        };
        return s;
    };
    vp.A = subset(inA, "A_nu");
    vp.P = subset(inP, "P_nu");
    vp.core_ideal = ctx.colon_core();
    vp.exact = ix.nu_all_exact();

    if (!vp.exact)
        return {vp, inconclusive(ctx, id, "capped infinity entered the scan", true)};

    auto part_fail = [&](const char* part, nlohmann::json w) {
        w["part"] = part;
        return fail(ctx, id, std::move(w));
    };
    for (int a = 0; a < nr; ++a)
        if (inP[static_cast<std::size_t>(a)] && !inA[static_cast<std::size_t>(a)])
            return {vp, part_fail("P-subset-A", {{"a", rstr(ix, a)}})};
    if (!inA[static_cast<std::size_t>(ix.r_one)]) return {vp, part_fail("A-contains-one", {})};
    for (int a = 0; a < nr; ++a) {
        if (!inA[static_cast<std::size_t>(a)]) continue;
        if (!inA[static_cast<std::size_t>(ix.rneg[static_cast<std::size_t>(a)])])
            return {vp, part_fail("A-closed-neg", {{"a", rstr(ix, a)}})};
        for (int b = 0; b < nr; ++b) {
            if (!inA[static_cast<std::size_t>(b)]) continue;
            if (!inA[static_cast<std::size_t>(ix.radd[a][b])])
                return {vp, part_fail("A-closed-add", {{"a", rstr(ix, a)}, {"b", rstr(ix, b)}})};
            if (!inA[static_cast<std::size_t>(ix.rmul[a][b])])
                return {vp, part_fail("A-closed-mul", {{"a", rstr(ix, a)}, {"b", rstr(ix, b)}})};
        }
    }
    if (!inP[static_cast<std::size_t>(ix.r_zero)]) return {vp, part_fail("P-contains-zero", {})};
    for (int p = 0; p < nr; ++p) {
        if (!inP[static_cast<std::size_t>(p)]) continue;
        if (!inP[static_cast<std::size_t>(ix.rneg[static_cast<std::size_t>(p)])])
            return {vp, part_fail("P-closed-neg", {{"a", rstr(ix, p)}})};
        for (int q = 0; q < nr; ++q)
            if (inP[static_cast<std::size_t>(q)] && !inP[static_cast<std::size_t>(ix.radd[p][q])])
                return {vp, part_fail("P-closed-add", {{"a", rstr(ix, p)}, {"b", rstr(ix, q)}})};
        for (int a = 0; a < nr; ++a)
            if (inA[static_cast<std::size_t>(a)] && !inP[static_cast<std::size_t>(ix.rmul[a][p])])
                return {vp, part_fail("P-absorbs", {{"a", rstr(ix, a)}, {"b", rstr(ix, p)}})};
    }
    for (int a = 0; a < nr; ++a) {
        if (inA[static_cast<std::size_t>(a)]) continue;
        bool ok = false;
        for (int b = 0; b < nr && !ok; ++b) {
            if (!inP[static_cast<std::size_t>(b)]) continue;
            int ab = ix.rmul[a][b];
            if (inA[static_cast<std::size_t>(ab)] && !inP[static_cast<std::size_t>(ab)]) ok = true;
        }
        if (!ok) return {vp, part_fail("pair-condition", {{"a", rstr(ix, a)}})};
    }
    return {vp, pass(ctx, id)};
}

std::pair<ValuationPair, CheckReport> pair_sampled(const CheckContext& ctx, const std::string& id) {
    const auto& inst = ctx.ref();
    const auto& nu = ctx.nu();

    ValuationPair vp;
    vp.core_ideal = ctx.colon_core();

    Element probe = inst.ring_zero();
    if (!inst.pair_membership_closed_form(probe, false).has_value()) {
        vp.exact = false;
        return {vp, inconclusive(ctx, id, "no closed form for pair membership on infinite carrier")};
    }
    auto instp = ctx.inst();
    vp.A.name = "A_nu";
    vp.A.contains = [instp](const Element& a) { return *instp->pair_membership_closed_form(a, false); };
    vp.P.name = "P_nu";
    vp.P.contains = [instp](const Element& a) { return *instp->pair_membership_closed_form(a, true); };

    Rng rng = ctx.rng_for(id);
    bool tainted = false;
    auto part_fail = [&](const char* part, nlohmann::json w) {
        w["part"] = part;
        return fail(ctx, id, std::move(w));
    };

    const Submodule& core = ctx.core();
    for (int s = 0; s < std::min(ctx.strategy().samples, 500); ++s) {
        Element a = inst.sample_ring_element(rng);
        Element x = inst.sample_module_element(rng);
        ExtendedValue vx = nu(x), vax = nu(inst.scalar(a, x));
        if (!vx.exact() || !vax.exact()) {
            tainted = true;
            continue;
        }
        bool geq = vax >= vx;
        if (vp.A.contains(a) && !geq)
            return {vp, part_fail("A-closed-form-mismatch",
                                  {{"a", inst.ring_to_string(a)}, {"x", inst.module_to_string(x)}})};
        if (!vp.A.contains(a) && geq) {
            // a single sample cannot refute "for all x"; nothing to record
        }
        if (!core.contains(x)) {
            bool gt = vax > vx;
            if (vp.P.contains(a) && !gt)
                return {vp, part_fail("P-closed-form-mismatch",
                                      {{"a", inst.ring_to_string(a)}, {"x", inst.module_to_string(x)}})};
        }
    }

    // subring / ideal / pair condition on sampled pairs through the closed forms
    for (int s = 0; s < 200; ++s) {
        Element a = inst.sample_ring_element(rng);
        Element b = inst.sample_ring_element(rng);
        if (vp.P.contains(a) && !vp.A.contains(a))
            return {vp, part_fail("P-subset-A", {{"a", inst.ring_to_string(a)}})};
        if (vp.A.contains(a) && vp.A.contains(b)) {
            if (!vp.A.contains(inst.ring_add(a, b)))
                return {vp, part_fail("A-closed-add", {{"a", inst.ring_to_string(a)}, {"b", inst.ring_to_string(b)}})};
            if (!vp.A.contains(inst.ring_multiply(a, b)))
                return {vp, part_fail("A-closed-mul", {{"a", inst.ring_to_string(a)}, {"b", inst.ring_to_string(b)}})};
            if (!vp.A.contains(inst.ring_negate(a)))
                return {vp, part_fail("A-closed-neg", {{"a", inst.ring_to_string(a)}})};
        }
        if (vp.P.contains(a) && vp.P.contains(b) && !vp.P.contains(inst.ring_add(a, b)))
            return {vp, part_fail("P-closed-add", {{"a", inst.ring_to_string(a)}, {"b", inst.ring_to_string(b)}})};
        if (vp.A.contains(a) && vp.P.contains(b) && !vp.P.contains(inst.ring_multiply(a, b)))
            return {vp, part_fail("P-absorbs", {{"a", inst.ring_to_string(a)}, {"b", inst.ring_to_string(b)}})};
        if (!vp.A.contains(a)) {
            bool ok = false;
            for (int t = 0; t < 64 && !ok; ++t) {
                Element c = inst.sample_ring_element(rng);
                if (!vp.P.contains(c)) continue;
                Element ac = inst.ring_multiply(a, c);
                if (vp.A.contains(ac) && !vp.P.contains(ac)) ok = true;
            }
            if (!ok)
                return {vp, inconclusive(ctx, id, "pair condition unresolved for a=" + inst.ring_to_string(a))};
        }
    }
    if (!vp.A.contains(inst.ring_one())) return {vp, part_fail("A-contains-one", {})};
    if (!vp.P.contains(inst.ring_zero())) return {vp, part_fail("P-contains-zero", {})};

    if (tainted) return {vp, inconclusive(ctx, id, "capped infinity entered the scan", true)};
    return {vp, pass(ctx, id)};
}

} // namespace

std::pair<ValuationPair, CheckReport> valuation_pair(const CheckContext& ctx) {
    if (exhaustive_mode(ctx)) return pair_exhaustive(ctx, "prop2.1.vii");
    return pair_sampled(ctx, "prop2.1.vii");
}

CheckReport check_prime_submodule(const CheckContext& ctx, const Submodule& N) {
    const std::string id = "prop2.1.vi";
    const auto& inst = ctx.ref();
    if (exhaustive_mode(ctx)) {
        const Indexed& ix = ctx.indexed();
        if (!N.exact) return inconclusive(ctx, id, "submodule membership not exact");
        const int nm = static_cast<int>(ix.M.size());
        const int nr = static_cast<int>(ix.R.size());
        std::vector<char> in_n(static_cast<std::size_t>(nm));
        int n_count = 0;
        for (int x = 0; x < nm; ++x) {
            in_n[static_cast<std::size_t>(x)] = N.contains(ix.M[static_cast<std::size_t>(x)]) ? 1 : 0;
            n_count += in_n[static_cast<std::size_t>(x)];
        }
        if (n_count == nm) return fail(ctx, id, {{"precondition", "N=M"}}, "N equals M");
        std::vector<char> am_in_n(static_cast<std::size_t>(nr));
        for (int a = 0; a < nr; ++a) {
            bool all = true;
            for (int x = 0; x < nm; ++x)
                if (!in_n[static_cast<std::size_t>(ix.act[a][x])]) {
                    all = false;
                    break;
                }
            am_in_n[static_cast<std::size_t>(a)] = all ? 1 : 0;
        }
        for (int a = 0; a < nr; ++a)
            for (int x = 0; x < nm; ++x)
                if (in_n[static_cast<std::size_t>(ix.act[a][x])] && !in_n[static_cast<std::size_t>(x)] &&
                    !am_in_n[static_cast<std::size_t>(a)])
                    return fail(ctx, id, {{"a", rstr(ix, a)}, {"x", mstr(ix, x)}});
        return pass(ctx, id);
    }
    Rng rng = ctx.rng_for(id);
    // For the core, (N : M) with an exact closed form decides "aM in N".
    const RingSubset* colon = nullptr;
    if (N.name == "nu^-1(inf)" && ctx.colon_core().exact) colon = &ctx.colon_core();
    bool proper = false, unresolved = false;
    std::string unresolved_note;
    for (int s = 0; s < ctx.strategy().samples; ++s) {
        Element a = inst.sample_ring_element(rng);
        Element x = inst.sample_module_element(rng);
        if (!N.contains(x)) proper = true;
        if (!N.contains(inst.scalar(a, x)) || N.contains(x)) continue;
        // premise holds and x escapes N: decide a M in N
        if (colon) {
            if (colon->contains(a)) continue;
            return fail(ctx, id, {{"a", inst.ring_to_string(a)}, {"x", inst.module_to_string(x)}});
        }
        bool refuted = false;
        for (int t = 0; t < 64; ++t) {
            Element y = inst.sample_module_element(rng);
            if (!N.contains(inst.scalar(a, y))) {
                refuted = true;
                break;
            }
        }
        if (refuted)
            return fail(ctx, id, {{"a", inst.ring_to_string(a)}, {"x", inst.module_to_string(x)}});
        if (!unresolved) {
            unresolved = true;
            unresolved_note = "aM in N unresolved for a=" + inst.ring_to_string(a);
        }
    }
    if (!proper) return inconclusive(ctx, id, "could not exhibit an element outside N");
    if (unresolved) return inconclusive(ctx, id, unresolved_note);
    return pass(ctx, id);
}

CheckReport run_valuation_claim(const CheckContext& ctx, const std::string& claim_id) {
    if (claim_id == "def2.5.i") return axiom_i(ctx, claim_id);
    if (claim_id == "def2.5.ii") return axiom_ii(ctx, claim_id);
    if (claim_id == "def2.5.iii") return z_transfer_claim(ctx, claim_id, ZKind::PremiseLeq);
    if (claim_id == "def2.5.iv") return axiom_iv(ctx, claim_id);
    if (claim_id == "def2.5.onto") return axiom_onto(ctx, claim_id);
    if (claim_id == "prop2.1.i") return prop_i(ctx, claim_id);
    if (claim_id == "prop2.1.ii") return prop_ii(ctx, claim_id);
    if (claim_id == "prop2.1.iii") return prop_iii(ctx, claim_id);
    if (claim_id == "prop2.1.iv") return z_transfer_claim(ctx, claim_id, ZKind::PremiseEq);
    if (claim_id == "prop2.1.v") return z_transfer_claim(ctx, claim_id, ZKind::PremiseLt);
    if (claim_id == "prop2.1.vi") return check_prime_submodule(ctx, ctx.core());
    if (claim_id == "prop2.1.vii") return valuation_pair(ctx).second;
    if (claim_id == "prop3.1") return prop31(ctx, claim_id);
    throw ConfigError("unknown valuation claim '" + claim_id + "'");
}

} // namespace filtval
