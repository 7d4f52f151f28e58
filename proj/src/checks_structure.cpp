#include <functional>

#include "check_util.hpp"

namespace filtval {

namespace {

std::string rstr(const Indexed& ix, int a) { return ix.inst->ring_to_string(ix.R[static_cast<std::size_t>(a)]); }
std::string mstr(const Indexed& ix, int x) { return ix.inst->module_to_string(ix.M[static_cast<std::size_t>(x)]); }

// Finite carriers are checked exhaustively even under a bounded strategy; the
// sampled paths below serve infinite carriers.
bool exhaustive_mode(const CheckContext& ctx) {
    return ctx.strategy().is_exhaustive() || ctx.ref().finite();
}

// --- def2.1.i / def2.3.i: level 0 is the whole carrier ---------------------

CheckReport level_zero_claim(const CheckContext& ctx, const std::string& id, bool module_side) {
    if (exhaustive_mode(ctx)) {
        const Indexed& ix = ctx.indexed();
        if (module_side) {
            for (std::size_t x = 0; x < ix.M.size(); ++x)
                if (!ix.m_member(static_cast<int>(x), 0))
                    return fail(ctx, id, {{"x", mstr(ix, static_cast<int>(x))}});
        } else {
            for (std::size_t a = 0; a < ix.R.size(); ++a)
                if (!ix.r_member(static_cast<int>(a), 0))
                    return fail(ctx, id, {{"x", rstr(ix, static_cast<int>(a))}});
        }
        return pass(ctx, id);
    }
    SampledOutcome out;
    Rng rng = ctx.rng_for(id);
    const auto& inst = ctx.ref();
    for (int s = 0; s < ctx.strategy().samples; ++s) {
        if (module_side) {
            Element x = inst.sample_module_element(rng);
            if (!inst.module_level_member(x, 0)) {
                out.violation({{"x", inst.module_to_string(x)}});
                break;
            }
        } else {
            Element a = inst.sample_ring_element(rng);
            if (!inst.ring_level_member(a, 0)) {
                out.violation({{"x", inst.ring_to_string(a)}});
                break;
            }
        }
    }
    return out.settle(ctx, id);
}

// --- def2.1.ii / def2.3.ii: levels descend -------------------------------

CheckReport antitone_claim(const CheckContext& ctx, const std::string& id, bool module_side) {
    if (exhaustive_mode(ctx)) {
        const Indexed& ix = ctx.indexed();
        int count = module_side ? static_cast<int>(ix.M.size()) : static_cast<int>(ix.R.size());
        for (int e = 0; e < count; ++e)
            for (int n = 0; n < ctx.level_depth(); ++n) {
                bool deeper = module_side ? ix.m_member(e, n + 1) : ix.r_member(e, n + 1);
                bool shallower = module_side ? ix.m_member(e, n) : ix.r_member(e, n);
                if (deeper && !shallower)
                    return fail(ctx, id,
                                {{"x", module_side ? mstr(ix, e) : rstr(ix, e)}, {"n", n}});
            }
        return pass(ctx, id);
    }
    SampledOutcome out;
    Rng rng = ctx.rng_for(id);
    const auto& inst = ctx.ref();
    for (int s = 0; s < ctx.strategy().samples; ++s) {
        int n = static_cast<int>(rng.uniform(0, ctx.strategy().level_bound - 1));
        if (module_side) {
            Element x = inst.sample_module_element(rng);
            if (inst.module_level_member(x, n + 1) && !inst.module_level_member(x, n)) {
                out.violation({{"x", inst.module_to_string(x)}, {"n", n}});
                break;
            }
        } else {
            Element a = inst.sample_ring_element(rng);
            if (inst.ring_level_member(a, n + 1) && !inst.ring_level_member(a, n)) {
                out.violation({{"x", inst.ring_to_string(a)}, {"n", n}});
                break;
            }
        }
    }
    return out.settle(ctx, id);
}

// --- def2.1.iii: R_n R_m in R_{n+m} ---------------------------------------

CheckReport ring_product_claim(const CheckContext& ctx, const std::string& id) {
    if (exhaustive_mode(ctx)) {
        const Indexed& ix = ctx.indexed();
        const int depth = ctx.level_depth();
        const int nr = static_cast<int>(ix.R.size());
        for (int a = 0; a < nr; ++a)
            for (int b = 0; b < nr; ++b)
                for (int n = 0; n <= depth; ++n) {
                    if (!ix.r_member(a, n)) continue;
                    for (int m = 0; m <= depth; ++m) {
                        if (!ix.r_member(b, m)) continue;
                        if (!ix.r_member(ix.rmul[a][b], n + m))
                            return fail(ctx, id,
                                        {{"a", rstr(ix, a)}, {"b", rstr(ix, b)}, {"m", m}, {"n", n}});
                    }
                }
        return pass(ctx, id);
    }
    SampledOutcome out;
    Rng rng = ctx.rng_for(id);
    const auto& inst = ctx.ref();
    const int lb = ctx.strategy().level_bound;
    for (int s = 0; s < ctx.strategy().samples; ++s) {
        int n = static_cast<int>(rng.uniform(0, lb));
        int m = static_cast<int>(rng.uniform(0, lb));
        auto a = inst.sample_ring_at_level(n, rng);
        auto b = inst.sample_ring_at_level(m, rng);
        if (!a || !b) continue;
        if (!inst.ring_level_member(inst.ring_multiply(*a, *b), n + m)) {
            out.violation({{"a", inst.ring_to_string(*a)}, {"b", inst.ring_to_string(*b)},
                           {"m", m}, {"n", n}});
            break;
        }
    }
    return out.settle(ctx, id);
}

// --- def2.3.iii: R_n M_m in M_{n+m} ---------------------------------------

CheckReport action_level_claim(const CheckContext& ctx, const std::string& id) {
    if (exhaustive_mode(ctx)) {
        const Indexed& ix = ctx.indexed();
        const int depth = ctx.level_depth();
        for (std::size_t a = 0; a < ix.R.size(); ++a)
            for (std::size_t x = 0; x < ix.M.size(); ++x)
                for (int n = 0; n <= depth; ++n) {
                    if (!ix.r_member(static_cast<int>(a), n)) continue;
                    for (int m = 0; m <= depth; ++m) {
                        if (!ix.m_member(static_cast<int>(x), m)) continue;
                        if (!ix.m_member(ix.act[a][x], n + m))
                            return fail(ctx, id,
                                        {{"a", rstr(ix, static_cast<int>(a))},
                                         {"m", m},
                                         {"n", n},
                                         {"x", mstr(ix, static_cast<int>(x))}});
                    }
                }
        return pass(ctx, id);
    }
    SampledOutcome out;
    Rng rng = ctx.rng_for(id);
    const auto& inst = ctx.ref();
    const int lb = ctx.strategy().level_bound;
    for (int s = 0; s < ctx.strategy().samples; ++s) {
        int n = static_cast<int>(rng.uniform(0, lb));
        int m = static_cast<int>(rng.uniform(0, lb));
        auto a = inst.sample_ring_at_level(n, rng);
        auto x = inst.sample_module_at_level(m, rng);
        if (!a || !x) continue;
        if (!inst.module_level_member(inst.scalar(*a, *x), n + m)) {
            out.violation({{"a", inst.ring_to_string(*a)}, {"m", m}, {"n", n},
                           {"x", inst.module_to_string(*x)}});
            break;
        }
    }
    return out.settle(ctx, id);
}

// --- subgroup closure of each level (library aggregate only) ---------------

std::optional<nlohmann::json> level_closure_violation(const CheckContext& ctx, bool module_side) {
    const auto& inst = ctx.ref();
    if (exhaustive_mode(ctx)) {
        const Indexed& ix = ctx.indexed();
        int count = module_side ? static_cast<int>(ix.M.size()) : static_cast<int>(ix.R.size());
        for (int n = 0; n <= ctx.level_depth(); ++n) {
            auto member = [&](int e) { return module_side ? ix.m_member(e, n) : ix.r_member(e, n); };
            auto str = [&](int e) { return module_side ? mstr(ix, e) : rstr(ix, e); };
            if (!member(module_side ? ix.m_zero : ix.r_zero))
                return nlohmann::json{{"law", "level-contains-zero"}, {"n", n}};
            std::vector<int> level;
            for (int e = 0; e < count; ++e)
                if (member(e)) level.push_back(e);
            for (int e : level) {
                int neg = module_side ? ix.mneg[static_cast<std::size_t>(e)]
                                      : ix.rneg[static_cast<std::size_t>(e)];
                if (!member(neg))
                    return nlohmann::json{{"law", "level-closed-neg"}, {"n", n}, {"x", str(e)}};
            }
            for (int e : level)
                for (int f : level) {
                    int sum = module_side ? ix.madd[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)]
                                          : ix.radd[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)];
                    if (!member(sum))
                        return nlohmann::json{
                            {"law", "level-closed-add"}, {"n", n}, {"x", str(e)}, {"y", str(f)}};
                }
        }
        return std::nullopt;
    }
    Rng rng = ctx.rng_for(module_side ? "def2.3.closure" : "def2.1.closure");
    const int lb = ctx.strategy().level_bound;
    for (int s = 0; s < ctx.strategy().samples; ++s) {
        int n = static_cast<int>(rng.uniform(0, lb));
        if (module_side) {
            auto x = inst.sample_module_at_level(n, rng);
            auto y = inst.sample_module_at_level(n, rng);
            if (!inst.module_level_member(inst.module_zero(), n))
                return nlohmann::json{{"law", "level-contains-zero"}, {"n", n}};
            if (!x || !y) continue;
            if (!inst.module_level_member(inst.module_add(*x, *y), n))
                return nlohmann::json{{"law", "level-closed-add"},
                                      {"n", n},
                                      {"x", inst.module_to_string(*x)},
                                      {"y", inst.module_to_string(*y)}};
            if (!inst.module_level_member(inst.module_negate(*x), n))
                return nlohmann::json{{"law", "level-closed-neg"}, {"n", n}, {"x", inst.module_to_string(*x)}};
        } else {
            auto a = inst.sample_ring_at_level(n, rng);
            auto b = inst.sample_ring_at_level(n, rng);
            if (!inst.ring_level_member(inst.ring_zero(), n))
                return nlohmann::json{{"law", "level-contains-zero"}, {"n", n}};
            if (!a || !b) continue;
            if (!inst.ring_level_member(inst.ring_add(*a, *b), n))
                return nlohmann::json{{"law", "level-closed-add"},
                                      {"n", n},
                                      {"x", inst.ring_to_string(*a)},
                                      {"y", inst.ring_to_string(*b)}};
            if (!inst.ring_level_member(inst.ring_negate(*a), n))
                return nlohmann::json{{"law", "level-closed-neg"}, {"n", n}, {"x", inst.ring_to_string(*a)}};
        }
    }
    return std::nullopt;
}

// --- def2.2: strong filtration (generated-subgroup equality) ---------------

// Generated additive subgroup of `gens` inside a tabulated abelian group.
std::vector<char> additive_closure(const std::vector<std::vector<int>>& add, const std::vector<int>& neg,
                                   int zero, const std::vector<int>& gens) {
    std::vector<char> in(add.size(), 0);
    std::vector<int> queue;
    in[static_cast<std::size_t>(zero)] = 1;
    queue.push_back(zero);
    std::vector<int> steps;
    for (int g : gens) {
        steps.push_back(g);
        steps.push_back(neg[static_cast<std::size_t>(g)]);
    }
    while (!queue.empty()) {
        int s = queue.back();
        queue.pop_back();
        for (int g : steps) {
            int t = add[static_cast<std::size_t>(s)][static_cast<std::size_t>(g)];
            if (!in[static_cast<std::size_t>(t)]) {
                in[static_cast<std::size_t>(t)] = 1;
                queue.push_back(t);
            }
        }
    }
    return in;
}

CheckReport strong_claim(const CheckContext& ctx, const std::string& id) {
    const auto& inst = ctx.ref();
    if (exhaustive_mode(ctx)) {
        const Indexed& ix = ctx.indexed();
        const int depth = ctx.level_depth();
        for (int side = 0; side < 2; ++side) {
            const bool module_side = side == 1;
            for (int n = 0; n <= depth; ++n)
                for (int m = 0; n + m <= depth; ++m) {
                    std::vector<int> left, right;
                    for (std::size_t a = 0; a < ix.R.size(); ++a)
                        if (ix.r_member(static_cast<int>(a), n)) left.push_back(static_cast<int>(a));
                    int right_count = module_side ? static_cast<int>(ix.M.size())
                                                  : static_cast<int>(ix.R.size());
                    for (int e = 0; e < right_count; ++e) {
                        bool in = module_side ? ix.m_member(e, m) : ix.r_member(e, m);
                        if (in) right.push_back(e);
                    }
                    std::vector<char> seen(module_side ? ix.M.size() : ix.R.size(), 0);
                    std::vector<int> gens;
                    for (int a : left)
                        for (int e : right) {
                            int p = module_side ? ix.act[static_cast<std::size_t>(a)][static_cast<std::size_t>(e)]
                                                : ix.rmul[static_cast<std::size_t>(a)][static_cast<std::size_t>(e)];
                            if (!seen[static_cast<std::size_t>(p)]) {
                                seen[static_cast<std::size_t>(p)] = 1;
                                gens.push_back(p);
                            }
                        }
                    std::vector<char> generated =
                        module_side ? additive_closure(ix.madd, ix.mneg, ix.m_zero, gens)
                                    : additive_closure(ix.radd, ix.rneg, ix.r_zero, gens);
                    int total = module_side ? static_cast<int>(ix.M.size()) : static_cast<int>(ix.R.size());
                    for (int e = 0; e < total; ++e) {
                        bool target = module_side ? ix.m_member(e, n + m) : ix.r_member(e, n + m);
                        bool got = generated[static_cast<std::size_t>(e)] != 0;
                        if (target && !got)
                            return fail(ctx, id,
                                        {{"m", m},
                                         {"missing", module_side ? mstr(ix, e) : rstr(ix, e)},
                                         {"n", n},
                                         {"side", module_side ? "module" : "ring"}});
                        if (got && !target)
                            return fail(ctx, id,
                                        {{"excess", module_side ? mstr(ix, e) : rstr(ix, e)},
                                         {"m", m},
                                         {"n", n},
                                         {"side", module_side ? "module" : "ring"}});
                    }
                }
        }
        return pass(ctx, id);
    }

    // Bounded check: the inclusion direction is sampled directly; the
    // generation direction relies on the instance's factorization closed form
    // and falls back to INCONCLUSIVE when a target cannot be resolved.
    Rng rng = ctx.rng_for(id);
    const int lb = ctx.strategy().level_bound;
    bool unresolved = false;
    std::string unresolved_note;
    int per_pair = std::max(1, ctx.strategy().samples / ((lb + 1) * (lb + 2)));
    for (int side = 0; side < 2; ++side) {
        const bool module_side = side == 1;
        for (int n = 0; n <= lb; ++n)
            for (int m = 0; n + m <= lb; ++m)
                for (int t = 0; t < per_pair; ++t) {
                    auto a = inst.sample_ring_at_level(n, rng);
                    auto e = module_side ? inst.sample_module_at_level(m, rng)
                                         : inst.sample_ring_at_level(m, rng);
                    if (a && e) {
                        Element prod = module_side ? inst.scalar(*a, *e) : inst.ring_multiply(*a, *e);
                        bool in = module_side ? inst.module_level_member(prod, n + m)
                                              : inst.ring_level_member(prod, n + m);
                        if (!in)
                            return fail(ctx, id,
                                        {{"excess", module_side ? inst.module_to_string(prod)
                                                                : inst.ring_to_string(prod)},
                                         {"m", m},
                                         {"n", n},
                                         {"side", module_side ? "module" : "ring"}});
                    }
                    auto target = module_side ? inst.sample_module_at_level(n + m, rng)
                                              : inst.sample_ring_at_level(n + m, rng);
                    if (!target) continue;
                    auto factors = inst.strong_factor(*target, n, m, module_side);
                    bool ok = false;
                    if (factors) {
                        Element prod = module_side ? inst.scalar(factors->first, factors->second)
                                                   : inst.ring_multiply(factors->first, factors->second);
                        bool lv_a = inst.ring_level_member(factors->first, n);
                        bool lv_b = module_side ? inst.module_level_member(factors->second, m)
                                                : inst.ring_level_member(factors->second, m);
                        ok = lv_a && lv_b && prod == *target;
                    }
                    if (!ok && !unresolved) {
                        unresolved = true;
                        unresolved_note = "generation unresolved at (" + std::to_string(n) + "," +
                                          std::to_string(m) + ")";
                    }
                }
    }
    if (unresolved) return inconclusive(ctx, id, unresolved_note);
    return pass(ctx, id);
}

} // namespace

CheckReport run_filtration_claim(const CheckContext& ctx, const std::string& claim_id) {
    if (claim_id == "def2.1.i") return level_zero_claim(ctx, claim_id, false);
    if (claim_id == "def2.1.ii") return antitone_claim(ctx, claim_id, false);
    if (claim_id == "def2.1.iii") return ring_product_claim(ctx, claim_id);
    if (claim_id == "def2.3.i") return level_zero_claim(ctx, claim_id, true);
    if (claim_id == "def2.3.ii") return antitone_claim(ctx, claim_id, true);
    if (claim_id == "def2.3.iii") return action_level_claim(ctx, claim_id);
    if (claim_id == "def2.2") return strong_claim(ctx, claim_id);
    throw ConfigError("unknown filtration claim '" + claim_id + "'");
}

CheckReport check_filtered_ring(const CheckContext& ctx) {
    // the levels must be subgroups before the numbered items mean anything
    if (auto w = level_closure_violation(ctx, false)) return fail(ctx, "def2.1", *w, "level subgroup law");
    for (const char* sub : {"def2.1.i", "def2.1.ii", "def2.1.iii"}) {
        CheckReport rep = run_filtration_claim(ctx, sub);
        if (rep.verdict != Verdict::Pass) {
            rep.note = rep.note.empty() ? std::string(sub) : rep.note + "; " + sub;
            rep.claim_id = "def2.1";
            return rep;
        }
    }
    return pass(ctx, "def2.1");
}

CheckReport check_filtered_module(const CheckContext& ctx) {
    if (auto w = level_closure_violation(ctx, true)) return fail(ctx, "def2.3", *w, "level subgroup law");
    for (const char* sub : {"def2.3.i", "def2.3.ii", "def2.3.iii"}) {
        CheckReport rep = run_filtration_claim(ctx, sub);
        if (rep.verdict != Verdict::Pass) {
            rep.note = rep.note.empty() ? std::string(sub) : rep.note + "; " + sub;
            rep.claim_id = "def2.3";
            return rep;
        }
    }
    return pass(ctx, "def2.3");
}

CheckReport check_strong(const CheckContext& ctx) { return run_filtration_claim(ctx, "def2.2"); }

// --- structure self-test ----------------------------------------------------

CheckReport self_test_structure(const CheckContext& ctx) {
    const std::string id = "structure.selftest";
    const auto& inst = ctx.ref();
    if (ctx.strategy().is_exhaustive()) {
        const Indexed& ix = ctx.indexed();
        const int nr = static_cast<int>(ix.R.size());
        const int nm = static_cast<int>(ix.M.size());
        auto vfail = [&](const char* law, nlohmann::json w) {
            w["law"] = law;
            return fail(ctx, id, std::move(w));
        };
        for (int a = 0; a < nr; ++a) {
            if (ix.radd[static_cast<std::size_t>(a)][static_cast<std::size_t>(ix.r_zero)] != a)
                return vfail("ring-add-zero", {{"a", rstr(ix, a)}});
            if (ix.radd[static_cast<std::size_t>(a)][static_cast<std::size_t>(ix.rneg[static_cast<std::size_t>(a)])] != ix.r_zero)
                return vfail("ring-add-inverse", {{"a", rstr(ix, a)}});
            if (ix.rmul[static_cast<std::size_t>(a)][static_cast<std::size_t>(ix.r_one)] != a ||
                ix.rmul[static_cast<std::size_t>(ix.r_one)][static_cast<std::size_t>(a)] != a)
                return vfail("ring-mul-one", {{"a", rstr(ix, a)}});
            for (int b = 0; b < nr; ++b) {
                if (ix.radd[a][b] != ix.radd[b][a])
                    return vfail("ring-add-comm", {{"a", rstr(ix, a)}, {"b", rstr(ix, b)}});
                for (int c = 0; c < nr; ++c) {
                    if (ix.radd[ix.radd[a][b]][c] != ix.radd[a][ix.radd[b][c]])
                        return vfail("ring-add-assoc",
                                     {{"a", rstr(ix, a)}, {"b", rstr(ix, b)}, {"c", rstr(ix, c)}});
                    if (ix.rmul[ix.rmul[a][b]][c] != ix.rmul[a][ix.rmul[b][c]])
                        return vfail("ring-mul-assoc",
                                     {{"a", rstr(ix, a)}, {"b", rstr(ix, b)}, {"c", rstr(ix, c)}});
                    if (ix.rmul[ix.radd[a][b]][c] != ix.radd[ix.rmul[a][c]][ix.rmul[b][c]])
                        return vfail("ring-distributive",
                                     {{"a", rstr(ix, a)}, {"b", rstr(ix, b)}, {"c", rstr(ix, c)}});
                }
            }
        }
        for (int x = 0; x < nm; ++x) {
            if (ix.madd[static_cast<std::size_t>(x)][static_cast<std::size_t>(ix.m_zero)] != x)
                return vfail("module-add-zero", {{"x", mstr(ix, x)}});
            if (ix.madd[static_cast<std::size_t>(x)][static_cast<std::size_t>(ix.mneg[static_cast<std::size_t>(x)])] != ix.m_zero)
                return vfail("module-add-inverse", {{"x", mstr(ix, x)}});
            for (int y = 0; y < nm; ++y) {
                if (ix.madd[x][y] != ix.madd[y][x])
                    return vfail("module-add-comm", {{"x", mstr(ix, x)}, {"y", mstr(ix, y)}});
                for (int z = 0; z < nm; ++z)
                    if (ix.madd[ix.madd[x][y]][z] != ix.madd[x][ix.madd[y][z]])
                        return vfail("module-add-assoc",
                                     {{"x", mstr(ix, x)}, {"y", mstr(ix, y)}, {"z", mstr(ix, z)}});
            }
        }
        for (int a = 0; a < nr; ++a)
            for (int x = 0; x < nm; ++x) {
                if (ix.act[static_cast<std::size_t>(ix.r_one)][static_cast<std::size_t>(x)] != x)
                    return vfail("action-one", {{"x", mstr(ix, x)}});
                if (ix.act[static_cast<std::size_t>(ix.r_zero)][static_cast<std::size_t>(x)] != ix.m_zero)
                    return vfail("action-zero", {{"x", mstr(ix, x)}});
                for (int b = 0; b < nr; ++b) {
                    if (ix.act[ix.radd[a][b]][x] != ix.madd[ix.act[a][x]][ix.act[b][x]])
                        return vfail("action-add-scalar",
                                     {{"a", rstr(ix, a)}, {"b", rstr(ix, b)}, {"x", mstr(ix, x)}});
                    if (ix.act[ix.rmul[a][b]][x] != ix.act[a][ix.act[b][x]])
                        return vfail("action-mul-assoc",
                                     {{"a", rstr(ix, a)}, {"b", rstr(ix, b)}, {"x", mstr(ix, x)}});
                }
                for (int y = 0; y < nm; ++y)
                    if (ix.act[a][ix.madd[x][y]] != ix.madd[ix.act[a][x]][ix.act[a][y]])
                        return vfail("action-add-module",
                                     {{"a", rstr(ix, a)}, {"x", mstr(ix, x)}, {"y", mstr(ix, y)}});
            }
        return pass(ctx, id);
    }

    // sampled triples
    Rng rng = ctx.rng_for(id);
    std::vector<Element> rpool, mpool;
    if (inst.finite()) {
        rpool = inst.ring_elements();
        mpool = inst.module_elements();
    }
    auto draw_r = [&]() {
        if (!rpool.empty())
            return rpool[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(rpool.size()) - 1))];
        return inst.sample_ring_element(rng);
    };
    auto draw_m = [&]() {
        if (!mpool.empty())
            return mpool[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(mpool.size()) - 1))];
        return inst.sample_module_element(rng);
    };
    for (int s = 0; s < ctx.strategy().samples; ++s) {
        Element a = draw_r(), b = draw_r(), c = draw_r();
        Element x = draw_m(), y = draw_m(), z = draw_m();
        auto vfail = [&](const char* law, nlohmann::json w) {
            w["law"] = law;
            return fail(ctx, id, std::move(w), "sampled subset");
        };
        if (!(inst.ring_add(inst.ring_add(a, b), c) == inst.ring_add(a, inst.ring_add(b, c))))
            return vfail("ring-add-assoc", {{"a", inst.ring_to_string(a)}, {"b", inst.ring_to_string(b)}, {"c", inst.ring_to_string(c)}});
        if (!(inst.ring_multiply(inst.ring_multiply(a, b), c) == inst.ring_multiply(a, inst.ring_multiply(b, c))))
            return vfail("ring-mul-assoc", {{"a", inst.ring_to_string(a)}, {"b", inst.ring_to_string(b)}, {"c", inst.ring_to_string(c)}});
        if (!(inst.ring_multiply(inst.ring_add(a, b), c) ==
              inst.ring_add(inst.ring_multiply(a, c), inst.ring_multiply(b, c))))
            return vfail("ring-distributive", {{"a", inst.ring_to_string(a)}, {"b", inst.ring_to_string(b)}, {"c", inst.ring_to_string(c)}});
        if (!(inst.ring_add(a, inst.ring_negate(a)) == inst.ring_zero()))
            return vfail("ring-add-inverse", {{"a", inst.ring_to_string(a)}});
        if (!(inst.ring_multiply(a, inst.ring_one()) == a))
            return vfail("ring-mul-one", {{"a", inst.ring_to_string(a)}});
        if (!(inst.module_add(inst.module_add(x, y), z) == inst.module_add(x, inst.module_add(y, z))))
            return vfail("module-add-assoc", {{"x", inst.module_to_string(x)}, {"y", inst.module_to_string(y)}, {"z", inst.module_to_string(z)}});
        if (!(inst.module_add(x, inst.module_negate(x)) == inst.module_zero()))
            return vfail("module-add-inverse", {{"x", inst.module_to_string(x)}});
        if (!(inst.scalar(inst.ring_add(a, b), x) == inst.module_add(inst.scalar(a, x), inst.scalar(b, x))))
            return vfail("action-add-scalar", {{"a", inst.ring_to_string(a)}, {"b", inst.ring_to_string(b)}, {"x", inst.module_to_string(x)}});
        if (!(inst.scalar(inst.ring_multiply(a, b), x) == inst.scalar(a, inst.scalar(b, x))))
            return vfail("action-mul-assoc", {{"a", inst.ring_to_string(a)}, {"b", inst.ring_to_string(b)}, {"x", inst.module_to_string(x)}});
        if (!(inst.scalar(a, inst.module_add(x, y)) == inst.module_add(inst.scalar(a, x), inst.scalar(a, y))))
            return vfail("action-add-module", {{"a", inst.ring_to_string(a)}, {"x", inst.module_to_string(x)}, {"y", inst.module_to_string(y)}});
        if (!(inst.scalar(inst.ring_one(), x) == x)) return vfail("action-one", {{"x", inst.module_to_string(x)}});
    }
    return pass(ctx, id, "sampled subset");
}

} // namespace filtval
