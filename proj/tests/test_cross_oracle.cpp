#include <doctest.h>

#include "filtval/checks.hpp"
#include "filtval/instances.hpp"
#include "oracle.hpp"

using namespace filtval;

// Every claim, on instances outside the pinned catalog, against the raw
// oracle: verdicts must match, FAIL witnesses must be identical and must
// replay. Guards the checkers against overfitting to the catalog.
TEST_CASE("implementation matches the oracle on fresh instances") {
    std::vector<InstancePtr> instances{
        make_zmod_padic(5, 2),
        make_zmod_padic(7, 1), // k = 1 behaves like the trivial-tail field
        make_poly_truncated(2, 3),
        make_poly_truncated(3, 2),
        make_trivial_strong(6),
        make_direct_sum(make_zmod_padic(2, 2), 2),
    };
    for (const auto& inst : instances) {
        CheckOptions opts;
        opts.strategy = SearchStrategy::exhaustive();
        CheckContext ctx(inst, opts);
        for (const auto& claim : claim_order()) {
            CheckReport rep = run_claim(ctx, claim);
            oracle::Result exp = oracle::claim(inst, claim, ctx.level_depth(), ctx.options().n_max);
            INFO(inst->id() << " " << claim);
            CHECK(rep.verdict == exp.verdict);
            if (exp.verdict == Verdict::Fail) {
                CHECK(rep.witness == exp.witness);
                CHECK(oracle::replay(inst, claim, rep.witness));
            }
        }
    }
}

// The k = 1 residue instance and the trivial-tail field share verdicts on
// every claim: same carrier, same levels by two different constructions.
TEST_CASE("two constructions of F7 agree claim by claim") {
    auto a = make_zmod_padic(7, 1);
    auto b = make_field_trivial_tail(7);
    CheckOptions opts;
    opts.strategy = SearchStrategy::exhaustive();
    CheckContext ca(a, opts), cb(b, opts);
    for (const auto& claim : claim_order()) {
        CheckReport ra = run_claim(ca, claim);
        CheckReport rb = run_claim(cb, claim);
        INFO(claim);
        CHECK(ra.verdict == rb.verdict);
        CHECK(ra.witness == rb.witness);
    }
}
