#pragma once

#include "filtval/checks.hpp"

namespace filtval {

inline CheckReport make_report(const CheckContext& ctx, std::string claim_id) {
    CheckReport rep;
    rep.claim_id = std::move(claim_id);
    rep.strategy = ctx.strategy();
    return rep;
}

inline CheckReport pass(const CheckContext& ctx, const std::string& claim_id, std::string note = {}) {
    CheckReport rep = make_report(ctx, claim_id);
    rep.verdict = Verdict::Pass;
    rep.note = std::move(note);
    return rep;
}

inline CheckReport fail(const CheckContext& ctx, const std::string& claim_id, nlohmann::json witness,
                        std::string note = {}) {
    CheckReport rep = make_report(ctx, claim_id);
    rep.verdict = Verdict::Fail;
    rep.witness = std::move(witness);
    rep.note = std::move(note);
    return rep;
}

inline CheckReport inconclusive(const CheckContext& ctx, const std::string& claim_id, std::string note,
                                bool tainted = false) {
    CheckReport rep = make_report(ctx, claim_id);
    rep.verdict = Verdict::Inconclusive;
    rep.note = std::move(note);
    rep.tainted = tainted;
    return rep;
}

// Tracks capped-infinity taint during sampled scans and settles the verdict:
// an untainted counterexample beats everything, otherwise taint forces
// INCONCLUSIVE, otherwise PASS.
struct SampledOutcome {
    bool tainted = false;
    bool violated = false;
    nlohmann::json witness;

    void record_values(std::initializer_list<ExtendedValue> vals) {
        for (const auto& v : vals)
            if (!v.exact()) tainted = true;
    }

    bool violation(nlohmann::json w) {
        if (!violated) {
            violated = true;
            witness = std::move(w);
        }
        return true;
    }

    CheckReport settle(const CheckContext& ctx, const std::string& claim_id) const {
        if (violated) {
            CheckReport rep = make_report(ctx, claim_id);
            rep.verdict = Verdict::Fail;
            rep.witness = witness;
            return rep;
        }
        if (tainted) return inconclusive(ctx, claim_id, "capped infinity entered the scan", true);
        return pass(ctx, claim_id);
    }
};

} // namespace filtval
