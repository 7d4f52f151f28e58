#pragma once

#include <string>

#include <json.hpp>

#include "filtval/strategy.hpp"

namespace filtval {

/// Outcome of one claim on one instance. FAIL is a successful run that found
/// a concrete counterexample; INCONCLUSIVE means the search could neither
/// confirm nor refute within its budget (or a capped infinity was involved).
enum class Verdict { Pass, Fail, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

Verdict verdict_from_string(const std::string& s);

/// One claim's result. The witness is a JSON object whose keys are the
/// quantified variables of the claim (canonical element strings; levels as
/// integers); replaying it through raw arithmetic reproduces the violation.
struct CheckReport {
    std::string claim_id;
    Verdict verdict = Verdict::Pass;
    nlohmann::json witness; // object; null when absent
    std::string note;       // skip reason / convention flag; empty when unused
    SearchStrategy strategy;
    bool tainted = false;   // a capped infinity entered the evaluation

    bool passed() const { return verdict == Verdict::Pass; }
    bool failed() const { return verdict == Verdict::Fail; }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["claim_id"] = claim_id;
        j["verdict"] = to_string(verdict);
        j["tainted"] = tainted;
        if (!witness.is_null()) j["witness"] = witness;
        if (!note.empty()) j["note"] = note;
        return j;
    }
};

} // namespace filtval
