#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "filtval/indexed.hpp"
#include "filtval/report.hpp"
#include "filtval/skeleton.hpp"
#include "filtval/strategy.hpp"
#include "filtval/valuation.hpp"

namespace filtval {

struct CheckOptions {
    SearchStrategy strategy;
    /// Filtration scan depth; defaults to stabilization depth + 2 on finite
    /// instances and to strategy.level_bound on infinite ones.
    std::optional<int> depth;
    int n_max = 2;
};

/// Shared state for a run of checks on one instance: the derived valuation,
/// lazily built tables (finite carriers), the lazily computed skeleton, core
/// and colon ideal. Checkers pull what they need from here so a multi-claim
/// run prices each table once.
class CheckContext {
public:
    CheckContext(InstancePtr inst, CheckOptions options);

    const InstancePtr& inst() const { return inst_; }
    const FilteredInstance& ref() const { return *inst_; }
    const CheckOptions& options() const { return options_; }
    const SearchStrategy& strategy() const { return options_.strategy; }
    const DerivedValuation& nu() const { return nu_; }

    int level_depth() const { return depth_; }

    /// Tables for exhaustive scans; CapabilityError on infinite carriers.
    const Indexed& indexed() const;

    const Submodule& core() const;
    const RingSubset& colon_core() const;
    const Skeleton& skeleton() const;

    Rng rng_for(std::string_view claim_id) const { return claim_rng(strategy().seed, claim_id); }

private:
    InstancePtr inst_;
    CheckOptions options_;
    int depth_;
    DerivedValuation nu_;
    mutable std::shared_ptr<Indexed> indexed_;
    mutable std::shared_ptr<Submodule> core_;
    mutable std::shared_ptr<RingSubset> colon_core_;
    mutable std::shared_ptr<Skeleton> skeleton_;
};

/// Frozen claim vocabulary in canonical run order.
const std::vector<std::string>& claim_order();
bool is_known_claim(const std::string& claim_id);

/// Run one claim of the vocabulary.
CheckReport run_claim(const CheckContext& ctx, const std::string& claim_id);

/// Ring/module structure laws (associativity, distributivity, identities,
/// inverses, action laws) on all triples (exhaustive) or sampled ones.
CheckReport self_test_structure(const CheckContext& ctx);

/// Aggregates: the three filtration items plus per-level subgroup closure.
CheckReport check_filtered_ring(const CheckContext& ctx);
CheckReport check_filtered_module(const CheckContext& ctx);
/// Strong filtration (generated-subgroup equality), ring and module sides.
CheckReport check_strong(const CheckContext& ctx);

/// The pair (A_nu, P_nu) plus the claim report for its defining conditions.
std::pair<ValuationPair, CheckReport> valuation_pair(const CheckContext& ctx);

/// Prime-submodule test for N: N != M and a x in N implies x in N or aM in N.
CheckReport check_prime_submodule(const CheckContext& ctx, const Submodule& N);

/// Nu-independence of an explicit element list (empty list passes).
CheckReport check_nu_independent(const CheckContext& ctx, const std::vector<Element>& S);

// Named entry points for the individual claims.
inline CheckReport check_axiom_i(const CheckContext& ctx) { return run_claim(ctx, "def2.5.i"); }
inline CheckReport check_axiom_ii(const CheckContext& ctx) { return run_claim(ctx, "def2.5.ii"); }
inline CheckReport check_axiom_iii(const CheckContext& ctx) { return run_claim(ctx, "def2.5.iii"); }
inline CheckReport check_axiom_iv(const CheckContext& ctx) { return run_claim(ctx, "def2.5.iv"); }
inline CheckReport check_onto_nontrivial(const CheckContext& ctx) { return run_claim(ctx, "def2.5.onto"); }
inline CheckReport check_strong_implies_trivial(const CheckContext& ctx) { return run_claim(ctx, "prop3.1"); }
inline CheckReport check_prop34(const CheckContext& ctx) { return run_claim(ctx, "prop3.4"); }

/// Items 1..7 of the derived-property suite.
CheckReport check_prop21(const CheckContext& ctx, int item);

/// Independence of the computed skeleton plus the unique-match claim.
inline std::pair<CheckReport, CheckReport> check_prop33(const CheckContext& ctx) {
    return {run_claim(ctx, "prop3.3.i"), run_claim(ctx, "prop3.3.ii")};
}

} // namespace filtval
