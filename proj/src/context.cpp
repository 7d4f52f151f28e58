#include "filtval/checks.hpp"

#include <algorithm>

namespace filtval {

CheckContext::CheckContext(InstancePtr inst, CheckOptions options)
    : inst_(std::move(inst)),
      options_(std::move(options)),
      depth_(0),
      // The cap is a backstop for carriers with no stabilization metadata,
      // not the filtration scan bound; composed products can carry values
      // well past level_bound.
      nu_(inst_, std::max(64, options_.strategy.level_bound)) {
    if (options_.depth) {
        depth_ = *options_.depth;
    } else if (inst_->finite()) {
        depth_ = inst_->stabilization_depth().value_or(0) + 2;
    } else {
        depth_ = options_.strategy.level_bound;
    }
    if (depth_ < 1) depth_ = 1;
}

const Indexed& CheckContext::indexed() const {
    if (!indexed_) indexed_ = std::make_shared<Indexed>(inst_, nu_, depth_);
    return *indexed_;
}

const Submodule& CheckContext::core() const {
    if (!core_) core_ = std::make_shared<Submodule>(core_submodule(nu_));
    return *core_;
}

const RingSubset& CheckContext::colon_core() const {
    if (!colon_core_) colon_core_ = std::make_shared<RingSubset>(colon_ideal(nu_, core(), strategy()));
    return *colon_core_;
}

const Skeleton& CheckContext::skeleton() const {
    if (!skeleton_) {
        std::vector<Element> sample;
        if (inst_->finite()) {
            sample = inst_->module_elements();
        } else {
            Rng rng = rng_for("skeleton-sample");
            for (int i = 0; i < 32; ++i) sample.push_back(inst_->sample_module_element(rng));
        }
        skeleton_ = std::make_shared<Skeleton>(compute_skeleton(nu_, sample, strategy()));
    }
    return *skeleton_;
}

const std::vector<std::string>& claim_order() {
    static const std::vector<std::string> order{
        "def2.1.i",   "def2.1.ii",  "def2.1.iii", "def2.3.i",   "def2.3.ii",  "def2.3.iii",
        "def2.2",     "def2.5.i",   "def2.5.ii",  "def2.5.iii", "def2.5.iv",  "def2.5.onto",
        "prop2.1.i",  "prop2.1.ii", "prop2.1.iii", "prop2.1.iv", "prop2.1.v",  "prop2.1.vi",
        "prop2.1.vii", "prop3.1",   "def2.7",     "prop3.3.i",  "prop3.3.ii", "prop3.4",
    };
    return order;
}

bool is_known_claim(const std::string& claim_id) {
    const auto& order = claim_order();
    return std::find(order.begin(), order.end(), claim_id) != order.end();
}

// Implemented across checks_structure.cpp / checks_valuation.cpp /
// checks_skeleton.cpp.
CheckReport run_filtration_claim(const CheckContext& ctx, const std::string& claim_id);
CheckReport run_valuation_claim(const CheckContext& ctx, const std::string& claim_id);
CheckReport run_skeleton_claim(const CheckContext& ctx, const std::string& claim_id);

CheckReport run_claim(const CheckContext& ctx, const std::string& claim_id) {
    if (claim_id.rfind("def2.1", 0) == 0 || claim_id.rfind("def2.3", 0) == 0 || claim_id == "def2.2")
        return run_filtration_claim(ctx, claim_id);
    if (claim_id.rfind("def2.5", 0) == 0 || claim_id.rfind("prop2.1", 0) == 0 || claim_id == "prop3.1")
        return run_valuation_claim(ctx, claim_id);
    if (claim_id == "def2.7" || claim_id.rfind("prop3.3", 0) == 0 || claim_id == "prop3.4")
        return run_skeleton_claim(ctx, claim_id);
    throw ConfigError("unknown claim id '" + claim_id + "'");
}

CheckReport check_prop21(const CheckContext& ctx, int item) {
    static const char* ids[] = {"prop2.1.i",  "prop2.1.ii", "prop2.1.iii", "prop2.1.iv",
                                "prop2.1.v",  "prop2.1.vi", "prop2.1.vii"};
    if (item < 1 || item > 7) throw ConfigError("check_prop21: item must be 1..7");
    return run_claim(ctx, ids[item - 1]);
}

} // namespace filtval
