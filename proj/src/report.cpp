#include "filtval/report.hpp"

#include "filtval/errors.hpp"

namespace filtval {

Verdict verdict_from_string(const std::string& s) {
    if (s == "PASS") return Verdict::Pass;
    if (s == "FAIL") return Verdict::Fail;
    if (s == "INCONCLUSIVE") return Verdict::Inconclusive;
    throw ConfigError("unknown verdict '" + s + "'");
}

SearchStrategy SearchStrategy::parse_kind(std::string_view name) {
    if (name == "exhaustive") return exhaustive();
    if (name == "bounded-random" || name == "bounded_random" || name == "random")
        return bounded_random(1, 1000, 16);
    throw ConfigError("unknown strategy kind '" + std::string(name) + "'");
}

SearchStrategy SearchStrategy::from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_kind(j.get<std::string>());
    if (!j.is_object() || !j.contains("kind"))
        throw ConfigError("strategy must be a string or an object with 'kind'");
    SearchStrategy s = parse_kind(j["kind"].get<std::string>());
    if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("samples")) s.samples = j["samples"].get<int>();
    if (j.contains("level_bound")) s.level_bound = j["level_bound"].get<int>();
    return s;
}

} // namespace filtval
