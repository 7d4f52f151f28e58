#include "filtval/runner.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "filtval/instances.hpp"

namespace filtval {

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
    return static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

SearchStrategy resolve_strategy(const RunConfig& cfg, const InstancePtr& inst) {
    std::string kind = cfg.strategy_kind.value_or(inst->finite() ? "exhaustive" : "bounded-random");
    SearchStrategy s = SearchStrategy::parse_kind(kind);
    s.seed = cfg.seed;
    s.samples = cfg.samples;
    s.level_bound = cfg.level_bound;
    if (s.is_exhaustive() && !inst->finite())
        throw CapabilityError(inst->id() + ": exhaustive strategy needs a finite carrier");
    return s;
}

std::vector<std::string> resolve_checks(const std::vector<std::string>& requested) {
    bool all = requested.empty();
    for (const auto& c : requested)
        if (c == "all") all = true;
    if (all) return claim_order();
    for (const auto& c : requested)
        if (!is_known_claim(c)) throw ConfigError("unknown claim id '" + c + "'");
    // canonical order, deduplicated
    std::vector<std::string> out;
    for (const auto& c : claim_order())
        if (std::find(requested.begin(), requested.end(), c) != requested.end()) out.push_back(c);
    return out;
}

} // namespace

RunConfig RunConfig::from_json(const nlohmann::json& j) {
    RunConfig cfg;
    if (j.contains("instance")) cfg.instance_spec = j["instance"];
    if (j.contains("checks")) {
        cfg.checks.clear();
        if (j["checks"].is_string()) cfg.checks.push_back(j["checks"].get<std::string>());
        else
            for (const auto& c : j["checks"]) cfg.checks.push_back(c.get<std::string>());
    }
    if (j.contains("strategy")) {
        SearchStrategy s = SearchStrategy::from_json(j["strategy"]);
        cfg.strategy_kind = s.is_exhaustive() ? "exhaustive" : "bounded-random";
        cfg.seed = s.seed;
        cfg.samples = s.samples;
        cfg.level_bound = s.level_bound;
    }
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("samples")) cfg.samples = j["samples"].get<int>();
    if (j.contains("level_bound")) cfg.level_bound = j["level_bound"].get<int>();
    if (j.contains("depth")) cfg.depth = j["depth"].get<int>();
    if (j.contains("n_max")) cfg.n_max = j["n_max"].get<int>();
    if (j.contains("output")) cfg.output_path = j["output"].get<std::string>();
    if (j.contains("expect")) cfg.expect_path = j["expect"].get<std::string>();
    return cfg;
}

std::string report_body(const nlohmann::json& report) {
    nlohmann::json body = report;
    body.erase("metadata");
    return body.dump(2) + "\n";
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write file '" + path + "'");
    out << content;
}

RunResult run_check(const RunConfig& cfg) {
    RunResult res;
    auto start = Clock::now();
    try {
        InstancePtr inst = make_instance_from_spec(cfg.instance_spec);
        std::vector<std::string> checks = resolve_checks(cfg.checks);
        CheckOptions options;
        options.strategy = resolve_strategy(cfg, inst);
        options.depth = cfg.depth;
        options.n_max = cfg.n_max;
        CheckContext ctx(inst, options);

        nlohmann::json results = nlohmann::json::array();
        for (const auto& claim : checks) results.push_back(run_claim(ctx, claim).to_json());

        nlohmann::json report;
        report["schema_version"] = 1;
        report["instance_id"] = inst->id();
        report["strategy"] = options.strategy.to_json();
        report["results"] = results;
        report["metadata"] = {{"runtime_ms", elapsed_ms(start)}};
        res.report = report;

        std::string body = report_body(report);
        if (cfg.output_path) write_text_file(*cfg.output_path, report.dump(2) + "\n");
        if (cfg.expect_path) {
            std::ifstream in(*cfg.expect_path, std::ios::binary);
            if (!in) throw ConfigError("cannot open golden '" + *cfg.expect_path + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            nlohmann::json golden;
            try {
                golden = nlohmann::json::parse(buf.str());
            } catch (const nlohmann::json::exception& e) {
                throw ConfigError("malformed golden '" + *cfg.expect_path + "': " + e.what());
            }
            if (report_body(golden) != body) {
                res.exit_code = 1;
                res.message = "report does not match golden " + *cfg.expect_path;
                return res;
            }
        }
        return res;
    } catch (const ConfigError& e) {
        res.exit_code = 2;
        res.message = e.what();
    } catch (const CapabilityError& e) {
        res.exit_code = 2;
        res.message = e.what();
    } catch (const BadParameter& e) {
        res.exit_code = 2;
        res.message = e.what();
    }
    return res;
}

RunResult run_valuate(const RunConfig& cfg, const std::vector<std::string>& elements) {
    RunResult res;
    auto start = Clock::now();
    try {
        InstancePtr inst = make_instance_from_spec(cfg.instance_spec);
        DerivedValuation nu(inst, std::max(64, cfg.level_bound));
        nlohmann::json values = nlohmann::json::array();
        for (const auto& s : elements) {
            Element x = inst->module_parse(s);
            values.push_back({{"element", inst->module_to_string(x)}, {"nu", nu(x).to_string()}});
        }
        nlohmann::json report;
        report["schema_version"] = 1;
        report["instance_id"] = inst->id();
        report["values"] = values;
        report["metadata"] = {{"runtime_ms", elapsed_ms(start)}};
        res.report = report;
        if (cfg.output_path) write_text_file(*cfg.output_path, report.dump(2) + "\n");
        return res;
    } catch (const ConfigError& e) {
        res.exit_code = 2;
        res.message = e.what();
    } catch (const CapabilityError& e) {
        res.exit_code = 2;
        res.message = e.what();
    } catch (const BadParameter& e) {
        res.exit_code = 2;
        res.message = e.what();
    }
    return res;
}

RunResult run_skeleton(const RunConfig& cfg) {
    RunResult res;
    auto start = Clock::now();
    try {
        InstancePtr inst = make_instance_from_spec(cfg.instance_spec);
        CheckOptions options;
        options.strategy = resolve_strategy(cfg, inst);
        options.depth = cfg.depth;
        options.n_max = cfg.n_max;
        CheckContext ctx(inst, options);

        const Skeleton& sk = ctx.skeleton();
        nlohmann::json reps = nlohmann::json::array();
        for (const auto& r : sk.representatives) reps.push_back(inst->module_to_string(r));

        // class map keyed by canonical element string
        nlohmann::json class_map = nlohmann::json::object();
        for (const auto& [enc, idx] : sk.class_of) {
            Element x{inst->tag(), enc};
            class_map[inst->module_to_string(x)] =
                inst->module_to_string(sk.representatives[static_cast<std::size_t>(idx)]);
        }

        nlohmann::json results = nlohmann::json::array();
        for (const char* claim : {"prop3.3.i", "prop3.3.ii", "prop3.4"})
            results.push_back(run_claim(ctx, claim).to_json());

        nlohmann::json report;
        report["schema_version"] = 1;
        report["instance_id"] = inst->id();
        report["strategy"] = options.strategy.to_json();
        report["relation"] = "adopted-convention";
        report["relation_axioms"] = {{"reflexive", to_string(sk.reflexive)},
                                     {"symmetric", to_string(sk.symmetric)},
                                     {"transitive", to_string(sk.transitive)}};
        report["representatives"] = reps;
        report["class_map"] = class_map;
        report["results"] = results;
        if (sk.representatives.empty()) report["note"] = "empty skeleton: every element has infinite value";
        report["metadata"] = {{"runtime_ms", elapsed_ms(start)}};
        res.report = report;
        if (cfg.output_path) write_text_file(*cfg.output_path, report.dump(2) + "\n");
        return res;
    } catch (const ConfigError& e) {
        res.exit_code = 2;
        res.message = e.what();
    } catch (const CapabilityError& e) {
        res.exit_code = 2;
        res.message = e.what();
    } catch (const BadParameter& e) {
        res.exit_code = 2;
        res.message = e.what();
    }
    return res;
}

} // namespace filtval
