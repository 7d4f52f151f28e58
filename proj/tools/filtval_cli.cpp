// Command-line front end: check / valuate / skeleton over the instance
// catalog, with deterministic JSON reports and golden comparison.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "filtval/instances.hpp"
#include "filtval/runner.hpp"

namespace {

struct CommonFlags {
    std::string instance;
    std::string config_path;
    std::string checks;
    std::string strategy;
    std::uint64_t seed = 1;
    int samples = 1000;
    int level_bound = 16;
    int n_max = 2;
    std::string out;
    std::string expect;
    bool seed_set = false, samples_set = false, level_bound_set = false, n_max_set = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--instance", f.instance, "catalog id (i1..i7) or inline JSON constructor spec");
    cmd->add_option("--config", f.config_path, "JSON config file; flags override its fields");
    cmd->add_option("--checks", f.checks, "comma-separated claim ids, or 'all'");
    cmd->add_option("--strategy", f.strategy, "exhaustive | bounded-random");
    cmd->add_option("--seed", f.seed)->each([&](const std::string&) { f.seed_set = true; });
    cmd->add_option("--samples", f.samples)->each([&](const std::string&) { f.samples_set = true; });
    cmd->add_option("--level-bound", f.level_bound)->each([&](const std::string&) { f.level_bound_set = true; });
    cmd->add_option("--n-max", f.n_max)->each([&](const std::string&) { f.n_max_set = true; });
    cmd->add_option("--out", f.out, "write the report to this path");
    cmd->add_option("--expect", f.expect, "golden report to compare against (exit 1 on mismatch)");
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t end = s.find(',', pos);
        if (end == std::string::npos) end = s.size();
        std::string item = s.substr(pos, end - pos);
        if (!item.empty()) out.push_back(item);
        pos = end + 1;
    }
    return out;
}

int build_config(const CommonFlags& f, filtval::RunConfig& cfg) {
    try {
        if (!f.config_path.empty()) cfg = filtval::RunConfig::from_json(filtval::load_json_file(f.config_path));
        if (!f.instance.empty()) {
            if (!f.instance.empty() && f.instance.front() == '{')
                cfg.instance_spec = nlohmann::json::parse(f.instance);
            else
                cfg.instance_spec = f.instance;
        }
        if (cfg.instance_spec.is_null()) throw filtval::ConfigError("missing --instance (or config field)");
        if (!f.checks.empty()) cfg.checks = split_commas(f.checks);
        if (!f.strategy.empty()) {
            filtval::SearchStrategy::parse_kind(f.strategy); // validate
            cfg.strategy_kind = f.strategy;
        }
        if (f.seed_set) cfg.seed = f.seed;
        if (f.samples_set) cfg.samples = f.samples;
        if (f.level_bound_set) cfg.level_bound = f.level_bound;
        if (f.n_max_set) cfg.n_max = f.n_max;
        if (!f.out.empty()) cfg.output_path = f.out;
        if (!f.expect.empty()) cfg.expect_path = f.expect;
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int finish(const filtval::RunResult& res, const filtval::RunConfig& cfg) {
    if (res.exit_code == 2) {
        std::cerr << "error: " << res.message << "\n";
        return 2;
    }
    if (!cfg.output_path && !res.report.is_null()) std::cout << res.report.dump(2) << "\n";
    if (res.exit_code == 1) std::cerr << "mismatch: " << res.message << "\n";
    return res.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"filtration-derived valuation checker"};
    app.require_subcommand(1);

    CommonFlags check_flags, valuate_flags, skeleton_flags;
    std::vector<std::string> elements;

    CLI::App* check = app.add_subcommand("check", "run claim checkers and emit a report");
    add_common(check, check_flags);

    CLI::App* valuate = app.add_subcommand("valuate", "print nu for canonical element strings");
    add_common(valuate, valuate_flags);
    // elements arrive as leftover arguments so negative integers parse too
    valuate->allow_extras();

    CLI::App* skeleton = app.add_subcommand("skeleton", "representatives, class map, relation verdicts");
    add_common(skeleton, skeleton_flags);

    CLI11_PARSE(app, argc, argv);

    if (check->parsed()) {
        filtval::RunConfig cfg;
        if (int rc = build_config(check_flags, cfg)) return rc;
        return finish(filtval::run_check(cfg), cfg);
    }
    if (valuate->parsed()) {
        filtval::RunConfig cfg;
        if (int rc = build_config(valuate_flags, cfg)) return rc;
        for (const auto& arg : valuate->remaining()) elements.push_back(arg);
        return finish(filtval::run_valuate(cfg, elements), cfg);
    }
    filtval::RunConfig cfg;
    if (int rc = build_config(skeleton_flags, cfg)) return rc;
    return finish(filtval::run_skeleton(cfg), cfg);
}
