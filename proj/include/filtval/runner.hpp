#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "filtval/checks.hpp"

namespace filtval {

/// One run of the check driver: which instance, which claims, how to search,
/// where to write, what to compare against.
struct RunConfig {
    nlohmann::json instance_spec; // string id or {"kind": ...} object
    std::vector<std::string> checks{std::string("all")};
    std::optional<std::string> strategy_kind; // "exhaustive" | "bounded-random"; default per instance
    std::uint64_t seed = 1;
    int samples = 1000;
    int level_bound = 16;
    std::optional<int> depth;
    int n_max = 2;
    std::optional<std::string> output_path;
    std::optional<std::string> expect_path;

    static RunConfig from_json(const nlohmann::json& j);
};

struct RunResult {
    int exit_code = 0;       // 0 ok, 1 golden mismatch, 2 config/capability error
    nlohmann::json report;   // full document (with metadata) when produced
    std::string message;     // diagnostic for exit 2 / mismatch summary
};

/// Comparable body of a report: the document without its metadata block,
/// serialized canonically (sorted keys, two-space indent, trailing newline).
std::string report_body(const nlohmann::json& report);

RunResult run_check(const RunConfig& cfg);
RunResult run_valuate(const RunConfig& cfg, const std::vector<std::string>& elements);
RunResult run_skeleton(const RunConfig& cfg);

/// Helpers shared by the CLI and tests.
nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace filtval
