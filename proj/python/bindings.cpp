// Python surface: thin JSON-string wrappers over the core operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "filtval/instances.hpp"
#include "filtval/runner.hpp"
#include "filtval/skeleton.hpp"

namespace py = pybind11;

namespace {

nlohmann::json parse_instance_arg(const std::string& instance) {
    if (!instance.empty() && instance.front() == '{') return nlohmann::json::parse(instance);
    return nlohmann::json(instance);
}

filtval::RunConfig base_config(const std::string& instance, const std::string& strategy,
                               std::uint64_t seed, int samples, int level_bound, int n_max) {
    filtval::RunConfig cfg;
    cfg.instance_spec = parse_instance_arg(instance);
    if (!strategy.empty()) cfg.strategy_kind = strategy;
    cfg.seed = seed;
    cfg.samples = samples;
    cfg.level_bound = level_bound;
    cfg.n_max = n_max;
    return cfg;
}

std::string settle(const filtval::RunResult& res) {
    if (res.exit_code != 0) throw std::runtime_error(res.message);
    return res.report.dump(2);
}

} // namespace

PYBIND11_MODULE(filtval, m) {
    m.doc() = "Filtered rings and modules: derived valuations, axiom checkers, skeletons.";
    m.attr("__version__") = "0.1.0";

    m.def("catalog", [] { return filtval::catalog_ids(); },
          "Frozen instance catalog ids (i1..i7).");

    m.def(
        "check",
        [](const std::string& instance, const std::string& checks, const std::string& strategy,
           std::uint64_t seed, int samples, int level_bound, int n_max) {
            filtval::RunConfig cfg = base_config(instance, strategy, seed, samples, level_bound, n_max);
            if (!checks.empty()) {
                cfg.checks.clear();
                std::size_t pos = 0;
                while (pos <= checks.size()) {
                    std::size_t end = checks.find(',', pos);
                    if (end == std::string::npos) end = checks.size();
                    if (end > pos) cfg.checks.push_back(checks.substr(pos, end - pos));
                    pos = end + 1;
                }
            }
            return settle(filtval::run_check(cfg));
        },
        py::arg("instance"), py::arg("checks") = "all", py::arg("strategy") = "",
        py::arg("seed") = 1, py::arg("samples") = 1000, py::arg("level_bound") = 16,
        py::arg("n_max") = 2,
        "Run claim checkers; returns the report as a JSON string.");

    m.def(
        "valuate",
        [](const std::string& instance, const std::vector<std::string>& elements, int level_bound) {
            filtval::RunConfig cfg = base_config(instance, "", 1, 1000, level_bound, 2);
            return settle(filtval::run_valuate(cfg, elements));
        },
        py::arg("instance"), py::arg("elements"), py::arg("level_bound") = 16,
        "nu per canonical element string; returns the report as a JSON string.");

    m.def(
        "skeleton",
        [](const std::string& instance, const std::string& strategy, std::uint64_t seed, int samples,
           int level_bound, int n_max) {
            filtval::RunConfig cfg = base_config(instance, strategy, seed, samples, level_bound, n_max);
            return settle(filtval::run_skeleton(cfg));
        },
        py::arg("instance"), py::arg("strategy") = "", py::arg("seed") = 1, py::arg("samples") = 1000,
        py::arg("level_bound") = 16, py::arg("n_max") = 2,
        "Skeleton representatives, class map and relation verdicts as a JSON string.");

    m.def(
        "nu",
        [](const std::string& instance, const std::string& element, int level_bound) {
            auto inst = filtval::make_instance_from_spec(parse_instance_arg(instance));
            filtval::DerivedValuation nu(inst, std::max(64, level_bound));
            return nu(inst->module_parse(element)).to_string();
        },
        py::arg("instance"), py::arg("element"), py::arg("level_bound") = 16,
        "Value of one element, e.g. '2' or 'inf(exact)'.");

    m.def(
        "orbit",
        [](const std::string& instance, const std::string& element, int level_bound) {
            auto inst = filtval::make_instance_from_spec(parse_instance_arg(instance));
            filtval::DerivedValuation nu(inst, std::max(64, level_bound));
            filtval::ValueSet o =
                filtval::value_orbit(nu, inst->module_parse(element), filtval::SearchStrategy::exhaustive());
            nlohmann::json j;
            j["finite_points"] = o.finite_points;
            if (o.ray_from) j["ray_from"] = *o.ray_from;
            j["contains_infinity"] = o.contains_infinity;
            j["exact"] = o.exact;
            return j.dump(2);
        },
        py::arg("instance"), py::arg("element"), py::arg("level_bound") = 16,
        "Value orbit nu(R*y) as a JSON string.");
}
