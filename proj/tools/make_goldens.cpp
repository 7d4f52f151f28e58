// Regenerates the golden report bodies under goldens/. Goldens hold the
// comparable body only (no metadata block), serialized exactly as the
// runner's golden comparison serializes reports.

#include <iostream>
#include <string>

#include "filtval/runner.hpp"

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "goldens";
    struct Entry {
        std::string id;
        bool bounded;
    };
    const Entry entries[] = {
        {"i1", false}, {"i2", false}, {"i3", false}, {"i4", true},
        {"i5", false}, {"i6", false}, {"i7", false},
    };
    for (const auto& e : entries) {
        filtval::RunConfig cfg;
        cfg.instance_spec = e.id;
        if (e.bounded) {
            cfg.strategy_kind = "bounded-random";
            cfg.seed = 1;
            cfg.samples = 1000;
            cfg.level_bound = 8;
        }
        filtval::RunResult res = filtval::run_check(cfg);
        if (res.exit_code != 0) {
            std::cerr << e.id << ": " << res.message << "\n";
            return 1;
        }
        std::string path = dir + "/" + e.id + ".golden.json";
        filtval::write_text_file(path, filtval::report_body(res.report));
        std::cout << "wrote " << path << "\n";
    }
    return 0;
}
