// repro: experiment runner for the hyperbolic length-spectrum lab.
//
//   repro list
//   repro <experiment-id> [--param key=value]... [--out PATH] [--csv PATH]
//         [--precision X] [--jobs N]
//
// Reports are deterministic for a fixed build except for the wall_time_s
// field. Exit status is 0 exactly when every verdict passes.
// The REPRO_SEED environment variable is ignored: default runs contain no
// randomness, and randomized property checks take explicit seeds.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "hypls/errors.hpp"
#include "hypls/experiments.hpp"

int main(int argc, char** argv) {
    CLI::App app{"hyperbolic length-spectrum experiment runner"};
    app.require_subcommand(0, 1);

    auto* list_cmd = app.add_subcommand("list", "list available experiments");

    auto* run_cmd = app.add_subcommand("run", "run one experiment");
    std::string id;
    std::vector<std::string> params;
    std::string out_path, csv_path;
    double precision = 1e-9;
    int jobs = 1;
    run_cmd->add_option("experiment", id, "experiment id")->required();
    run_cmd->add_option("--param", params, "per-experiment override, key=value");
    run_cmd->add_option("--out", out_path, "write the report document here");
    run_cmd->add_option("--csv", csv_path, "write the CSV sidecar here");
    run_cmd->add_option("--precision", precision, "verdict tolerance");
    run_cmd->add_option("--jobs", jobs, "worker threads for grid scans");

    // `repro <id> ...` without the explicit `run` verb
    app.allow_extras();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (list_cmd->parsed()) {
        for (const auto& entry : hypls::list_experiments())
            std::cout << entry.id << "  -  " << entry.summary << "\n";
        return 0;
    }

    if (!run_cmd->parsed()) {
        const auto extras = app.remaining();
        if (extras.empty()) {
            std::cout << app.help();
            return 2;
        }
        // re-parse as an implicit run
        std::vector<std::string> fwd{"run"};
        fwd.insert(fwd.end(), extras.begin(), extras.end());
        std::vector<const char*> argv2{argv[0]};
        for (const auto& s : fwd) argv2.push_back(s.c_str());
        try {
            app.clear();
            app.parse(static_cast<int>(argv2.size()), argv2.data());
        } catch (const CLI::ParseError& e) {
            return app.exit(e);
        }
    }

    hypls::ExperimentSpec spec;
    spec.id = id;
    spec.precision = precision;
    spec.jobs = jobs;
    for (const auto& p : params) {
        const auto eq = p.find('=');
        if (eq == std::string::npos) {
            std::cerr << "ElX02 --param needs key=value, got '" << p << "'\n";
            return 2;
        }
        spec.params[p.substr(0, eq)] = p.substr(eq + 1);
    }

    try {
        const auto rep = hypls::run_experiment(spec);
        const std::string doc = rep.document();
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            f << doc;
        }
        if (!csv_path.empty()) {
            std::ofstream f(csv_path);
            f << rep.table.to_string();
        }
        std::cout << doc;
        return rep.pass() ? 0 : 1;
    } catch (const hypls::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
