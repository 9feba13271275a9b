#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypls/report.hpp"

// Experiment registry: each experiment builds its surfaces, runs the
// metric computations, and produces a report with machine-checkable
// verdicts plus a CSV sidecar.

namespace hypls {

struct ExperimentSpec {
    std::string id;
    std::map<std::string, std::string> params;
    double precision = 1e-9;
    int jobs = 1;
};

struct ExperimentReport {
    std::string id;
    std::vector<std::pair<std::string, std::string>> fields; // ordered key/value lines
    std::vector<Verdict> verdicts;
    CsvTable table;
    double wall_time_s = 0.0;

    bool pass() const;
    std::string document() const;

    void field(const std::string& key, const std::string& value) { fields.emplace_back(key, value); }
    void field(const std::string& key, double value) { fields.emplace_back(key, format_g17(value)); }
    void verdict(const std::string& name, bool pass, const std::string& detail = "");
};

ExperimentReport run_experiment(const ExperimentSpec& spec);

struct CatalogEntry {
    std::string id;
    std::string summary;
};

const std::vector<CatalogEntry>& list_experiments();

} // namespace hypls
