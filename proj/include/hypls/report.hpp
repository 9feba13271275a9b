#pragma once

#include <string>
#include <vector>

// Experiment reports: a structured key/value document plus a CSV sidecar
// with one row per curve or grid point. Reports are byte-identical across
// runs of the same build except for the wall_time field.

namespace hypls {

std::string format_g17(double v);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
    std::string to_string() const;
};

struct Verdict {
    std::string name;
    bool pass = false;
    std::string detail;
};

} // namespace hypls
