#pragma once

#include <string>
#include <utility>
#include <vector>

namespace serieslab::lab {

/// Shortest round-trip representation ("nan", "inf" and "-inf" for
/// non-finite values). Locale independent.
std::string format_number(double value);

/// Comma-separated table preceded by `# key: value` comment lines.
struct CsvTable {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::string render() const;
};

}  // namespace serieslab::lab
