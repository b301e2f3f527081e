#pragma once

#include <map>
#include <string>
#include <vector>

#include "serieslab/lab/config.hpp"

namespace serieslab::lab {

struct ReportRow {
    std::string quantity;
    double computed = 0.0;
    double reference = 0.0;
    double rel_error = 0.0;  ///< NaN when the reference is zero or the value is missing
    bool pass = false;
    std::string criterion;  ///< e.g. "abs<=0.001" or "<1e-06"
    std::string locus;
    std::string note;  ///< set when the value could not be computed
};

struct ComparisonReport {
    std::string scenario;
    std::map<std::string, std::string> meta;
    std::vector<ReportRow> rows;

    bool all_pass() const;
    std::string to_text() const;
    std::string to_csv() const;
};

ReportRow evaluate_check(const Check& check, double computed);

/// A failed row for a check whose value could not be produced.
ReportRow failed_row(const Check& check, std::string note);

/// Rows from several scenarios in one table, scenario name prefixed to each
/// quantity.
ComparisonReport merge_reports(const std::vector<ComparisonReport>& reports, std::string title);

}  // namespace serieslab::lab
