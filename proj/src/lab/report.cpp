#include "serieslab/lab/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "serieslab/lab/csv.hpp"

namespace serieslab::lab {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

std::string criterion_text(const Check& c)
{
    switch (c.mode) {
    case CheckMode::abs: return "abs<=" + format_number(c.tol);
    case CheckMode::rel: return "rel<=" + format_number(c.tol);
    case CheckMode::lt: return "<" + format_number(c.expect);
    case CheckMode::gt: return ">" + format_number(c.expect);
    case CheckMode::exact: return "==" + format_number(c.expect);
    }
    return "?";
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s)
        out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

}  // namespace

ReportRow evaluate_check(const Check& check, double computed)
{
    ReportRow row;
    row.quantity = check.quantity;
    row.computed = computed;
    row.reference = check.expect;
    row.criterion = criterion_text(check);
    row.locus = check.locus;
    const double diff = std::abs(computed - check.expect);
    row.rel_error = check.expect != 0.0 ? diff / std::abs(check.expect) : nan;
    switch (check.mode) {
    case CheckMode::abs: row.pass = diff <= check.tol; break;
    case CheckMode::rel: row.pass = diff <= check.tol * std::abs(check.expect); break;
    case CheckMode::lt: row.pass = computed < check.expect; break;
    case CheckMode::gt: row.pass = computed > check.expect; break;
    case CheckMode::exact: row.pass = computed == check.expect; break;
    }
    return row;
}

ReportRow failed_row(const Check& check, std::string note)
{
    ReportRow row;
    row.quantity = check.quantity;
    row.computed = nan;
    row.reference = check.expect;
    row.rel_error = nan;
    row.pass = false;
    row.criterion = criterion_text(check);
    row.locus = check.locus;
    row.note = std::move(note);
    return row;
}

bool ComparisonReport::all_pass() const
{
    return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

std::string ComparisonReport::to_text() const
{
    std::string out = "scenario: " + scenario + "\n";
    for (const auto& [k, v] : meta)
        out += "  " + k + ": " + v + "\n";
    if (rows.empty())
        return out + "(no checks)\n";
    std::size_t wq = 8, wc = 14, wr = 14, wk = 9;
    for (const auto& r : rows) {
        wq = std::max(wq, r.quantity.size());
        wc = std::max(wc, format_number(r.computed).size());
        wr = std::max(wr, format_number(r.reference).size());
        wk = std::max(wk, r.criterion.size());
    }
    out += fmt::format("{:<{}}  {:>{}}  {:>{}}  {:>10}  {:<{}}  {:<4}  {}\n", "quantity", wq, "computed", wc,
                       "reference", wr, "rel_err", "criterion", wk, "pass", "locus");
    for (const auto& r : rows) {
        const std::string rel = std::isnan(r.rel_error) ? "-" : fmt::format("{:.3g}", r.rel_error);
        out += fmt::format("{:<{}}  {:>{}}  {:>{}}  {:>10}  {:<{}}  {:<4}  {}{}\n", r.quantity, wq,
                           format_number(r.computed), wc, format_number(r.reference), wr, rel, r.criterion, wk,
                           r.pass ? "PASS" : "FAIL", r.locus, r.note.empty() ? "" : "  [" + r.note + "]");
    }
    const auto passed = std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
    out += fmt::format("{}/{} rows pass\n", passed, rows.size());
    return out;
}

std::string ComparisonReport::to_csv() const
{
    std::string out = "# scenario: " + scenario + "\n";
    for (const auto& [k, v] : meta)
        out += "# " + k + ": " + v + "\n";
    out += "quantity,computed,reference,rel_error,criterion,pass,locus,note\n";
    for (const auto& r : rows)
        out += csv_field(r.quantity) + "," + format_number(r.computed) + "," + format_number(r.reference) + "," +
               format_number(r.rel_error) + "," + csv_field(r.criterion) + "," + (r.pass ? "pass" : "fail") +
               "," + csv_field(r.locus) + "," + csv_field(r.note) + "\n";
    return out;
}

ComparisonReport merge_reports(const std::vector<ComparisonReport>& reports, std::string title)
{
    ComparisonReport all;
    all.scenario = std::move(title);
    all.meta["scenarios"] = std::to_string(reports.size());
    for (const auto& rep : reports)
        for (auto row : rep.rows) {
            row.quantity = rep.scenario + "/" + row.quantity;
            all.rows.push_back(std::move(row));
        }
    return all;
}

}  // namespace serieslab::lab
