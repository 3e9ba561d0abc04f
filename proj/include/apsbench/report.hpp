#pragma once

#include <string>
#include <vector>

#include "apsbench/energy.hpp"
#include "apsbench/fed.hpp"
#include "apsbench/graph.hpp"
#include "apsbench/henning_yeo.hpp"
#include "apsbench/statevector.hpp"

namespace apsbench {

/// Tabular report: metadata lines, a header row, string cells. CSV output
/// uses '#' metadata comments, a comma-separated header and '.' decimals
/// regardless of locale; JSON carries the same content full-precision.
struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string table_to_csv(const Table& t);
std::string table_to_json(const Table& t);

/// Shortest round-trip decimal form of a double (locale-free).
std::string format_full(double x);
/// Fixed decimals, for the eyeball-comparison column.
std::string format_rounded(double x, int places = 4);

Table ratio_reports_to_table(const std::vector<RatioReport>& rows);

/// Graph plus its edge-class tags (and block layout) as one JSON document.
std::string hy_instance_to_json(const HYInstance& inst);
HYInstance hy_instance_from_json(const std::string& text);

std::string matching_to_json(const Matching& m);
std::string fractional_matching_to_json(const FractionalMatching& fm);

Table breakdown_to_table(const Graph& g, const EnergyBreakdown& b);

/// Debugging aid: amplitudes as [[re, im], ...].
std::string amplitudes_to_json(const StateVector& s);

}  // namespace apsbench
