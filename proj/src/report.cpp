#include "apsbench/report.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace apsbench {

using nlohmann::json;

std::string format_full(double x) {
  char buf[40];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, p - buf);
}

std::string format_rounded(double x, int places) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", places, x);
  return buf;
}

std::string table_to_csv(const Table& t) {
  std::ostringstream out;
  for (const auto& [k, v] : t.meta) out << "# " << k << ": " << v << "\n";
  for (size_t c = 0; c < t.columns.size(); ++c)
    out << t.columns[c] << (c + 1 < t.columns.size() ? "," : "");
  out << "\n";
  for (const auto& row : t.rows) {
    for (size_t c = 0; c < row.size(); ++c) out << row[c] << (c + 1 < row.size() ? "," : "");
    out << "\n";
  }
  return out.str();
}

std::string table_to_json(const Table& t) {
  json j;
  j["meta"] = json::object();
  for (const auto& [k, v] : t.meta) j["meta"][k] = v;
  j["columns"] = t.columns;
  j["rows"] = json::array();
  for (const auto& row : t.rows) {
    json jr = json::object();
    for (size_t c = 0; c < row.size() && c < t.columns.size(); ++c) {
      // numbers stay numbers in the json form
      const std::string& cell = row[c];
      char* end = nullptr;
      double d = std::strtod(cell.c_str(), &end);
      if (end && *end == '\0' && !cell.empty())
        jr[t.columns[c]] = d;
      else
        jr[t.columns[c]] = cell;
    }
    j["rows"].push_back(jr);
  }
  return j.dump(2);
}

Table ratio_reports_to_table(const std::vector<RatioReport>& rows) {
  Table t;
  bool weighted = false;
  for (const auto& r : rows) weighted = weighted || r.d_w.has_value();
  t.columns = {"k", "p", "order", "r_k", "kappa_k", "rhat_k", "m_k", "mhat_k", "gap"};
  if (weighted) {
    t.columns.push_back("d_w");
    t.columns.push_back("rhat_w");
    t.columns.push_back("m_w");
    t.columns.push_back("mhat_w");
    t.columns.push_back("gap_w");
  }
  t.columns.push_back("rounded_rhat");
  t.columns.push_back("rounded_mhat");
  for (const auto& r : rows) {
    std::vector<std::string> row = {
        std::to_string(r.k),       std::to_string(r.p),       std::to_string(r.order),
        format_full(r.r_k),        format_full(r.kappa_k),    format_full(r.rhat_k),
        format_full(r.m_k),        format_full(r.mhat_k),     format_full(r.gap)};
    if (weighted) {
      row.push_back(r.d_w ? format_full(*r.d_w) : "");
      row.push_back(r.rhat_w ? format_full(*r.rhat_w) : "");
      row.push_back(r.m_w ? format_full(*r.m_w) : "");
      row.push_back(r.mhat_w ? format_full(*r.mhat_w) : "");
      row.push_back(r.gap_w ? format_full(*r.gap_w) : "");
    }
    row.push_back(format_rounded(r.rhat_w ? *r.rhat_w : r.rhat_k));
    row.push_back(format_rounded(r.mhat_w ? *r.mhat_w : r.mhat_k));
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string hy_instance_to_json(const HYInstance& inst) {
  json j;
  j["n"] = inst.graph.order();
  j["edges"] = json::array();
  for (const auto& e : inst.graph.edges())
    j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"mult", e.mult}, {"w", e.weight}});
  j["tags"] = json::array();
  for (EdgeClass c : inst.edge_class) j["tags"].push_back(edge_class_name(c));
  j["k"] = inst.k;
  j["p"] = inst.p;
  j["layout"] = {{"scaffold_order", inst.scaffold_order},
                 {"block_count", inst.block_count},
                 {"block_ranges", json::array()}};
  for (auto [lo, hi] : inst.block_range)
    j["layout"]["block_ranges"].push_back({lo, hi});
  return j.dump(2);
}

HYInstance hy_instance_from_json(const std::string& text) {
  json j = json::parse(text);
  HYInstance inst;
  int n = j.at("n").get<int>();
  std::vector<GraphEdge> edges;
  for (const auto& je : j.at("edges"))
    edges.push_back({je.at("u").get<int>(), je.at("v").get<int>(),
                     je.at("mult").get<int>(), je.at("w").get<double>()});
  inst.graph = Graph(n, std::move(edges));
  for (const auto& tag : j.at("tags"))
    inst.edge_class.push_back(edge_class_from_name(tag.get<std::string>()));
  if (static_cast<int>(inst.edge_class.size()) != inst.graph.edge_count())
    throw std::invalid_argument("instance json: tag count mismatch");
  inst.k = j.at("k").get<int>();
  inst.p = j.at("p").get<int>();
  const auto& layout = j.at("layout");
  inst.scaffold_order = layout.at("scaffold_order").get<int>();
  inst.block_count = layout.at("block_count").get<int>();
  for (const auto& r : layout.at("block_ranges"))
    inst.block_range.push_back({r.at(0).get<int>(), r.at(1).get<int>()});
  return inst;
}

std::string matching_to_json(const Matching& m) {
  json j;
  j["edges"] = m.edge_ids;
  j["value"] = m.value.to_double();
  j["value_exact"] = m.value.str();
  return j.dump(2);
}

std::string fractional_matching_to_json(const FractionalMatching& fm) {
  json j;
  j["fractions"] = json::array();
  for (size_t id = 0; id < fm.fraction.size(); ++id)
    if (fm.fraction[id] != 0.0)
      j["fractions"].push_back({{"edge", id}, {"frac", fm.fraction[id]}});
  j["value"] = fm.value.to_double();
  j["value_exact"] = fm.value.str();
  return j.dump(2);
}

Table breakdown_to_table(const Graph& g, const EnergyBreakdown& b) {
  Table t;
  t.columns = {"edge", "u", "v", "qp", "pq", "zz", "g", "weight"};
  for (int id = 0; id < g.edge_count(); ++id) {
    const auto& e = g.edge(id);
    const auto& pe = b.per_edge[id];
    t.rows.push_back({std::to_string(id), std::to_string(e.u), std::to_string(e.v),
                      format_full(pe.qp), format_full(pe.pq), format_full(pe.zz),
                      format_full(pe.g), format_full(e.weight)});
  }
  t.meta.push_back({"total", format_full(b.total)});
  return t;
}

std::string amplitudes_to_json(const StateVector& s) {
  json j = json::array();
  for (const auto& a : s.amplitudes()) j.push_back({a.real(), a.imag()});
  return j.dump();
}

}  // namespace apsbench
