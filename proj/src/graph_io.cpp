#include "apsbench/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace apsbench {

using nlohmann::json;

std::string graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.order();
  j["edges"] = json::array();
  for (const auto& e : g.edges())
    j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"mult", e.mult}, {"w", e.weight}});
  return j.dump(2);
}

Graph graph_from_json(const std::string& text) {
  json j = json::parse(text);
  int n = j.at("n").get<int>();
  std::vector<GraphEdge> edges;
  for (const auto& je : j.at("edges"))
    edges.push_back({je.at("u").get<int>(), je.at("v").get<int>(),
                     je.at("mult").get<int>(), je.at("w").get<double>()});
  return Graph(n, std::move(edges));
}

std::string graph_to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# n " << g.order() << "\n";
  for (const auto& e : g.edges()) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, e.weight);
    out << e.u << ' ' << e.v << ' ' << e.mult << ' '
        << std::string_view(buf, p - buf) << "\n";
  }
  return out.str();
}

Graph graph_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<GraphEdge> edges;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      std::istringstream c(line.substr(hash + 1));
      std::string key;
      int val = 0;
      if (c >> key >> val && key == "n") n = val;
      line = line.substr(0, hash);
    }
    std::istringstream ls(line);
    GraphEdge e;
    if (ls >> e.u >> e.v >> e.mult >> e.weight) edges.push_back(e);
  }
  if (n < 0) {
    for (const auto& e : edges) n = std::max({n, e.u, e.v});
    ++n;
    n = std::max(n, 0);
  }
  return Graph(n, std::move(edges));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace apsbench
