#pragma once

#include <string>

#include "apsbench/graph.hpp"

namespace apsbench {

/// {"n": .., "edges": [{"u","v","mult","w"}, ..]}. Round-trips bit-exact.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

/// One "u v mult w" line per edge, '#' starts a comment. Order (vertex
/// count) is written as a leading comment and recovered from it when
/// present, else inferred from the largest endpoint.
std::string graph_to_edge_list(const Graph& g);
Graph graph_from_edge_list(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace apsbench
