#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gslab/graph.hpp"

namespace gslab {

// A parsed graph plus the file-label -> dense-index mapping: labels[i] is
// the label the input file used for vertex i.
struct LoadedGraph {
  Graph graph;
  std::vector<std::string> labels;
};

// JSON object {"n": int, "edges": [[a, b], ...]} with 0-based integer
// endpoints below n.
LoadedGraph parse_graph_json(std::string_view text);

// Plain text, one "a b" pair per line; blank lines ignored, '#' starts a
// comment. Labels may be arbitrary tokens; they are mapped to dense indices
// in sorted order (numeric when every label is a non-negative integer, in
// which case vertices 0..max all exist, lexicographic otherwise).
LoadedGraph parse_edge_list(std::string_view text);

// Dispatches on content: leading '{' means JSON, anything else edge list.
LoadedGraph load_graph_file(const std::filesystem::path& path);

// Serializers emit edges sorted, so round-trips are byte-stable.
std::string to_json(const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace gslab
