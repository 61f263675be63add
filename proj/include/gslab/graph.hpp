#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gslab/vertex_set.hpp"

namespace gslab {

// Simple undirected graph over dense 0-based vertices, stored as one
// adjacency bitset row per vertex. Immutable after construction; all
// mutation is by functional copy.
class Graph {
 public:
  explicit Graph(std::size_t n);

  // Validates range, rejects self-loops and duplicate edges.
  static Graph from_edges(
      std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const;

  bool has_edge(std::size_t a, std::size_t b) const;

  // Open neighborhood N(v).
  const VertexSet& neighbors(std::size_t v) const;
  std::size_t degree(std::size_t v) const { return neighbors(v).count(); }

  // Edges as (a, b) with a < b, sorted lexicographically.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  // Copy with v isolated: the vertex stays in the universe so qubit
  // indexing is stable, all incident edges are deleted.
  Graph remove_vertex(std::size_t v) const;

  Graph with_edge(std::size_t a, std::size_t b) const;
  Graph without_edge(std::size_t a, std::size_t b) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(std::size_t v) const;
  void link(std::size_t a, std::size_t b);

  std::vector<VertexSet> adj_;
};

// N(v) together with v itself.
VertexSet closed_neighborhood(const Graph& g, std::size_t v);

// Connectivity relation between a pair of distinct vertices. The flags are
// independent: a pair is reported under every category it satisfies.
struct PairRelation {
  bool twins = false;           // N(nu) == N(mu)
  bool adjacent_twins = false;  // N(nu) + {nu} == N(mu) + {mu}
  bool leaf_nu_to_mu = false;   // N(nu) == {mu}
  bool leaf_mu_to_nu = false;   // N(mu) == {nu}

  bool any() const { return twins || adjacent_twins || leaf_nu_to_mu || leaf_mu_to_nu; }
};

PairRelation classify_pair(const Graph& g, std::size_t nu, std::size_t mu);

// Number of edges with both endpoints inside s.
std::size_t internal_edge_count(const Graph& g, const VertexSet& s);

}  // namespace gslab
