#include "gslab/graph.hpp"

#include <stdexcept>
#include <string>

namespace gslab {

Graph::Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

void Graph::check_vertex(std::size_t v) const {
  if (v >= adj_.size()) {
    throw std::out_of_range("Graph: vertex " + std::to_string(v) +
                            " out of range for n=" + std::to_string(adj_.size()));
  }
}

void Graph::link(std::size_t a, std::size_t b) {
  adj_[a].set(b);
  adj_[b].set(a);
}

Graph Graph::from_edges(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Graph g(n);
  for (const auto& [a, b] : edges) {
    g.check_vertex(a);
    g.check_vertex(b);
    if (a == b) {
      throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(a));
    }
    if (g.adj_[a].test(b)) {
      throw std::invalid_argument("Graph: duplicate edge (" + std::to_string(a) +
                                  ", " + std::to_string(b) + ")");
    }
    g.link(a, b);
  }
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const VertexSet& row : adj_) {
    twice += row.count();
  }
  return twice / 2;
}

bool Graph::has_edge(std::size_t a, std::size_t b) const {
  check_vertex(a);
  check_vertex(b);
  return adj_[a].test(b);
}

const VertexSet& Graph::neighbors(std::size_t v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < adj_.size(); ++a) {
    for (std::size_t b : adj_[a].members()) {
      if (a < b) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;  // already lexicographically sorted by construction
}

Graph Graph::remove_vertex(std::size_t v) const {
  check_vertex(v);
  Graph g = *this;
  for (std::size_t u : adj_[v].members()) {
    g.adj_[u].set(v, false);
  }
  g.adj_[v] = VertexSet(adj_.size());
  return g;
}

Graph Graph::with_edge(std::size_t a, std::size_t b) const {
  check_vertex(a);
  check_vertex(b);
  if (a == b) {
    throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(a));
  }
  Graph g = *this;
  g.link(a, b);
  return g;
}

Graph Graph::without_edge(std::size_t a, std::size_t b) const {
  if (!has_edge(a, b)) {
    throw std::invalid_argument("Graph: no edge (" + std::to_string(a) + ", " +
                                std::to_string(b) + ") to remove");
  }
  Graph g = *this;
  g.adj_[a].set(b, false);
  g.adj_[b].set(a, false);
  return g;
}

VertexSet closed_neighborhood(const Graph& g, std::size_t v) {
  VertexSet s = g.neighbors(v);
  s.set(v);
  return s;
}

PairRelation classify_pair(const Graph& g, std::size_t nu, std::size_t mu) {
  if (nu == mu) {
    throw std::invalid_argument("classify_pair: vertices must be distinct");
  }
  const VertexSet& n_nu = g.neighbors(nu);
  const VertexSet& n_mu = g.neighbors(mu);
  PairRelation r;
  r.twins = (n_nu == n_mu);
  r.adjacent_twins = (closed_neighborhood(g, nu) == closed_neighborhood(g, mu));
  r.leaf_nu_to_mu = (n_nu == VertexSet::of(g.vertex_count(), {mu}));
  r.leaf_mu_to_nu = (n_mu == VertexSet::of(g.vertex_count(), {nu}));
  return r;
}

std::size_t internal_edge_count(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count()) {
    throw std::invalid_argument("internal_edge_count: universe size mismatch");
  }
  std::size_t twice = 0;
  for (std::size_t v : s.members()) {
    twice += g.neighbors(v).intersection_count(s);
  }
  return twice / 2;
}

}  // namespace gslab
