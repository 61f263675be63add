#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gslab/graph.hpp"

namespace gslab {

Graph edgeless_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
// Vertex 0 is the hub of K_{1,leaves}.
Graph star_graph(std::size_t leaves);
Graph complete_graph(std::size_t n);
Graph grid_graph(std::size_t rows, std::size_t cols);

// Erdos-Renyi draw; each pair becomes an edge with probability edge_prob.
Graph random_graph(std::size_t n, double edge_prob, std::mt19937_64& rng);

struct NamedGraph {
  std::string name;
  Graph graph;
};

// P2..P5, C3..C6, K1,1..K1,5, K4 and `random_count` seeded random graphs
// with 4..10 vertices. Deterministic for a fixed seed.
std::vector<NamedGraph> standard_corpus(std::size_t random_count = 20,
                                        std::uint64_t seed = 20250810);

}  // namespace gslab
