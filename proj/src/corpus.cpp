#include "gslab/corpus.hpp"

#include <stdexcept>

namespace gslab {

Graph edgeless_graph(std::size_t n) { return Graph(n); }

Graph path_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) {
    edges.emplace_back(v, v + 1);
  }
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) {
    throw std::invalid_argument("cycle_graph: need at least 3 vertices");
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) {
    edges.emplace_back(v, v + 1);
  }
  edges.emplace_back(0, n - 1);
  return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t v = 1; v <= leaves; ++v) {
    edges.emplace_back(0, v);
  }
  return Graph::from_edges(leaves + 1, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      edges.emplace_back(a, b);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  auto at = [cols](std::size_t r, std::size_t c) { return r * cols + c; };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) {
        edges.emplace_back(at(r, c), at(r, c + 1));
      }
      if (r + 1 < rows) {
        edges.emplace_back(at(r, c), at(r + 1, c));
      }
    }
  }
  return Graph::from_edges(rows * cols, edges);
}

Graph random_graph(std::size_t n, double edge_prob, std::mt19937_64& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      // Top 53 bits as a uniform double in [0, 1); stable across platforms.
      double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < edge_prob) {
        edges.emplace_back(a, b);
      }
    }
  }
  return Graph::from_edges(n, edges);
}

std::vector<NamedGraph> standard_corpus(std::size_t random_count, std::uint64_t seed) {
  std::vector<NamedGraph> corpus;
  for (std::size_t n = 2; n <= 5; ++n) {
    corpus.push_back({"P" + std::to_string(n), path_graph(n)});
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    corpus.push_back({"C" + std::to_string(n), cycle_graph(n)});
  }
  for (std::size_t k = 1; k <= 5; ++k) {
    corpus.push_back({"K1," + std::to_string(k), star_graph(k)});
  }
  corpus.push_back({"K4", complete_graph(4)});
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) {
    std::size_t n = 4 + i % 7;  // 4..10 vertices
    double p = 0.25 + 0.25 * (i % 3);
    std::string name = "R" + std::string(i < 10 ? "0" : "") + std::to_string(i);
    corpus.push_back({name, random_graph(n, p, rng)});
  }
  return corpus;
}

}  // namespace gslab
