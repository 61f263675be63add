#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gslab/graph.hpp"
#include "gslab/pauli.hpp"
#include "gslab/state.hpp"

namespace gslab {

// Sampling budget: at most M = ceil(-log2 epsilon) shots per observable,
// which bounds the false +-1 rate against a true 0 by 2^{1-M} <= 2 epsilon.
struct SampleBudget {
  double epsilon = 0;
  int max_samples = 0;
  std::uint64_t seed = 0;

  static SampleBudget from_epsilon(double epsilon, std::uint64_t seed);
};

struct ProbeVerdict {
  PauliString observable;
  int decided_value = 0;  // -1, 0 or +1
  int samples_used = 0;
  // 1 - 2^{-samples_used} for +-1 decisions; a 0 decision is certain, since
  // a true +-1 correlator can never produce a disagreeing outcome.
  double confidence = 0;
};

// Stop-early rule over an i.i.d. +-1 outcome stream: a disagreement decides
// 0 immediately, M unanimous outcomes decide that sign.
ProbeVerdict sequential_decide(const std::function<int()>& next_outcome,
                               const SampleBudget& budget);

// Deterministic per-shot RNG substream.
std::mt19937_64 shot_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t shot);

// Samples X_v Z^guess on fresh copies of the state; verdict +1 iff the
// guess equals the true neighborhood of v (up to budget confidence).
ProbeVerdict verify_neighborhood(const StateVector& state, std::size_t v,
                                 const VertexSet& guess, const SampleBudget& budget,
                                 std::uint64_t stream = 0);

// Link test for pair (a, b): each shot z-measures every mask vertex, then
// measures Y_a Y_b on the remainder and corrects its sign by the parity of
// -1 outcomes on mask vertices hypothesized adjacent to exactly one of a, b.
// The corrected statistic is +1 on every shot when the link exists and
// symmetric +-1 noise when it does not. Requires mask to cover every vertex
// possibly linked to a or b.
ProbeVerdict probe_link(const StateVector& state, const Graph& hypothesis,
                        std::size_t a, std::size_t b, const VertexSet& mask,
                        const SampleBudget& budget, std::uint64_t stream = 0);

struct NeighborhoodVerdict {
  std::size_t vertex = 0;
  VertexSet guess;
  ProbeVerdict verdict;
};

struct LinkVerdict {
  std::size_t a = 0;
  std::size_t b = 0;
  bool hypothesized = false;  // does the hypothesis contain the edge?
  ProbeVerdict verdict;       // +1: link present in the state, 0: absent
};

struct GraphHypothesisReport {
  std::vector<NeighborhoodVerdict> neighborhoods;
  std::vector<LinkVerdict> links;  // localization probes on suspect pairs
  bool pass = false;
  long shots_total = 0;
  double epsilon = 0;
  std::uint64_t seed = 0;

  std::vector<std::size_t> failing_vertices() const;
};

// Probes every vertex neighborhood of the hypothesis against the state.
// Passes iff all verdicts are +1; on failure, pairs of failing vertices are
// link-probed to localize the discrepancy.
GraphHypothesisReport verify_graph(const StateVector& state, const Graph& hypothesis,
                                   const SampleBudget& budget, bool localize = true);

std::string report_to_json(const GraphHypothesisReport& report);

}  // namespace gslab
