#pragma once

#include <Eigen/Dense>
#include <complex>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

#include "gslab/graph.hpp"
#include "gslab/pauli.hpp"

namespace gslab {

// 2^24 amplitudes = 256 MiB; operations above the cap fail fast.
inline constexpr int kDefaultQubitCap = 24;

// Dense n-qubit pure state, unit norm. Vertex 0 is the least significant
// bit of the basis-state index.
struct StateVector {
  int n = 0;
  Eigen::VectorXcd amps;
};

StateVector plus_state(int n, int cap = kDefaultQubitCap);

// |G(phi)> = prod_{(a,b) in E} U_ab(phi) |+>^V. The interactions are
// diagonal phase gates, so edge application order cannot change the state.
StateVector build_pgs(const Graph& g, double phi, int cap = kDefaultQubitCap);

// Per-edge interaction strengths, in g.edges() order.
StateVector build_pgs(const Graph& g, std::span<const double> edge_phis,
                      int cap = kDefaultQubitCap);

// One interaction U_ab(phi): multiplies amplitudes with both endpoint bits
// set by e^{-i phi}. The closed form keeps the e^{-i phi/4} global phase of
// the defining product of exponentials, so operator identities hold exactly.
void apply_edge_interaction(StateVector& s, std::size_t a, std::size_t b, double phi);

// Uniform per-edge phase jitter phi + U(-delta, delta); noise hook for
// robustness experiments.
std::vector<double> jittered_phis(const Graph& g, double phi, double delta,
                                  std::mt19937_64& rng);

// <s|P|s> including P's phase, by amplitude pairing; P is never
// materialized as a matrix. Imaginary part must vanish for hermitian P.
std::complex<double> expectation(const StateVector& s, const PauliString& p);

StateVector apply_pauli(const StateVector& s, const PauliString& p);

// (I + sign*P)/2 applied without renormalization.
StateVector apply_pauli_projector(const StateVector& s, const PauliString& p, int sign);

struct MeasurementOutcome {
  PauliString observable;
  int outcome = 0;         // +1 or -1
  double probability = 0;  // Born probability of this outcome
  StateVector post_state;  // renormalized
};

// Projective measurement of a hermitian Pauli string, outcome sampled with
// Born probabilities (1 +- <P>)/2.
MeasurementOutcome measure_pauli(const StateVector& s, const PauliString& p,
                                 std::mt19937_64& rng);

// Deterministic branch selection; throws if the branch probability is
// below 1e-12 instead of producing a NaN state.
MeasurementOutcome project_pauli(const StateVector& s, const PauliString& p, int sign);

// (<sigma_x^v>, <sigma_y^v>, <sigma_z^v>).
Eigen::Vector3d bloch_vector(const StateVector& s, std::size_t v);

// 1 - |bloch|^2, in [0, 1]: 0 for factorizable qubits, 1 for maximally
// entangled ones.
double entanglement_distance(const StateVector& s, std::size_t v);

double total_entanglement(const StateVector& s);

Eigen::Matrix2cd reduced_density(const StateVector& s, std::size_t v);

// Von Neumann entropy of the one-qubit reduced state, in bits.
double entropy_of_entanglement(const StateVector& s, std::size_t v);

double fidelity(const StateVector& a, const StateVector& b);

// ||a - b||_2 over amplitudes.
double state_distance(const StateVector& a, const StateVector& b);

// "PGSV1 n=<n>" header line, then 2^n little-endian (real, imag) double pairs.
void dump_state(const StateVector& s, std::ostream& out);
StateVector load_state(std::istream& in);

}  // namespace gslab
