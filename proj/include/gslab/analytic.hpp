#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <string>

#include "gslab/graph.hpp"
#include "gslab/pauli.hpp"

namespace gslab {

// Real unit 3-vector selecting a single-qubit measurement axis.
struct MeasurementDirection {
  Eigen::Vector3d v;

  explicit MeasurementDirection(const Eigen::Vector3d& direction);

  static MeasurementDirection x() { return MeasurementDirection({1, 0, 0}); }
  static MeasurementDirection y() { return MeasurementDirection({0, 1, 0}); }
  static MeasurementDirection z() { return MeasurementDirection({0, 0, 1}); }
};

// Closed-form single-qubit statistics of |G(phi)> at a vertex: Bloch
// components, entanglement distance and the entropy they imply. Depends on
// the graph only through the vertex degree.
struct PgsPointStats {
  std::size_t vertex = 0;
  double phi = 0;
  double ex = 0;
  double ey = 0;
  double ez = 0;
  double ed = 0;          // 1 - (ex^2 + ey^2 + ez^2)
  double ed_entropy = 0;  // bits, in [0, 1]
};

PgsPointStats pgs_point_stats(const Graph& g, std::size_t v, double phi);

// Small-error approximation 1 - (dphi/2)^{2 degree} of the entanglement
// distance at phi = pi + dphi.
double ed_perturbation(std::size_t degree, double dphi);

// Binary entropy of (1 + r)/2 in bits, with r the Bloch-vector norm.
double bloch_entropy(double r);

// Rewrites P through the phi = pi entangler U_G: returns Q = U_G P U_G,
// using X_a -> Z^{N(a)} X_a, Y_a -> Z^{N(a)} Y_a, Z_a -> Z_a per site with
// all emitted Z strings composed through exact phase tracking. Then
// <G|P|G> = <+...+|Q|+...+>.
PauliString push_through_ug(const Graph& g, const PauliString& p);

enum class CorrelatorRule { twins, adjacent_twins, leaf, zero, pushed_general };
enum class SignProvenance { paper_stated, phase_bookkeeping };

const char* rule_name(CorrelatorRule r);
const char* provenance_name(SignProvenance s);

// Genuine graph state correlator, always in {-1, 0, +1}: phase of the
// pushed string when its residual letters are all I or X, else 0. The rule
// tag records which named connectivity case produced a nonzero value.
struct CorrelatorPrediction {
  PauliString observable;
  int value = 0;
  CorrelatorRule rule = CorrelatorRule::pushed_general;
  SignProvenance sign_provenance = SignProvenance::phase_bookkeeping;
};

CorrelatorPrediction predict_correlator(const Graph& g, const PauliString& p);

// <G|sigma_v^nu sigma_v^mu|G> for arbitrary measurement axes: the four
// connectivity-gated terms v_x v_x [twins] + v_x v_z [leaf nu->mu] +
// v_z v_x [leaf mu->nu] + v_y v_y [adjacent twins].
double predict_general_direction(const Graph& g, std::size_t nu, std::size_t mu,
                                 const MeasurementDirection& vnu,
                                 const MeasurementDirection& vmu);

// <G|X_v Z^guess|G>: 1 iff guess equals N(v), else 0.
int predict_neighborhood_probe(const Graph& g, std::size_t v, const VertexSet& guess);

enum class TopoAxis { x, y };

// Whole-graph correlator <sigma_axis^V>. `value` carries the
// phase-bookkeeping sign (the authoritative one); `paper_value` the literal
// +1 / i^{|V|} convention, recorded for the compliance report.
struct TopologicalPrediction {
  int value = 0;
  int paper_value = 0;
  bool condition_holds = false;
};

TopologicalPrediction predict_topological(const Graph& g, TopoAxis axis);

// Scale of the quasi graph state correlator error at phi = pi + dphi:
// |corr(pi + dphi) - corr(pi)| <= C * dphi^2 with C left to empirical fit.
double quasi_gs_error_bound(double dphi);

}  // namespace gslab
