#include "gslab/state.hpp"

#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace gslab {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

void check_qubit_count(int n, int cap) {
  if (n < 0) {
    throw std::invalid_argument("qubit count must be non-negative");
  }
  if (n > cap) {
    throw std::invalid_argument("qubit count " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
  }
  if (cap > 62) {
    throw std::invalid_argument("qubit cap above 62 is not representable");
  }
}

void check_sizes(const StateVector& s, const PauliString& p) {
  if (static_cast<std::size_t>(s.n) != p.size()) {
    throw std::invalid_argument("state has " + std::to_string(s.n) +
                                " qubits but observable has " +
                                std::to_string(p.size()));
  }
}

std::uint64_t set_mask(const VertexSet& s) { return s.low_mask(); }

std::complex<double> i_power(std::size_t k) {
  static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[k % 4];
}

// P|b> = i^{phase_exp + |x&z|} (-1)^{popcount(z & b)} |b xor x>.
struct PauliAction {
  std::uint64_t x_mask;
  std::uint64_t z_mask;
  std::complex<double> front;
};

PauliAction action_of(const PauliString& p) {
  std::uint64_t x = set_mask(p.x_set());
  std::uint64_t z = set_mask(p.z_set());
  std::size_t k = static_cast<std::size_t>(p.phase_exponent()) +
                  static_cast<std::size_t>(std::popcount(x & z));
  return {x, z, i_power(k)};
}

double sign_of(std::uint64_t z_mask, std::uint64_t b) {
  return (std::popcount(z_mask & b) & 1) ? -1.0 : 1.0;
}

}  // namespace

StateVector plus_state(int n, int cap) {
  check_qubit_count(n, cap);
  StateVector s;
  s.n = n;
  Eigen::Index dim = Eigen::Index{1} << n;
  s.amps = Eigen::VectorXcd::Constant(dim, std::pow(2.0, -0.5 * n));
  return s;
}

void apply_edge_interaction(StateVector& s, std::size_t a, std::size_t b, double phi) {
  if (a == b || a >= static_cast<std::size_t>(s.n) || b >= static_cast<std::size_t>(s.n)) {
    throw std::invalid_argument("apply_edge_interaction: bad qubit pair");
  }
  std::complex<double> w = std::exp(-kI * phi);
  std::uint64_t pair_mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
  for (Eigen::Index k = 0; k < s.amps.size(); ++k) {
    if ((static_cast<std::uint64_t>(k) & pair_mask) == pair_mask) {
      s.amps[k] *= w;
    }
  }
}

StateVector build_pgs(const Graph& g, double phi, int cap) {
  std::vector<double> phis(g.edge_count(), phi);
  return build_pgs(g, phis, cap);
}

StateVector build_pgs(const Graph& g, std::span<const double> edge_phis, int cap) {
  auto edges = g.edges();
  if (edge_phis.size() != edges.size()) {
    throw std::invalid_argument("build_pgs: need one phase per edge");
  }
  StateVector s = plus_state(static_cast<int>(g.vertex_count()), cap);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    apply_edge_interaction(s, edges[e].first, edges[e].second, edge_phis[e]);
  }
  return s;
}

std::vector<double> jittered_phis(const Graph& g, double phi, double delta,
                                  std::mt19937_64& rng) {
  std::uniform_real_distribution<double> jitter(-delta, delta);
  std::vector<double> phis(g.edge_count());
  for (double& p : phis) {
    p = phi + jitter(rng);
  }
  return phis;
}

std::complex<double> expectation(const StateVector& s, const PauliString& p) {
  check_sizes(s, p);
  PauliAction act = action_of(p);
  std::complex<double> acc = 0;
  for (Eigen::Index b = 0; b < s.amps.size(); ++b) {
    auto bits = static_cast<std::uint64_t>(b);
    acc += std::conj(s.amps[static_cast<Eigen::Index>(bits ^ act.x_mask)]) *
           (sign_of(act.z_mask, bits) * s.amps[b]);
  }
  return act.front * acc;
}

StateVector apply_pauli(const StateVector& s, const PauliString& p) {
  check_sizes(s, p);
  PauliAction act = action_of(p);
  StateVector out;
  out.n = s.n;
  out.amps.resize(s.amps.size());
  for (Eigen::Index b = 0; b < s.amps.size(); ++b) {
    auto bits = static_cast<std::uint64_t>(b);
    out.amps[static_cast<Eigen::Index>(bits ^ act.x_mask)] =
        act.front * sign_of(act.z_mask, bits) * s.amps[b];
  }
  return out;
}

StateVector apply_pauli_projector(const StateVector& s, const PauliString& p, int sign) {
  StateVector ps = apply_pauli(s, p);
  StateVector out;
  out.n = s.n;
  out.amps = 0.5 * (s.amps + static_cast<double>(sign) * ps.amps);
  return out;
}

namespace {

MeasurementOutcome resolve_branch(const StateVector& s, const PauliString& p,
                                  int sign, double prob) {
  if (prob < 1e-12) {
    throw std::runtime_error("measurement branch " + std::string(sign > 0 ? "+1" : "-1") +
                             " of " + p.str() + " has probability " +
                             std::to_string(prob) + " below 1e-12");
  }
  MeasurementOutcome out;
  out.observable = p;
  out.outcome = sign;
  out.probability = prob;
  out.post_state = apply_pauli_projector(s, p, sign);
  out.post_state.amps /= std::sqrt(prob);
  return out;
}

double plus_branch_probability(const StateVector& s, const PauliString& p) {
  if (!p.hermitian()) {
    throw std::invalid_argument("measurement requires a hermitian Pauli string, got " +
                                p.str());
  }
  std::complex<double> e = expectation(s, p);
  if (std::abs(e.imag()) > 1e-9) {
    throw std::runtime_error("hermitian expectation has imaginary part " +
                             std::to_string(e.imag()));
  }
  double prob = 0.5 * (1.0 + e.real());
  return std::clamp(prob, 0.0, 1.0);
}

}  // namespace

MeasurementOutcome measure_pauli(const StateVector& s, const PauliString& p,
                                 std::mt19937_64& rng) {
  double p_plus = plus_branch_probability(s, p);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int sign = unit(rng) < p_plus ? +1 : -1;
  return resolve_branch(s, p, sign, sign > 0 ? p_plus : 1.0 - p_plus);
}

MeasurementOutcome project_pauli(const StateVector& s, const PauliString& p, int sign) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("project_pauli: sign must be +1 or -1");
  }
  double p_plus = plus_branch_probability(s, p);
  return resolve_branch(s, p, sign, sign > 0 ? p_plus : 1.0 - p_plus);
}

Eigen::Vector3d bloch_vector(const StateVector& s, std::size_t v) {
  auto n = static_cast<std::size_t>(s.n);
  Eigen::Vector3d r;
  r.x() = expectation(s, PauliString::single(n, v, PauliLetter::X)).real();
  r.y() = expectation(s, PauliString::single(n, v, PauliLetter::Y)).real();
  r.z() = expectation(s, PauliString::single(n, v, PauliLetter::Z)).real();
  return r;
}

double entanglement_distance(const StateVector& s, std::size_t v) {
  return 1.0 - bloch_vector(s, v).squaredNorm();
}

double total_entanglement(const StateVector& s) {
  double sum = 0;
  for (std::size_t v = 0; v < static_cast<std::size_t>(s.n); ++v) {
    sum += entanglement_distance(s, v);
  }
  return sum;
}

Eigen::Matrix2cd reduced_density(const StateVector& s, std::size_t v) {
  if (v >= static_cast<std::size_t>(s.n)) {
    throw std::out_of_range("reduced_density: qubit out of range");
  }
  std::uint64_t bit = std::uint64_t{1} << v;
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (Eigen::Index b = 0; b < s.amps.size(); ++b) {
    auto bits = static_cast<std::uint64_t>(b);
    if (bits & bit) {
      continue;  // enumerate each rest-configuration once, via its i=0 member
    }
    std::complex<double> a0 = s.amps[b];
    std::complex<double> a1 = s.amps[static_cast<Eigen::Index>(bits | bit)];
    rho(0, 0) += a0 * std::conj(a0);
    rho(0, 1) += a0 * std::conj(a1);
    rho(1, 0) += a1 * std::conj(a0);
    rho(1, 1) += a1 * std::conj(a1);
  }
  return rho;
}

double entropy_of_entanglement(const StateVector& s, std::size_t v) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(
      reduced_density(s, v), Eigen::EigenvaluesOnly);
  double entropy = 0;
  for (double lambda : {solver.eigenvalues()[0], solver.eigenvalues()[1]}) {
    if (lambda > 1e-300) {
      entropy -= lambda * std::log2(lambda);
    }
  }
  return entropy;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("fidelity: qubit count mismatch");
  }
  return std::norm(a.amps.dot(b.amps));
}

double state_distance(const StateVector& a, const StateVector& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("state_distance: qubit count mismatch");
  }
  return (a.amps - b.amps).norm();
}

void dump_state(const StateVector& s, std::ostream& out) {
  out << "PGSV1 n=" << s.n << "\n";
  for (Eigen::Index b = 0; b < s.amps.size(); ++b) {
    double re = s.amps[b].real();
    double im = s.amps[b].imag();
    out.write(reinterpret_cast<const char*>(&re), sizeof(re));
    out.write(reinterpret_cast<const char*>(&im), sizeof(im));
  }
}

StateVector load_state(std::istream& in) {
  std::string header;
  if (!std::getline(in, header) || header.rfind("PGSV1 n=", 0) != 0) {
    throw std::runtime_error("load_state: bad header");
  }
  int n = std::stoi(header.substr(8));
  check_qubit_count(n, 62);
  StateVector s;
  s.n = n;
  s.amps.resize(Eigen::Index{1} << n);
  for (Eigen::Index b = 0; b < s.amps.size(); ++b) {
    double re = 0;
    double im = 0;
    in.read(reinterpret_cast<char*>(&re), sizeof(re));
    in.read(reinterpret_cast<char*>(&im), sizeof(im));
    if (!in) {
      throw std::runtime_error("load_state: truncated amplitude data");
    }
    s.amps[b] = {re, im};
  }
  return s;
}

}  // namespace gslab
