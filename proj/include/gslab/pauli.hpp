#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gslab/vertex_set.hpp"

namespace gslab {

// Encoded as the (x, z) bit pair of the site: I=00, X=01, Z=10, Y=11.
enum class PauliLetter : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char letter_char(PauliLetter l);

// Tensor product of single-qubit Pauli matrices times a global phase in
// {+1, +i, -1, -i}, stored as the exponent of i mod 4. Letters live in two
// bitsets (x part, z part) with Y = both bits set; the identity
// i^{x z} X^x Z^z makes Y a first-class stored letter with no phase
// attached, so phases appear only through composition.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n) : x_(n), z_(n) {}

  static PauliString identity(std::size_t n) { return PauliString(n); }
  static PauliString single(std::size_t n, std::size_t site, PauliLetter l);
  // Z on every member of s, phase +1.
  static PauliString z_string(const VertexSet& s);
  // X on every member of s, phase +1.
  static PauliString x_string(const VertexSet& s);

  std::size_t size() const { return x_.universe(); }

  PauliLetter letter(std::size_t site) const {
    return static_cast<PauliLetter>((x_.test(site) ? 1 : 0) |
                                    (z_.test(site) ? 2 : 0));
  }
  void set_letter(std::size_t site, PauliLetter l);

  // Exponent k of the global phase i^k, in {0, 1, 2, 3}.
  int phase_exponent() const { return phase_exp_; }
  void set_phase_exponent(int k) { phase_exp_ = ((k % 4) + 4) % 4; }
  std::complex<double> phase() const;

  // Hermitian iff the phase is +1 or -1; such strings square to identity.
  bool hermitian() const { return (phase_exp_ % 2) == 0; }

  VertexSet support() const { return x_ | z_; }
  bool identity_letters() const { return x_.empty() && z_.empty(); }

  const VertexSet& x_set() const { return x_; }
  const VertexSet& z_set() const { return z_; }

  bool operator==(const PauliString&) const = default;

  // Renders as "<sign><letters>", e.g. "+X0 Z3 Y5", "-iY2", "+I".
  std::string str() const;
  static PauliString parse(std::string_view text, std::size_t n);

  friend PauliString compose(const PauliString& p, const PauliString& q);

 private:
  PauliString(VertexSet x, VertexSet z, int phase_exp)
      : x_(std::move(x)), z_(std::move(z)), phase_exp_(phase_exp) {}

  VertexSet x_;
  VertexSet z_;
  int phase_exp_ = 0;
};

// Exact operator product p * q with the per-site anticommutation phases
// accumulated into the global exponent.
PauliString compose(const PauliString& p, const PauliString& q);

}  // namespace gslab
