#include "gslab/pauli.hpp"

#include <cctype>
#include <stdexcept>

namespace gslab {

char letter_char(PauliLetter l) {
  switch (l) {
    case PauliLetter::I: return 'I';
    case PauliLetter::X: return 'X';
    case PauliLetter::Z: return 'Z';
    case PauliLetter::Y: return 'Y';
  }
  throw std::logic_error("letter_char: bad letter");
}

PauliString PauliString::single(std::size_t n, std::size_t site, PauliLetter l) {
  PauliString p(n);
  p.set_letter(site, l);
  return p;
}

PauliString PauliString::z_string(const VertexSet& s) {
  return PauliString(VertexSet(s.universe()), s, 0);
}

PauliString PauliString::x_string(const VertexSet& s) {
  return PauliString(s, VertexSet(s.universe()), 0);
}

void PauliString::set_letter(std::size_t site, PauliLetter l) {
  auto bits = static_cast<std::uint8_t>(l);
  x_.set(site, bits & 1);
  z_.set(site, bits & 2);
}

std::complex<double> PauliString::phase() const {
  static const std::complex<double> table[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[phase_exp_];
}

std::string PauliString::str() const {
  static const char* prefix[4] = {"+", "+i", "-", "-i"};
  std::string out = prefix[phase_exp_];
  bool any = false;
  for (std::size_t site = 0; site < size(); ++site) {
    PauliLetter l = letter(site);
    if (l == PauliLetter::I) {
      continue;
    }
    if (any) {
      out += ' ';
    }
    out += letter_char(l);
    out += std::to_string(site);
    any = true;
  }
  if (!any) {
    out += 'I';
  }
  return out;
}

PauliString PauliString::parse(std::string_view text, std::size_t n) {
  PauliString p(n);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
  };
  skip_ws();
  int exp = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') {
      exp = 2;
    }
    ++i;
  }
  if (i < text.size() && (text[i] == 'i' || text[i] == 'j')) {
    exp += 1;
    ++i;
  }
  p.set_phase_exponent(exp);
  skip_ws();
  bool saw_token = false;
  while (i < text.size()) {
    char c = text[i];
    if (c == 'I') {
      ++i;
      saw_token = true;
      skip_ws();
      continue;
    }
    PauliLetter l;
    switch (c) {
      case 'X': l = PauliLetter::X; break;
      case 'Y': l = PauliLetter::Y; break;
      case 'Z': l = PauliLetter::Z; break;
      default:
        throw std::invalid_argument("PauliString::parse: unexpected character '" +
                                    std::string(1, c) + "'");
    }
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("PauliString::parse: letter without site index");
    }
    std::size_t site = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      site = site * 10 + static_cast<std::size_t>(text[i] - '0');
      ++i;
    }
    if (site >= n) {
      throw std::invalid_argument("PauliString::parse: site " + std::to_string(site) +
                                  " out of range for n=" + std::to_string(n));
    }
    if (p.letter(site) != PauliLetter::I) {
      throw std::invalid_argument("PauliString::parse: duplicate site " +
                                  std::to_string(site));
    }
    p.set_letter(site, l);
    saw_token = true;
    skip_ws();
  }
  if (!saw_token) {
    throw std::invalid_argument("PauliString::parse: empty string");
  }
  return p;
}

PauliString compose(const PauliString& p, const PauliString& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("compose: size mismatch (" +
                                std::to_string(p.size()) + " vs " +
                                std::to_string(q.size()) + ")");
  }
  VertexSet x3 = p.x_ ^ q.x_;
  VertexSet z3 = p.z_ ^ q.z_;
  // Per site: i^{x1 z1} X^{x1} Z^{z1} * i^{x2 z2} X^{x2} Z^{z2}
  //         = i^{x1 z1 + x2 z2 + 2 z1 x2 - x3 z3} * i^{x3 z3} X^{x3} Z^{z3},
  // summed over sites via popcounts.
  std::size_t g = static_cast<std::size_t>(p.phase_exp_) +
                  static_cast<std::size_t>(q.phase_exp_) +
                  p.x_.intersection_count(p.z_) +
                  q.x_.intersection_count(q.z_) +
                  2 * p.z_.intersection_count(q.x_) +
                  3 * x3.intersection_count(z3);
  return PauliString(std::move(x3), std::move(z3), static_cast<int>(g % 4));
}

}  // namespace gslab
