#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace gslab {

// Subset of the vertices {0, ..., universe-1}, packed 64 per word.
// XOR is the set symmetric difference, which is the composition law of
// sigma_z index sets: sigma_z^A sigma_z^B = sigma_z^{A xor B}.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet of(std::size_t universe,
                      std::initializer_list<std::size_t> members) {
    VertexSet s(universe);
    for (std::size_t v : members) {
      s.set(v);
    }
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool test(std::size_t v) const {
    check_range(v);
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }

  void set(std::size_t v, bool on = true) {
    check_range(v);
    std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (on) {
      words_[v >> 6] |= bit;
    } else {
      words_[v >> 6] &= ~bit;
    }
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) {
      c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : words_) {
      if (w != 0) {
        return false;
      }
    }
    return true;
  }

  std::size_t intersection_count(const VertexSet& o) const {
    check_same(o);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    }
    return c;
  }

  bool intersects(const VertexSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) {
        return true;
      }
    }
    return false;
  }

  bool subset_of(const VertexSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) {
        return false;
      }
    }
    return true;
  }

  VertexSet& operator^=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] ^= o.words_[i];
    }
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] &= o.words_[i];
    }
    return *this;
  }

  VertexSet& operator|=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] |= o.words_[i];
    }
    return *this;
  }

  friend VertexSet operator^(VertexSet a, const VertexSet& b) {
    a ^= b;
    return a;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) {
    a &= b;
    return a;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) {
    a |= b;
    return a;
  }

  bool operator==(const VertexSet&) const = default;

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t v = 0; v < universe_; ++v) {
      if ((words_[v >> 6] >> (v & 63)) & 1u) {
        out.push_back(v);
      }
    }
    return out;
  }

  // Packed mask of the low word; only valid for universes of at most 64.
  std::uint64_t low_mask() const {
    if (universe_ > 64) {
      throw std::logic_error("VertexSet::low_mask: universe exceeds 64");
    }
    return words_.empty() ? 0 : words_[0];
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (std::size_t v : members()) {
      if (!first) {
        s += ", ";
      }
      s += std::to_string(v);
      first = false;
    }
    s += "}";
    return s;
  }

 private:
  void check_range(std::size_t v) const {
    if (v >= universe_) {
      throw std::out_of_range("VertexSet: vertex " + std::to_string(v) +
                              " out of range for universe " +
                              std::to_string(universe_));
    }
  }

  void check_same(const VertexSet& o) const {
    if (o.universe_ != universe_) {
      throw std::invalid_argument("VertexSet: universe size mismatch (" +
                                  std::to_string(universe_) + " vs " +
                                  std::to_string(o.universe_) + ")");
    }
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

inline VertexSet sym_diff(const VertexSet& a, const VertexSet& b) {
  return a ^ b;
}

}  // namespace gslab
