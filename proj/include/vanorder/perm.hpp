#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "vanorder/errors.hpp"

namespace vanorder {

/// A permutation of {0, ..., degree-1}, stored as its image table.
/// Composition is left-to-right throughout the toolkit: (a * b) applies a
/// first, then b.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(int degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0);
  }

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int x : images_) {
      if (x < 0 || x >= static_cast<int>(images_.size()) || seen[x])
        throw input_error("permutation image table is not a bijection");
      seen[x] = 1;
    }
  }

  static Permutation identity(int degree) { return Permutation(degree); }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
    Permutation p;
    p.images_ = std::move(inv);
    return p;
  }

  friend Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
      throw input_error("cannot compose permutations of different degree");
    Permutation p;
    p.images_.resize(a.images_.size());
    for (int i = 0; i < a.degree(); ++i) p.images_[i] = b.images_[a.images_[i]];
    return p;
  }

  Permutation operator*(const Permutation& rhs) const { return compose(*this, rhs); }

  Permutation power(long long k) const {
    Permutation base = *this, acc = Permutation(degree());
    if (k < 0) {
      base = inverse();
      k = -k;
    }
    while (k > 0) {
      if (k & 1) acc = compose(acc, base);
      base = compose(base, base);
      k >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

  /// Disjoint cycles (nontrivial ones only), each starting at its least point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      std::vector<int> cyc;
      int j = i;
      while (!seen[j]) {
        seen[j] = 1;
        cyc.push_back(j);
        j = images_[j];
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

 private:
  std::vector<int> images_;
};

/// Least k >= 1 with g^k = identity; the lcm of the cycle lengths.
inline std::uint64_t element_order(const Permutation& g) {
  std::uint64_t o = 1;
  std::vector<char> seen(g.degree(), 0);
  for (int i = 0; i < g.degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = g[j];
      ++len;
    }
    o = std::lcm(o, len);
  }
  return o;
}

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.images()) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace vanorder
