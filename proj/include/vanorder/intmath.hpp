#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "vanorder/errors.hpp"

namespace vanorder {

using std::uint64_t;

inline bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Prime factorization as (prime, exponent) pairs, ascending.
inline std::vector<std::pair<uint64_t, int>> factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, int>> out;
  for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) n /= p, ++e;
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// Ascending list of primes dividing n.
inline std::vector<uint64_t> prime_divisors(uint64_t n) {
  std::vector<uint64_t> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

/// Largest power of p dividing n (1 when p does not divide n).
inline uint64_t p_part(uint64_t n, uint64_t p) {
  uint64_t q = 1;
  while (n % p == 0) n /= p, q *= p;
  return q;
}

/// If n = p^k for a prime p and k >= 1, returns p.
inline std::optional<uint64_t> prime_power_base(uint64_t n) {
  if (n < 2) return std::nullopt;
  auto f = factorize(n);
  if (f.size() == 1) return f[0].first;
  return std::nullopt;
}

inline uint64_t euler_phi(uint64_t n) {
  uint64_t r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

/// Ascending divisors of n.
inline std::vector<uint64_t> divisors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace vanorder
