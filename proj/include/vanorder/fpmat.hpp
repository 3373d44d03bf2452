#pragma once

#include <cstdint>
#include <vector>

#include "vanorder/errors.hpp"

namespace vanorder {

/// Arithmetic in the prime field F_p (p < 2^31 so products fit in 64 bits).
struct Fp {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b % p) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t neg(std::uint64_t a) const { return (p - a % p) % p; }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t inv(std::uint64_t a) const {
    if (a % p == 0) throw internal_error("division by zero mod p");
    return pow(a, p - 2);
  }
};

/// Dense row-major matrix over F_p.
struct FpMat {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint64_t> d;

  FpMat() = default;
  FpMat(std::size_t r, std::size_t c) : rows(r), cols(c), d(r * c, 0) {}

  std::uint64_t& at(std::size_t i, std::size_t j) { return d[i * cols + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return d[i * cols + j]; }
};

inline FpMat fp_mul(const Fp& F, const FpMat& a, const FpMat& b) {
  if (a.cols != b.rows) throw internal_error("matrix shape mismatch");
  FpMat c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      std::uint64_t v = a.at(i, k);
      if (!v) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        c.at(i, j) = F.add(c.at(i, j), F.mul(v, b.at(k, j)));
    }
  return c;
}

/// Basis of the kernel of a, as columns of the returned matrix.
inline FpMat fp_kernel(const Fp& F, FpMat a) {
  std::size_t n = a.cols;
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < a.rows; ++col) {
    std::size_t piv = row;
    while (piv < a.rows && a.at(piv, col) == 0) ++piv;
    if (piv == a.rows) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(row, j));
    std::uint64_t inv = F.inv(a.at(row, col));
    for (std::size_t j = 0; j < n; ++j) a.at(row, j) = F.mul(a.at(row, j), inv);
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i == row || a.at(i, col) == 0) continue;
      std::uint64_t f = a.at(i, col);
      for (std::size_t j = 0; j < n; ++j)
        a.at(i, j) = F.sub(a.at(i, j), F.mul(f, a.at(row, j)));
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<char> is_pivot(n, 0);
  for (std::size_t c : pivot_col) is_pivot[c] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  FpMat ker(n, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    ker.at(fc, k) = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      ker.at(pivot_col[r], k) = F.neg(a.at(r, fc));
  }
  return ker;
}

/// Coordinates X solving B * X = V for a column-full-rank B (internal_error if
/// inconsistent).
inline FpMat fp_solve_in_basis(const Fp& F, const FpMat& B, const FpMat& V) {
  if (B.rows != V.rows) throw internal_error("solve: row mismatch");
  std::size_t n = B.rows, d = B.cols, m = V.cols;
  FpMat aug(n, d + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug.at(i, j) = B.at(i, j);
    for (std::size_t j = 0; j < m; ++j) aug.at(i, d + j) = V.at(i, j);
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_of_col(d, SIZE_MAX);
  for (std::size_t col = 0; col < d && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && aug.at(piv, col) == 0) ++piv;
    if (piv == n) throw internal_error("solve: basis matrix is column-deficient");
    for (std::size_t j = 0; j < d + m; ++j) std::swap(aug.at(piv, j), aug.at(row, j));
    std::uint64_t inv = F.inv(aug.at(row, col));
    for (std::size_t j = 0; j < d + m; ++j) aug.at(row, j) = F.mul(aug.at(row, j), inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || aug.at(i, col) == 0) continue;
      std::uint64_t f = aug.at(i, col);
      for (std::size_t j = 0; j < d + m; ++j)
        aug.at(i, j) = F.sub(aug.at(i, j), F.mul(f, aug.at(row, j)));
    }
    pivot_of_col[col] = row;
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (aug.at(i, d + j) != 0) throw internal_error("solve: inconsistent system");
  FpMat X(d, m);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t j = 0; j < m; ++j) X.at(c, j) = aug.at(pivot_of_col[c], d + j);
  return X;
}

/// Characteristic polynomial det(xI - A), monic, via Hessenberg reduction.
/// Returned as coefficients c[0..n] with c[n] = 1.
inline std::vector<std::uint64_t> fp_charpoly(const Fp& F, FpMat a) {
  std::size_t n = a.rows;
  if (n != a.cols) throw internal_error("charpoly needs a square matrix");
  // reduce to upper Hessenberg by similarity transforms
  for (std::size_t col = 0; col + 1 < n; ++col) {
    std::size_t piv = col + 1;
    while (piv < n && a.at(piv, col) == 0) ++piv;
    if (piv == n) continue;
    if (piv != col + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(a.at(i, piv), a.at(i, col + 1));
    }
    std::uint64_t inv = F.inv(a.at(col + 1, col));
    for (std::size_t i = col + 2; i < n; ++i) {
      std::uint64_t f = F.mul(a.at(i, col), inv);
      if (!f) continue;
      for (std::size_t j = 0; j < n; ++j) a.at(i, j) = F.sub(a.at(i, j), F.mul(f, a.at(col + 1, j)));
      for (std::size_t j = 0; j < n; ++j) a.at(j, col + 1) = F.add(a.at(j, col + 1), F.mul(f, a.at(j, i)));
    }
  }
  // recurrence on leading principal minors of (xI - H)
  std::vector<std::vector<std::uint64_t>> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    // p_k = (x - H[k-1][k-1]) p_{k-1} - sum_{i<k-1} H[i][k-1] (prod subdiag) p_i
    std::vector<std::uint64_t> cur(k + 1, 0);
    for (std::size_t t = 0; t < p[k - 1].size(); ++t) {
      cur[t + 1] = F.add(cur[t + 1], p[k - 1][t]);
      cur[t] = F.sub(cur[t], F.mul(a.at(k - 1, k - 1), p[k - 1][t]));
    }
    std::uint64_t prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = F.mul(prod, a.at(i + 1, i));
      if (!prod) break;
      std::uint64_t coef = F.mul(prod, a.at(i, k - 1));
      if (!coef) continue;
      for (std::size_t t = 0; t < p[i].size(); ++t) cur[t] = F.sub(cur[t], F.mul(coef, p[i][t]));
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

/// All roots of a polynomial over F_p by direct scan (p is small for the
/// Dixon primes arising at store-cap scale).
inline std::vector<std::uint64_t> fp_roots(const Fp& F, const std::vector<std::uint64_t>& poly) {
  std::vector<std::uint64_t> roots;
  for (std::uint64_t x = 0; x < F.p; ++x) {
    std::uint64_t v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = F.add(F.mul(v, x), poly[i]);
    if (v == 0) roots.push_back(x);
  }
  return roots;
}

}  // namespace vanorder
