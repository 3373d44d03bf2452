#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "vanorder/errors.hpp"
#include "vanorder/intmath.hpp"

namespace vanorder {

/// Shared data for Z[zeta_m]: the m-th cyclotomic polynomial and the power
/// basis representation of every zeta^e needed to reduce products. Values are
/// coordinate vectors over the basis {1, zeta, ..., zeta^(phi(m)-1)}, so the
/// zero test is exact.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(std::uint64_t m) {
    static std::map<std::uint64_t, std::shared_ptr<const CyclotomicField>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    auto f = std::shared_ptr<const CyclotomicField>(new CyclotomicField(m));
    cache.emplace(m, f);
    return f;
  }

  std::uint64_t conductor() const { return m_; }
  std::size_t phi() const { return phi_; }
  const std::vector<long long>& cyclotomic_poly() const { return cyclo_; }

  /// Coordinates of zeta^e (e taken mod m) in the power basis.
  const std::vector<long long>& zeta_rep(std::uint64_t e) const { return zeta_[e % m_]; }

 private:
  explicit CyclotomicField(std::uint64_t m) : m_(m) {
    if (m < 1) throw input_error("cyclotomic conductor must be positive");
    phi_ = static_cast<std::size_t>(euler_phi(m));
    cyclo_ = cyclotomic_polynomial(m);
    // zeta table: zeta^e for 0 <= e < max(m, 2*phi-1)
    std::size_t need = std::max<std::size_t>(m, 2 * phi_ - 1);
    zeta_.resize(need);
    for (std::size_t e = 0; e < phi_ && e < need; ++e) {
      zeta_[e].assign(phi_, 0);
      zeta_[e][e] = 1;
    }
    for (std::size_t e = phi_; e < need; ++e) {
      const std::vector<long long>& prev = zeta_[e - 1];
      std::vector<long long> cur(phi_, 0);
      long long top = prev[phi_ - 1];
      for (std::size_t i = phi_ - 1; i > 0; --i) cur[i] = prev[i - 1];
      cur[0] = 0;
      if (top != 0)
        for (std::size_t i = 0; i < phi_; ++i) cur[i] -= top * cyclo_[i];
      for (long long c : cur)
        if (c > (1LL << 40) || c < -(1LL << 40))
          throw internal_error("cyclotomic reduction table coefficients blew up");
      zeta_[e] = std::move(cur);
    }
    full_table_size_ = need;
  }

  /// Phi_m by exact division of x^m - 1 by the lower cyclotomic factors.
  static std::vector<long long> cyclotomic_polynomial(std::uint64_t m) {
    std::vector<long long> num(m + 1, 0);  // x^m - 1
    num[0] = -1;
    num[m] = 1;
    for (std::uint64_t d : divisors(m)) {
      if (d == m) continue;
      std::vector<long long> phi_d = cyclotomic_polynomial(d);
      num = exact_div(num, phi_d);
    }
    return num;
  }

  static std::vector<long long> exact_div(const std::vector<long long>& a,
                                          const std::vector<long long>& b) {
    std::vector<long long> rem = a;
    std::size_t db = b.size() - 1;
    if (rem.size() - 1 < db) throw internal_error("cyclotomic division underflow");
    std::vector<long long> q(rem.size() - db, 0);
    for (std::size_t i = rem.size(); i-- > db;) {
      long long c = rem[i];
      if (c == 0) continue;
      if (b[db] != 1) throw internal_error("cyclotomic divisor is not monic");
      q[i - db] = c;
      for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
    }
    for (long long c : rem)
      if (c != 0) throw internal_error("cyclotomic division left a remainder");
    return q;
  }

  std::uint64_t m_;
  std::size_t phi_;
  std::size_t full_table_size_;
  std::vector<long long> cyclo_;
  std::vector<std::vector<long long>> zeta_;
};

/// An element of Z[zeta_m] in the reduced power basis. Addition and
/// multiplication are exact; a value is zero iff all coordinates are zero.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(static_cast<long long>(0)) {}

  Cyclotomic(long long n) : field_(CyclotomicField::get(1)), c_(1, n) {}

  Cyclotomic(std::shared_ptr<const CyclotomicField> field, std::vector<long long> coeffs)
      : field_(std::move(field)), c_(std::move(coeffs)) {
    if (c_.size() != field_->phi()) throw internal_error("cyclotomic coefficient size mismatch");
  }

  static Cyclotomic zero(std::shared_ptr<const CyclotomicField> field) {
    std::vector<long long> c(field->phi(), 0);
    return Cyclotomic(std::move(field), std::move(c));
  }

  static Cyclotomic zeta_power(std::shared_ptr<const CyclotomicField> field, std::uint64_t e) {
    std::vector<long long> c = field->zeta_rep(e);
    return Cyclotomic(std::move(field), std::move(c));
  }

  const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
  std::uint64_t conductor() const { return field_->conductor(); }
  const std::vector<long long>& coeffs() const { return c_; }

  bool is_zero() const {
    for (long long x : c_)
      if (x != 0) return false;
    return true;
  }

  bool is_integer() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  long long as_integer() const {
    if (!is_integer()) throw domain_error("cyclotomic value is not rational");
    return c_[0];
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = align(a, b);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = align(a, b);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
  }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (long long& x : r.c_) x = -x;
    return r;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = align(a, b);
    std::size_t phi = x.c_.size();
    if (phi == 1) return Cyclotomic(x.field_, {x.c_[0] * y.c_[0]});
    std::vector<long long> conv(2 * phi - 1, 0);
    for (std::size_t i = 0; i < phi; ++i) {
      if (x.c_[i] == 0) continue;
      for (std::size_t j = 0; j < phi; ++j) conv[i + j] += x.c_[i] * y.c_[j];
    }
    std::vector<long long> out(conv.begin(), conv.begin() + phi);
    for (std::size_t e = phi; e < conv.size(); ++e) {
      if (conv[e] == 0) continue;
      const auto& rep = x.field_->zeta_rep(e);
      for (std::size_t i = 0; i < phi; ++i) out[i] += conv[e] * rep[i];
    }
    return Cyclotomic(x.field_, std::move(out));
  }

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return (a - b).is_zero(); }

  /// Galois map zeta -> zeta^k (k coprime to the conductor).
  Cyclotomic galois(std::uint64_t k) const {
    if (std::gcd(k, conductor()) != 1)
      throw input_error("galois exponent must be coprime to the conductor");
    std::vector<long long> out(c_.size(), 0);
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (c_[j] == 0) continue;
      const auto& rep = field_->zeta_rep(j * k % conductor());
      for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[j] * rep[i];
    }
    return Cyclotomic(field_, std::move(out));
  }

  /// Complex conjugate: zeta -> zeta^(m-1).
  Cyclotomic conj() const {
    if (conductor() == 1) return *this;
    return galois(conductor() - 1);
  }

  std::complex<double> to_complex() const {
    std::complex<double> z = 0;
    const double tau = 6.283185307179586476925287;
    for (std::size_t j = 0; j < c_.size(); ++j)
      if (c_[j] != 0)
        z += static_cast<double>(c_[j]) *
             std::exp(std::complex<double>(0, tau * static_cast<double>(j) /
                                                  static_cast<double>(conductor())));
    return z;
  }

  /// Bare integer when rational, otherwise "[c0,c1,...]@m".
  std::string str() const {
    if (is_integer()) return std::to_string(c_[0]);
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c_[i]);
    }
    s += "]@" + std::to_string(conductor());
    return s;
  }

  /// Total order for deterministic layouts: by coefficient vector, integers
  /// promoted to the richer field first when conductors differ.
  friend bool lex_less(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = align(a, b);
    return x.c_ < y.c_;
  }

 private:
  std::shared_ptr<const CyclotomicField> field_;
  std::vector<long long> c_;

  static std::pair<Cyclotomic, Cyclotomic> align(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.field_ == b.field_ || a.conductor() == b.conductor()) return {a, b};
    if (a.conductor() == 1) return {a.promote(b.field_), b};
    if (b.conductor() == 1) return {a, b.promote(a.field_)};
    throw internal_error("mixed cyclotomic conductors " + std::to_string(a.conductor()) + " and " +
                         std::to_string(b.conductor()));
  }

  Cyclotomic promote(const std::shared_ptr<const CyclotomicField>& f) const {
    std::vector<long long> c(f->phi(), 0);
    c[0] = c_[0];
    return Cyclotomic(f, std::move(c));
  }
};

}  // namespace vanorder
