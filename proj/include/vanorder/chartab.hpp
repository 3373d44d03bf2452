#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <vector>

#include "vanorder/cyclotomic.hpp"
#include "vanorder/fpmat.hpp"
#include "vanorder/group.hpp"
#include "vanorder/intmath.hpp"

namespace vanorder {

/// lcm of all element orders.
inline std::uint64_t exponent(const PermutationGroup& G) {
  std::uint64_t m = 1;
  for (const ConjugacyClass& c : conjugacy_classes(G)) m = std::lcm(m, c.element_order);
  return m;
}

/// Class of g -> class of g^k (well-defined on classes).
inline std::vector<int> power_map(const PermutationGroup& G, std::uint64_t k) {
  const auto& classes = conjugacy_classes(G);
  const auto& cls_of = class_index_of(G);
  std::vector<int> pm(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::uint64_t e = k % classes[i].element_order;
    Permutation q = classes[i].representative.power(static_cast<long long>(e));
    pm[i] = cls_of[G.element_id(q)];
  }
  return pm;
}

/// Structure constants of the class sums: a(i,j,k) counts pairs
/// (x, y) in C_i x C_j with x*y = z for one fixed z in C_k.
struct ClassAlgebraData {
  std::size_t r = 0;
  std::vector<std::uint64_t> a;  // flat r^3

  std::uint64_t at(std::size_t i, std::size_t j, std::size_t k) const {
    return a[(i * r + j) * r + k];
  }
};

inline constexpr std::size_t kMaxTableClasses = 128;

inline ClassAlgebraData class_mult_coeffs(const PermutationGroup& G) {
  const auto& classes = conjugacy_classes(G);
  const auto& cls_of = class_index_of(G);
  std::size_t r = classes.size();
  if (r > kMaxTableClasses)
    throw capacity_error("class algebra needs r <= " + std::to_string(kMaxTableClasses) +
                         " conjugacy classes, got " + std::to_string(r));
  ClassAlgebraData alg;
  alg.r = r;
  alg.a.assign(r * r * r, 0);
  const auto& elems = G.elements();
  for (std::size_t k = 0; k < r; ++k) {
    std::uint32_t zid = G.element_id(classes[k].representative);
    for (std::uint32_t x = 0; x < elems.size(); ++x) {
      std::size_t i = static_cast<std::size_t>(cls_of[x]);
      std::uint32_t y = G.element_id(compose(elems[G.inverse_id(x)], elems[zid]));
      std::size_t j = static_cast<std::size_t>(cls_of[y]);
      ++alg.a[(i * r + j) * r + k];
    }
  }
  return alg;
}

/// Smallest prime p with p = 1 (mod exponent) and p > 2*sqrt(|G|).
inline std::uint64_t dixon_prime(const PermutationGroup& G) {
  std::uint64_t m = exponent(G);
  std::uint64_t n = G.order();
  for (std::uint64_t c = m + 1;; c += m) {
    if (c > 1'000'000'000ULL) throw internal_error("Dixon prime search exceeded 1e9");
    if (c * c <= 4 * n) continue;
    if (is_prime(c)) return c;
  }
}

/// Exact character table: rows are irreducibles (trivial character first, then
/// ascending by degree and value order), columns follow the canonical class
/// order. Values are cyclotomic integers over the exponent conductor.
struct CharacterTable {
  PermutationGroup group;
  std::vector<ConjugacyClass> classes;
  std::size_t r = 0;
  std::uint64_t group_exponent = 0;
  std::uint64_t modulus = 0;  // the Dixon prime used
  std::shared_ptr<const CyclotomicField> field;
  std::vector<std::uint64_t> degrees;              // per row
  std::vector<std::vector<Cyclotomic>> values;     // rows x classes
  std::map<std::uint64_t, std::vector<int>> power_maps;  // k | exponent

  const Cyclotomic& value(std::size_t row, std::size_t cls) const { return values[row][cls]; }
};

namespace detail {

/// An element of multiplicative order exactly m in F_p (requires m | p-1).
inline std::uint64_t root_of_unity(const Fp& F, std::uint64_t m) {
  if ((F.p - 1) % m != 0) throw internal_error("no m-th roots of unity mod p");
  std::vector<std::uint64_t> qs = prime_divisors(m);
  for (std::uint64_t a = 2; a < F.p; ++a) {
    std::uint64_t cand = F.pow(a, (F.p - 1) / m);
    if (cand == 1 && m > 1) continue;
    bool exact = true;
    for (std::uint64_t q : qs)
      if (F.pow(cand, m / q) == 1) {
        exact = false;
        break;
      }
    if (exact) return cand;
  }
  throw internal_error("failed to locate a primitive m-th root mod p");
}

}  // namespace detail

inline CharacterTable character_table(const PermutationGroup& G) {
  const auto& classes = conjugacy_classes(G);
  const auto& cls_of = class_index_of(G);
  std::size_t r = classes.size();
  std::uint64_t n = G.order();
  std::uint64_t m = exponent(G);
  std::uint64_t p = dixon_prime(G);
  Fp F{p};
  ClassAlgebraData alg = class_mult_coeffs(G);

  // class-sum matrices mod p: (M_i)[j][k] = a(i,j,k)
  std::vector<FpMat> M(r);
  for (std::size_t i = 1; i < r; ++i) {
    M[i] = FpMat(r, r);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) M[i].at(j, k) = alg.at(i, j, k) % p;
  }

  // simultaneous eigenspace splitting
  std::vector<FpMat> spaces;
  {
    FpMat full(r, r);
    for (std::size_t i = 0; i < r; ++i) full.at(i, i) = 1;
    spaces.push_back(std::move(full));
  }
  for (std::size_t i = 1; i < r; ++i) {
    bool all_split = true;
    std::vector<FpMat> next;
    for (FpMat& W : spaces) {
      if (W.cols == 1) {
        next.push_back(std::move(W));
        continue;
      }
      FpMat MW = fp_mul(F, M[i], W);
      FpMat A = fp_solve_in_basis(F, W, MW);
      std::vector<std::uint64_t> cp = fp_charpoly(F, A);
      std::size_t split_total = 0;
      for (std::uint64_t lam : fp_roots(F, cp)) {
        FpMat Ashift = A;
        for (std::size_t t = 0; t < A.rows; ++t)
          Ashift.at(t, t) = F.sub(Ashift.at(t, t), lam);
        FpMat K = fp_kernel(F, std::move(Ashift));
        if (K.cols == 0) continue;
        split_total += K.cols;
        FpMat sub = fp_mul(F, W, K);
        if (sub.cols > 1) all_split = false;
        next.push_back(std::move(sub));
      }
      if (split_total != W.cols)
        throw internal_error("class matrix failed to diagonalize over F_p");
    }
    spaces = std::move(next);
    if (all_split) break;
  }
  for (const FpMat& W : spaces)
    if (W.cols != 1)
      throw internal_error("eigenspace splitting incomplete after all class matrices");
  if (spaces.size() != r) throw internal_error("wrong number of central characters");

  // central character vectors, normalized so the identity coordinate is 1
  std::vector<std::vector<std::uint64_t>> omega(r, std::vector<std::uint64_t>(r));
  for (std::size_t t = 0; t < r; ++t) {
    if (spaces[t].at(0, 0) == 0)
      throw internal_error("central character vanishes on the identity class");
    std::uint64_t inv = F.inv(spaces[t].at(0, 0));
    for (std::size_t i = 0; i < r; ++i) omega[t][i] = F.mul(spaces[t].at(i, 0), inv);
  }

  // inverse-class map
  std::vector<std::size_t> inv_class(r);
  for (std::size_t i = 0; i < r; ++i)
    inv_class[i] =
        static_cast<std::size_t>(cls_of[G.element_id(classes[i].representative.inverse())]);

  // degrees
  std::vector<std::uint64_t> degrees(r);
  for (std::size_t t = 0; t < r; ++t) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < r; ++i)
      s = F.add(s, F.mul(F.mul(omega[t][i], omega[t][inv_class[i]]), F.inv(classes[i].size % p)));
    std::uint64_t d2 = F.mul(n % p, F.inv(s));
    std::uint64_t deg = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
      if (n % d != 0) continue;
      if (F.mul(d % p, d % p) == d2) {
        deg = d;
        break;
      }
    }
    if (deg == 0) throw internal_error("could not identify a character degree");
    degrees[t] = deg;
  }
  {
    std::uint64_t ssq = 0;
    for (std::uint64_t d : degrees) ssq += d * d;
    if (ssq != n) throw internal_error("degree squares do not sum to the group order");
  }

  // mod-p character values f[t][i] = deg * omega / |C_i|
  std::vector<std::vector<std::uint64_t>> f(r, std::vector<std::uint64_t>(r));
  for (std::size_t t = 0; t < r; ++t)
    for (std::size_t i = 0; i < r; ++i)
      f[t][i] = F.mul(F.mul(degrees[t] % p, omega[t][i]), F.inv(classes[i].size % p));

  // power cycles: class of rep_i^k for k = 0..order-1
  std::vector<std::vector<std::size_t>> cycle(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::uint64_t o = classes[i].element_order;
    cycle[i].reserve(o);
    Permutation q(G.degree());
    for (std::uint64_t k = 0; k < o; ++k) {
      cycle[i].push_back(static_cast<std::size_t>(cls_of[G.element_id(q)]));
      q = compose(q, classes[i].representative);
    }
  }

  // lift to exact cyclotomic values via the discrete Fourier sum over powers
  auto field = CyclotomicField::get(m);
  std::uint64_t w = detail::root_of_unity(F, m);
  std::uint64_t w_inv = F.inv(w);
  std::vector<std::vector<Cyclotomic>> values(r);
  for (std::size_t t = 0; t < r; ++t) {
    values[t].reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
      std::uint64_t o = classes[i].element_order;
      std::uint64_t inv_o = F.inv(o % p);
      std::uint64_t wo_inv = F.pow(w_inv, m / o);  // inverse o-th root
      std::vector<long long> coeffs(field->phi(), 0);
      std::uint64_t mult_sum = 0;
      for (std::uint64_t j = 0; j < o; ++j) {
        std::uint64_t acc = 0;
        for (std::uint64_t k = 0; k < o; ++k)
          acc = F.add(acc, F.mul(f[t][cycle[i][k]], F.pow(wo_inv, j * k % o)));
        std::uint64_t mult = F.mul(inv_o, acc);
        if (mult > degrees[t])
          throw internal_error("eigenvalue multiplicity exceeds the degree");
        mult_sum += mult;
        if (mult) {
          const auto& rep = field->zeta_rep((m / o) * j);
          for (std::size_t c = 0; c < coeffs.size(); ++c)
            coeffs[c] += static_cast<long long>(mult) * rep[c];
        }
      }
      if (mult_sum != degrees[t])
        throw internal_error("eigenvalue multiplicities do not sum to the degree");
      values[t].emplace_back(field, std::move(coeffs));
    }
  }

  // canonical row order: trivial character first, then (degree, value lex)
  std::vector<std::size_t> perm_rows(r);
  std::iota(perm_rows.begin(), perm_rows.end(), 0);
  std::sort(perm_rows.begin(), perm_rows.end(), [&](std::size_t a, std::size_t b) {
    if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
    for (std::size_t i = 0; i < r; ++i) {
      if (values[a][i] == values[b][i]) continue;
      return lex_less(values[a][i], values[b][i]);
    }
    return false;
  });
  auto is_trivial_row = [&](std::size_t t) {
    if (degrees[t] != 1) return false;
    for (std::size_t i = 0; i < r; ++i)
      if (!(values[t][i].is_integer() && values[t][i].as_integer() == 1)) return false;
    return true;
  };
  auto triv = std::find_if(perm_rows.begin(), perm_rows.end(), is_trivial_row);
  if (triv == perm_rows.end()) throw internal_error("trivial character row is missing");
  std::rotate(perm_rows.begin(), triv, triv + 1);

  CharacterTable T;
  T.group = G;
  T.classes = classes;
  T.r = r;
  T.group_exponent = m;
  T.modulus = p;
  T.field = field;
  for (std::size_t t : perm_rows) {
    T.degrees.push_back(degrees[t]);
    T.values.push_back(std::move(values[t]));
  }
  for (std::uint64_t k : divisors(m)) T.power_maps[k] = power_map(G, k);
  return T;
}

/// True iff the p-part of the row's degree equals the p-part of |G|.
inline bool is_p_defect_zero(const CharacterTable& T, std::size_t row, std::uint64_t p) {
  if (!is_prime(p)) throw input_error("is_p_defect_zero: p must be prime");
  return p_part(T.degrees[row], p) == p_part(T.group.order(), p);
}

/// Export format: header, one class line per class, one value line per row.
inline std::string render_character_table(const CharacterTable& T, const std::string& name) {
  std::string s = "group " + name + " order " + std::to_string(T.group.order()) + " classes " +
                  std::to_string(T.r) + "\n";
  for (std::size_t i = 0; i < T.r; ++i)
    s += "class " + std::to_string(i) + " order " + std::to_string(T.classes[i].element_order) +
         " size " + std::to_string(T.classes[i].size) + "\n";
  for (std::size_t t = 0; t < T.r; ++t) {
    for (std::size_t i = 0; i < T.r; ++i) {
      if (i) s += ' ';
      s += T.values[t][i].str();
    }
    s += '\n';
  }
  return s;
}

}  // namespace vanorder
