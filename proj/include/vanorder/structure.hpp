#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vanorder/group.hpp"
#include "vanorder/intmath.hpp"
#include "vanorder/subgroup_ops.hpp"

namespace vanorder {

struct FrobeniusWitness {
  Subgroup kernel;
  Subgroup complement;
};

namespace detail {

/// Kernel-centralizer criterion: C_G(x) <= K for every nonidentity x in K.
/// Equivalently no element outside K commutes with a nonidentity element of K.
inline bool frobenius_kernel_criterion(const PermutationGroup& G, const Subgroup& K) {
  const auto& elems = G.elements();
  for (std::uint32_t g = 0; g < elems.size(); ++g) {
    if (K.contains_id(g)) continue;
    for (std::uint32_t k : K.elems) {
      if (k == 0) continue;
      if (compose(elems[g], elems[k]) == compose(elems[k], elems[g])) return false;
    }
  }
  return true;
}

/// Greedy complement search: grow a subgroup of order |G|/|K| meeting K
/// trivially. In a Frobenius group every element outside the kernel lies in a
/// unique complement conjugate, so growth from any such element succeeds.
inline std::optional<Subgroup> find_complement(const PermutationGroup& G, const Subgroup& K) {
  std::uint64_t n = G.order() / K.order();
  const auto& elems = G.elements();
  auto meets_k_trivially = [&](const std::vector<std::uint32_t>& ids) {
    for (std::uint32_t id : ids)
      if (id != 0 && K.contains_id(id)) return false;
    return true;
  };
  for (std::uint32_t start = 1; start < elems.size(); ++start) {
    if (K.contains_id(start)) continue;
    std::vector<Permutation> gens{elems[start]};
    auto ids = detail::closure_ids_bounded(G, gens, n);
    if (!ids || n % ids->size() != 0 || !meets_k_trivially(*ids)) continue;
    while (ids->size() < n) {
      bool extended = false;
      for (std::uint32_t y = 1; y < elems.size(); ++y) {
        if (K.contains_id(y) || std::binary_search(ids->begin(), ids->end(), y)) continue;
        std::vector<Permutation> tryg = gens;
        tryg.push_back(elems[y]);
        auto next = detail::closure_ids_bounded(G, tryg, n);
        if (!next || n % next->size() != 0 || !meets_k_trivially(*next)) continue;
        gens = std::move(tryg);
        ids = std::move(next);
        extended = true;
        break;
      }
      if (!extended) break;
    }
    if (ids->size() == n) return Subgroup{G, std::move(gens), std::move(*ids)};
  }
  return std::nullopt;
}

}  // namespace detail

/// Tests whether G is Frobenius with the given normal subgroup as kernel.
inline std::optional<FrobeniusWitness> frobenius_with_kernel(const PermutationGroup& G,
                                                             const Subgroup& K) {
  if (K.is_trivial() || K.is_whole()) return std::nullopt;
  if (std::gcd(K.order(), G.order() / K.order()) != 1) return std::nullopt;
  if (!detail::frobenius_kernel_criterion(G, K)) return std::nullopt;
  auto H = detail::find_complement(G, K);
  if (!H)
    throw internal_error("Frobenius kernel criterion held but no complement was found");
  return FrobeniusWitness{K, std::move(*H)};
}

/// Scans normal subgroups for a Frobenius kernel; returns the witness with the
/// smallest kernel if several qualify.
inline std::optional<FrobeniusWitness> is_frobenius(const PermutationGroup& G) {
  for (const Subgroup& K : normal_subgroups(G)) {  // ascending order
    if (K.is_trivial() || K.is_whole()) continue;
    auto w = frobenius_with_kernel(G, K);
    if (w) return w;
  }
  return std::nullopt;
}

struct TwoFrobeniusWitness {
  Subgroup lower;  // F
  Subgroup upper;  // L
};

/// 2-Frobenius: normal F < L < G with G/F Frobenius with kernel L/F and
/// L Frobenius with kernel F.
inline std::optional<TwoFrobeniusWitness> is_2frobenius(const PermutationGroup& G) {
  auto normals = normal_subgroups(G);
  for (const Subgroup& f : normals) {
    if (f.is_trivial() || f.is_whole()) continue;
    for (const Subgroup& l : normals) {
      if (l.order() <= f.order() || l.is_whole()) continue;
      if (!f.subset_of(l)) continue;
      PermutationGroup lg = subgroup_as_group(l);
      Subgroup f_in_l = subgroup_from_elem_ids(lg, [&] {
        std::vector<std::uint32_t> ids;
        for (std::uint32_t id : f.elems) ids.push_back(lg.element_id(G.element(id)));
        std::sort(ids.begin(), ids.end());
        return ids;
      }());
      if (!frobenius_with_kernel(lg, f_in_l)) continue;
      Quotient q = quotient_group(G, f);
      Subgroup l_img = q.image_subgroup(l);
      if (!frobenius_with_kernel(q.group, l_img)) continue;
      return TwoFrobeniusWitness{f, l};
    }
  }
  return std::nullopt;
}

struct NearlyTwoFrobeniusWitness {
  Subgroup f1;
  Subgroup f2;
  Subgroup f;  // F = F1 x F2, nilpotent
  Subgroup l;
};

/// Nearly 2-Frobenius: normal F1, F2 with F = F1 x F2 nilpotent, G/F Frobenius
/// with kernel L/F, G/F1 Frobenius with kernel L/F1, and G/F2 2-Frobenius.
/// The scan takes the definition literally, so F1 or F2 may be trivial when
/// the three quotient conditions hold verbatim.
inline std::optional<NearlyTwoFrobeniusWitness> is_nearly_2frobenius(const PermutationGroup& G) {
  auto normals = normal_subgroups(G);
  for (const Subgroup& f1 : normals) {
    if (f1.is_whole()) continue;
    std::optional<Quotient> q1;
    for (const Subgroup& f2 : normals) {
      if (f2.is_whole()) continue;
      if (subgroup_intersect(f1, f2).order() != 1) continue;
      Subgroup f = subgroup_join(f1, f2);
      if (f.is_whole()) continue;
      if (f.order() != f1.order() * f2.order())
        throw internal_error("join of normal subgroups with trivial intersection is their product");
      if (!is_nilpotent(subgroup_as_group(f))) continue;
      std::optional<Quotient> qf;
      std::optional<Quotient> q2;
      for (const Subgroup& l : normals) {
        if (l.order() <= f.order() || l.is_whole()) continue;
        if (!f.subset_of(l)) continue;
        if (!qf) qf = quotient_group(G, f);
        if (!frobenius_with_kernel(qf->group, qf->image_subgroup(l))) continue;
        if (!q1) q1 = quotient_group(G, f1);
        if (!frobenius_with_kernel(q1->group, q1->image_subgroup(l))) continue;
        if (!q2) q2 = quotient_group(G, f2);
        if (!is_2frobenius(q2->group)) continue;
        return NearlyTwoFrobeniusWitness{f1, f2, f, l};
      }
    }
  }
  return std::nullopt;
}

/// A normal subgroup of order |G| / |G|_p, when one exists. For p not dividing
/// |G| this is G itself.
inline std::optional<Subgroup> has_normal_p_complement(const PermutationGroup& G,
                                                       std::uint64_t p) {
  if (!is_prime(p)) throw input_error("has_normal_p_complement: p must be prime");
  std::uint64_t target = G.order() / p_part(G.order(), p);
  if (target == G.order()) return whole_subgroup(G);
  for (const Subgroup& n : normal_subgroups(G))
    if (n.order() == target) return n;
  return std::nullopt;
}

}  // namespace vanorder
