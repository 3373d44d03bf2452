#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vanorder/group.hpp"
#include "vanorder/intmath.hpp"

namespace vanorder {

enum class SeriesKind { derived, fitting, closure_chain };

/// A descending chain of subgroups (derived series, descending Fitting series,
/// or an iterated-normal-closure chain).
struct NormalSeriesReport {
  std::vector<Subgroup> terms;
  SeriesKind kind;
};

namespace detail {

/// Derived subgroup data of the subgroup generated by `gens` (the whole group
/// when gens = G.generators()).
inline Subgroup derived_of(const PermutationGroup& G, const std::vector<Permutation>& gens) {
  std::vector<Permutation> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      Permutation c =
          compose(compose(gens[i].inverse(), gens[j].inverse()), compose(gens[i], gens[j]));
      if (!c.is_identity()) seeds.push_back(std::move(c));
    }
  return normal_closure(G, std::move(seeds), gens);
}

inline const std::vector<SubgroupData>& derived_chain(const PermutationGroup& G) {
  GroupCore& core = G.core();
  if (core.derived_chain) return *core.derived_chain;
  G.elements();  // force capacity check before heavy work
  std::vector<SubgroupData> chain;
  Subgroup cur = whole_subgroup(G);
  chain.push_back({cur.gens, cur.elems});
  while (cur.order() > 1) {
    Subgroup d = derived_of(G, cur.gens.empty() ? std::vector<Permutation>{Permutation(G.degree())}
                                                : cur.gens);
    if (d.order() == cur.order()) break;  // perfect group reached
    chain.push_back({d.gens, d.elems});
    cur = std::move(d);
  }
  core.derived_chain = std::move(chain);
  return *core.derived_chain;
}

}  // namespace detail

inline Subgroup derived_subgroup(const PermutationGroup& G) {
  const auto& chain = detail::derived_chain(G);
  if (chain.size() > 1) return subgroup_from_data(G, chain[1]);
  return G.is_trivial() ? trivial_subgroup(G) : whole_subgroup(G);
}

/// Derived series G > G' > G'' > ... down to 1 (solvable) or to the perfect
/// term where it stabilizes. The series of the trivial group is [1].
inline NormalSeriesReport derived_series(const PermutationGroup& G) {
  NormalSeriesReport r{{}, SeriesKind::derived};
  for (const auto& d : detail::derived_chain(G)) r.terms.push_back(subgroup_from_data(G, d));
  return r;
}

inline bool is_solvable(const PermutationGroup& G) {
  detail::GroupCore& core = G.core();
  if (!core.solvable) core.solvable = detail::derived_chain(G).back().elems.size() == 1;
  return *core.solvable;
}

/// A Sylow p-subgroup, grown from a p-element by iterated normalizer steps.
inline Subgroup sylow_subgroup(const PermutationGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw input_error("sylow_subgroup: p must be prime");
  std::uint64_t target = p_part(G.order(), p);
  if (target == 1) return trivial_subgroup(G);
  const auto& elems = G.elements();
  std::uint32_t seed = 0;
  for (std::uint32_t i = 1; i < elems.size(); ++i) {
    if (element_order(elems[i]) % p == 0) {
      // retain the p-part of the element as the seed
      std::uint64_t o = element_order(elems[i]);
      std::uint64_t q = o / p_part(o, p);
      seed = G.element_id(elems[i].power(static_cast<long long>(q)));
      break;
    }
  }
  if (seed == 0) throw internal_error("Cauchy violation: no p-element found");
  Subgroup H = subgroup_from_gens(G, {elems[seed]});
  while (H.order() < target) {
    // normalizer of H by full scan
    bool extended = false;
    for (std::uint32_t i = 0; i < elems.size() && !extended; ++i) {
      if (H.contains_id(i)) continue;
      std::uint64_t o = element_order(elems[i]);
      if (p_part(o, p) != o) continue;  // want p-elements only
      bool normalizes = true;
      for (const Permutation& h : H.gens)
        if (!H.contains(compose(compose(elems[i].inverse(), h), elems[i]))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      std::vector<Permutation> gens = H.gens;
      gens.push_back(elems[i]);
      Subgroup K = subgroup_from_gens(G, gens);
      if (p_part(K.order(), p) == K.order()) {
        H = std::move(K);
        extended = true;
      }
    }
    if (!extended) throw internal_error("Sylow growth stalled below the full p-part");
  }
  return H;
}

inline bool is_cyclic(const PermutationGroup& G) {
  for (const Permutation& e : G.elements())
    if (element_order(e) == G.order()) return true;
  return false;
}

inline bool is_nilpotent(const PermutationGroup& G) {
  detail::GroupCore& core = G.core();
  if (core.nilpotent) return *core.nilpotent;
  bool nil = true;
  if (!G.is_abelian()) {
    for (std::uint64_t p : prime_divisors(G.order())) {
      Subgroup P = sylow_subgroup(G, p);
      for (const Permutation& g : G.generators()) {
        for (const Permutation& h : P.gens)
          if (!P.contains(compose(compose(g.inverse(), h), g))) {
            nil = false;
            break;
          }
        if (!nil) break;
      }
      if (!nil) break;
    }
  }
  core.nilpotent = nil;
  return nil;
}

/// All normal subgroups, ascending by (order, element set). Every normal
/// subgroup is a union of conjugacy classes, so the lattice is generated by
/// normal closures of single class representatives under join.
inline std::vector<Subgroup> normal_subgroups(const PermutationGroup& G) {
  detail::GroupCore& core = G.core();
  if (!core.normals) {
    const auto& classes = conjugacy_classes(G);
    std::vector<std::vector<std::uint32_t>> found;
    auto add_unique = [&](std::vector<std::uint32_t> e) -> bool {
      for (const auto& f : found)
        if (f == e) return false;
      found.push_back(std::move(e));
      return true;
    };
    add_unique({0});
    for (const ConjugacyClass& c : classes) {
      Subgroup n = normal_closure(G, {c.representative}, G.generators());
      add_unique(n.elems);
    }
    // close under pairwise join
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        std::vector<Permutation> gens = detail::reduce_generators(G, found[i]);
        std::vector<Permutation> gj = detail::reduce_generators(G, found[j]);
        gens.insert(gens.end(), gj.begin(), gj.end());
        add_unique(detail::closure_ids(G, gens));
      }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a < b;
              });
    std::vector<detail::SubgroupData> out;
    for (auto& e : found) out.push_back({detail::reduce_generators(G, e), std::move(e)});
    core.normals = std::move(out);
  }
  std::vector<Subgroup> result;
  for (const auto& d : *core.normals) result.push_back(subgroup_from_data(G, d));
  return result;
}

inline bool is_normal(const PermutationGroup& G, const Subgroup& H) {
  for (const Permutation& g : G.generators())
    for (const Permutation& h : H.gens)
      if (!H.contains(compose(compose(g.inverse(), h), g))) return false;
  return true;
}

/// O_p(G): the largest normal p-subgroup.
inline Subgroup o_p(const PermutationGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw input_error("o_p: p must be prime");
  Subgroup best = trivial_subgroup(G);
  for (const Subgroup& n : normal_subgroups(G))
    if (p_part(n.order(), p) == n.order() && n.order() > best.order()) best = n;
  return best;
}

/// O^p(G): the smallest normal subgroup with p-group quotient.
inline Subgroup o_upper_p(const PermutationGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw input_error("o_upper_p: p must be prime");
  for (const Subgroup& n : normal_subgroups(G)) {
    std::uint64_t q = G.order() / n.order();
    if (p_part(q, p) == q) return n;  // ascending scan: first hit is smallest
  }
  throw internal_error("normal subgroup scan missed the whole group");
}

/// O^{p'}(G): the smallest normal subgroup with p'-group quotient.
inline Subgroup o_upper_p_prime(const PermutationGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw input_error("o_upper_p_prime: p must be prime");
  for (const Subgroup& n : normal_subgroups(G)) {
    std::uint64_t q = G.order() / n.order();
    if (q % p != 0) return n;
  }
  throw internal_error("normal subgroup scan missed the whole group");
}

/// O^{pp'}(G) = O^{p'}(O^p(G)), the inner operator applied to the subgroup
/// viewed as a group in its own right.
inline Subgroup o_pp_prime(const PermutationGroup& G, std::uint64_t p) {
  Subgroup n = o_upper_p(G, p);
  if (n.is_trivial()) return n;
  PermutationGroup ng = subgroup_as_group(n);
  Subgroup r = o_upper_p_prime(ng, p);
  return subgroup_in(G, ng, r);
}

/// O^{pp'pp'}(G) = O^{pp'}(O^{pp'}(G)).
inline Subgroup o_pp_prime_pp_prime(const PermutationGroup& G, std::uint64_t p) {
  Subgroup n = o_pp_prime(G, p);
  if (n.is_trivial()) return n;
  PermutationGroup ng = subgroup_as_group(n);
  Subgroup r = o_pp_prime(ng, p);
  return subgroup_in(G, ng, r);
}

/// Iterated-normal-closure chain G >= N1 >= N2 >= ... with
/// N_{i+1} = normal closure of H in N_i; H is subnormal iff it terminates at H.
inline NormalSeriesReport subnormal_chain(const PermutationGroup& G, const Subgroup& H) {
  NormalSeriesReport r{{whole_subgroup(G)}, SeriesKind::closure_chain};
  while (true) {
    const Subgroup& cur = r.terms.back();
    if (cur.order() == H.order()) break;
    Subgroup next = normal_closure(G, H.gens, cur.gens);
    if (next.order() == cur.order()) break;  // stalled above H
    r.terms.push_back(std::move(next));
  }
  return r;
}

inline bool is_subnormal(const PermutationGroup& G, const Subgroup& H) {
  return subnormal_chain(G, H).terms.back().order() == H.order();
}

/// The permutation action of G on the right cosets of a normal subgroup N.
/// The action is regular for the quotient group, so cosets biject with
/// quotient elements; point 0 is the coset of the identity.
struct Quotient {
  PermutationGroup group;
  PermutationGroup parent;
  std::vector<std::uint32_t> coset_of;   // parent element id -> coset point
  std::vector<std::uint32_t> coset_rep;  // coset point -> least parent element id

  Permutation image(const Permutation& g) const {
    std::vector<int> img(coset_rep.size());
    for (std::size_t c = 0; c < coset_rep.size(); ++c)
      img[c] = static_cast<int>(coset_of[parent.element_id(compose(parent.element(coset_rep[c]), g))]);
    return Permutation(std::move(img));
  }

  Subgroup image_subgroup(const Subgroup& s) const {
    std::vector<Permutation> gens;
    for (const Permutation& g : s.gens) gens.push_back(image(g));
    return subgroup_from_gens(group, std::move(gens));
  }

  /// Parent element ids of the full preimage of a subgroup of the quotient.
  std::vector<std::uint32_t> preimage_ids(const Subgroup& sub_of_quotient) const {
    std::vector<char> pts(coset_rep.size(), 0);
    for (std::uint32_t id : sub_of_quotient.elems) pts[group.element(id)[0]] = 1;
    std::vector<std::uint32_t> out;
    for (std::uint32_t e = 0; e < coset_of.size(); ++e)
      if (pts[coset_of[e]]) out.push_back(e);
    return out;
  }

  Subgroup preimage_subgroup(const Subgroup& sub_of_quotient) const {
    return subgroup_from_elem_ids(parent, preimage_ids(sub_of_quotient));
  }
};

inline Quotient quotient_group(const PermutationGroup& G, const Subgroup& N) {
  if (!is_normal(G, N)) throw input_error("quotient_group: subgroup is not normal");
  const auto& elems = G.elements();
  std::uint32_t n = static_cast<std::uint32_t>(elems.size());
  std::uint32_t nc = static_cast<std::uint32_t>(G.order() / N.order());
  std::vector<std::uint32_t> coset_of(n, UINT32_MAX);
  std::vector<std::uint32_t> coset_rep;
  coset_rep.reserve(nc);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (coset_of[i] != UINT32_MAX) continue;
    std::uint32_t c = static_cast<std::uint32_t>(coset_rep.size());
    coset_rep.push_back(i);
    for (std::uint32_t nid : N.elems)
      coset_of[G.element_id(compose(G.element(nid), elems[i]))] = c;
  }
  if (coset_rep.size() != nc) throw internal_error("coset partition has the wrong size");
  auto act = [&](const Permutation& g) {
    std::vector<int> img(nc);
    for (std::uint32_t c = 0; c < nc; ++c)
      img[c] = static_cast<int>(coset_of[G.element_id(compose(elems[coset_rep[c]], g))]);
    return Permutation(std::move(img));
  };
  std::vector<Permutation> qgens;
  for (const Permutation& g : G.generators()) {
    Permutation q = act(g);
    if (!q.is_identity()) qgens.push_back(std::move(q));
  }
  if (qgens.empty()) qgens.push_back(Permutation(static_cast<int>(nc)));
  PermutationGroup Q(std::move(qgens), std::max<std::uint64_t>(G.store_cap(), nc));
  if (Q.order() != nc) throw internal_error("quotient action has the wrong order");
  return Quotient{std::move(Q), G, std::move(coset_of), std::move(coset_rep)};
}

/// Fitting subgroup F(G): join of O_p(G) over primes p dividing |G|.
inline Subgroup fitting_subgroup(const PermutationGroup& G) {
  Subgroup f = trivial_subgroup(G);
  for (std::uint64_t p : prime_divisors(G.order())) f = subgroup_join(f, o_p(G, p));
  return f;
}

/// Length of the ascending Fitting series (0 for the trivial group);
/// domain_error when the series stalls below G (non-solvable input).
inline int fitting_height(const PermutationGroup& G) {
  if (G.is_trivial()) return 0;
  int h = 0;
  Subgroup cur = trivial_subgroup(G);
  while (cur.order() < G.order()) {
    Subgroup next = trivial_subgroup(G);
    if (cur.is_trivial()) {
      next = fitting_subgroup(G);
    } else {
      Quotient q = quotient_group(G, cur);
      Subgroup fq = fitting_subgroup(q.group);
      next = q.preimage_subgroup(fq);
    }
    if (next.order() == cur.order())
      throw domain_error("Fitting series stalls: group is not solvable");
    cur = std::move(next);
    ++h;
  }
  return h;
}

/// Ascending Fitting series reported as a descending chain G = F_h > ... > 1.
inline NormalSeriesReport fitting_series(const PermutationGroup& G) {
  NormalSeriesReport r{{}, SeriesKind::fitting};
  std::vector<Subgroup> asc{trivial_subgroup(G)};
  while (asc.back().order() < G.order()) {
    Subgroup next = trivial_subgroup(G);
    if (asc.back().is_trivial()) {
      next = fitting_subgroup(G);
    } else {
      Quotient q = quotient_group(G, asc.back());
      next = q.preimage_subgroup(fitting_subgroup(q.group));
    }
    if (next.order() == asc.back().order())
      throw domain_error("Fitting series stalls: group is not solvable");
    asc.push_back(std::move(next));
  }
  for (auto it = asc.rbegin(); it != asc.rend(); ++it) r.terms.push_back(*it);
  return r;
}

}  // namespace vanorder
