#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vanorder/errors.hpp"
#include "vanorder/perm.hpp"

namespace vanorder {

class PermutationGroup;

/// One conjugacy class of a group with an element store. The representative
/// is the lexicographically least member, which makes class data canonical
/// (independent of the generating set).
struct ConjugacyClass {
  Permutation representative;
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
  std::vector<std::uint32_t> member_ids;  // sorted element ids
};

namespace detail {

struct BsgsLevel {
  int base = -1;
  std::vector<Permutation> gens;
  std::vector<int> orbit;        // discovery order, orbit[0] == base
  std::vector<char> in_orbit;    // indexed by point
  std::vector<Permutation> trans;  // trans[pt] maps base to pt
};

/// Deterministic Schreier-Sims stabilizer chain: exact order and membership
/// without enumerating elements. levels_[i].gens holds the full nested strong
/// generating set of the i-th stabilizer (every strong generator fixing the
/// first i base points).
class Bsgs {
 public:
  void build(int degree, const std::vector<Permutation>& gens, std::uint64_t order_bound) {
    degree_ = degree;
    levels_.clear();
    for (const Permutation& g : gens)
      if (!g.is_identity()) insert_strong(g, 0);
    for (std::size_t i = levels_.size(); i-- > 0;) complete_level(i, 0);
    unsigned __int128 o = 1;
    for (const BsgsLevel& lv : levels_) {
      o *= static_cast<unsigned>(lv.orbit.size());
      if (o > order_bound)
        throw capacity_error("group order exceeds the hard safety bound");
    }
    order_ = static_cast<std::uint64_t>(o);
  }

  std::uint64_t order() const { return order_; }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    auto [res, lvl] = sift(0, p);
    return res.is_identity();
  }

 private:
  int degree_ = 0;
  std::uint64_t order_ = 1;
  std::vector<BsgsLevel> levels_;

  std::pair<Permutation, std::size_t> sift(std::size_t i, Permutation p) const {
    for (std::size_t j = i; j < levels_.size(); ++j) {
      const BsgsLevel& lv = levels_[j];
      int pt = p[lv.base];
      if (pt == lv.base) continue;
      if (!lv.in_orbit[pt]) return {std::move(p), j};
      p = compose(p, lv.trans[pt].inverse());
    }
    return {std::move(p), levels_.size()};
  }

  void append_level(const Permutation& mover) {
    BsgsLevel lv;
    for (int pt = 0; pt < degree_; ++pt)
      if (mover[pt] != pt) {
        lv.base = pt;
        break;
      }
    levels_.push_back(std::move(lv));
  }

  /// Adds g to every stabilizer set it belongs to, from `from` down the chain;
  /// extends the base first when g fixes all current base points.
  void insert_strong(const Permutation& g, std::size_t from) {
    std::size_t f = from;
    while (f < levels_.size() && g[levels_[f].base] == levels_[f].base) ++f;
    if (f == levels_.size()) append_level(g);
    for (std::size_t l = from; l <= f && l < levels_.size(); ++l) levels_[l].gens.push_back(g);
  }

  void rebuild_orbit(BsgsLevel& lv) {
    lv.orbit.assign(1, lv.base);
    lv.in_orbit.assign(degree_, 0);
    lv.trans.assign(degree_, Permutation());
    lv.in_orbit[lv.base] = 1;
    lv.trans[lv.base] = Permutation(degree_);
    for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
      int pt = lv.orbit[k];
      for (const Permutation& g : lv.gens) {
        int q = g[pt];
        if (!lv.in_orbit[q]) {
          lv.in_orbit[q] = 1;
          lv.trans[q] = compose(lv.trans[pt], g);
          lv.orbit.push_back(q);
        }
      }
    }
  }

  /// Verifies level i: every Schreier generator must sift to the identity
  /// through the deeper levels; nontrivial residues become strong generators
  /// and the affected levels are re-completed.
  void complete_level(std::size_t i, int depth) {
    if (depth > 10000) throw internal_error("stabilizer chain recursion overflow");
    rebuild_orbit(levels_[i]);
    for (std::size_t k = 0; k < levels_[i].orbit.size(); ++k) {
      int pt = levels_[i].orbit[k];
      for (std::size_t si = 0; si < levels_[i].gens.size(); ++si) {
        const BsgsLevel& lv = levels_[i];
        const Permutation& s = lv.gens[si];
        int q = s[pt];
        Permutation schreier = compose(compose(lv.trans[pt], s), lv.trans[q].inverse());
        if (schreier.is_identity()) continue;
        auto [res, j] = sift(i + 1, std::move(schreier));
        if (res.is_identity()) continue;
        insert_strong(res, i + 1);
        if (j >= levels_.size()) j = levels_.size() - 1;
        for (std::size_t l = j + 1; l-- > i + 1;) complete_level(l, depth + 1);
      }
    }
  }
};

/// Generators and sorted element ids of a subgroup, without the parent handle.
/// Used for caches inside GroupCore (a full Subgroup would create an ownership
/// cycle through the parent pointer).
struct SubgroupData {
  std::vector<Permutation> gens;
  std::vector<std::uint32_t> elems;
};

struct GroupCore {
  int degree = 0;
  std::vector<Permutation> gens;
  std::uint64_t store_cap = 0;
  std::uint64_t order = 0;
  Bsgs bsgs;
  bool bsgs_built = false;

  bool stored = false;
  std::vector<Permutation> elems;  // BFS order from identity; elems[0] = id
  std::unordered_map<Permutation, std::uint32_t, PermHash> index;
  std::vector<std::uint32_t> parent_of;  // elems[i] = elems[parent_of[i]] * gens[gen_of[i]]
  std::vector<int> gen_of;

  // lazy caches (single-threaded use per group)
  std::optional<std::vector<std::uint32_t>> inverse_ids;
  std::optional<std::vector<ConjugacyClass>> classes;
  std::vector<int> class_of;
  std::optional<std::vector<SubgroupData>> normals;
  std::optional<std::vector<SubgroupData>> derived_chain;
  std::optional<bool> solvable;
  std::optional<bool> nilpotent;

  void enumerate_store() {
    elems.clear();
    index.clear();
    parent_of.clear();
    gen_of.clear();
    Permutation id = Permutation(degree);
    elems.push_back(id);
    index.emplace(id, 0);
    parent_of.push_back(0);
    gen_of.push_back(-1);
    for (std::uint32_t i = 0; i < elems.size(); ++i) {
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        Permutation f = compose(elems[i], gens[gi]);
        if (index.emplace(f, static_cast<std::uint32_t>(elems.size())).second) {
          elems.push_back(std::move(f));
          parent_of.push_back(i);
          gen_of.push_back(static_cast<int>(gi));
        }
      }
    }
    stored = true;
  }
};

}  // namespace detail

/// A finitely generated permutation group. Cheap-to-copy handle over an
/// immutable shared core; the exact order is always available, and the full
/// element store is populated iff the order does not exceed the store cap.
class PermutationGroup {
 public:
  static constexpr std::uint64_t kDefaultStoreCap = 50'000;
  static constexpr std::uint64_t kOrderBound = 1'000'000'000'000'000ULL;

  /// Empty handle; every accessor requires a real group assigned first.
  PermutationGroup() = default;

  explicit PermutationGroup(std::vector<Permutation> generators,
                            std::uint64_t store_cap = kDefaultStoreCap)
      : core_(std::make_shared<detail::GroupCore>()) {
    if (generators.empty()) throw input_error("a group needs at least one generator");
    core_->degree = generators[0].degree();
    if (core_->degree < 1) throw input_error("group degree must be positive");
    for (const Permutation& g : generators)
      if (g.degree() != core_->degree)
        throw input_error("generators have mismatched degrees");
    core_->gens = std::move(generators);
    core_->store_cap = store_cap;
    core_->bsgs.build(core_->degree, core_->gens, kOrderBound);
    core_->bsgs_built = true;
    core_->order = core_->bsgs.order();
    if (core_->order <= store_cap) {
      core_->enumerate_store();
      if (core_->elems.size() != core_->order)
        throw internal_error("element enumeration disagrees with stabilizer chain order");
    }
  }

  /// Builds a group whose element set is already known (e.g. a subgroup viewed
  /// as a group in its own right). Skips the stabilizer chain.
  static PermutationGroup from_known_elements(std::vector<Permutation> generators,
                                              std::uint64_t known_order) {
    PermutationGroup g;
    g.core_ = std::make_shared<detail::GroupCore>();
    if (generators.empty()) throw input_error("a group needs at least one generator");
    g.core_->degree = generators[0].degree();
    g.core_->gens = std::move(generators);
    g.core_->store_cap = std::max<std::uint64_t>(known_order, 1);
    g.core_->enumerate_store();
    if (g.core_->elems.size() != known_order)
      throw internal_error("subgroup generator closure disagrees with recorded order");
    g.core_->order = known_order;
    return g;
  }

  int degree() const { return core_->degree; }
  std::uint64_t order() const { return core_->order; }
  bool is_trivial() const { return core_->order == 1; }
  std::uint64_t store_cap() const { return core_->store_cap; }
  const std::vector<Permutation>& generators() const { return core_->gens; }

  bool has_store() const { return core_->stored; }

  const std::vector<Permutation>& elements() const {
    require_store();
    return core_->elems;
  }

  const Permutation& element(std::uint32_t id) const {
    require_store();
    return core_->elems[id];
  }

  /// Id of a member element; input_error if the permutation is not a member.
  std::uint32_t element_id(const Permutation& p) const {
    require_store();
    auto it = core_->index.find(p);
    if (it == core_->index.end())
      throw input_error("permutation is not a member of the group");
    return it->second;
  }

  std::optional<std::uint32_t> find_element_id(const Permutation& p) const {
    require_store();
    auto it = core_->index.find(p);
    if (it == core_->index.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree()) return false;
    if (core_->stored) return core_->index.count(p) > 0;
    return core_->bsgs.contains(p);
  }

  std::uint32_t inverse_id(std::uint32_t id) const {
    require_store();
    if (!core_->inverse_ids) {
      std::vector<std::uint32_t> inv(core_->elems.size());
      for (std::uint32_t i = 0; i < core_->elems.size(); ++i)
        inv[i] = core_->index.at(core_->elems[i].inverse());
      core_->inverse_ids = std::move(inv);
    }
    return (*core_->inverse_ids)[id];
  }

  bool is_abelian() const {
    const auto& gs = core_->gens;
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i + 1; j < gs.size(); ++j)
        if (compose(gs[i], gs[j]) != compose(gs[j], gs[i])) return false;
    return true;
  }

  /// Word for an element as generator indices (empty word = identity).
  std::vector<int> element_word(std::uint32_t id) const {
    require_store();
    std::vector<int> w;
    while (id != 0) {
      w.push_back(core_->gen_of[id]);
      id = core_->parent_of[id];
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

  bool same_group(const PermutationGroup& other) const { return core_ == other.core_; }

  detail::GroupCore& core() const { return *core_; }

 private:
  std::shared_ptr<detail::GroupCore> core_;

  void require_store() const {
    if (!core_->stored)
      throw capacity_error("operation needs the element store; group order " +
                           std::to_string(core_->order) + " exceeds the cap of " +
                           std::to_string(core_->store_cap));
  }
};

inline PermutationGroup group_from_generators(std::vector<Permutation> gens,
                                              std::uint64_t cap = PermutationGroup::kDefaultStoreCap) {
  return PermutationGroup(std::move(gens), cap);
}

/// A subgroup of a parent group, held as a small generating set plus the
/// sorted ids of all its elements in the parent store.
struct Subgroup {
  PermutationGroup parent;
  std::vector<Permutation> gens;
  std::vector<std::uint32_t> elems;

  std::uint64_t order() const { return elems.size(); }
  bool is_trivial() const { return elems.size() == 1; }
  bool is_whole() const { return order() == parent.order(); }

  bool contains_id(std::uint32_t id) const {
    return std::binary_search(elems.begin(), elems.end(), id);
  }
  bool contains(const Permutation& p) const {
    auto id = parent.find_element_id(p);
    return id && contains_id(*id);
  }
  /// Set containment H <= K (same parent assumed).
  bool subset_of(const Subgroup& other) const {
    return std::includes(other.elems.begin(), other.elems.end(), elems.begin(), elems.end());
  }
};

namespace detail {

/// Sorted element ids of the subgroup generated by `gens` inside the parent
/// store. Aborts returning nullopt if the closure exceeds `bound`.
inline std::optional<std::vector<std::uint32_t>> closure_ids_bounded(
    const PermutationGroup& G, const std::vector<Permutation>& gens, std::uint64_t bound) {
  std::vector<std::uint32_t> work;
  std::vector<char> in(G.order(), 0);
  work.push_back(0);
  in[0] = 1;
  std::vector<std::uint32_t> gen_ids;
  for (const Permutation& g : gens) gen_ids.push_back(G.element_id(g));
  for (std::size_t k = 0; k < work.size(); ++k) {
    const Permutation& e = G.element(work[k]);
    for (std::uint32_t gid : gen_ids) {
      std::uint32_t f = G.element_id(compose(e, G.element(gid)));
      if (!in[f]) {
        if (work.size() + 1 > bound) return std::nullopt;
        in[f] = 1;
        work.push_back(f);
      }
    }
  }
  std::sort(work.begin(), work.end());
  return work;
}

inline std::vector<std::uint32_t> closure_ids(const PermutationGroup& G,
                                              const std::vector<Permutation>& gens) {
  auto r = closure_ids_bounded(G, gens, G.order());
  if (!r) throw internal_error("unbounded closure escaped the parent group");
  return *r;
}

/// Small generating set for a known element set (greedy sweep in id order).
inline std::vector<Permutation> reduce_generators(const PermutationGroup& G,
                                                  const std::vector<std::uint32_t>& elems) {
  std::vector<Permutation> gens;
  std::vector<std::uint32_t> cur{0};
  for (std::uint32_t id : elems) {
    if (std::binary_search(cur.begin(), cur.end(), id)) continue;
    gens.push_back(G.element(id));
    cur = closure_ids(G, gens);
    if (cur.size() == elems.size()) break;
  }
  return gens;
}

}  // namespace detail

inline Subgroup subgroup_from_elem_ids(const PermutationGroup& G,
                                       std::vector<std::uint32_t> sorted_elems) {
  if (sorted_elems.empty() || G.order() % sorted_elems.size() != 0)
    throw internal_error("subgroup violates Lagrange: " + std::to_string(sorted_elems.size()) +
                         " elements in a group of order " + std::to_string(G.order()));
  Subgroup s{G, detail::reduce_generators(G, sorted_elems), std::move(sorted_elems)};
  return s;
}

inline Subgroup subgroup_from_gens(const PermutationGroup& G, std::vector<Permutation> gens) {
  for (const Permutation& g : gens)
    if (!G.contains(g)) throw input_error("subgroup generator is not a member of the parent");
  auto elems = detail::closure_ids(G, gens);
  if (G.order() % elems.size() != 0)
    throw internal_error("subgroup closure violates Lagrange");
  return Subgroup{G, std::move(gens), std::move(elems)};
}

inline Subgroup trivial_subgroup(const PermutationGroup& G) {
  return Subgroup{G, {}, {0}};
}

inline Subgroup whole_subgroup(const PermutationGroup& G) {
  std::vector<std::uint32_t> all(G.order());
  for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
  return Subgroup{G, G.generators(), std::move(all)};
}

inline Subgroup subgroup_join(const Subgroup& a, const Subgroup& b) {
  std::vector<Permutation> gens = a.gens;
  gens.insert(gens.end(), b.gens.begin(), b.gens.end());
  auto elems = detail::closure_ids(a.parent, gens);
  return subgroup_from_elem_ids(a.parent, std::move(elems));
}

inline Subgroup subgroup_intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<std::uint32_t> common;
  std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(),
                        std::back_inserter(common));
  return subgroup_from_elem_ids(a.parent, std::move(common));
}

/// Normal closure of <seeds> under conjugation by `ambient_gens` (the ambient
/// subgroup must contain the seeds for the result to stay inside it).
inline Subgroup normal_closure(const PermutationGroup& G, std::vector<Permutation> seeds,
                               const std::vector<Permutation>& ambient_gens) {
  std::vector<Permutation> gens;
  for (Permutation& s : seeds)
    if (!s.is_identity()) gens.push_back(std::move(s));
  if (gens.empty()) return trivial_subgroup(G);
  auto elems = detail::closure_ids(G, gens);
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t ngen = gens.size();
    for (std::size_t i = 0; i < ngen; ++i) {
      for (const Permutation& k : ambient_gens) {
        Permutation c = compose(compose(k.inverse(), gens[i]), k);
        std::uint32_t cid = G.element_id(c);
        if (!std::binary_search(elems.begin(), elems.end(), cid)) {
          gens.push_back(std::move(c));
          elems = detail::closure_ids(G, gens);
          grew = true;
        }
      }
    }
  }
  return subgroup_from_elem_ids(G, std::move(elems));
}

/// The subgroup viewed as a group in its own right (same degree, fresh store).
inline PermutationGroup subgroup_as_group(const Subgroup& s) {
  std::vector<Permutation> gens = s.gens;
  if (gens.empty()) gens.push_back(Permutation(s.parent.degree()));
  return PermutationGroup::from_known_elements(std::move(gens), s.order());
}

/// Re-expresses a subgroup of `source` (same degree, e.g. one computed inside
/// subgroup_as_group(..)) as a subgroup of `target`; every element must be a
/// member of the target store.
inline Subgroup subgroup_in(const PermutationGroup& target, const PermutationGroup& source,
                            const Subgroup& sub_of_source) {
  std::vector<std::uint32_t> ids;
  ids.reserve(sub_of_source.elems.size());
  for (std::uint32_t id : sub_of_source.elems) ids.push_back(target.element_id(source.element(id)));
  std::sort(ids.begin(), ids.end());
  return Subgroup{target, sub_of_source.gens, std::move(ids)};
}

inline Subgroup subgroup_from_data(const PermutationGroup& G, const detail::SubgroupData& d) {
  return Subgroup{G, d.gens, d.elems};
}

/// Conjugacy classes in canonical order: ascending (element order, class size,
/// lexicographically least member); the identity class is first.
inline const std::vector<ConjugacyClass>& conjugacy_classes(const PermutationGroup& G) {
  detail::GroupCore& core = G.core();
  if (core.classes) return *core.classes;
  const auto& elems = G.elements();  // capacity_error when no store
  std::uint32_t n = static_cast<std::uint32_t>(elems.size());
  std::vector<int> cls(n, -1);
  std::vector<Permutation> gen_invs;
  for (const Permutation& g : core.gens) gen_invs.push_back(g.inverse());
  std::vector<std::vector<std::uint32_t>> raw;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (cls[i] != -1) continue;
    int c = static_cast<int>(raw.size());
    std::vector<std::uint32_t> members{i};
    cls[i] = c;
    for (std::size_t k = 0; k < members.size(); ++k) {
      const Permutation& x = elems[members[k]];
      for (std::size_t gi = 0; gi < core.gens.size(); ++gi) {
        std::uint32_t y = G.element_id(compose(compose(gen_invs[gi], x), core.gens[gi]));
        if (cls[y] == -1) {
          cls[y] = c;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    raw.push_back(std::move(members));
  }
  std::vector<ConjugacyClass> classes;
  classes.reserve(raw.size());
  for (auto& members : raw) {
    ConjugacyClass cc;
    cc.size = members.size();
    const Permutation* least = &elems[members[0]];
    for (std::uint32_t id : members)
      if (elems[id] < *least) least = &elems[id];
    cc.representative = *least;
    cc.element_order = element_order(cc.representative);
    cc.member_ids = std::move(members);
    classes.push_back(std::move(cc));
  }
  std::sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    if (a.size != b.size) return a.size < b.size;
    return a.representative < b.representative;
  });
  std::uint64_t covered = 0;
  for (const ConjugacyClass& c : classes) covered += c.size;
  if (covered != G.order() || classes[0].size != 1)
    throw internal_error("class equation violated");
  core.class_of.assign(n, -1);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::uint32_t id : classes[c].member_ids) core.class_of[id] = static_cast<int>(c);
  core.classes = std::move(classes);
  return *core.classes;
}

/// Element id -> canonical class index.
inline const std::vector<int>& class_index_of(const PermutationGroup& G) {
  conjugacy_classes(G);
  return G.core().class_of;
}

inline Subgroup centralizer(const PermutationGroup& G, const Permutation& g) {
  if (!G.contains(g)) throw input_error("centralizer: element is not a member");
  std::vector<std::uint32_t> ids;
  const auto& elems = G.elements();
  for (std::uint32_t i = 0; i < elems.size(); ++i)
    if (compose(elems[i], g) == compose(g, elems[i])) ids.push_back(i);
  return subgroup_from_elem_ids(G, std::move(ids));
}

inline Subgroup center(const PermutationGroup& G) {
  std::vector<std::uint32_t> ids;
  const auto& elems = G.elements();
  for (std::uint32_t i = 0; i < elems.size(); ++i) {
    bool central = true;
    for (const Permutation& g : G.generators())
      if (compose(elems[i], g) != compose(g, elems[i])) {
        central = false;
        break;
      }
    if (central) ids.push_back(i);
  }
  return subgroup_from_elem_ids(G, std::move(ids));
}

}  // namespace vanorder
