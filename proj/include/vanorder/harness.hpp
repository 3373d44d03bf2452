#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "vanorder/chartab.hpp"
#include "vanorder/corpus.hpp"
#include "vanorder/structure.hpp"
#include "vanorder/subgroup_ops.hpp"
#include "vanorder/textio.hpp"
#include "vanorder/vanish.hpp"
#include "vanorder/version.hpp"

namespace vanorder {

using ordered_json = nlohmann::ordered_json;

enum class Verdict { pass, vacuous, counterexample, skipped_capacity };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::vacuous: return "vacuous";
    case Verdict::counterexample: return "counterexample";
    case Verdict::skipped_capacity: return "skipped-capacity";
  }
  return "?";
}

struct CheckResult {
  std::string check_id;
  std::optional<std::uint64_t> p;
  Verdict verdict = Verdict::pass;
  bool documented_discrepancy = false;
  std::string note;
  ordered_json witness = nullptr;

  CheckResult(std::string id, std::optional<std::uint64_t> prime)
      : check_id(std::move(id)), p(prime) {}
};

/// Everything the checks need about one group, with detector results memoized
/// (several theorems consult the same detectors).
struct GroupAnalysis {
  std::string name;
  PermutationGroup group;
  CharacterTable table;
  VanishingProfile profile;
  PrimeGraph graph;
  GraphComponents comps;
  bool abelian = false;
  bool solvable = false;
  bool nilpotent = false;

  std::optional<std::optional<FrobeniusWitness>> frob_;
  std::optional<std::optional<TwoFrobeniusWitness>> twof_;
  std::optional<std::optional<NearlyTwoFrobeniusWitness>> n2f_;

  const std::optional<FrobeniusWitness>& frobenius() {
    if (!frob_) frob_ = is_frobenius(group);
    return *frob_;
  }
  const std::optional<TwoFrobeniusWitness>& two_frobenius() {
    if (!twof_) twof_ = is_2frobenius(group);
    return *twof_;
  }
  const std::optional<NearlyTwoFrobeniusWitness>& nearly_two_frobenius() {
    if (!n2f_) n2f_ = is_nearly_2frobenius(group);
    return *n2f_;
  }
};

namespace detail {

inline ordered_json set_json(const std::vector<std::uint64_t>& v) {
  ordered_json a = ordered_json::array();
  for (std::uint64_t x : v) a.push_back(x);
  return a;
}

inline ordered_json subgroup_json(const PermutationGroup& G, const Subgroup& s) {
  ordered_json j;
  j["order"] = s.order();
  ordered_json gens = ordered_json::array();
  for (const Permutation& g : s.gens)
    gens.push_back(format_word(G.element_word(G.element_id(g))));
  j["generator_words"] = gens;
  return j;
}

/// Derived subgroup of a subgroup, re-expressed inside the parent group.
inline Subgroup derived_in_parent(const PermutationGroup& G, const Subgroup& s) {
  PermutationGroup sg = subgroup_as_group(s);
  Subgroup d = derived_subgroup(sg);
  return subgroup_in(G, sg, d);
}

/// Shared case of the thm_D and thm_1_4 checks: G/Z(G) is Frobenius with a
/// complement of p-power order and Z(G) = O_p(G). When `fixed_p` is set the
/// prime is prescribed, otherwise any prime works.
inline std::optional<std::uint64_t> central_frobenius_case(GroupAnalysis& ctx,
                                                           std::optional<std::uint64_t> fixed_p) {
  const PermutationGroup& G = ctx.group;
  Subgroup Z = center(G);
  if (Z.order() == G.order()) return std::nullopt;
  std::optional<std::uint64_t> comp_order;
  if (Z.is_trivial()) {
    const auto& w = ctx.frobenius();
    if (w) comp_order = w->complement.order();
  } else {
    Quotient q = quotient_group(G, Z);
    auto w = is_frobenius(q.group);
    if (w) comp_order = w->complement.order();
  }
  if (!comp_order) return std::nullopt;
  auto base = prime_power_base(*comp_order);
  if (!base) return std::nullopt;
  std::uint64_t p = *base;
  if (fixed_p && p != *fixed_p) return std::nullopt;
  Subgroup Op = o_p(G, p);
  if (Op.elems != Z.elems) return std::nullopt;
  return p;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Individual theorem checks. Each is a pure function of the analysis data and
// never throws on a failed hypothesis: "vacuous" is a first-class verdict.
// ---------------------------------------------------------------------------

/// Burnside: a nonabelian group has a nonempty vanishing set.
inline CheckResult check_burnside(GroupAnalysis& ctx) {
  CheckResult r{"burnside", std::nullopt};
  if (ctx.abelian) {
    r.verdict = Verdict::vacuous;
    r.note = "abelian group: no nonlinear character";
    return r;
  }
  if (!ctx.profile.vo.empty()) {
    r.verdict = Verdict::pass;
  } else {
    r.verdict = Verdict::counterexample;
    r.note = "nonabelian group with empty Van(G)";
    r.witness = ordered_json{{"degrees", ctx.table.degrees}};
  }
  return r;
}

/// If Vo_p'(G) is empty then O^{pp'}(G) = 1.
inline CheckResult check_thm_1_2(GroupAnalysis& ctx, std::uint64_t p) {
  CheckResult r{"thm_1_2", p};
  if (ctx.group.order() % p != 0) {
    r.verdict = Verdict::vacuous;
    r.note = "p does not divide |G|";
    return r;
  }
  if (!vo_p_prime(ctx.profile, p).empty()) {
    r.verdict = Verdict::vacuous;
    r.note = "hypothesis fails: Vo_p'(G) is nonempty";
    return r;
  }
  Subgroup R = o_pp_prime(ctx.group, p);
  if (R.is_trivial()) {
    r.verdict = Verdict::pass;
  } else {
    r.verdict = Verdict::counterexample;
    r.note = "O^{pp'}(G) is nontrivial";
    r.witness = detail::subgroup_json(ctx.group, R);
  }
  return r;
}

/// |Vo_p'(G)| = 1 forces solvability; under case (a) (the single order has two
/// prime divisors) or case (b) (it is q^n and Q' is subnormal) additionally
/// O^{pp'pp'}(G) = 1.
inline CheckResult check_thm_A(GroupAnalysis& ctx, std::uint64_t p) {
  CheckResult r{"thm_A", p};
  std::vector<std::uint64_t> v = vo_p_prime(ctx.profile, p);
  if (v.size() != 1) {
    r.verdict = Verdict::vacuous;
    r.note = "hypothesis fails: |Vo_p'(G)| = " + std::to_string(v.size());
    return r;
  }
  if (!ctx.solvable) {
    r.verdict = Verdict::counterexample;
    r.note = "|Vo_p'(G)| = 1 but G is not solvable";
    r.witness = ordered_json{{"vo", detail::set_json(ctx.profile.vo)}};
    return r;
  }
  std::uint64_t b = v[0];
  std::vector<std::uint64_t> divs = prime_divisors(b);
  bool case_a = divs.size() >= 2;
  bool case_b = false;
  if (divs.size() == 1) {
    Subgroup Q = sylow_subgroup(ctx.group, divs[0]);
    Subgroup Qd = detail::derived_in_parent(ctx.group, Q);
    case_b = is_subnormal(ctx.group, Qd);
  }
  if (!case_a && !case_b) {
    r.verdict = Verdict::pass;
    r.note = "solvable; residual clause not applicable (Vo_p' = {q^n} with Q' not subnormal)";
    return r;
  }
  Subgroup R = o_pp_prime_pp_prime(ctx.group, p);
  if (R.is_trivial()) {
    r.verdict = Verdict::pass;
    r.note = case_a ? "case (a)" : "case (b)";
  } else {
    r.verdict = Verdict::counterexample;
    r.note = "O^{pp'pp'}(G) is nontrivial";
    r.witness = detail::subgroup_json(ctx.group, R);
  }
  return r;
}

/// For solvable G with |Vo_p(G)| = 1: P' is subnormal and P/O_p(G) is cyclic.
inline CheckResult check_thm_B(GroupAnalysis& ctx, std::uint64_t p) {
  CheckResult r{"thm_B", p};
  if (!ctx.solvable) {
    r.verdict = Verdict::vacuous;
    r.note = "requires a solvable group";
    return r;
  }
  if (ctx.group.order() % p != 0) {
    r.verdict = Verdict::vacuous;
    r.note = "p does not divide |G|";
    return r;
  }
  std::vector<std::uint64_t> v = vo_p(ctx.profile, p);
  if (v.size() != 1) {
    r.verdict = Verdict::vacuous;
    r.note = "hypothesis fails: |Vo_p(G)| = " + std::to_string(v.size());
    return r;
  }
  Subgroup P = sylow_subgroup(ctx.group, p);
  Subgroup Pd = detail::derived_in_parent(ctx.group, P);
  bool subnormal = is_subnormal(ctx.group, Pd);
  Subgroup Op = o_p(ctx.group, p);
  PermutationGroup Pg = subgroup_as_group(P);
  Subgroup Op_in_P = subgroup_in(Pg, ctx.group, Op);
  Quotient q = quotient_group(Pg, Op_in_P);
  bool cyclic = is_cyclic(q.group);
  if (subnormal && cyclic) {
    r.verdict = Verdict::pass;
  } else {
    r.verdict = Verdict::counterexample;
    r.note = std::string(subnormal ? "" : "P' is not subnormal; ") +
             (cyclic ? "" : "P/O_p(G) is not cyclic");
    r.witness = ordered_json{{"sylow_derived", detail::subgroup_json(ctx.group, Pd)},
                             {"o_p_order", Op.order()}};
  }
  return r;
}

/// For p > 7: property (*) forces solvability and O^{pp'pp'}(G) = 1. A
/// counterexample where p divides no vanishing order is the documented
/// degenerate-hypothesis discrepancy (see README) and is quarantined.
inline CheckResult check_thm_C(GroupAnalysis& ctx, std::uint64_t p) {
  CheckResult r{"thm_C", p};
  if (p <= 7) {
    r.verdict = Verdict::vacuous;
    r.note = "requires p > 7";
    return r;
  }
  StarResult star = property_star(ctx.profile, p);
  if (!star.holds) {
    r.verdict = Verdict::vacuous;
    r.note = "property (*) fails: gcd(" + std::to_string(star.witness->first) + "," +
             std::to_string(star.witness->second) + ") = " + std::to_string(star.witness_gcd);
    return r;
  }
  if (!ctx.solvable) {
    r.verdict = Verdict::counterexample;
    r.documented_discrepancy = vo_p(ctx.profile, p).empty();
    r.note = r.documented_discrepancy
                 ? "(*) holds degenerately (p divides no vanishing order) on a non-solvable "
                   "group; documented discrepancy, quarantined"
                 : "(*) holds but G is not solvable";
    r.witness = ordered_json{{"vo", detail::set_json(ctx.profile.vo)}};
    return r;
  }
  Subgroup R = o_pp_prime_pp_prime(ctx.group, p);
  if (R.is_trivial()) {
    r.verdict = Verdict::pass;
  } else {
    r.verdict = Verdict::counterexample;
    r.note = "O^{pp'pp'}(G) is nontrivial";
    r.witness = detail::subgroup_json(ctx.group, R);
  }
  return r;
}

/// Solvable nonabelian groups whose characters vanish only on prime-power
/// order elements fall into one of the four structural cases.
inline CheckResult check_thm_D(GroupAnalysis& ctx) {
  CheckResult r{"thm_D", std::nullopt};
  if (!ctx.solvable || ctx.abelian) {
    r.verdict = Verdict::vacuous;
    r.note = "requires a solvable nonabelian group";
    return r;
  }
  for (std::uint64_t a : ctx.profile.vo)
    if (!prime_power_base(a)) {
      r.verdict = Verdict::vacuous;
      r.note = "hypothesis fails: " + std::to_string(a) + " in Vo(G) is not a prime power";
      return r;
    }
  std::vector<std::uint64_t> pis = prime_divisors(ctx.group.order());
  // (i) p-group
  if (pis.size() == 1) {
    r.verdict = Verdict::pass;
    r.note = "case (i): p-group";
    return r;
  }
  // (ii) central Frobenius quotient
  if (auto p = detail::central_frobenius_case(ctx, std::nullopt)) {
    r.verdict = Verdict::pass;
    r.note = "case (ii) with p = " + std::to_string(*p);
    return r;
  }
  // (iii) Frobenius with p-power complement and q-power kernel
  if (const auto& w = ctx.frobenius()) {
    auto pk = prime_power_base(w->kernel.order());
    auto pc = prime_power_base(w->complement.order());
    if (pk && pc) {
      r.verdict = Verdict::pass;
      r.note = "case (iii): Frobenius, kernel " + std::to_string(w->kernel.order()) +
               ", complement " + std::to_string(w->complement.order());
      return r;
    }
  }
  // (iv) nearly 2-Frobenius with |pi(G)| = 2
  if (pis.size() == 2 && ctx.nearly_two_frobenius()) {
    const auto& w = *ctx.nearly_two_frobenius();
    r.verdict = Verdict::pass;
    r.note = "case (iv): nearly 2-Frobenius";
    r.witness = ordered_json{{"f1_order", w.f1.order()},
                             {"f2_order", w.f2.order()},
                             {"l_order", w.l.order()}};
    return r;
  }
  r.verdict = Verdict::counterexample;
  r.note = "vanishing orders are prime powers but no structural case applies";
  r.witness = ordered_json{{"vo", detail::set_json(ctx.profile.vo)}};
  return r;
}

/// If Vo(G) is nonempty and every member is a power of one prime p, then G is
/// a p-group or G/Z(G) is Frobenius with p-power complement and Z = O_p(G).
inline CheckResult check_thm_1_4(GroupAnalysis& ctx) {
  CheckResult r{"thm_1_4", std::nullopt};
  if (ctx.profile.vo.empty()) {
    r.verdict = Verdict::vacuous;
    r.note = "Vo(G) is empty";
    return r;
  }
  auto base = prime_power_base(ctx.profile.vo[0]);
  for (std::uint64_t a : ctx.profile.vo) {
    auto b = prime_power_base(a);
    if (!b || (base && *b != *base)) base = std::nullopt;
    if (!base) break;
  }
  if (!base) {
    r.verdict = Verdict::vacuous;
    r.note = "vanishing orders are not all powers of one prime";
    return r;
  }
  std::uint64_t p = *base;
  if (p_part(ctx.group.order(), p) == ctx.group.order()) {
    r.verdict = Verdict::pass;
    r.note = "G is a p-group";
    return r;
  }
  if (detail::central_frobenius_case(ctx, p)) {
    r.verdict = Verdict::pass;
    r.note = "G/Z(G) Frobenius with p-power complement and Z(G) = O_p(G), p = " +
             std::to_string(p);
    return r;
  }
  r.verdict = Verdict::counterexample;
  r.note = "neither a p-group nor the central Frobenius case for p = " + std::to_string(p);
  r.witness = ordered_json{{"vo", detail::set_json(ctx.profile.vo)}};
  return r;
}

/// Solvable groups: the vanishing prime graph has at most two components, and
/// a disconnected graph forces the Frobenius family.
inline CheckResult check_solvable_graph(GroupAnalysis& ctx) {
  CheckResult r{"solvable_graph", std::nullopt};
  if (!ctx.solvable) {
    r.verdict = Verdict::vacuous;
    r.note = "requires a solvable group";
    return r;
  }
  if (ctx.comps.count > 2) {
    r.verdict = Verdict::counterexample;
    r.note = "Gamma(G) has " + std::to_string(ctx.comps.count) + " components";
    r.witness = ordered_json{{"vo", detail::set_json(ctx.profile.vo)}};
    return r;
  }
  if (ctx.comps.count == 2) {
    bool structural = ctx.frobenius().has_value() || ctx.two_frobenius().has_value() ||
                      ctx.nearly_two_frobenius().has_value();
    if (!structural) {
      r.verdict = Verdict::counterexample;
      r.note = "Gamma(G) disconnected but G is not in the Frobenius family";
      r.witness = ordered_json{{"vo", detail::set_json(ctx.profile.vo)}};
      return r;
    }
    r.note = ctx.frobenius() ? "disconnected: Frobenius"
             : ctx.two_frobenius() ? "disconnected: 2-Frobenius"
                                   : "disconnected: nearly 2-Frobenius";
  }
  r.verdict = Verdict::pass;
  return r;
}

/// For corpus entries declaring G = A*B with A abelian and B nilpotent:
/// A*F(G) is normal and the Fitting height is at most 3.
inline CheckResult check_fitting_bound(GroupAnalysis& ctx, const CorpusEntry& entry) {
  CheckResult r{"fitting_bound", std::nullopt};
  if (!entry.has_factorization) {
    r.verdict = Verdict::vacuous;
    r.note = "no declared factorization";
    return r;
  }
  auto subgroup_from_words = [&](const std::vector<std::string>& words) {
    std::vector<Permutation> gens;
    for (const std::string& w : words) gens.push_back(parse_word(w, ctx.group.generators()));
    if (gens.empty()) return trivial_subgroup(ctx.group);
    return subgroup_from_gens(ctx.group, std::move(gens));
  };
  Subgroup A = subgroup_from_words(entry.factor_a);
  Subgroup B = subgroup_from_words(entry.factor_b);
  bool a_abelian = A.is_trivial() || subgroup_as_group(A).is_abelian();
  bool b_nilpotent = B.is_trivial() || is_nilpotent(subgroup_as_group(B));
  std::uint64_t product = A.order() * B.order() / subgroup_intersect(A, B).order();
  if (!a_abelian || !b_nilpotent || product != ctx.group.order()) {
    r.verdict = Verdict::counterexample;
    r.note = "declared factorization G = A*B is invalid";
    r.witness = ordered_json{{"a_order", A.order()},
                             {"b_order", B.order()},
                             {"product_set_size", product}};
    return r;
  }
  int h = fitting_height(ctx.group);
  Subgroup F = fitting_subgroup(ctx.group);
  Subgroup AF = subgroup_join(A, F);
  bool af_subgroup =
      AF.order() == A.order() * F.order() / subgroup_intersect(A, F).order();
  bool af_normal = is_normal(ctx.group, AF);
  if (h <= 3 && af_subgroup && af_normal) {
    r.verdict = Verdict::pass;
    r.note = "Fitting height " + std::to_string(h);
  } else {
    r.verdict = Verdict::counterexample;
    r.note = "Fitting height " + std::to_string(h) +
             (af_normal ? "" : "; A*F(G) is not normal");
    r.witness = ordered_json{{"fitting_order", F.order()}, {"height", h}};
  }
  return r;
}

/// Manifest expectations: solvability, nilpotency, Frobenius kind, and the
/// declared Vo set must match the computed facts.
inline CheckResult check_manifest(GroupAnalysis& ctx, const CorpusEntry& entry) {
  CheckResult r{"manifest", std::nullopt};
  std::vector<std::string> bad;
  if (ctx.solvable != entry.solvable) bad.push_back("solvable");
  if (ctx.nilpotent != entry.nilpotent) bad.push_back("nilpotent");
  if (entry.expected_vo && *entry.expected_vo != ctx.profile.vo) bad.push_back("vo");
  const std::string& kind = entry.frobenius_kind;
  if (kind == "none") {
    if (ctx.frobenius() || ctx.two_frobenius()) bad.push_back("frobenius_kind");
  } else if (kind == "frobenius") {
    if (!ctx.frobenius()) bad.push_back("frobenius_kind");
  } else if (kind == "2frobenius") {
    if (!ctx.two_frobenius() || ctx.frobenius()) bad.push_back("frobenius_kind");
  } else if (kind == "nearly2frobenius") {
    if (!ctx.nearly_two_frobenius() || ctx.frobenius() || ctx.two_frobenius())
      bad.push_back("frobenius_kind");
  }
  if (bad.empty()) {
    r.verdict = Verdict::pass;
  } else {
    r.verdict = Verdict::counterexample;
    r.note = "manifest mismatch:";
    for (const std::string& f : bad) r.note += " " + f;
    r.witness = ordered_json{{"computed_vo", detail::set_json(ctx.profile.vo)},
                             {"computed_solvable", ctx.solvable},
                             {"computed_nilpotent", ctx.nilpotent}};
  }
  return r;
}

// ---------------------------------------------------------------------------
// Corpus runner
// ---------------------------------------------------------------------------

struct RunOptions {
  bool extended = false;
  std::uint64_t store_cap = PermutationGroup::kDefaultStoreCap;
  std::vector<std::uint64_t> extra_primes = {11};
};

struct GroupReport {
  std::string name;
  std::uint64_t order = 0;
  int degree = 0;
  bool skipped = false;
  bool abelian = false, solvable = false, nilpotent = false;
  std::uint64_t exponent = 0;
  std::vector<std::uint64_t> omega, vo, primes;
  ordered_json vo_partition = ordered_json::array();
  ordered_json graph;
  ordered_json structure;
  std::vector<CheckResult> checks;
  double wall_ms = 0;  // diagnostic only; never serialized
};

struct CorpusReport {
  std::string corpus_name;
  bool extended = false;
  std::vector<GroupReport> groups;
  std::map<std::string, std::map<std::string, int>> totals;
  int counterexamples = 0;  // excluding documented discrepancies
  int documented_discrepancies = 0;

  int exit_status() const { return counterexamples > 0 ? 1 : 0; }
};

inline GroupReport analyze_group(const CorpusEntry& entry, const RunOptions& opts) {
  GroupReport gr;
  gr.name = entry.name;
  auto t0 = std::chrono::steady_clock::now();
  PermutationGroup G = entry.make_group(opts.store_cap);
  gr.order = G.order();
  gr.degree = G.degree();
  if (!G.has_store()) {
    gr.skipped = true;
    CheckResult r{"capacity", std::nullopt};
    r.verdict = Verdict::skipped_capacity;
    r.note = "order exceeds the element-store cap of " + std::to_string(opts.store_cap);
    gr.checks.push_back(std::move(r));
    gr.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                     .count();
    return gr;
  }

  GroupAnalysis ctx;
  ctx.name = entry.name;
  ctx.group = G;
  ctx.table = character_table(G);
  ctx.profile = vanishing_profile(ctx.table, entry.name);
  ctx.graph = prime_graph(ctx.profile.vo, "Gamma(" + entry.name + ")");
  ctx.comps = components(ctx.graph);
  ctx.abelian = G.is_abelian();
  ctx.solvable = is_solvable(G);
  ctx.nilpotent = is_nilpotent(G);

  gr.abelian = ctx.abelian;
  gr.solvable = ctx.solvable;
  gr.nilpotent = ctx.nilpotent;
  gr.exponent = ctx.table.group_exponent;
  gr.omega = ctx.profile.omega;
  gr.vo = ctx.profile.vo;

  std::set<std::uint64_t> pset;
  for (std::uint64_t p : prime_divisors(G.order())) pset.insert(p);
  for (std::uint64_t p : opts.extra_primes) pset.insert(p);
  gr.primes.assign(pset.begin(), pset.end());

  for (std::uint64_t p : gr.primes) {
    ordered_json part;
    part["p"] = p;
    part["vo_p"] = detail::set_json(vo_p(ctx.profile, p));
    part["vo_p_prime"] = detail::set_json(vo_p_prime(ctx.profile, p));
    gr.vo_partition.push_back(std::move(part));
  }

  {
    ordered_json g;
    g["vertices"] = detail::set_json(ctx.graph.vertices);
    ordered_json edges = ordered_json::array();
    for (auto [a, b] : ctx.graph.edges) edges.push_back(ordered_json::array({a, b}));
    g["edges"] = std::move(edges);
    ordered_json parts = ordered_json::array();
    for (const auto& part : ctx.comps.parts) parts.push_back(detail::set_json(part));
    g["components"] = std::move(parts);
    g["component_count"] = ctx.comps.count;
    gr.graph = std::move(g);
  }

  gr.checks.push_back(check_manifest(ctx, entry));
  gr.checks.push_back(check_burnside(ctx));
  for (std::uint64_t p : gr.primes) gr.checks.push_back(check_thm_1_2(ctx, p));
  for (std::uint64_t p : gr.primes) gr.checks.push_back(check_thm_A(ctx, p));
  for (std::uint64_t p : gr.primes) gr.checks.push_back(check_thm_B(ctx, p));
  for (std::uint64_t p : gr.primes) gr.checks.push_back(check_thm_C(ctx, p));
  gr.checks.push_back(check_thm_D(ctx));
  gr.checks.push_back(check_thm_1_4(ctx));
  gr.checks.push_back(check_solvable_graph(ctx));
  gr.checks.push_back(check_fitting_bound(ctx, entry));

  {
    ordered_json s;
    s["center_order"] = center(G).order();
    Subgroup F = fitting_subgroup(G);
    s["fitting_order"] = F.order();
    if (ctx.solvable)
      s["fitting_height"] = fitting_height(G);
    else
      s["fitting_height"] = nullptr;
    if (const auto& w = ctx.frobenius()) {
      s["frobenius"] = ordered_json{{"kernel", detail::subgroup_json(G, w->kernel)},
                                    {"complement", detail::subgroup_json(G, w->complement)}};
    } else {
      s["frobenius"] = nullptr;
    }
    if (const auto& w = ctx.two_frobenius()) {
      s["two_frobenius"] = ordered_json{{"f", detail::subgroup_json(G, w->lower)},
                                        {"l", detail::subgroup_json(G, w->upper)}};
    } else {
      s["two_frobenius"] = nullptr;
    }
    if (const auto& w = ctx.nearly_two_frobenius()) {
      s["nearly_two_frobenius"] =
          ordered_json{{"f1", detail::subgroup_json(G, w->f1)},
                       {"f2", detail::subgroup_json(G, w->f2)},
                       {"f", detail::subgroup_json(G, w->f)},
                       {"l", detail::subgroup_json(G, w->l)}};
    } else {
      s["nearly_two_frobenius"] = nullptr;
    }
    gr.structure = std::move(s);
  }

  gr.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return gr;
}

inline CorpusReport run_corpus(const CorpusManifest& man, const RunOptions& opts = {}) {
  CorpusReport rep;
  rep.corpus_name = man.name;
  rep.extended = opts.extended;
  std::vector<const CorpusEntry*> entries;
  for (const CorpusEntry& e : man.entries)
    if (!e.extended || opts.extended) entries.push_back(&e);
  std::sort(entries.begin(), entries.end(),
            [](const CorpusEntry* a, const CorpusEntry* b) { return a->name < b->name; });
  for (const CorpusEntry* e : entries) rep.groups.push_back(analyze_group(*e, opts));
  for (const GroupReport& gr : rep.groups)
    for (const CheckResult& c : gr.checks) {
      ++rep.totals[c.check_id][verdict_name(c.verdict)];
      if (c.verdict == Verdict::counterexample) {
        if (c.documented_discrepancy)
          ++rep.documented_discrepancies;
        else
          ++rep.counterexamples;
      }
    }
  return rep;
}

/// Deterministic JSON document (stable key order, no wall-clock data): two
/// runs over the same corpus produce byte-identical output.
inline ordered_json report_json(const CorpusReport& rep) {
  ordered_json j;
  j["toolkit"] = kToolkitName;
  j["version"] = kToolkitVersion;
  j["corpus"] = rep.corpus_name;
  j["extended"] = rep.extended;
  ordered_json groups = ordered_json::array();
  for (const GroupReport& gr : rep.groups) {
    ordered_json g;
    g["name"] = gr.name;
    g["order"] = gr.order;
    g["degree"] = gr.degree;
    g["skipped"] = gr.skipped;
    if (!gr.skipped) {
      g["abelian"] = gr.abelian;
      g["solvable"] = gr.solvable;
      g["nilpotent"] = gr.nilpotent;
      g["exponent"] = gr.exponent;
      g["omega"] = detail::set_json(gr.omega);
      g["vo"] = detail::set_json(gr.vo);
      g["primes"] = detail::set_json(gr.primes);
      g["vo_partition"] = gr.vo_partition;
      g["graph"] = gr.graph;
      g["structure"] = gr.structure;
    }
    ordered_json checks = ordered_json::array();
    for (const CheckResult& c : gr.checks) {
      ordered_json cj;
      cj["id"] = c.check_id;
      if (c.p)
        cj["p"] = *c.p;
      else
        cj["p"] = nullptr;
      cj["verdict"] = verdict_name(c.verdict);
      cj["documented_discrepancy"] = c.documented_discrepancy;
      cj["note"] = c.note;
      cj["witness"] = c.witness;
      checks.push_back(std::move(cj));
    }
    g["checks"] = std::move(checks);
    groups.push_back(std::move(g));
  }
  j["groups"] = std::move(groups);
  ordered_json totals;
  for (const auto& [check, counts] : rep.totals) {
    ordered_json c;
    for (const auto& [verdict, n] : counts) c[verdict] = n;
    totals[check] = std::move(c);
  }
  j["totals"] = std::move(totals);
  j["summary"] = ordered_json{{"counterexamples", rep.counterexamples},
                              {"documented_discrepancies", rep.documented_discrepancies},
                              {"exit_status", rep.exit_status()}};
  return j;
}

}  // namespace vanorder
