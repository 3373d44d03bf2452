// Tiny-scale equivalence of the main algorithms against the independent
// brute-force oracle (full multiplication-table closures): conjugacy classes,
// normal subgroups, derived series, and the O^p / O^{p'} residuals, for every
// corpus group of order <= 24.
#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "vanorder/corpus.hpp"
#include "vanorder/subgroup_ops.hpp"

using namespace vanorder;

namespace {
const std::string kManifest = std::string(VANORDER_DATA_DIR) + "/corpus/core.toml";

std::vector<Permutation> perms_of(const PermutationGroup& G, const Subgroup& s) {
  std::vector<Permutation> out;
  for (std::uint32_t id : s.elems) out.push_back(G.element(id));
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

TEST_CASE("main algorithms agree with the naive oracle on groups of order <= 24") {
  CorpusManifest man = load_corpus(kManifest);
  int tested = 0;
  for (const CorpusEntry& entry : man.entries) {
    if (entry.expected_order > 24) continue;
    ++tested;
    INFO("group " << entry.name);
    PermutationGroup G = entry.make_group();
    oracle::ElementSet elems = oracle::naive_closure(entry.gens);
    REQUIRE(elems.size() == G.order());

    // conjugacy classes (canonical order on both sides)
    auto naive_cls = oracle::naive_conjugacy_classes(elems);
    const auto& cls = conjugacy_classes(G);
    REQUIRE(cls.size() == naive_cls.size());
    for (std::size_t i = 0; i < cls.size(); ++i) {
      CHECK(cls[i].size == naive_cls[i].size());
      CHECK(cls[i].representative == naive_cls[i].front());
      CHECK(cls[i].element_order == element_order(naive_cls[i].front()));
    }

    // normal subgroups as element sets (both sides resorted by permutation
    // lists: the main path orders equal-order subgroups by element id)
    auto naive_norm = oracle::naive_normal_subgroups(elems);
    std::vector<oracle::ElementSet> norm;
    for (const Subgroup& n : normal_subgroups(G)) norm.push_back(perms_of(G, n));
    std::sort(norm.begin(), norm.end());
    std::sort(naive_norm.begin(), naive_norm.end());
    REQUIRE(norm.size() == naive_norm.size());
    for (std::size_t i = 0; i < norm.size(); ++i) CHECK(norm[i] == naive_norm[i]);

    // derived series
    auto naive_series = oracle::naive_derived_series(elems);
    NormalSeriesReport series = derived_series(G);
    REQUIRE(series.terms.size() == naive_series.size());
    for (std::size_t i = 0; i < series.terms.size(); ++i)
      CHECK(perms_of(G, series.terms[i]) == naive_series[i]);
    CHECK(is_solvable(G) == (naive_series.back().size() == 1));

    // residuals for every prime dividing the order
    for (std::uint64_t p : prime_divisors(G.order())) {
      CHECK(perms_of(G, o_upper_p(G, p)) == oracle::naive_o_upper_p(elems, p));
      CHECK(perms_of(G, o_upper_p_prime(G, p)) == oracle::naive_o_upper_p_prime(elems, p));
    }
  }
  CHECK(tested >= 15);
}

TEST_CASE("solvability agrees with the composition-series oracle up to order 100") {
  CorpusManifest man = load_corpus(kManifest);
  int tested = 0;
  for (const CorpusEntry& entry : man.entries) {
    if (entry.expected_order > 100) continue;
    ++tested;
    INFO("group " << entry.name);
    PermutationGroup G = entry.make_group();
    oracle::ElementSet elems = oracle::naive_closure(entry.gens);
    CHECK(is_solvable(G) == oracle::naive_solvable_by_composition_series(elems));
  }
  CHECK(tested >= 20);
}

TEST_CASE("centralizers agree with the oracle on S4 and SL(2,3)") {
  CorpusManifest man = load_corpus(kManifest);
  for (const CorpusEntry& entry : man.entries) {
    if (entry.name != "S4" && entry.name != "SL(2,3)") continue;
    PermutationGroup G = entry.make_group();
    oracle::ElementSet elems = oracle::naive_closure(entry.gens);
    for (const ConjugacyClass& c : conjugacy_classes(G)) {
      auto mine = perms_of(G, centralizer(G, c.representative));
      CHECK(mine == oracle::naive_centralizer(elems, c.representative));
    }
  }
}
