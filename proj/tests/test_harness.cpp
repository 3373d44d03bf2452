#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "vanorder/harness.hpp"
#include "vanorder/jsonschema.hpp"

using namespace vanorder;

namespace {
const std::string kManifest = std::string(VANORDER_DATA_DIR) + "/corpus/core.toml";

CorpusManifest subset(const std::vector<std::string>& names) {
  static CorpusManifest full = load_corpus(kManifest);
  CorpusManifest man;
  man.name = full.name;
  for (const CorpusEntry& e : full.entries)
    for (const std::string& n : names)
      if (e.name == n) man.entries.push_back(e);
  REQUIRE(man.entries.size() == names.size());
  return man;
}

const CheckResult& find_check(const GroupReport& gr, const std::string& id,
                              std::optional<std::uint64_t> p = std::nullopt) {
  for (const CheckResult& c : gr.checks)
    if (c.check_id == id && c.p == p) return c;
  FAIL("check not found: " + id);
  return gr.checks.front();
}

const GroupReport& find_group(const CorpusReport& rep, const std::string& name) {
  for (const GroupReport& g : rep.groups)
    if (g.name == name) return g;
  FAIL("group not found: " + name);
  return rep.groups.front();
}
}  // namespace

TEST_CASE("checks on S4") {
  CorpusReport rep = run_corpus(subset({"S4"}));
  const GroupReport& s4 = rep.groups.at(0);
  CHECK(find_check(s4, "manifest").verdict == Verdict::pass);
  CHECK(find_check(s4, "burnside").verdict == Verdict::pass);
  // Vo_2'(S4) = {3} nonempty, Vo_3'(S4) = {2,4}: both vacuous
  CHECK(find_check(s4, "thm_1_2", 2).verdict == Verdict::vacuous);
  CHECK(find_check(s4, "thm_1_2", 3).verdict == Verdict::vacuous);
  // |Vo_2'(S4)| = 1 with b = 3 = q^1 and Q' = 1 subnormal: O^{22'22'}(S4) = 1
  CHECK(find_check(s4, "thm_A", 2).verdict == Verdict::pass);
  CHECK(find_check(s4, "thm_A", 3).verdict == Verdict::vacuous);
  // |Vo_3(S4)| = 1: P' subnormal and P/O_3 cyclic
  CHECK(find_check(s4, "thm_B", 3).verdict == Verdict::pass);
  CHECK(find_check(s4, "thm_B", 2).verdict == Verdict::vacuous);
  // (*) fails for p = 11 on {2,3,4}: gcd(2,4) = 2
  CHECK(find_check(s4, "thm_C", 11).verdict == Verdict::vacuous);
  CHECK(find_check(s4, "thm_D").verdict == Verdict::pass);
  CHECK(find_check(s4, "thm_1_4").verdict == Verdict::vacuous);
  CHECK(find_check(s4, "solvable_graph").verdict == Verdict::pass);
  CHECK(find_check(s4, "fitting_bound").verdict == Verdict::pass);
  CHECK(rep.counterexamples == 0);
  CHECK(rep.exit_status() == 0);
}

TEST_CASE("the A5 Theorem C discrepancy is documented and quarantined") {
  CorpusReport rep = run_corpus(subset({"A5"}));
  const GroupReport& a5 = rep.groups.at(0);
  const CheckResult& c = find_check(a5, "thm_C", 11);
  CHECK(c.verdict == Verdict::counterexample);
  CHECK(c.documented_discrepancy);
  CHECK(rep.counterexamples == 0);  // quarantined
  CHECK(rep.documented_discrepancies == 1);
  CHECK(rep.exit_status() == 0);
  // A5 is not solvable: solvable-gated checks are vacuous
  CHECK(find_check(a5, "thm_B", 2).verdict == Verdict::vacuous);
  CHECK(find_check(a5, "thm_D").verdict == Verdict::vacuous);
  CHECK(find_check(a5, "solvable_graph").verdict == Verdict::vacuous);
  // |Vo_p'(A5)| = 2 for each p: thm_A vacuous everywhere
  for (std::uint64_t p : {2ull, 3ull, 5ull, 11ull})
    CHECK(find_check(a5, "thm_A", p).verdict == Verdict::vacuous);
}

TEST_CASE("checks on Q8, C6, A4, D18") {
  CorpusReport rep = run_corpus(subset({"Q8", "C6", "A4", "D18"}));
  const GroupReport& q8 = find_group(rep, "Q8");
  CHECK(find_check(q8, "thm_1_2", 2).verdict == Verdict::pass);  // Vo_2' empty
  CHECK(find_check(q8, "thm_1_4").verdict == Verdict::pass);     // vo = {4}, 2-group
  CHECK(find_check(q8, "thm_A", 11).verdict == Verdict::pass);   // vo_11' = {4}
  const GroupReport& c6 = find_group(rep, "C6");
  CHECK(find_check(c6, "burnside").verdict == Verdict::vacuous);
  CHECK(find_check(c6, "thm_1_2", 2).verdict == Verdict::pass);
  CHECK(find_check(c6, "thm_1_2", 3).verdict == Verdict::pass);
  CHECK(find_check(c6, "thm_C", 11).verdict == Verdict::pass);  // (*) vacuous-true
  const GroupReport& a4 = find_group(rep, "A4");
  CHECK(find_check(a4, "thm_B", 3).verdict == Verdict::pass);  // vo(A4) = {3}
  CHECK(find_check(a4, "thm_1_4").verdict == Verdict::pass);   // Frobenius case
  CHECK(find_check(a4, "thm_D").verdict == Verdict::pass);
  const GroupReport& d18 = find_group(rep, "D18");
  CHECK(find_check(d18, "thm_A", 3).verdict == Verdict::pass);  // exercises O^{33'33'}
  CHECK(find_check(d18, "thm_D").verdict == Verdict::pass);
  CHECK(rep.counterexamples == 0);
}

TEST_CASE("G72 lands in the nearly 2-Frobenius case") {
  CorpusReport rep = run_corpus(subset({"G72"}));
  const GroupReport& g = rep.groups.at(0);
  CHECK(g.vo == std::vector<std::uint64_t>{2, 4, 9});
  CHECK(g.graph["component_count"] == 2);
  CHECK(find_check(g, "manifest").verdict == Verdict::pass);
  CHECK(find_check(g, "thm_D").verdict == Verdict::pass);
  CHECK(find_check(g, "solvable_graph").verdict == Verdict::pass);
  CHECK(find_check(g, "thm_A", 2).verdict == Verdict::pass);
  CHECK(find_check(g, "fitting_bound").verdict == Verdict::pass);
  CHECK(g.structure["nearly_two_frobenius"]["f1"]["order"] == 4);
  CHECK(g.structure["nearly_two_frobenius"]["f2"]["order"] == 3);
  CHECK(g.structure["nearly_two_frobenius"]["l"]["order"] == 36);
  CHECK(g.structure["fitting_height"] == 3);
  CHECK(rep.counterexamples == 0);
}

TEST_CASE("capacity-exceeding entries are skipped without failing the run") {
  RunOptions opts;
  opts.store_cap = 10;
  CorpusReport rep = run_corpus(subset({"C6", "S4"}), opts);
  const GroupReport& c6 = find_group(rep, "C6");
  const GroupReport& s4 = find_group(rep, "S4");
  CHECK(!c6.skipped);
  CHECK(s4.skipped);
  REQUIRE(s4.checks.size() == 1);
  CHECK(s4.checks[0].verdict == Verdict::skipped_capacity);
  CHECK(rep.exit_status() == 0);
}

TEST_CASE("empty corpus") {
  CorpusManifest man;
  man.name = "empty";
  CorpusReport rep = run_corpus(man);
  CHECK(rep.groups.empty());
  CHECK(rep.exit_status() == 0);
}

TEST_CASE("reports are deterministic and schema-valid") {
  CorpusManifest man = subset({"S4", "A5", "Q8", "C6"});
  std::string d1 = report_json(run_corpus(man)).dump(2);
  std::string d2 = report_json(run_corpus(man)).dump(2);
  CHECK(d1 == d2);

  std::ifstream schema_in(std::string(VANORDER_DATA_DIR) + "/../docs/report.schema.json");
  REQUIRE(schema_in.good());
  nlohmann::json schema = nlohmann::json::parse(schema_in);
  nlohmann::json doc = nlohmann::json::parse(d1);
  std::string err;
  bool ok = validate_schema(schema, doc, &err);
  INFO(err);
  CHECK(ok);

  // a mutilated report must fail validation
  nlohmann::json broken = doc;
  broken.erase("groups");
  CHECK(!validate_schema(schema, broken, &err));
}

TEST_CASE("corpus-wide graph invariants") {
  CorpusReport rep = run_corpus(load_corpus(kManifest));
  for (const GroupReport& gr : rep.groups) {
    // Vo is a subset of omega minus {1}: the vanishing graph is a subgraph of
    // the element-order prime graph
    for (std::uint64_t v : gr.vo) {
      CHECK(v > 1);
      CHECK(std::count(gr.omega.begin(), gr.omega.end(), v) == 1);
    }
    PrimeGraph gv = prime_graph(gr.vo);
    PrimeGraph go = prime_graph(gr.omega);
    for (std::uint64_t v : gv.vertices)
      CHECK(std::count(go.vertices.begin(), go.vertices.end(), v) == 1);
    for (auto e : gv.edges) CHECK(std::count(go.edges.begin(), go.edges.end(), e) == 1);
    // solvable groups have at most two components (checked as a verdict too)
    if (gr.solvable) CHECK(gr.graph["component_count"].get<int>() <= 2);
  }
}

TEST_CASE("the JSON report is a bit-exact contract (golden file)") {
  std::string golden_dir = std::string(VANORDER_DATA_DIR) + "/../tests/golden";
  CorpusManifest man = load_corpus(golden_dir + "/mini.toml");
  std::string produced = report_json(run_corpus(man)).dump(2) + "\n";
  std::ifstream in(golden_dir + "/mini_report.json");
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(produced == buf.str());
}

TEST_CASE("witness words re-evaluate to subgroup members") {
  CorpusManifest man = subset({"S3"});
  CorpusReport rep = run_corpus(man);
  const GroupReport& s3 = rep.groups.at(0);
  auto frob = s3.structure["frobenius"];
  REQUIRE(!frob.is_null());
  CHECK(frob["kernel"]["order"] == 3);
  CHECK(frob["complement"]["order"] == 2);
  PermutationGroup G = man.entries.at(0).make_group();
  for (const auto& w : frob["kernel"]["generator_words"]) {
    Permutation g = parse_word(w.get<std::string>(), G.generators());
    CHECK(G.contains(g));
    CHECK(element_order(g) == 3);
  }
}
