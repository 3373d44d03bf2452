#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "vanorder/corpus.hpp"
#include "vanorder/textio.hpp"

using namespace vanorder;

namespace {
const std::string kManifest = std::string(VANORDER_DATA_DIR) + "/corpus/core.toml";
}

TEST_CASE("core manifest loads and validates") {
  CorpusManifest man = load_corpus(kManifest);
  CHECK(man.name == "core");
  int core = 0, extended = 0;
  for (const CorpusEntry& e : man.entries) (e.extended ? extended : core)++;
  CHECK(core >= 25);
  CHECK(extended == 2);

  auto find = [&](const std::string& n) -> const CorpusEntry& {
    for (const CorpusEntry& e : man.entries)
      if (e.name == n) return e;
    FAIL("missing entry " + n);
    return man.entries.front();
  };
  for (const char* required :
       {"C2",  "C12", "D8",       "D18",      "Q8",  "S3", "A4", "S4", "SL(2,3)", "S5",
        "A5",  "A6",  "A7",       "C7:C3",    "F20", "PSL(2,7)", "PSL(2,8)", "G72", "M11",
        "PSL(3,4)"})
    CHECK(find(required).expected_order > 0);

  const CorpusEntry& g72 = find("G72");
  CHECK(g72.expected_order == 72);
  REQUIRE(g72.expected_vo.has_value());
  CHECK(*g72.expected_vo == std::vector<std::uint64_t>{2, 4, 9});
  CHECK(g72.frobenius_kind == "nearly2frobenius");

  CHECK(find("M11").extended);
  CHECK(find("M11").expected_order == 7920);
  CHECK(find("PSL(3,4)").expected_order == 20160);
  CHECK(find("A7").expected_order == 2520);

  // factorization words evaluate inside each declaring group
  for (const CorpusEntry& e : man.entries) {
    if (!e.has_factorization) continue;
    PermutationGroup G = e.make_group();
    for (const std::string& w : e.factor_a) CHECK(G.contains(parse_word(w, e.gens)));
    for (const std::string& w : e.factor_b) CHECK(G.contains(parse_word(w, e.gens)));
  }
}

TEST_CASE("order mismatch is a data error") {
  std::string dir = std::filesystem::temp_directory_path().string();
  std::string gens = dir + "/bad_group.gens";
  std::string manifest = dir + "/bad_manifest.toml";
  std::ofstream(gens) << "degree: 3\ngen: (1 2 3)\n";
  std::ofstream(manifest) << "name = \"bad\"\n[[group]]\nname = \"X\"\nfile = \"bad_group.gens\"\n"
                             "order = 7\nsolvable = true\nnilpotent = true\n";
  CHECK_THROWS_AS(load_corpus(manifest), data_error);
  std::remove(gens.c_str());
  std::remove(manifest.c_str());
}

TEST_CASE("manifest parse errors name the line") {
  std::string dir = std::filesystem::temp_directory_path().string();
  std::string manifest = dir + "/syntax.toml";
  std::ofstream(manifest) << "name = \"x\"\n[[group]]\nwhat\n";
  try {
    load_corpus(manifest);
    FAIL("expected input_error");
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  std::remove(manifest.c_str());
}

TEST_CASE("missing generator file") {
  std::string dir = std::filesystem::temp_directory_path().string();
  std::string manifest = dir + "/missing.toml";
  std::ofstream(manifest) << "[[group]]\nname = \"X\"\nfile = \"nope.gens\"\norder = 1\n";
  CHECK_THROWS_AS(load_corpus(manifest), input_error);
  std::remove(manifest.c_str());
}
