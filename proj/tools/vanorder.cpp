// Command-line front end: exact character tables, vanishing data, prime
// graphs, property (*), structure detectors, and the corpus verification run.
//
// Exit codes: 0 success, 1 counterexample found by `verify` (outside the
// documented discrepancy), 2 capacity error, 3 input/data error, 4 internal.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "vanorder/chartab.hpp"
#include "vanorder/corpus.hpp"
#include "vanorder/harness.hpp"
#include "vanorder/structure.hpp"
#include "vanorder/subgroup_ops.hpp"
#include "vanorder/textio.hpp"
#include "vanorder/vanish.hpp"
#include "vanorder/version.hpp"

namespace {

using namespace vanorder;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

PermutationGroup load_group(const std::string& path) {
  GeneratorFile gf = parse_generator_file(read_file(path));
  return PermutationGroup(gf.gens);
}

std::string set_str(const std::vector<std::uint64_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "}";
}

int cmd_table(const std::string& file) {
  PermutationGroup G = load_group(file);
  CharacterTable T = character_table(G);
  std::cout << render_character_table(T, stem_of(file));
  return 0;
}

int cmd_vanish(const std::string& file, std::uint64_t p) {
  PermutationGroup G = load_group(file);
  CharacterTable T = character_table(G);
  VanishingProfile prof = vanishing_profile(T, stem_of(file));
  std::cout << "vo=" << set_str(prof.vo) << "\n";
  if (p) {
    std::cout << "vo_" << p << "=" << set_str(vo_p(prof, p)) << "\n";
    std::cout << "vo_" << p << "'=" << set_str(vo_p_prime(prof, p)) << "\n";
  }
  return 0;
}

int cmd_graph(const std::string& file, const std::string& out) {
  PermutationGroup G = load_group(file);
  CharacterTable T = character_table(G);
  VanishingProfile prof = vanishing_profile(T);
  std::string name = stem_of(file);
  PrimeGraph g = prime_graph(prof.vo, "Gamma(" + name + ")");
  std::string text = render_prime_graph(g, g.source);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream os(out);
    if (!os) throw input_error("cannot write '" + out + "'");
    os << text;
  }
  return 0;
}

int cmd_star(const std::string& file, std::uint64_t p) {
  PermutationGroup G = load_group(file);
  CharacterTable T = character_table(G);
  VanishingProfile prof = vanishing_profile(T);
  StarResult res = property_star(prof, p);
  std::cout << "vo=" << set_str(prof.vo) << "\n";
  for (std::size_t i = 0; i < prof.vo.size(); ++i)
    for (std::size_t j = i + 1; j < prof.vo.size(); ++j) {
      std::uint64_t g = std::gcd(prof.vo[i], prof.vo[j]);
      std::cout << "gcd(" << prof.vo[i] << "," << prof.vo[j] << ") = " << g << "\n";
    }
  std::cout << "star: " << (res.holds ? "true" : "false") << "\n";
  if (!res.holds)
    std::cout << "witness: gcd(" << res.witness->first << "," << res.witness->second
              << ") = " << res.witness_gcd << " is not a power of " << p << "\n";
  return 0;
}

int cmd_structure(const std::string& file) {
  PermutationGroup G = load_group(file);
  std::cout << "order " << G.order() << "\n";
  bool solv = is_solvable(G);
  std::cout << "solvable " << (solv ? "true" : "false") << "\n";
  std::cout << "nilpotent " << (is_nilpotent(G) ? "true" : "false") << "\n";
  std::cout << "center " << center(G).order() << "\n";
  Subgroup F = fitting_subgroup(G);
  std::cout << "fitting " << F.order() << "\n";
  if (solv) std::cout << "fitting_height " << fitting_height(G) << "\n";
  if (auto w = is_frobenius(G))
    std::cout << "frobenius kernel " << w->kernel.order() << " complement "
              << w->complement.order() << "\n";
  else
    std::cout << "frobenius none\n";
  if (auto w = is_2frobenius(G))
    std::cout << "2frobenius f " << w->lower.order() << " l " << w->upper.order() << "\n";
  else
    std::cout << "2frobenius none\n";
  if (auto w = is_nearly_2frobenius(G))
    std::cout << "nearly2frobenius f1 " << w->f1.order() << " f2 " << w->f2.order() << " l "
              << w->l.order() << "\n";
  else
    std::cout << "nearly2frobenius none\n";
  return 0;
}

int cmd_verify(const std::string& manifest, bool extended, const std::string& json_path) {
  CorpusManifest man = load_corpus(manifest);
  RunOptions opts;
  opts.extended = extended;
  CorpusReport rep = run_corpus(man, opts);
  for (const GroupReport& gr : rep.groups) {
    int pass = 0, vac = 0, cex = 0, doc = 0;
    for (const CheckResult& c : gr.checks) {
      if (c.verdict == Verdict::pass) ++pass;
      if (c.verdict == Verdict::vacuous) ++vac;
      if (c.verdict == Verdict::counterexample) (c.documented_discrepancy ? ++doc : ++cex);
    }
    std::cout << gr.name << ": order " << gr.order << ", " << pass << " pass, " << vac
              << " vacuous";
    if (doc) std::cout << ", " << doc << " documented";
    if (cex) std::cout << ", " << cex << " COUNTEREXAMPLE";
    if (gr.skipped) std::cout << ", skipped (capacity)";
    std::cout << " [" << static_cast<long>(gr.wall_ms) << " ms]\n";
    for (const CheckResult& c : gr.checks)
      if (c.verdict == Verdict::counterexample && !c.documented_discrepancy)
        std::cout << "  COUNTEREXAMPLE " << c.check_id
                  << (c.p ? " p=" + std::to_string(*c.p) : "") << ": " << c.note << "\n";
  }
  std::cout << "counterexamples: " << rep.counterexamples
            << ", documented discrepancies: " << rep.documented_discrepancies << "\n";
  if (!json_path.empty()) {
    std::ofstream os(json_path);
    if (!os) throw input_error("cannot write '" + json_path + "'");
    os << report_json(rep).dump(2) << "\n";
  }
  return rep.exit_status();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact character tables and vanishing-element analysis for small "
               "permutation groups"};
  app.set_version_flag("--version", std::string(vanorder::kToolkitVersion));
  app.require_subcommand(1);

  std::string file, out, manifest, json_path;
  std::uint64_t prime = 0;
  bool extended = false;

  CLI::App* table = app.add_subcommand("table", "print the exact character table");
  table->add_option("file", file, "generator file")->required();

  CLI::App* vanish = app.add_subcommand("vanish", "print Vo(G) and its p-partition");
  vanish->add_option("file", file, "generator file")->required();
  vanish->add_option("-p,--prime", prime, "partition prime");

  CLI::App* graph = app.add_subcommand("graph", "write the vanishing prime graph");
  graph->add_option("file", file, "generator file")->required();
  graph->add_option("--out", out, "output path ('-' for stdout)");

  CLI::App* star = app.add_subcommand("star", "decide property (*) for a prime");
  star->add_option("file", file, "generator file")->required();
  star->add_option("-p,--prime", prime, "prime")->required();

  CLI::App* structure = app.add_subcommand("structure", "Frobenius-family and Fitting data");
  structure->add_option("file", file, "generator file")->required();

  CLI::App* verify = app.add_subcommand("verify", "run the theorem checks over a corpus");
  verify->add_option("--corpus", manifest, "corpus manifest")->required();
  verify->add_flag("--extended", extended, "include extended (slow) entries");
  verify->add_option("--json", json_path, "write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*table) return cmd_table(file);
    if (*vanish) return cmd_vanish(file, prime);
    if (*graph) return cmd_graph(file, out);
    if (*star) return cmd_star(file, prime);
    if (*structure) return cmd_structure(file);
    if (*verify) return cmd_verify(manifest, extended, json_path);
  } catch (const vanorder::capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const vanorder::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const vanorder::data_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 3;
  } catch (const vanorder::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
