#pragma once

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "vanorder/errors.hpp"
#include "vanorder/perm.hpp"

namespace vanorder {

/// Parses disjoint-cycle notation with 1-based points, e.g. "(1 2)(3 4 5)".
/// "()" denotes the identity. Points may be separated by spaces or commas.
inline Permutation parse_cycles(const std::string& text, int degree, int line_no = 0) {
  auto fail = [&](const std::string& msg, std::size_t col) -> Permutation {
    std::ostringstream os;
    if (line_no > 0) os << "line " << line_no << ", ";
    os << "column " << (col + 1) << ": " << msg;
    throw input_error(os.str());
  };
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  bool any = false;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') return fail("expected '('", i);
    std::size_t open = i++;
    std::vector<int> cyc;
    while (true) {
      while (i < text.size() &&
             (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
        ++i;
      if (i >= text.size()) return fail("unclosed cycle", open);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        return fail("expected a point or ')'", i);
      std::size_t start = i;
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree) return fail("point " + std::to_string(v) + " is out of range", start);
      if (used[v - 1]) return fail("duplicate point " + std::to_string(v), start);
      used[v - 1] = 1;
      cyc.push_back(static_cast<int>(v - 1));
    }
    any = true;
    for (std::size_t k = 0; k < cyc.size(); ++k) img[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  if (!any && text.find('(') == std::string::npos) return fail("expected cycle notation", 0);
  return Permutation(std::move(img));
}

/// Renders 1-based disjoint cycles; the identity renders as "()".
inline std::string format_cycles(const Permutation& p) {
  auto cyc = p.cycles();
  if (cyc.empty()) return "()";
  std::string s;
  for (const auto& c : cyc) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i] + 1);
    }
    s += ')';
  }
  return s;
}

struct GeneratorFile {
  int degree = 0;
  std::vector<Permutation> gens;
};

/// Generator file format:
///   # comment
///   degree: n
///   gen: (1 2)(3 4)
inline GeneratorFile parse_generator_file(const std::string& text) {
  GeneratorFile gf;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_degree = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t c = line.find('#');
    if (c != std::string::npos) line.erase(c);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw input_error("line " + std::to_string(line_no) + ": expected 'key: value'");
    std::string key = line.substr(0, colon);
    std::string val = line.substr(colon + 1);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    if (key == "degree") {
      try {
        gf.degree = std::stoi(val);
      } catch (const std::exception&) {
        throw input_error("line " + std::to_string(line_no) + ": bad degree value");
      }
      if (gf.degree < 1)
        throw input_error("line " + std::to_string(line_no) + ": degree must be positive");
      if (gf.degree > 1'000'000)
        throw input_error("line " + std::to_string(line_no) + ": degree exceeds 1000000");
      have_degree = true;
    } else if (key == "gen") {
      if (!have_degree)
        throw input_error("line " + std::to_string(line_no) + ": 'gen' before 'degree'");
      gf.gens.push_back(parse_cycles(val, gf.degree, line_no));
    } else {
      throw input_error("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (!have_degree) throw input_error("generator file has no 'degree' line");
  if (gf.gens.empty()) throw input_error("generator file has no 'gen' lines");
  return gf;
}

inline std::string render_generator_file(const GeneratorFile& gf) {
  std::string s = "degree: " + std::to_string(gf.degree) + "\n";
  for (const Permutation& g : gf.gens) s += "gen: " + format_cycles(g) + "\n";
  return s;
}

/// Words over named generators g0, g1, ...: whitespace-separated tokens
/// "g<k>" or "g<k>^<e>" (e may be negative); "id" is the empty word.
inline Permutation parse_word(const std::string& word, const std::vector<Permutation>& gens) {
  if (gens.empty()) throw input_error("word evaluation needs at least one generator");
  Permutation acc(gens[0].degree());
  std::istringstream in(word);
  std::string tok;
  bool any = false;
  while (in >> tok) {
    any = true;
    if (tok == "id") continue;
    if (tok.size() < 2 || tok[0] != 'g')
      throw input_error("bad word token '" + tok + "'");
    std::size_t caret = tok.find('^');
    long long e = 1;
    std::string idx_s = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    try {
      std::size_t gi = std::stoul(idx_s);
      if (gi >= gens.size())
        throw input_error("word token '" + tok + "' references a missing generator");
      if (caret != std::string::npos) e = std::stoll(tok.substr(caret + 1));
      acc = compose(acc, gens[gi].power(e));
    } catch (const input_error&) {
      throw;
    } catch (const std::exception&) {
      throw input_error("bad word token '" + tok + "'");
    }
  }
  if (!any) throw input_error("empty generator word");
  return acc;
}

inline std::string format_word(const std::vector<int>& gen_indices) {
  if (gen_indices.empty()) return "id";
  std::string s;
  for (std::size_t i = 0; i < gen_indices.size(); ++i) {
    if (i) s += ' ';
    s += "g" + std::to_string(gen_indices[i]);
  }
  return s;
}

}  // namespace vanorder
