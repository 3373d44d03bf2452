#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vanorder/errors.hpp"
#include "vanorder/group.hpp"
#include "vanorder/textio.hpp"

namespace vanorder {

/// One corpus group: generator file plus declared expectations. The declared
/// order is validated eagerly at load; the other expectations are validated by
/// the verification harness.
struct CorpusEntry {
  std::string name;
  std::string file;  // resolved path
  std::uint64_t expected_order = 0;
  bool solvable = false;
  bool nilpotent = false;
  std::string frobenius_kind = "none";  // none|frobenius|2frobenius|nearly2frobenius
  std::optional<std::vector<std::uint64_t>> expected_vo;
  std::vector<std::string> factor_a;  // generator words for an abelian A
  std::vector<std::string> factor_b;  // generator words for a nilpotent B
  bool has_factorization = false;
  bool extended = false;
  int degree = 0;
  std::vector<Permutation> gens;

  PermutationGroup make_group(std::uint64_t cap = PermutationGroup::kDefaultStoreCap) const {
    return PermutationGroup(gens, cap);
  }
};

struct CorpusManifest {
  std::string name;
  std::vector<CorpusEntry> entries;
};

namespace detail {

// Minimal TOML-subset reader covering the manifest grammar: top-level
// `key = value` pairs, `[[group]]` array-of-tables headers, strings, integers,
// booleans, and flat arrays of integers or strings. See docs/formats.md.
struct TomlValue {
  enum Kind { string, integer, boolean, int_array, string_array } kind;
  std::string s;
  long long i = 0;
  bool b = false;
  std::vector<long long> ints;
  std::vector<std::string> strings;
};

inline TomlValue parse_toml_value(const std::string& raw, int line_no) {
  auto fail = [&](const std::string& m) -> TomlValue {
    throw input_error("manifest line " + std::to_string(line_no) + ": " + m);
  };
  std::string v = raw;
  auto trim = [](std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    std::size_t e = s.find_last_not_of(" \t");
    s = (b == std::string::npos) ? "" : s.substr(b, e - b + 1);
  };
  trim(v);
  if (v.empty()) return fail("missing value");
  TomlValue out{};
  if (v.front() == '"') {
    if (v.size() < 2 || v.back() != '"') return fail("unterminated string");
    out.kind = TomlValue::string;
    out.s = v.substr(1, v.size() - 2);
    return out;
  }
  if (v == "true" || v == "false") {
    out.kind = TomlValue::boolean;
    out.b = (v == "true");
    return out;
  }
  if (v.front() == '[') {
    if (v.back() != ']') return fail("unterminated array");
    std::string body = v.substr(1, v.size() - 2);
    // split on commas outside quotes
    std::vector<std::string> items;
    std::string cur;
    bool in_str = false;
    for (char c : body) {
      if (c == '"') in_str = !in_str;
      if (c == ',' && !in_str) {
        items.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) items.push_back(cur);
    bool any_string = false;
    for (std::string& it : items) {
      trim(it);
      if (it.empty()) return fail("empty array item");
      if (it.front() == '"') any_string = true;
    }
    if (any_string) {
      out.kind = TomlValue::string_array;
      for (std::string& it : items) {
        trim(it);
        if (it.size() < 2 || it.front() != '"' || it.back() != '"')
          return fail("bad string array item '" + it + "'");
        out.strings.push_back(it.substr(1, it.size() - 2));
      }
    } else {
      out.kind = TomlValue::int_array;
      for (std::string& it : items) {
        trim(it);
        try {
          out.ints.push_back(std::stoll(it));
        } catch (const std::exception&) {
          return fail("bad integer array item '" + it + "'");
        }
      }
    }
    return out;
  }
  try {
    std::size_t used = 0;
    out.i = std::stoll(v, &used);
    if (used != v.size()) return fail("trailing characters after integer");
    out.kind = TomlValue::integer;
    return out;
  } catch (const std::exception&) {
    return fail("unrecognized value '" + v + "'");
  }
}

}  // namespace detail

/// Parses the manifest and every referenced generator file, validating each
/// entry's declared order against the computed one (data_error on mismatch).
inline CorpusManifest load_corpus(const std::string& manifest_path) {
  std::ifstream in(manifest_path);
  if (!in) throw input_error("cannot open manifest '" + manifest_path + "'");
  std::filesystem::path base = std::filesystem::path(manifest_path).parent_path();

  CorpusManifest man;
  CorpusEntry* cur = nullptr;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    // strip comments outside strings
    bool in_str = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') in_str = !in_str;
      if (line[i] == '#' && !in_str) {
        line.erase(i);
        break;
      }
    }
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    if (line == "[[group]]") {
      man.entries.emplace_back();
      cur = &man.entries.back();
      continue;
    }
    if (line.front() == '[')
      throw input_error("manifest line " + std::to_string(line_no) + ": unsupported table '" +
                        line + "'");
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw input_error("manifest line " + std::to_string(line_no) + ": expected 'key = value'");
    std::string key = line.substr(0, eq);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    detail::TomlValue val = detail::parse_toml_value(line.substr(eq + 1), line_no);
    auto expect = [&](detail::TomlValue::Kind k, const std::string& what) {
      if (val.kind != k)
        throw input_error("manifest line " + std::to_string(line_no) + ": '" + key +
                          "' must be " + what);
    };
    if (!cur) {
      if (key == "name") {
        expect(detail::TomlValue::string, "a string");
        man.name = val.s;
      } else if (key == "version") {
        expect(detail::TomlValue::integer, "an integer");
      } else {
        throw input_error("manifest line " + std::to_string(line_no) + ": unknown top-level key '" +
                          key + "'");
      }
      continue;
    }
    if (key == "name") {
      expect(detail::TomlValue::string, "a string");
      cur->name = val.s;
    } else if (key == "file") {
      expect(detail::TomlValue::string, "a string");
      cur->file = (base / val.s).string();
    } else if (key == "order") {
      expect(detail::TomlValue::integer, "an integer");
      cur->expected_order = static_cast<std::uint64_t>(val.i);
    } else if (key == "solvable") {
      expect(detail::TomlValue::boolean, "a boolean");
      cur->solvable = val.b;
    } else if (key == "nilpotent") {
      expect(detail::TomlValue::boolean, "a boolean");
      cur->nilpotent = val.b;
    } else if (key == "frobenius_kind") {
      expect(detail::TomlValue::string, "a string");
      cur->frobenius_kind = val.s;
    } else if (key == "vo") {
      expect(detail::TomlValue::int_array, "an integer array");
      cur->expected_vo = std::vector<std::uint64_t>(val.ints.begin(), val.ints.end());
    } else if (key == "factor_a") {
      if (val.kind != detail::TomlValue::string_array && val.kind != detail::TomlValue::int_array)
        throw input_error("manifest line " + std::to_string(line_no) +
                          ": 'factor_a' must be a string array");
      cur->factor_a = val.strings;  // empty array parses as int_array; both give {}
      cur->has_factorization = true;
    } else if (key == "factor_b") {
      if (val.kind != detail::TomlValue::string_array && val.kind != detail::TomlValue::int_array)
        throw input_error("manifest line " + std::to_string(line_no) +
                          ": 'factor_b' must be a string array");
      cur->factor_b = val.strings;
      cur->has_factorization = true;
    } else if (key == "extended") {
      expect(detail::TomlValue::boolean, "a boolean");
      cur->extended = val.b;
    } else {
      throw input_error("manifest line " + std::to_string(line_no) + ": unknown key '" + key +
                        "'");
    }
  }

  for (CorpusEntry& entry : man.entries) {
    if (entry.name.empty()) throw input_error("manifest entry without a name");
    if (entry.file.empty())
      throw input_error("manifest entry '" + entry.name + "' has no generator file");
    std::ifstream gf(entry.file);
    if (!gf) throw input_error("cannot open generator file '" + entry.file + "'");
    std::ostringstream buf;
    buf << gf.rdbuf();
    GeneratorFile parsed;
    try {
      parsed = parse_generator_file(buf.str());
    } catch (const input_error& err) {
      throw input_error(entry.file + ": " + err.what());
    }
    entry.degree = parsed.degree;
    entry.gens = std::move(parsed.gens);
    const std::string& kind = entry.frobenius_kind;
    if (kind != "none" && kind != "frobenius" && kind != "2frobenius" &&
        kind != "nearly2frobenius")
      throw input_error("entry '" + entry.name + "': unknown frobenius_kind '" + kind + "'");
    // eager order validation (stabilizer chain only, no element store)
    PermutationGroup probe(entry.gens, 0);
    if (probe.order() != entry.expected_order)
      throw data_error("entry '" + entry.name + "': declared order " +
                       std::to_string(entry.expected_order) + " but computed " +
                       std::to_string(probe.order()));
  }
  return man;
}

}  // namespace vanorder
