#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vanorder/chartab.hpp"
#include "vanorder/intmath.hpp"

namespace vanorder {

/// Vanishing data of one group: the classes on which some irreducible
/// character vanishes, the set Vo of their element orders, and the full
/// element-order set omega.
struct VanishingProfile {
  std::string group_name;
  std::vector<int> vanishing_class_indices;  // ascending
  std::vector<std::uint64_t> vo;             // ascending, no duplicates
  std::vector<std::uint64_t> omega;          // ascending, no duplicates
};

inline VanishingProfile vanishing_profile(const CharacterTable& T, std::string name = "") {
  VanishingProfile prof;
  prof.group_name = std::move(name);
  std::set<std::uint64_t> vo, omega;
  for (std::size_t i = 0; i < T.r; ++i) {
    omega.insert(T.classes[i].element_order);
    bool vanishes = false;
    for (std::size_t t = 0; t < T.r && !vanishes; ++t)
      if (T.values[t][i].is_zero()) vanishes = true;
    if (vanishes) {
      prof.vanishing_class_indices.push_back(static_cast<int>(i));
      vo.insert(T.classes[i].element_order);
    }
  }
  prof.vo.assign(vo.begin(), vo.end());
  prof.omega.assign(omega.begin(), omega.end());
  return prof;
}

/// Members of Vo divisible by p.
inline std::vector<std::uint64_t> vo_p(const VanishingProfile& prof, std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t a : prof.vo)
    if (a % p == 0) out.push_back(a);
  return out;
}

/// Members of Vo not divisible by p.
inline std::vector<std::uint64_t> vo_p_prime(const VanishingProfile& prof, std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t a : prof.vo)
    if (a % p != 0) out.push_back(a);
  return out;
}

/// Undirected prime graph Pi(Y): vertices are primes dividing members of Y,
/// p -- q iff some member is divisible by pq.
struct PrimeGraph {
  std::vector<std::uint64_t> vertices;                    // ascending
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;  // p < q, sorted
  std::string source;
};

inline PrimeGraph prime_graph(const std::vector<std::uint64_t>& Y, std::string source = "") {
  PrimeGraph g;
  g.source = std::move(source);
  std::set<std::uint64_t> verts;
  std::set<std::pair<std::uint64_t, std::uint64_t>> edges;
  for (std::uint64_t y : Y) {
    std::vector<std::uint64_t> ps = prime_divisors(y);
    verts.insert(ps.begin(), ps.end());
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j) edges.emplace(ps[i], ps[j]);
  }
  g.vertices.assign(verts.begin(), verts.end());
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

struct GraphComponents {
  int count = 0;
  std::vector<std::vector<std::uint64_t>> parts;  // each ascending; sorted by least vertex
};

inline GraphComponents components(const PrimeGraph& g) {
  std::map<std::uint64_t, std::uint64_t> root;
  for (std::uint64_t v : g.vertices) root[v] = v;
  auto find = [&](std::uint64_t v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (auto [a, b] : g.edges) root[find(a)] = find(b);
  std::map<std::uint64_t, std::vector<std::uint64_t>> groups;
  for (std::uint64_t v : g.vertices) groups[find(v)].push_back(v);
  GraphComponents out;
  for (auto& [rt, part] : groups) {
    std::sort(part.begin(), part.end());
    out.parts.push_back(part);
  }
  std::sort(out.parts.begin(), out.parts.end());
  out.count = static_cast<int>(out.parts.size());
  return out;
}

/// Property (*): gcd(a, b) is a power of p (p^0 = 1 included) for every pair
/// of distinct members of Vo. Returns a witness pair on failure.
struct StarResult {
  bool holds = true;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
  std::uint64_t witness_gcd = 0;
};

inline StarResult property_star(const std::vector<std::uint64_t>& vo, std::uint64_t p) {
  if (!is_prime(p)) throw input_error("property_star: p must be prime");
  StarResult res;
  for (std::size_t i = 0; i < vo.size(); ++i)
    for (std::size_t j = i + 1; j < vo.size(); ++j) {
      std::uint64_t g = std::gcd(vo[i], vo[j]);
      if (p_part(g, p) != g) {  // not a (possibly trivial) power of p
        res.holds = false;
        res.witness = {vo[i], vo[j]};
        res.witness_gcd = g;
        return res;
      }
    }
  return res;
}

inline StarResult property_star(const VanishingProfile& prof, std::uint64_t p) {
  return property_star(prof.vo, p);
}

/// Plain undirected graph text: a name comment, isolated vertices as bare
/// nodes, one "p -- q" line per edge.
inline std::string render_prime_graph(const PrimeGraph& g, const std::string& name) {
  std::string s = "# graph " + name + "\n";
  std::set<std::uint64_t> touched;
  for (auto [a, b] : g.edges) {
    touched.insert(a);
    touched.insert(b);
  }
  for (std::uint64_t v : g.vertices)
    if (!touched.count(v)) s += std::to_string(v) + "\n";
  for (auto [a, b] : g.edges) s += std::to_string(a) + " -- " + std::to_string(b) + "\n";
  return s;
}

}  // namespace vanorder
