#pragma once

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "minorstar/minorstar.hpp"

namespace testing_support {

using minorstar::PlaneGraph;
using minorstar::Rotation;
using minorstar::Vertex;

/// Rotation system of a closed surface given by consistently oriented
/// triangles: around x, for each triangle (x, y, z) the neighbor z follows y.
inline PlaneGraph from_triangles(int n, const std::vector<std::array<Vertex, 3>>& tris) {
  std::vector<std::map<Vertex, Vertex>> succ(static_cast<std::size_t>(n));
  for (const auto& t : tris) {
    for (int k = 0; k < 3; ++k) succ[t[k]][t[(k + 1) % 3]] = t[(k + 2) % 3];
  }
  Rotation rot(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    const Vertex start = succ[v].begin()->first;
    Vertex u = start;
    do {
      rot[v].push_back(u);
      u = succ[v].at(u);
    } while (u != start);
  }
  return PlaneGraph::from_rotation(rot);
}

/// Two poles of degree k over an antiprism band of two k-rings; every ring
/// vertex has degree 5. Vertex 0 is the north pole, 1 the south pole, then
/// ring A (2..k+1) and ring B (k+2..2k+1). k = 5 is the icosahedron.
inline PlaneGraph double_wheel(int k) {
  const Vertex north = 0, south = 1;
  auto a = [k](int i) { return 2 + ((i % k) + k) % k; };
  auto b = [k](int i) { return 2 + k + ((i % k) + k) % k; };
  std::vector<std::array<Vertex, 3>> tris;
  for (int i = 0; i < k; ++i) {
    tris.push_back({north, a(i), a(i + 1)});
    tris.push_back({a(i + 1), a(i), b(i + 1)});
    tris.push_back({a(i), b(i), b(i + 1)});
    tris.push_back({south, b(i + 1), b(i)});
  }
  return from_triangles(2 * k + 2, tris);
}

/// Removes edge uv from a rotation system (the embedding stays plane).
inline Rotation without_edge(Rotation rot, Vertex u, Vertex v) {
  rot[u].erase(std::find(rot[u].begin(), rot[u].end(), v));
  rot[v].erase(std::find(rot[v].begin(), rot[v].end(), u));
  return rot;
}

// --- brute-force oracles ----------------------------------------------------

/// The dihedral group on 5 positions, generated by closure from a rotation
/// and a reflection rather than by formula.
inline std::vector<std::array<int, 5>> dihedral5() {
  const std::array<int, 5> id{0, 1, 2, 3, 4};
  const std::array<int, 5> rot{1, 2, 3, 4, 0};
  const std::array<int, 5> ref{0, 4, 3, 2, 1};
  std::set<std::array<int, 5>> seen{id};
  std::vector<std::array<int, 5>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::array<int, 5>> next;
    for (const auto& p : frontier) {
      for (const auto& g : {rot, ref}) {
        std::array<int, 5> q{};
        for (int i = 0; i < 5; ++i) q[i] = p[g[i]];
        if (seen.insert(q).second) next.push_back(q);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline bool brute_cyclic(const std::array<int, 5>& degs, const minorstar::CyclicPattern& p) {
  static const auto group = dihedral5();
  for (const auto& perm : group) {
    bool ok = true;
    for (int j = 0; j < 5 && ok; ++j) ok = p.bounds[j].admits(degs[perm[j]]);
    if (ok) return true;
  }
  return false;
}

/// Tries every injective assignment of bounds to neighbors.
inline bool brute_unordered(const std::vector<int>& degs, const minorstar::UnorderedPattern& p) {
  const std::size_t k = p.rays();
  if (k == 0 || degs.size() < k) return false;
  std::vector<int> idx(degs.size());
  std::iota(idx.begin(), idx.end(), 0);
  do {
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) ok = p.bounds[j].admits(degs[idx[j]]);
    if (ok) return true;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return false;
}

/// 3-connectivity by deleting every vertex pair and testing connectivity.
inline bool brute_three_connected(const PlaneGraph& g) {
  const int n = g.order();
  if (n < 4) return false;
  auto connected_without = [&](Vertex x, Vertex y) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    seen[x] = seen[y] = 1;
    Vertex start = 0;
    while (start == x || start == y) ++start;
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.rotation(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
      }
    }
    return reached == n - 2;
  };
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (!connected_without(x, y)) return false;
    }
  }
  return true;
}

inline minorstar::Bound random_bound(std::mt19937_64& rng) {
  const int r = static_cast<int>(rng() % 18);
  return r == 17 ? minorstar::Bound::infinite() : minorstar::Bound::at_most(5 + r);
}

inline minorstar::Corpus small_corpus(int count = 60, int max_n = 80, std::uint64_t seed = 7) {
  minorstar::GenConfig cfg;
  cfg.seed = seed;
  cfg.count = count;
  cfg.max_n = max_n;
  return minorstar::generate_corpus(cfg);
}

// --- malformed input manifest ------------------------------------------------

struct MalformedCase {
  std::string file;
  std::size_t graph = 0;
  std::size_t offset = 0;
  std::string reason;
};

/// Rows of malformed/expected.tsv: file, graph, byte offset, reason substring.
inline std::vector<MalformedCase> malformed_cases(const std::string& dir) {
  std::ifstream manifest(dir + "/expected.tsv");
  if (!manifest) throw std::runtime_error("cannot open " + dir + "/expected.tsv");
  std::vector<MalformedCase> out;
  std::string line;
  while (std::getline(manifest, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    MalformedCase c;
    std::getline(row, c.file, '\t');
    row >> c.graph >> c.offset;
    row.ignore();
    std::getline(row, c.reason);
    out.push_back(std::move(c));
  }
  return out;
}

/// nullopt when the file is rejected with the expected diagnostic.
inline std::optional<std::string> malformed_mismatch(const std::string& dir, const MalformedCase& c) {
  std::ifstream f(dir + "/" + c.file, std::ios::binary);
  if (!f) return "cannot open " + c.file;
  std::stringstream ss;
  ss << f.rdbuf();
  const bool is_text = c.file.size() > 4 && c.file.substr(c.file.size() - 4) == ".txt";
  try {
    if (is_text) {
      minorstar::parse_text(ss.str());
    } else {
      minorstar::parse_planar_code(ss.str());
    }
  } catch (const minorstar::ParseError& e) {
    const std::string what = e.what();
    if (e.graph() == c.graph && e.offset() == c.offset && what.find(c.reason) != std::string::npos) {
      return std::nullopt;
    }
    return c.file + ": got graph " + std::to_string(e.graph()) + " byte " + std::to_string(e.offset()) + ": " + what;
  }
  return c.file + " was accepted";
}

}  // namespace testing_support
