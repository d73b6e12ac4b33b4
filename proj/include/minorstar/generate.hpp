#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minorstar/plane_graph.hpp"

namespace minorstar {

/// 12 vertices, all of degree 5: vertex 1 on top, two rings of five, vertex
/// 12 at the bottom. Rotations are clockwise seen from outside.
inline PlaneGraph icosahedron() {
  static const Rotation rot{
      {1, 5, 4, 3, 2},   {0, 2, 6, 10, 5}, {0, 3, 7, 6, 1},  {0, 4, 8, 7, 2},
      {0, 5, 9, 8, 3},   {0, 1, 10, 9, 4}, {1, 2, 7, 11, 10}, {2, 3, 8, 11, 6},
      {3, 4, 9, 11, 7},  {4, 5, 10, 11, 8}, {1, 6, 11, 9, 5}, {6, 7, 8, 9, 10},
  };
  return PlaneGraph::from_rotation(rot);
}

namespace detail {

inline int index_of(const std::vector<Vertex>& row, Vertex x) {
  const auto it = std::find(row.begin(), row.end(), x);
  return it == row.end() ? -1 : static_cast<int>(it - row.begin());
}

// Puts x next to `v` in rot[host], on the side where `side` currently sits.
inline void insert_beside(Rotation& rot, Vertex host, Vertex v, Vertex side, Vertex x) {
  auto& row = rot[host];
  const int d = static_cast<int>(row.size());
  const int p = index_of(row, v);
  if (row[(p + d - 1) % d] == side) {
    row.insert(row.begin() + p, x);
  } else {
    row.insert(row.begin() + p + 1, x);
  }
}

// Diagonal flip of edge uv in a triangulation. Preconditions (adjacent, the
// two opposite vertices not adjacent) are checked by the caller.
inline void flip_rotation(Rotation& rot, Vertex u, Vertex v) {
  auto& ru = rot[u];
  const int d = static_cast<int>(ru.size());
  const int p = index_of(ru, v);
  const Vertex x = ru[(p + d - 1) % d];
  const Vertex y = ru[(p + 1) % d];
  // u, v are consecutive around both x and y; the new edge takes their corner.
  insert_beside(rot, x, u, v, y);
  insert_beside(rot, y, u, v, x);
  rot[u].erase(rot[u].begin() + p);
  rot[v].erase(rot[v].begin() + index_of(rot[v], u));
}

inline std::pair<Vertex, Vertex> flip_opposites(const Rotation& rot, Vertex u, Vertex v) {
  const auto& ru = rot[u];
  const int d = static_cast<int>(ru.size());
  const int p = index_of(ru, v);
  return {ru[(p + d - 1) % d], ru[(p + 1) % d]};
}

inline bool flip_allowed(const Rotation& rot, Vertex u, Vertex v, int min_degree) {
  if (rot[u].size() <= static_cast<std::size_t>(min_degree) || rot[v].size() <= static_cast<std::size_t>(min_degree)) {
    return false;
  }
  const auto [x, y] = flip_opposites(rot, u, v);
  return x != y && index_of(rot[x], y) < 0;
}

// Cyclic arc length (vertex count) from position i to position j inclusive.
inline int arc_size(int i, int j, int d) { return ((j - i) % d + d) % d + 1; }

// Splits v: v keeps neighbors from position i to j (inclusive, forward), the
// new vertex takes j .. i, and the two become adjacent. Returns the new index.
inline Vertex split_rotation(Rotation& rot, Vertex v, int i, int j) {
  const std::vector<Vertex> r = rot[v];
  const int d = static_cast<int>(r.size());
  const Vertex w = static_cast<Vertex>(rot.size());
  const Vertex a = r[i], b = r[j];
  const Vertex before_a = r[(i + d - 1) % d];
  const Vertex after_b = r[(j + 1) % d];

  std::vector<Vertex> keep, moved;
  for (int k = i;; k = (k + 1) % d) {
    keep.push_back(r[k]);
    if (k == j) break;
  }
  for (int k = j;; k = (k + 1) % d) {
    moved.push_back(r[k]);
    if (k == i) break;
  }
  keep.push_back(w);
  moved.push_back(v);
  rot.push_back(std::move(moved));
  rot[v] = std::move(keep);

  for (std::size_t k = 1; k + 2 < rot[w].size(); ++k) {
    auto& row = rot[rot[w][k]];
    row[static_cast<std::size_t>(index_of(row, v))] = w;
  }
  insert_beside(rot, a, v, before_a, w);
  insert_beside(rot, b, v, after_b, w);
  return w;
}

inline int min_degree_of(const Rotation& rot) {
  int m = static_cast<int>(rot[0].size());
  for (const auto& row : rot) m = std::min(m, static_cast<int>(row.size()));
  return m;
}

inline void require_triangulation_min5(const PlaneGraph& g) {
  if (!is_triangulation(g)) throw std::invalid_argument("expected a triangulation");
  if (g.min_degree() < 5) throw std::invalid_argument("expected minimum degree 5");
}

}  // namespace detail

/// Flips edge uv inside its two triangles when the result stays simple with
/// minimum degree 5 (both endpoints need degree >= 6 beforehand).
inline std::optional<PlaneGraph> try_flip(const PlaneGraph& g, Vertex u, Vertex v) {
  detail::require_triangulation_min5(g);
  if (!g.adjacent(u, v)) {
    throw std::invalid_argument("try_flip: " + std::to_string(u + 1) + "-" + std::to_string(v + 1) + " is not an edge");
  }
  Rotation rot = g.rotations();
  if (!detail::flip_allowed(rot, u, v, 5)) return std::nullopt;
  detail::flip_rotation(rot, u, v);
  return PlaneGraph::from_rotation(rot);
}

/// Vertex split, the inverse of contracting an edge of a triangulation.
/// Positions i and j of rotation(v) are the two neighbors that end up adjacent
/// to both halves; v keeps the arc i..j and the new vertex (index n) the arc
/// j..i. Returns nullopt unless both halves get degree >= 5.
inline std::optional<PlaneGraph> try_split(const PlaneGraph& g, Vertex v, int i, int j) {
  detail::require_triangulation_min5(g);
  const int d = g.degree(v);
  if (i < 0 || j < 0 || i >= d || j >= d) throw std::out_of_range("try_split: cut position out of range");
  if (g.order() >= 255) return std::nullopt;
  if (i == j || detail::arc_size(i, j, d) + 1 < 5 || detail::arc_size(j, i, d) + 1 < 5) return std::nullopt;
  Rotation rot = g.rotations();
  detail::split_rotation(rot, v, i, j);
  return PlaneGraph::from_rotation(rot);
}

/// Parameters of a seeded random corpus.
struct GenConfig {
  std::uint64_t seed = 1;
  int count = 100;
  int min_n = 12;
  int max_n = 50;
  double flip_fraction = 0.5;

  void validate() const {
    if (count < 0) throw std::invalid_argument("count must be >= 0");
    if (min_n < 12) throw std::invalid_argument("min_n must be >= 12");
    if (max_n > 255) throw std::invalid_argument("max_n must be <= 255 (1-byte planar code)");
    if (min_n > max_n) throw std::invalid_argument("min_n must be <= max_n");
    if (!(flip_fraction >= 0.0 && flip_fraction <= 1.0)) throw std::invalid_argument("flip_fraction must be in [0,1]");
  }
};

inline constexpr const char* kRngDescription = "mt19937_64 seeded with splitmix64(seed + index * 0x9e3779b97f4a7c15)";

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent stream for graph `index` of a corpus.
inline std::mt19937_64 graph_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(seed + index * 0x9e3779b97f4a7c15ULL));
}

namespace detail {

class Walker {
public:
  Walker(std::mt19937_64& rng, double flip_fraction) : rng_(rng), flip_fraction_(flip_fraction) {
    rot_ = icosahedron().rotations();
    hub_bias_ = uniform() * 0.6;
  }

  /// Walks until the graph has exactly `target` vertices. False when stuck.
  bool grow_to(int target) {
    const long budget = 200L * target + 1000;
    for (long step = 0; step < budget; ++step) {
      if (order() == target) return true;
      if (uniform() < flip_fraction_) {
        random_flip();
        continue;
      }
      if (!split_once() && target - order() >= 2) double_split();
    }
    return order() == target;
  }

  [[nodiscard]] const Rotation& rotation() const { return rot_; }
  [[nodiscard]] int order() const { return static_cast<int>(rot_.size()); }

private:
  // Plain arithmetic on the engine output rather than std distributions, whose
  // algorithms differ between standard libraries.
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  int pick(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }
  int deg(Vertex v) const { return static_cast<int>(rot_[v].size()); }

  // Raises the degree of a chosen vertex x by flipping an edge of its link;
  // with probability hub_bias_ x is one of the current top-degree vertices.
  void random_flip() {
    Vertex x = pick(order());
    if (uniform() < hub_bias_) x = top_vertex();
    const int i = pick(deg(x));
    const Vertex a = rot_[x][i];
    const Vertex b = rot_[x][(i + 1) % deg(x)];
    if (flip_allowed(rot_, a, b, 5)) flip_rotation(rot_, a, b);
  }

  Vertex top_vertex() {
    std::vector<Vertex> by_deg(static_cast<std::size_t>(order()));
    for (Vertex v = 0; v < order(); ++v) by_deg[v] = v;
    std::partial_sort(by_deg.begin(), by_deg.begin() + 3, by_deg.end(),
                      [&](Vertex a, Vertex b) { return deg(a) != deg(b) ? deg(a) > deg(b) : a < b; });
    return by_deg[static_cast<std::size_t>(pick(3))];
  }

  bool split_once() {
    std::vector<Vertex> big;
    // With probability hub_bias_ split a neighbor of a top-degree vertex x
    // with x as a cut neighbor, which raises deg(x) by one.
    Vertex hub = -1;
    if (uniform() < hub_bias_) {
      hub = top_vertex();
      for (Vertex v : rot_[hub]) {
        if (deg(v) >= 6) big.push_back(v);
      }
      if (big.empty()) hub = -1;
    }
    if (hub < 0) {
      for (Vertex v = 0; v < order(); ++v) {
        if (deg(v) >= 6) big.push_back(v);
      }
    }
    if (big.empty()) return false;
    const Vertex v = big[static_cast<std::size_t>(pick(static_cast<int>(big.size())))];
    const int d = deg(v);
    // v keeps keep >= 4 neighbors and the new vertex d - keep + 2 >= 4, so both
    // halves reach degree >= 5 once joined.
    const int keep = 4 + pick(d - 5);
    const int i = hub >= 0 ? index_of(rot_[v], hub) : pick(d);
    split_rotation(rot_, v, i, (i + keep - 1) % d);
    return true;
  }

  // Growth move for graphs without a 6+-vertex (the icosahedron): split a
  // vertex into degrees 4 and 5, then split a 6-vertex next to the 4-vertex
  // so that the 4-vertex becomes one of the two cut neighbors.
  void double_split() {
    for (int attempt = 0; attempt < 64; ++attempt) {
      Rotation trial = rot_;
      const Vertex v = pick(order());
      const int d = static_cast<int>(trial[v].size());
      if (d < 5) continue;
      const int keep = 3 + pick(d - 3);  // v gets keep + 1, the new vertex d - keep + 3
      const int i = pick(d);
      const Vertex w = split_rotation(trial, v, i, (i + keep - 1) % d);
      Vertex low = -1;
      for (Vertex x : {v, w}) {
        if (trial[x].size() == 4) low = x;
      }
      if (low < 0) {
        if (min_degree_of(trial) >= 5) {
          rot_ = std::move(trial);
          return;
        }
        continue;
      }
      std::vector<Vertex> hosts;
      for (Vertex a : trial[low]) {
        if (trial[a].size() >= 6) hosts.push_back(a);
      }
      if (hosts.empty()) continue;
      const Vertex a = hosts[static_cast<std::size_t>(pick(static_cast<int>(hosts.size())))];
      const int da = static_cast<int>(trial[a].size());
      const int p = index_of(trial[a], low);
      std::vector<std::pair<int, int>> cuts;
      for (int q = 0; q < da; ++q) {
        if (q == p) continue;
        if (arc_size(p, q, da) + 1 >= 5 && arc_size(q, p, da) + 1 >= 5) cuts.emplace_back(p, q);
      }
      if (cuts.empty()) continue;
      const auto [ci, cj] = cuts[static_cast<std::size_t>(pick(static_cast<int>(cuts.size())))];
      split_rotation(trial, a, ci, cj);
      if (min_degree_of(trial) >= 5) {
        rot_ = std::move(trial);
        return;
      }
    }
  }

  std::mt19937_64& rng_;
  double flip_fraction_;
  double hub_bias_ = 0.0;
  Rotation rot_;
};

}  // namespace detail

/// One corpus member, or nullopt when the walk got stuck on every retry.
inline std::optional<PlaneGraph> generate_one(const GenConfig& cfg, std::uint64_t index) {
  auto rng = graph_rng(cfg.seed, index);
  for (int retry = 0; retry < 4; ++retry) {
    const int target = cfg.min_n + static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.max_n - cfg.min_n + 1));
    detail::Walker walker(rng, cfg.flip_fraction);
    if (!walker.grow_to(target)) continue;
    PlaneGraph g = PlaneGraph::from_rotation(walker.rotation());
    if (!is_triangulation(g) || g.min_degree() < 5) throw std::logic_error("generator produced an invalid graph");
    return g;
  }
  return std::nullopt;
}

struct Corpus {
  std::vector<PlaneGraph> graphs;
  int stuck = 0;  ///< indices whose walk never reached its target size
};

/// Calls sink(index, graph) for graphs 0..count-1 in index order, skipping
/// stuck indices. Returns the number skipped.
template <typename Sink>
int for_each_generated(const GenConfig& cfg, Sink&& sink) {
  cfg.validate();
  int stuck = 0;
  for (int i = 0; i < cfg.count; ++i) {
    if (auto g = generate_one(cfg, static_cast<std::uint64_t>(i))) {
      sink(i, std::move(*g));
    } else {
      ++stuck;
    }
  }
  return stuck;
}

inline Corpus generate_corpus(const GenConfig& cfg) {
  Corpus c;
  c.graphs.reserve(static_cast<std::size_t>(std::max(cfg.count, 0)));
  c.stuck = for_each_generated(cfg, [&](int, PlaneGraph g) { c.graphs.push_back(std::move(g)); });
  return c;
}

}  // namespace minorstar
