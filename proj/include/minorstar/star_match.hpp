#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorstar/pattern.hpp"
#include "minorstar/plane_graph.hpp"

namespace minorstar {

/// Classification of a 5-vertex at cyclic position i around a host vertex.
/// All flags are false for a 6+-neighbor.
struct NeighborClass {
  bool strong = false;
  bool non_strong = false;
  bool weak = false;
  bool twice_weak = false;

  [[nodiscard]] bool is_five() const { return strong || non_strong; }
  friend bool operator==(const NeighborClass&, const NeighborClass&) = default;
};

/// `degrees` lists the degrees of the host's neighbors in rotation order.
inline NeighborClass classify_position(std::span<const int> degrees, int i) {
  const int k = static_cast<int>(degrees.size());
  if (i < 0 || i >= k) throw std::out_of_range("neighbor position " + std::to_string(i) + " out of range");
  auto deg = [&](int j) { return degrees[static_cast<std::size_t>(((i + j) % k + k) % k)]; };
  NeighborClass c;
  if (deg(0) != 5) return c;
  c.strong = deg(-1) >= 6 && deg(1) >= 6;
  c.non_strong = !c.strong;
  c.weak = deg(-1) == 5 && deg(1) == 5;
  c.twice_weak = c.weak && deg(-2) == 5 && deg(2) == 5;
  return c;
}

inline std::vector<int> neighbor_degrees(const PlaneGraph& g, Vertex v) {
  std::vector<int> d;
  d.reserve(static_cast<std::size_t>(g.degree(v)));
  for (Vertex u : g.rotation(v)) d.push_back(g.degree(u));
  return d;
}

inline NeighborClass classify_neighbor(const PlaneGraph& g, Vertex v, int i) {
  if (i < 0 || i >= g.degree(v)) {
    throw std::out_of_range("position " + std::to_string(i) + " out of range for vertex " + std::to_string(v + 1));
  }
  const auto d = neighbor_degrees(g, v);
  return classify_position(d, i);
}

enum class Orientation { forward, reflected };

inline const char* to_string(Orientation o) { return o == Orientation::forward ? "forward" : "reflected"; }

/// Rotation index of the leaf sitting at pattern position j.
inline int aligned_index(int offset, Orientation o, int j) {
  return o == Orientation::forward ? (offset + j) % 5 : ((offset - j) % 5 + 5) % 5;
}

struct Alignment {
  int offset = 0;
  Orientation orientation = Orientation::forward;
};

/// All alignments (offset ascending, forward before reflected) under which
/// five leaf degrees, given in rotation order, fit the pattern.
inline std::vector<Alignment> cyclic_alignments(std::span<const int, 5> leaf_degrees, const CyclicPattern& p) {
  std::vector<Alignment> out;
  for (int r = 0; r < 5; ++r) {
    for (Orientation o : {Orientation::forward, Orientation::reflected}) {
      bool ok = true;
      for (int j = 0; j < 5 && ok; ++j) ok = p.bounds[j].admits(leaf_degrees[aligned_index(r, o, j)]);
      if (ok) out.push_back({r, o});
    }
  }
  return out;
}

inline bool cyclic_fits(std::span<const int, 5> leaf_degrees, const CyclicPattern& p) {
  for (int r = 0; r < 5; ++r) {
    for (Orientation o : {Orientation::forward, Orientation::reflected}) {
      bool ok = true;
      for (int j = 0; j < 5 && ok; ++j) ok = p.bounds[j].admits(leaf_degrees[aligned_index(r, o, j)]);
      if (ok) return true;
    }
  }
  return false;
}

/// A matched minor star. Leaves are listed in pattern order, i.e. leaves[j]
/// is the neighbor checked against bound j.
struct StarMatch {
  Vertex center = -1;
  std::vector<Vertex> leaves;
  CyclicPattern pattern;
  int list_position = 0;  ///< 1-based position in the scanned list, 0 if none
  Orientation orientation = Orientation::forward;
  int offset = 0;
  int weight = 0;
  int height = 0;
};

inline std::vector<StarMatch> match_cyclic(const PlaneGraph& g, Vertex v, const CyclicPattern& p) {
  std::vector<StarMatch> out;
  if (g.degree(v) != 5) return out;
  const auto rot = g.rotation(v);
  std::array<int, 5> deg{};
  for (int i = 0; i < 5; ++i) deg[i] = g.degree(rot[i]);
  for (const Alignment& a : cyclic_alignments(deg, p)) {
    StarMatch m;
    m.center = v;
    m.pattern = p;
    m.orientation = a.orientation;
    m.offset = a.offset;
    m.weight = 5;
    m.height = 5;
    for (int j = 0; j < 5; ++j) {
      const Vertex leaf = rot[aligned_index(a.offset, a.orientation, j)];
      m.leaves.push_back(leaf);
      m.weight += g.degree(leaf);
      m.height = std::max(m.height, g.degree(leaf));
    }
    out.push_back(std::move(m));
  }
  return out;
}

/// True when some 5-vertex of g is the center of a p-star.
inline bool contains_cyclic(const PlaneGraph& g, const CyclicPattern& p) {
  std::array<int, 5> deg{};
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 5) continue;
    for (int i = 0; i < 5; ++i) deg[i] = g.degree(g.neighbor(v, i));
    if (cyclic_fits(deg, p)) return true;
  }
  return false;
}

inline void require_min_degree_five(const PlaneGraph& g) {
  if (g.min_degree() < 5) {
    throw std::invalid_argument("graph has minimum degree " + std::to_string(g.min_degree()) + ", expected 5");
  }
}

/// First match scanning patterns in list order, then vertices ascending, then
/// alignment order.
inline std::optional<StarMatch> find_listed_star(const PlaneGraph& g, const std::vector<CyclicPattern>& list) {
  require_min_degree_five(g);
  std::vector<std::array<int, 5>> degs(static_cast<std::size_t>(g.order()));
  std::vector<Vertex> centers;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 5) continue;
    centers.push_back(v);
    for (int i = 0; i < 5; ++i) degs[v][i] = g.degree(g.neighbor(v, i));
  }
  for (std::size_t k = 0; k < list.size(); ++k) {
    for (Vertex v : centers) {
      if (!cyclic_fits(degs[v], list[k])) continue;
      StarMatch m = match_cyclic(g, v, list[k]).front();
      m.list_position = static_cast<int>(k) + 1;
      return m;
    }
  }
  return std::nullopt;
}

/// Greedy assignment: the k smallest neighbor degrees against the bounds in
/// ascending order. Equivalent to searching all injective assignments.
inline bool unordered_fits(std::span<const int> neighbor_degrees, const UnorderedPattern& p) {
  const std::size_t k = p.rays();
  if (k == 0 || neighbor_degrees.size() < k) return false;
  std::vector<int> d(neighbor_degrees.begin(), neighbor_degrees.end());
  std::partial_sort(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(k), d.end());
  std::vector<Bound> b = p.bounds;
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < k; ++i) {
    if (!b[i].admits(d[i])) return false;
  }
  return true;
}

inline bool match_unordered(const PlaneGraph& g, Vertex v, const UnorderedPattern& p) {
  return unordered_fits(neighbor_degrees(g, v), p);
}

/// True when some vertex of degree at most 5 centers a p-star.
inline bool contains_minor_unordered(const PlaneGraph& g, const UnorderedPattern& p) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) <= 5 && match_unordered(g, v, p)) return true;
  }
  return false;
}

/// Weight and height of the lightest k-star centered at v (the k smallest
/// neighbor degrees minimize both at once), or nullopt when deg(v) < k.
struct StarMeasure {
  int weight = 0;
  int height = 0;
};

inline std::optional<StarMeasure> lightest_star_at(const PlaneGraph& g, Vertex v, int k) {
  if (g.degree(v) < k) return std::nullopt;
  auto d = neighbor_degrees(g, v);
  std::partial_sort(d.begin(), d.begin() + k, d.end());
  StarMeasure m{g.degree(v), g.degree(v)};
  for (int i = 0; i < k; ++i) {
    m.weight += d[i];
    m.height = std::max(m.height, d[i]);
  }
  return m;
}

namespace detail {

template <typename Pick>
std::optional<int> best_minor_star(const PlaneGraph& g, int k, Pick pick) {
  if (k < 1 || k > 5) throw std::invalid_argument("star size must be in 1..5");
  std::optional<int> best;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 5) continue;
    if (auto m = lightest_star_at(g, v, k)) {
      const int x = pick(*m);
      if (!best || x < *best) best = x;
    }
  }
  return best;
}

}  // namespace detail

inline std::optional<int> min_weight_minor_star(const PlaneGraph& g, int k) {
  return detail::best_minor_star(g, k, [](const StarMeasure& m) { return m.weight; });
}

inline std::optional<int> min_height_minor_star(const PlaneGraph& g, int k) {
  return detail::best_minor_star(g, k, [](const StarMeasure& m) { return m.height; });
}

}  // namespace minorstar
