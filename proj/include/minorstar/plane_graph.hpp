#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minorstar {

/// 0-based vertex index. File formats use 1-based indices; conversion happens
/// only at the parse/encode boundary.
using Vertex = int;

/// Per-vertex cyclic neighbor order. This is the mutable working form used by
/// constructions; PlaneGraph is the validated immutable form.
using Rotation = std::vector<std::vector<Vertex>>;

enum class GraphErrorKind {
  empty,
  out_of_range,
  loop,
  duplicate_neighbor,
  asymmetric,
  disconnected,
  not_planar_embedding,
};

inline const char* to_string(GraphErrorKind k) {
  switch (k) {
    case GraphErrorKind::empty: return "empty graph";
    case GraphErrorKind::out_of_range: return "neighbor index out of range";
    case GraphErrorKind::loop: return "loop";
    case GraphErrorKind::duplicate_neighbor: return "duplicate neighbor";
    case GraphErrorKind::asymmetric: return "asymmetric adjacency";
    case GraphErrorKind::disconnected: return "disconnected graph";
    case GraphErrorKind::not_planar_embedding: return "genus is not 0";
  }
  return "unknown";
}

/// Structural rejection of a rotation system. `vertex` is the 0-based vertex
/// whose list exposed the problem, or -1 when the problem is global.
class GraphError : public std::runtime_error {
public:
  GraphError(GraphErrorKind kind, Vertex vertex, const std::string& detail)
      : std::runtime_error(detail), kind_(kind), vertex_(vertex) {}

  [[nodiscard]] GraphErrorKind kind() const { return kind_; }
  [[nodiscard]] Vertex vertex() const { return vertex_; }

private:
  GraphErrorKind kind_;
  Vertex vertex_;
};

/// Simple connected plane graph given by a rotation system.
///
/// Adjacency is stored in CSR form together with, for every dart u->v, the
/// position of u in the rotation of v. That twin index makes face tracing and
/// "what comes after u around v" queries O(1).
///
/// Invariants established by from_rotation():
///   - every neighbor index is in range, no loops, no repeated neighbors;
///   - u is in rotation(v) iff v is in rotation(u);
///   - connected;
///   - n - E + F = 2 where F is the number of traced face cycles.
class PlaneGraph {
public:
  PlaneGraph() = default;

  static PlaneGraph from_rotation(const Rotation& rot) {
    PlaneGraph g;
    const int n = static_cast<int>(rot.size());
    if (n == 0) throw GraphError(GraphErrorKind::empty, -1, "graph has no vertices");

    g.offset_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) g.offset_[v + 1] = g.offset_[v] + static_cast<int>(rot[v].size());
    g.adj_.reserve(static_cast<std::size_t>(g.offset_[n]));
    for (int v = 0; v < n; ++v) {
      for (Vertex u : rot[v]) {
        if (u < 0 || u >= n) {
          throw GraphError(GraphErrorKind::out_of_range, v,
                           "vertex " + std::to_string(v + 1) + ": neighbor " + std::to_string(u + 1) +
                               " out of range 1.." + std::to_string(n));
        }
        if (u == v) throw GraphError(GraphErrorKind::loop, v, "vertex " + std::to_string(v + 1) + " has a loop");
        g.adj_.push_back(u);
      }
    }

    // Position lookup through a per-vertex sorted index keeps this O(E log d).
    std::vector<std::vector<std::pair<Vertex, int>>> sorted(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sorted[v];
      s.reserve(rot[v].size());
      for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) s.emplace_back(rot[v][i], i);
      std::sort(s.begin(), s.end());
      for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i].first == s[i - 1].first) {
          throw GraphError(GraphErrorKind::duplicate_neighbor, v,
                           "vertex " + std::to_string(v + 1) + " lists neighbor " +
                               std::to_string(s[i].first + 1) + " twice");
        }
      }
    }
    g.twin_.assign(g.adj_.size(), -1);
    for (int v = 0; v < n; ++v) {
      for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) {
        const Vertex u = rot[v][i];
        const auto& s = sorted[u];
        auto it = std::lower_bound(s.begin(), s.end(), std::pair<Vertex, int>{v, -1});
        if (it == s.end() || it->first != v) {
          throw GraphError(GraphErrorKind::asymmetric, v,
                           "vertex " + std::to_string(v + 1) + " lists " + std::to_string(u + 1) +
                               " but not vice versa");
        }
        g.twin_[static_cast<std::size_t>(g.offset_[v] + i)] = it->second;
      }
    }

    // Connectivity.
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
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
    if (reached != n) {
      const auto first = static_cast<Vertex>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
      throw GraphError(GraphErrorKind::disconnected, first,
                       "graph is disconnected: vertex " + std::to_string(first + 1) + " unreachable from vertex 1");
    }

    const int faces = g.count_faces();
    const int euler = n - g.size() + faces;
    if (euler != 2) {
      throw GraphError(GraphErrorKind::not_planar_embedding, -1,
                       "rotation system has n - E + F = " + std::to_string(euler) + ", expected 2");
    }
    return g;
  }

  [[nodiscard]] int order() const { return offset_.empty() ? 0 : static_cast<int>(offset_.size()) - 1; }
  [[nodiscard]] int size() const { return static_cast<int>(adj_.size()) / 2; }
  [[nodiscard]] int degree(Vertex v) const { return offset_[v + 1] - offset_[v]; }

  [[nodiscard]] std::span<const Vertex> rotation(Vertex v) const {
    return {adj_.data() + offset_[v], static_cast<std::size_t>(degree(v))};
  }

  /// Neighbor at cyclic position i (any integer, taken mod deg(v)).
  [[nodiscard]] Vertex neighbor(Vertex v, int i) const {
    const int d = degree(v);
    return adj_[static_cast<std::size_t>(offset_[v] + ((i % d) + d) % d)];
  }

  /// Position of u in rotation(v), or -1 when not adjacent.
  [[nodiscard]] int position(Vertex v, Vertex u) const {
    const auto r = rotation(v);
    const auto it = std::find(r.begin(), r.end(), u);
    return it == r.end() ? -1 : static_cast<int>(it - r.begin());
  }

  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return position(u, v) >= 0; }

  /// Position of v in rotation(neighbor(v, i)).
  [[nodiscard]] int twin_position(Vertex v, int i) const { return twin_[static_cast<std::size_t>(offset_[v] + i)]; }

  [[nodiscard]] int min_degree() const {
    int m = degree(0);
    for (int v = 1; v < order(); ++v) m = std::min(m, degree(v));
    return m;
  }
  [[nodiscard]] int max_degree() const {
    int m = degree(0);
    for (int v = 1; v < order(); ++v) m = std::max(m, degree(v));
    return m;
  }

  [[nodiscard]] Rotation rotations() const {
    Rotation r(static_cast<std::size_t>(order()));
    for (int v = 0; v < order(); ++v) r[v].assign(rotation(v).begin(), rotation(v).end());
    return r;
  }

  friend bool operator==(const PlaneGraph& a, const PlaneGraph& b) {
    return a.offset_ == b.offset_ && a.adj_ == b.adj_;
  }

  // Dart helpers: a dart is the index offset(u) + i for the edge u -> neighbor(u, i).
  [[nodiscard]] int dart_count() const { return static_cast<int>(adj_.size()); }
  [[nodiscard]] int dart(Vertex u, int i) const { return offset_[u] + i; }
  [[nodiscard]] Vertex dart_head(int d) const { return adj_[static_cast<std::size_t>(d)]; }
  [[nodiscard]] Vertex dart_tail(int d) const {
    return static_cast<Vertex>(std::upper_bound(offset_.begin(), offset_.end(), d) - offset_.begin()) - 1;
  }
  /// Next dart along the face to the left of d: arriving at v from u, leave
  /// towards the neighbor following u in rotation(v).
  [[nodiscard]] int face_next(int d) const {
    const Vertex v = adj_[static_cast<std::size_t>(d)];
    const int j = twin_[static_cast<std::size_t>(d)];
    return offset_[v] + (j + 1) % degree(v);
  }

private:
  int count_faces() const {
    if (adj_.empty()) return 1;
    std::vector<char> used(adj_.size(), 0);
    int faces = 0;
    for (int d0 = 0; d0 < dart_count(); ++d0) {
      if (used[static_cast<std::size_t>(d0)]) continue;
      ++faces;
      for (int d = d0; !used[static_cast<std::size_t>(d)]; d = face_next(d)) used[static_cast<std::size_t>(d)] = 1;
    }
    return faces;
  }

  std::vector<int> offset_;
  std::vector<Vertex> adj_;
  std::vector<int> twin_;
};

/// Directed boundary walks of all faces.
struct FaceSet {
  std::vector<std::vector<Vertex>> faces;

  [[nodiscard]] std::size_t count() const { return faces.size(); }
  [[nodiscard]] std::size_t total_length() const {
    std::size_t s = 0;
    for (const auto& f : faces) s += f.size();
    return s;
  }
};

/// Traces every face once. Faces are emitted in order of their lexicographically
/// smallest dart (tail, head); each walk starts at that dart.
inline FaceSet trace_faces(const PlaneGraph& g) {
  FaceSet out;
  std::vector<char> used(static_cast<std::size_t>(g.dart_count()), 0);
  std::vector<std::pair<Vertex, int>> order;
  for (Vertex u = 0; u < g.order(); ++u) {
    order.clear();
    const auto r = g.rotation(u);
    for (int i = 0; i < static_cast<int>(r.size()); ++i) order.emplace_back(r[i], i);
    std::sort(order.begin(), order.end());
    for (const auto& [head, i] : order) {
      const int d0 = g.dart(u, i);
      if (used[static_cast<std::size_t>(d0)]) continue;
      std::vector<Vertex> walk;
      int d = d0;
      Vertex tail = u;
      while (!used[static_cast<std::size_t>(d)]) {
        used[static_cast<std::size_t>(d)] = 1;
        walk.push_back(tail);
        tail = g.dart_head(d);
        d = g.face_next(d);
      }
      out.faces.push_back(std::move(walk));
    }
  }
  // An isolated vertex lies on the single face of the sphere.
  if (g.order() == 1) out.faces.push_back({0});
  return out;
}

inline bool is_triangulation(const PlaneGraph& g) {
  if (g.size() == 0) return false;
  std::vector<char> used(static_cast<std::size_t>(g.dart_count()), 0);
  for (int d0 = 0; d0 < g.dart_count(); ++d0) {
    if (used[static_cast<std::size_t>(d0)]) continue;
    int len = 0;
    for (int d = d0; !used[static_cast<std::size_t>(d)]; d = g.face_next(d)) {
      used[static_cast<std::size_t>(d)] = 1;
      ++len;
    }
    if (len != 3) return false;
  }
  return true;
}

/// Same embedding up to the starting point of each cyclic rotation.
inline bool same_embedding(const PlaneGraph& a, const PlaneGraph& b) {
  if (a.order() != b.order()) return false;
  for (Vertex v = 0; v < a.order(); ++v) {
    const auto ra = a.rotation(v);
    const auto rb = b.rotation(v);
    if (ra.size() != rb.size()) return false;
    if (ra.empty()) continue;
    const auto it = std::find(rb.begin(), rb.end(), ra[0]);
    if (it == rb.end()) return false;
    const auto shift = static_cast<std::size_t>(it - rb.begin());
    for (std::size_t i = 0; i < ra.size(); ++i) {
      if (ra[i] != rb[(i + shift) % rb.size()]) return false;
    }
  }
  return true;
}

/// Reverses every rotation: the same abstract plane graph seen from the other side.
inline PlaneGraph mirror(const PlaneGraph& g) {
  Rotation r = g.rotations();
  for (auto& row : r) std::reverse(row.begin(), row.end());
  return PlaneGraph::from_rotation(r);
}

namespace detail {

// Inserts `x` into the corner of rot[v] that lies right after neighbor `after`.
inline void insert_after(Rotation& rot, Vertex v, Vertex after, Vertex x) {
  auto& row = rot[v];
  const auto it = std::find(row.begin(), row.end(), after);
  if (it == row.end()) throw std::logic_error("insert_after: corner neighbor missing");
  row.insert(it + 1, x);
}

inline bool row_contains(const std::vector<Vertex>& row, Vertex x) {
  return std::find(row.begin(), row.end(), x) != row.end();
}

}  // namespace detail

/// Completes g to a triangulation by repeatedly inserting a diagonal into a
/// 4+-face. For consecutive boundary vertices w1 w2 w3 w4 the chord w1w3 is
/// used when absent, otherwise w2w4. Windows whose chord would be a loop or a
/// parallel edge (possible only on faces that revisit a cut vertex) are skipped.
inline PlaneGraph triangulate(const PlaneGraph& input) {
  PlaneGraph g = input;
  while (true) {
    const FaceSet fs = trace_faces(g);
    const auto big = std::find_if(fs.faces.begin(), fs.faces.end(), [](const auto& f) { return f.size() >= 4; });
    if (big == fs.faces.end()) return g;

    const auto& f = *big;
    const int len = static_cast<int>(f.size());
    auto at = [&](int k) { return f[static_cast<std::size_t>(((k % len) + len) % len)]; };
    Rotation rot = g.rotations();
    bool inserted = false;
    for (int k = 0; k < len && !inserted; ++k) {
      const Vertex w0 = at(k - 1), w1 = at(k), w2 = at(k + 1), w3 = at(k + 2), w4 = at(k + 3);
      // The face corner at walk position k sits right after the incoming vertex.
      if (w1 != w3 && !g.adjacent(w1, w3)) {
        detail::insert_after(rot, w1, w0, w3);
        detail::insert_after(rot, w3, w2, w1);
        inserted = true;
      } else if (w2 != w4 && !g.adjacent(w2, w4)) {
        detail::insert_after(rot, w2, w1, w4);
        detail::insert_after(rot, w4, w3, w2);
        inserted = true;
      }
    }
    if (!inserted) throw std::logic_error("triangulate: no insertable diagonal in a 4+-face");
    g = PlaneGraph::from_rotation(rot);
  }
}

namespace detail {

// True when the graph minus `removed` (which may be -1) is connected and has
// no articulation point.
inline bool biconnected_without(const PlaneGraph& g, Vertex removed) {
  const int n = g.order();
  const Vertex root = removed == 0 ? 1 : 0;
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<int> parent(static_cast<std::size_t>(n), -1), next(static_cast<std::size_t>(n), 0);
  int timer = 0;
  int root_children = 0;
  std::vector<Vertex> stack{root};
  disc[root] = low[root] = timer++;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    if (next[v] < g.degree(v)) {
      const Vertex u = g.neighbor(v, next[v]++);
      if (u == removed) continue;
      if (disc[u] < 0) {
        parent[u] = v;
        disc[u] = low[u] = timer++;
        if (v == root) ++root_children;
        stack.push_back(u);
      } else if (u != parent[v]) {
        low[v] = std::min(low[v], disc[u]);
      }
    } else {
      stack.pop_back();
      const Vertex p = parent[v];
      if (p >= 0) {
        low[p] = std::min(low[p], low[v]);
        if (p != root && low[v] >= disc[p]) return false;
      }
    }
  }
  const int expected = removed >= 0 ? n - 1 : n;
  if (timer != expected) return false;
  return root_children <= 1;
}

}  // namespace detail

/// 3-connectivity: no vertex pair separates the graph. For each vertex x we
/// require G - x to be biconnected, which is O(n (n + E)).
inline bool is_three_connected(const PlaneGraph& g) {
  if (g.order() < 4) throw std::invalid_argument("is_three_connected requires at least 4 vertices");
  for (Vertex x = 0; x < g.order(); ++x) {
    if (!detail::biconnected_without(g, x)) return false;
  }
  return true;
}

}  // namespace minorstar
