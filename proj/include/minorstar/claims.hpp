#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "minorstar/pattern.hpp"
#include "minorstar/plane_graph.hpp"
#include "minorstar/star_match.hpp"

namespace minorstar {

/// c * Delta + b, where Delta is the graph's maximum degree.
struct AffineBound {
  int delta_coeff = 0;
  int constant = 0;

  [[nodiscard]] int eval(int delta) const { return delta_coeff * delta + constant; }
  [[nodiscard]] std::string str() const {
    if (delta_coeff == 0) return std::to_string(constant);
    return (delta_coeff == 1 ? std::string("D") : std::to_string(delta_coeff) + "D") + "+" + std::to_string(constant);
  }
};

struct Preconditions {
  std::vector<int> forbidden_degrees;
  std::vector<CyclicPattern> forbidden_patterns;
  bool requires_three_connected = false;
  std::optional<int> min_max_degree;
};

/// Some 5-vertex centers a star of one of the listed cyclic patterns.
struct ListConclusion {
  std::vector<CyclicPattern> patterns;
};

/// Some vertex of degree <= 5 centers a star of one of the unordered patterns.
struct UnorderedConclusion {
  std::vector<UnorderedPattern> alternatives;
};

/// Some minor k-star has weight <= `weight` and height <= `height` (each
/// optional, both checked on the same star when both are present).
struct StarBoundConclusion {
  int k = 5;
  std::optional<AffineBound> weight;
  std::optional<int> height;
};

using Conclusion = std::variant<ListConclusion, UnorderedConclusion, StarBoundConclusion>;

/// A checkable statement: all conclusions must hold on every graph with
/// minimum degree 5 that meets the preconditions.
struct ClaimSpec {
  std::string id;
  std::string statement;
  Preconditions pre;
  std::vector<Conclusion> conclusions;
};

enum class Verdict { holds, vacuous, counterexample };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::vacuous: return "vacuous";
    case Verdict::counterexample: return "counterexample";
  }
  return "?";
}

struct ClaimOutcome {
  Verdict verdict = Verdict::holds;
  std::string detail;  ///< witness, unmet precondition, or scan attestation
};

namespace detail {

inline std::string vertex_label(Vertex v) { return std::to_string(v + 1); }

inline std::optional<std::string> unmet_precondition(const PlaneGraph& g, const Preconditions& pre) {
  for (Vertex v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    if (std::find(pre.forbidden_degrees.begin(), pre.forbidden_degrees.end(), d) != pre.forbidden_degrees.end()) {
      return "has a " + std::to_string(d) + "-vertex (" + vertex_label(v) + ")";
    }
  }
  if (pre.min_max_degree && g.max_degree() < *pre.min_max_degree) {
    return "maximum degree " + std::to_string(g.max_degree()) + " < " + std::to_string(*pre.min_max_degree);
  }
  for (const auto& p : pre.forbidden_patterns) {
    if (contains_cyclic(g, p)) return "contains a " + p.str() + "-star";
  }
  if (pre.requires_three_connected && !is_three_connected(g)) return "not 3-connected";
  return std::nullopt;
}

inline std::optional<std::string> witness(const PlaneGraph& g, const ListConclusion& c) {
  if (auto m = find_listed_star(g, c.patterns)) {
    return m->pattern.str() + " at " + vertex_label(m->center);
  }
  return std::nullopt;
}

inline std::optional<std::string> witness(const PlaneGraph& g, const UnorderedConclusion& c) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 5) continue;
    for (const auto& p : c.alternatives) {
      if (match_unordered(g, v, p)) return "minor " + p.str() + "-star at " + vertex_label(v);
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> witness(const PlaneGraph& g, const StarBoundConclusion& c) {
  const int delta = g.max_degree();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 5) continue;
    const auto m = lightest_star_at(g, v, c.k);
    if (!m) continue;
    if (c.weight && m->weight > c.weight->eval(delta)) continue;
    if (c.height && m->height > *c.height) continue;
    return "minor " + std::to_string(c.k) + "-star at " + vertex_label(v) + " weight " + std::to_string(m->weight) +
           " height " + std::to_string(m->height);
  }
  return std::nullopt;
}

inline std::string describe(const Conclusion& c) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ListConclusion>) {
          return "one of " + std::to_string(x.patterns.size()) + " listed stars";
        } else if constexpr (std::is_same_v<T, UnorderedConclusion>) {
          std::string s = "minor ";
          for (std::size_t i = 0; i < x.alternatives.size(); ++i) s += (i ? " or " : "") + x.alternatives[i].str();
          return s + "-star";
        } else {
          std::string s = "minor " + std::to_string(x.k) + "-star with";
          if (x.weight) s += " weight <= " + x.weight->str();
          if (x.weight && x.height) s += " and";
          if (x.height) s += " height <= " + std::to_string(*x.height);
          return s;
        }
      },
      c);
}

}  // namespace detail

/// Vacuous when a precondition fails; otherwise an exhaustive scan of every
/// candidate center decides holds or counterexample.
inline ClaimOutcome check_claim(const PlaneGraph& g, const ClaimSpec& claim) {
  require_min_degree_five(g);
  if (auto why = detail::unmet_precondition(g, claim.pre)) return {Verdict::vacuous, *why};
  std::string found;
  for (const auto& c : claim.conclusions) {
    const auto w = std::visit([&](const auto& x) { return detail::witness(g, x); }, c);
    if (!w) {
      int centers = 0;
      for (Vertex v = 0; v < g.order(); ++v) centers += g.degree(v) <= 5 ? 1 : 0;
      return {Verdict::counterexample,
              "no " + detail::describe(c) + " (scanned all " + std::to_string(centers) + " minor centers)"};
    }
    found += (found.empty() ? "" : "; ") + *w;
  }
  return {Verdict::holds, found};
}

namespace detail {

inline Preconditions forbid(std::vector<int> degrees, std::vector<std::string_view> patterns = {},
                            bool three_connected = false, std::optional<int> min_delta = std::nullopt) {
  Preconditions p;
  p.forbidden_degrees = std::move(degrees);
  for (auto s : patterns) p.forbidden_patterns.push_back(parse_cyclic(s));
  p.requires_three_connected = three_connected;
  p.min_max_degree = min_delta;
  return p;
}

inline ListConclusion listed(std::initializer_list<std::string_view> items) {
  ListConclusion c;
  for (auto s : items) c.patterns.push_back(parse_cyclic(s));
  return c;
}

inline UnorderedConclusion any_of(std::initializer_list<std::string_view> items) {
  UnorderedConclusion c;
  for (auto s : items) c.alternatives.push_back(parse_unordered(s));
  return c;
}

inline StarBoundConclusion star_bound(int k, std::optional<AffineBound> w, std::optional<int> h) {
  return StarBoundConclusion{k, w, h};
}

}  // namespace detail

/// Every statement checked by `verify`, in report order.
inline const std::vector<ClaimSpec>& claim_registry() {
  using detail::any_of;
  using detail::forbid;
  using detail::listed;
  using detail::star_bound;
  static const std::vector<ClaimSpec> registry = [] {
    std::vector<ClaimSpec> r;
    r.push_back({"MR1", "contains one of the 34 stars of the first description", {},
                 {ListConclusion{theorem1_list()}}});
    r.push_back({"MR2", "contains one of the 40 stars of the second description", {},
                 {ListConclusion{theorem2_list()}}});
    r.push_back({"T2", "3-polytope with Delta >= 13 has a minor 5-star of weight <= Delta + 29",
                 forbid({}, {}, true, 13), {star_bound(5, AffineBound{1, 29}, std::nullopt)}});
    r.push_back({"T3", "minor 4-star of weight <= 30", {}, {star_bound(4, AffineBound{0, 30}, std::nullopt)}});
    r.push_back({"T4", "minor (10,10,10,10)-star", {}, {any_of({"(10,10,10,10)"})}});
    r.push_back({"T5", "minor (5,6,7)-star or minor (6,6,6)-star", {}, {any_of({"(5,6,7)", "(6,6,6)"})}});
    r.push_back({"T6", "(6,5,6)-path: a 5-vertex with two 6--neighbors", {}, {any_of({"(6,6)"})}});
    r.push_back({"T7", "(5,6)-edge: a 5-vertex adjacent to a 6--vertex", {}, {any_of({"(6)"})}});
    r.push_back({"NO78", "no 7- and 8-vertices: one of 7 listed stars", forbid({7, 8}),
                 {listed({"<5,6,6,5,*>", "<5,6,6,6,17>", "<6,6,6,6,11>", "<5,6,9,5,10>", "<5,6,11,5,9>",
                          "<5,5,10,5,12>", "<5,5,9,5,17>"})}});
    r.push_back({"NO79", "no vertices of degree 7..9: one of 4 listed stars", forbid({7, 8, 9}),
                 {listed({"<5,6,6,5,*>", "<5,6,6,6,17>", "<6,6,6,6,11>", "<5,5,10,5,12>"})}});
    r.push_back({"NO711", "no vertices of degree 7..11: one of 3 listed stars", forbid({7, 8, 9, 10, 11}),
                 {listed({"<5,6,6,5,*>", "<5,6,6,6,17>", "<6,6,6,6,6>"})}});
    // The hypothesis star is printed with angle brackets; read as cyclic.
    r.push_back({"NO6",
                 "3-polytope without degrees 6..9 and without <5,5,5,5,*>-stars: minor 5-star of weight <= 42 "
                 "and minor 5-star of height <= 12",
                 forbid({6, 7, 8, 9}, {"<5,5,5,5,*>"}, true),
                 {star_bound(5, AffineBound{0, 42}, std::nullopt), star_bound(5, std::nullopt, 12)}});
    r.push_back({"MR2-D28", "Delta >= 16: minor 5-star of weight <= Delta + 28", forbid({}, {}, false, 16),
                 {star_bound(5, AffineBound{1, 28}, std::nullopt)}});
    r.push_back({"MR2-W45", "no <5,6,6,5,*>- and <5,6,7,5,23>-stars: minor 5-star of weight <= 45 and height <= 17",
                 forbid({}, {"<5,6,6,5,*>", "<5,6,7,5,23>"}), {star_bound(5, AffineBound{0, 45}, 17)}});
    r.push_back({"MR2-W44",
                 "no <5,5,5,5,*>-stars, no 6- and 7-vertices: minor 5-star of weight <= 44 and height <= 15",
                 forbid({6, 7}, {"<5,5,5,5,*>"}), {star_bound(5, AffineBound{0, 44}, 15)}});
    r.push_back({"WH", "no <5,6,6,5,*>-stars: minor 5-star of weight <= 51 and height <= 23",
                 forbid({}, {"<5,6,6,5,*>"}), {star_bound(5, AffineBound{0, 51}, 23)}});
    return r;
  }();
  return registry;
}

inline const ClaimSpec& find_claim(std::string_view id) {
  for (const auto& c : claim_registry()) {
    if (c.id == id) return c;
  }
  throw std::invalid_argument("unknown claim id '" + std::string(id) + "'");
}

/// "all" or a comma-separated list of claim ids.
inline std::vector<ClaimSpec> select_claims(std::string_view selector) {
  if (selector == "all") return claim_registry();
  std::vector<ClaimSpec> out;
  while (!selector.empty()) {
    const auto comma = selector.find(',');
    const auto id = detail::trim(selector.substr(0, comma));
    if (!id.empty()) out.push_back(find_claim(id));
    if (comma == std::string_view::npos) break;
    selector.remove_prefix(comma + 1);
  }
  if (out.empty()) throw std::invalid_argument("empty claim selection");
  return out;
}

}  // namespace minorstar
