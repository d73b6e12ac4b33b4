#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "minorstar/plane_graph.hpp"
#include "minorstar/rational.hpp"
#include "minorstar/star_match.hpp"

namespace minorstar {

using Charge = Rational;

/// Which of the two rule systems to run. Each belongs to one of the two
/// cyclic star lists: a triangulation avoiding every star of the list would
/// end with all charges nonnegative.
enum class RuleSet { theorem1, theorem2 };

inline const char* to_string(RuleSet s) { return s == RuleSet::theorem1 ? "thm1" : "thm2"; }

/// Face-charge weight for hubs of degree k in the first rule system.
inline Charge alpha(int k) {
  if (k < 8) throw std::invalid_argument("alpha is defined for degree >= 8, got " + std::to_string(k));
  if (k == 11) return Charge(2, 5);
  if (k == 13 || k == 14) return Charge(1, 2);
  return Charge(k - 6, k);
}

/// Face-charge weight for hubs of degree k in the second rule system.
inline Charge beta(int k) {
  if (k < 8) throw std::invalid_argument("beta is defined for degree >= 8, got " + std::to_string(k));
  return Charge(k - 6, k);
}

/// One fired rule instance moving charge from sender to receiver.
///
/// `anchor` is the matched local configuration (center first). `hub` is set
/// for relayed transfers: the 9-, 10- or 11-vertex on whose behalf a 6+
/// neighbor passes charge on.
struct Transfer {
  std::string_view rule;
  Vertex sender = -1;
  Vertex receiver = -1;
  Charge amount;
  std::vector<Vertex> anchor;
  std::optional<Vertex> hub;
};

struct DischargeResult {
  RuleSet rule_set = RuleSet::theorem1;
  std::vector<Charge> initial;
  std::vector<Transfer> ledger;
  std::vector<Charge> final_charge;

  [[nodiscard]] Charge total_initial() const {
    Charge s;
    for (const auto& c : initial) s += c;
    return s;
  }
  [[nodiscard]] Charge total_final() const {
    Charge s;
    for (const auto& c : final_charge) s += c;
    return s;
  }
};

/// Knobs for the enumeration order of the 5-vertex rules. The fired instance
/// set must not depend on them; tests use them to check that.
struct EnumerationOrder {
  int first_offset = 0;
  bool reflected_first = false;
};

namespace detail {

class LedgerBuilder {
public:
  void add(std::string_view rule, Vertex from, Vertex to, const Charge& amount, std::vector<Vertex> anchor,
           std::optional<Vertex> hub = std::nullopt) {
    if (!amount.is_positive()) return;
    items_.push_back(Transfer{rule, from, to, amount, std::move(anchor), hub});
  }

  // Sorts and removes duplicate instances. Two transfers are the same instance
  // when rule, sender, receiver, amount and the anchor *set* agree; among
  // duplicates the lexicographically smallest ordered anchor is kept.
  std::vector<Transfer> finish() && {
    struct Keyed {
      std::vector<Vertex> anchor_set;
      Transfer t;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(items_.size());
    for (auto& t : items_) {
      std::vector<Vertex> s = t.anchor;
      std::sort(s.begin(), s.end());
      keyed.push_back({std::move(s), std::move(t)});
    }
    auto key = [](const Keyed& k) {
      return std::tie(k.t.rule, k.t.sender, k.t.receiver, k.anchor_set, k.t.amount);
    };
    std::sort(keyed.begin(), keyed.end(), [&](const Keyed& a, const Keyed& b) {
      if (key(a) != key(b)) return key(a) < key(b);
      return std::tie(a.t.anchor, a.t.hub) < std::tie(b.t.anchor, b.t.hub);
    });
    std::vector<Transfer> out;
    out.reserve(keyed.size());
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      if (i > 0 && key(keyed[i]) == key(keyed[i - 1])) continue;
      out.push_back(std::move(keyed[i].t));
    }
    return out;
  }

private:
  std::vector<Transfer> items_;
};

struct Local {
  const PlaneGraph& g;
  Vertex v;
  int d;

  [[nodiscard]] Vertex at(int i) const { return g.neighbor(v, i); }
  [[nodiscard]] int deg_at(int i) const { return g.degree(at(i)); }
};

// Hub face rule shared by both systems: a k-vertex w on face w a b sends
// `weight`/2 to each of two 5-vertices, or `weight` to a lone 5-vertex.
inline void face_rule(LedgerBuilder& lb, const Local& h, const Charge& weight) {
  const Charge half = weight / Charge(2);
  for (int i = 0; i < h.d; ++i) {
    const Vertex a = h.at(i), b = h.at(i + 1);
    const int da = h.g.degree(a), db = h.g.degree(b);
    if (da == 5 && db == 5) {
      lb.add("R2a", h.v, a, half, {h.v, a, b});
      lb.add("R2a", h.v, b, half, {h.v, a, b});
    } else if (da == 5) {
      lb.add("R2b", h.v, a, weight, {h.v, a, b});
    } else if (db == 5) {
      lb.add("R2b", h.v, b, weight, {h.v, a, b});
    }
  }
}

// Hub relay rule shared by both systems: the hub sends `direct` to every
// neighbor, and for consecutive neighbors w0 w1 w2 (both directions) with w0
// a 6+-vertex and w1 a 5-vertex, w0 passes `single` to w1 when w2 is 6+, or
// `split` to each of w1 and w2 when w2 is a 5-vertex.
inline void relay_rule(LedgerBuilder& lb, const Local& h, const Charge& direct, const Charge& single,
                       const Charge& split) {
  for (int i = 0; i < h.d; ++i) lb.add("R3", h.v, h.at(i), direct, {h.v, h.at(i)});
  for (int i = 0; i < h.d; ++i) {
    for (int dir : {1, -1}) {
      const Vertex w0 = h.at(i), w1 = h.at(i + dir), w2 = h.at(i + 2 * dir);
      if (h.g.degree(w0) < 6 || h.g.degree(w1) != 5) continue;
      if (h.g.degree(w2) >= 6) {
        lb.add("R3a", w0, w1, single, {h.v, w0, w1, w2}, h.v);
      } else {
        lb.add("R3b", w0, w1, split, {h.v, w0, w1, w2}, h.v);
        lb.add("R3b", w0, w2, split, {h.v, w0, w1, w2}, h.v);
      }
    }
  }
}

// Calls f(x) for each of the 10 dihedral alignments of a 5-vertex's
// neighbors; x[j] is the neighbor at aligned position j.
template <typename F>
void for_each_alignment(const Local& c, const EnumerationOrder& order, F&& f) {
  std::array<Vertex, 5> x{};
  for (int step = 0; step < 5; ++step) {
    const int r = (order.first_offset + step) % 5;
    const Orientation first = order.reflected_first ? Orientation::reflected : Orientation::forward;
    const Orientation second = order.reflected_first ? Orientation::forward : Orientation::reflected;
    for (Orientation o : {first, second}) {
      for (int j = 0; j < 5; ++j) x[j] = c.at(aligned_index(r, o, j));
      f(x);
    }
  }
}

inline bool is_twice_weak_of(const PlaneGraph& g, Vertex host, Vertex v) {
  const int p = g.position(host, v);
  return p >= 0 && classify_neighbor(g, host, p).twice_weak;
}

inline void theorem1_rules(LedgerBuilder& lb, const PlaneGraph& g, const EnumerationOrder& order) {
  const Charge third(1, 3), sixth(1, 6), two_fifths(2, 5), fifth(1, 5), tenth(1, 10), twentieth(1, 20);
  const Charge quarter(1, 4), half(1, 2), eighth(1, 8);
  for (Vertex v = 0; v < g.order(); ++v) {
    const Local h{g, v, g.degree(v)};
    const auto degs = neighbor_degrees(g, v);

    if (h.d == 7) {
      for (int i = 0; i < h.d; ++i) {
        const NeighborClass c = classify_position(degs, i);
        if (!c.is_five()) continue;
        lb.add(c.strong ? "R1a" : "R1b", v, h.at(i), c.strong ? third : sixth, {v, h.at(i - 1), h.at(i), h.at(i + 1)});
      }
    }
    if (h.d >= 8 && h.d != 10 && h.d != 11) face_rule(lb, h, alpha(h.d));
    if (h.d == 10 || h.d == 11) relay_rule(lb, h, two_fifths, fifth, tenth);
    if (h.d == 11) {
      for (int i = 0; i < h.d; ++i) {
        if (!classify_position(degs, i).twice_weak) continue;
        lb.add("R4", v, h.at(i), tenth, {v, h.at(i - 2), h.at(i - 1), h.at(i), h.at(i + 1), h.at(i + 2)});
      }
    }
    if (h.d == 13 || h.d == 14) {
      for (int i = 0; i < h.d; ++i) {
        if (!classify_position(degs, i).weak) continue;
        lb.add("R5", v, h.at(i), twentieth, {v, h.at(i - 1), h.at(i), h.at(i + 1)});
      }
    }
    if (h.d == 5) {
      for_each_alignment(h, order, [&](const std::array<Vertex, 5>& x) {
        const int k0 = g.degree(x[0]), k1 = g.degree(x[1]), k2 = g.degree(x[2]), k3 = g.degree(x[3]),
                  k4 = g.degree(x[4]);
        const std::vector<Vertex> anchor{v, x[0], x[1], x[2], x[3], x[4]};
        // Returns: neighbors x0..x4 with degrees k0, 5, k2, k3, 5.
        if (k1 == 5 && k4 == 5) {
          if (k2 >= 8 && k3 >= 8 && k0 == 13) lb.add("R6a", v, x[0], quarter, anchor);
          if (k0 == 11 && ((k2 >= 9 && k3 >= 9) || (k2 == 8 && k3 == 8)) && is_twice_weak_of(g, x[0], v)) {
            if (k2 >= 9) {
              lb.add("R6b", v, x[0], half, anchor);
            } else {
              lb.add("R6c", v, x[0], quarter, anchor);
            }
          }
          if (k2 >= 9 && k3 >= 9 && k0 == 7) lb.add("R6d", v, x[0], sixth, anchor);
        }
        // Donations: neighbors w1..w4 = x0..x3 with degrees k1', 5, 5, k4'.
        if (k1 == 5 && k2 == 5) {
          const std::vector<Vertex> a{v, x[0], x[1], x[2], x[3]};
          if (k0 >= 12 && k3 >= 16) lb.add("R7a", v, x[2], eighth, a);
          if (k0 >= 12 && k3 >= 13 && k3 <= 15) lb.add("R7b", v, x[2], twentieth, a);
          if (k0 == 8 && k3 <= 11) lb.add("R7c", v, x[1], eighth, a);
        }
      });
    }
  }
}

inline void theorem2_rules(LedgerBuilder& lb, const PlaneGraph& g, const EnumerationOrder& order) {
  const Charge quarter(1, 4), third(1, 3), sixth(1, 6), twelfth(1, 12), half(1, 2), eighth(1, 8);
  for (Vertex v = 0; v < g.order(); ++v) {
    const Local h{g, v, g.degree(v)};

    if (h.d == 7) {
      const auto degs = neighbor_degrees(g, v);
      for (int i = 0; i < h.d; ++i) {
        const NeighborClass c = classify_position(degs, i);
        if (c.is_five() && !c.weak) lb.add("R1", v, h.at(i), quarter, {v, h.at(i - 1), h.at(i), h.at(i + 1)});
      }
    }
    if (h.d >= 8 && h.d != 9) face_rule(lb, h, beta(h.d));
    if (h.d == 9) relay_rule(lb, h, third, sixth, twelfth);
    if (h.d == 5) {
      for_each_alignment(h, order, [&](const std::array<Vertex, 5>& x) {
        const int k1 = g.degree(x[0]), k4 = g.degree(x[3]);
        if (g.degree(x[1]) != 5 || g.degree(x[2]) != 5) return;
        const std::vector<Vertex> a{v, x[0], x[1], x[2], x[3]};
        if (k1 >= 12 && k4 >= 12) {
          lb.add("R4a", v, x[1], beta(k1) - half, a);
          lb.add("R4a", v, x[2], beta(k4) - half, a);
        }
        if (k1 == 7 && k4 <= 11) lb.add("R4b", v, x[1], quarter, a);
        if (k1 == 8 && k4 <= 11) lb.add("R4c", v, x[1], eighth, a);
      });
    }
  }
}

}  // namespace detail

/// Runs one rule system on a triangulation with minimum degree 5.
///
/// Every guard is evaluated on the initial degree configuration and all fired
/// instances are applied at once, so the result does not depend on rule
/// order. Final charge = deg - 6 - sent + received.
inline DischargeResult apply_rules(const PlaneGraph& g, RuleSet set, const EnumerationOrder& order = {}) {
  if (!is_triangulation(g)) throw std::invalid_argument("discharging requires a triangulation");
  require_min_degree_five(g);

  detail::LedgerBuilder lb;
  if (set == RuleSet::theorem1) {
    detail::theorem1_rules(lb, g, order);
  } else {
    detail::theorem2_rules(lb, g, order);
  }

  DischargeResult r;
  r.rule_set = set;
  r.ledger = std::move(lb).finish();
  r.initial.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) r.initial.emplace_back(g.degree(v) - 6);
  r.final_charge = r.initial;
  for (const Transfer& t : r.ledger) {
    r.final_charge[t.sender] -= t.amount;
    r.final_charge[t.receiver] += t.amount;
  }
  return r;
}

/// Vertex funding a transfer: the relay hub when there is one, else the sender.
inline Vertex funder(const Transfer& t) { return t.hub ? *t.hub : t.sender; }

/// Total received by `receiver`; with a hub, only transfers funded by it
/// (sent directly, or relayed on its behalf). A relay whose intermediate
/// sender happens to be `hub` belongs to the other hub.
inline Charge flow_to(const DischargeResult& r, Vertex receiver, std::optional<Vertex> hub = std::nullopt) {
  Charge total;
  for (const Transfer& t : r.ledger) {
    if (t.receiver != receiver) continue;
    if (hub && funder(t) != *hub) continue;
    total += t.amount;
  }
  return total;
}

inline std::vector<std::pair<Vertex, Charge>> negative_vertices(const DischargeResult& r) {
  std::vector<std::pair<Vertex, Charge>> out;
  for (Vertex v = 0; v < static_cast<Vertex>(r.final_charge.size()); ++v) {
    if (r.final_charge[v].is_negative()) out.emplace_back(v, r.final_charge[v]);
  }
  return out;
}

/// One line per transfer: `rule sender receiver p/q (anchor,...) [hub]`,
/// 1-based vertex indices; the hub bracket appears only on relayed transfers.
inline std::string format_transfer(const Transfer& t) {
  std::string s = std::string(t.rule) + " " + std::to_string(t.sender + 1) + " " + std::to_string(t.receiver + 1) +
                  " " + t.amount.str() + " (";
  for (std::size_t i = 0; i < t.anchor.size(); ++i) s += (i ? "," : "") + std::to_string(t.anchor[i] + 1);
  s += ")";
  if (t.hub) s += " [" + std::to_string(*t.hub + 1) + "]";
  return s;
}

inline std::string format_ledger(const DischargeResult& r) {
  std::string out;
  for (const Transfer& t : r.ledger) out += format_transfer(t) + "\n";
  return out;
}

}  // namespace minorstar
