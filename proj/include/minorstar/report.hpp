#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdio>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "minorstar/claims.hpp"
#include "minorstar/discharge.hpp"
#include "minorstar/star_match.hpp"

namespace minorstar {

struct CorpusEntry {
  std::string id;
  PlaneGraph graph;
};

struct ClaimTally {
  std::string id;
  long evaluated = 0;
  long vacuous = 0;
  long failed = 0;
  /// (graph id, scan attestation) per counterexample, in corpus order.
  std::vector<std::pair<std::string, std::string>> witnesses;
};

/// Minimum minor 5-star weight per graph, aggregated over graphs with the
/// same maximum degree. `max_of_min` is the empirical lower bound on Omega.
struct OmegaBucket {
  long graphs = 0;
  int max_of_min = 0;
  int min_of_min = 0;
};

struct DischargeStats {
  long runs = 0;
  long conservation_failures = 0;
  long graphs_with_negative = 0;
  long negative_vertices = 0;
  long negative_localized = 0;  ///< a listed star centered within distance 1
  long star_presence_failures = 0;
  long strong_flow_checks = 0;
  long strong_flow_failures = 0;
  long other_flow_checks = 0;
  long other_flow_failures = 0;
  std::vector<std::string> failures;  ///< first few, "graph: what"
};

struct InputIssue {
  std::string id;
  std::string message;
};

struct Report {
  std::string source;
  std::string rng;
  long graphs = 0;
  long not_triangulations = 0;
  std::vector<ClaimTally> claims;
  std::map<int, OmegaBucket> omega;
  DischargeStats thm1;
  DischargeStats thm2;
  long consistency_checks = 0;
  long consistency_failures = 0;
  std::vector<std::string> consistency_examples;
  /// Graphs missing every listed star that still carry a proof-cited one.
  std::vector<std::string> proof_cited_only;
  std::vector<InputIssue> input_errors;

  [[nodiscard]] long counterexamples() const {
    long n = 0;
    for (const auto& c : claims) n += c.failed;
    return n;
  }
  /// Any refuted claim or failed discharging invariant.
  [[nodiscard]] bool refuted() const {
    auto bad = [](const DischargeStats& s) {
      return s.conservation_failures + s.star_presence_failures + s.strong_flow_failures + s.other_flow_failures > 0;
    };
    return counterexamples() > 0 || consistency_failures > 0 || bad(thm1) || bad(thm2);
  }
};

/// Everything computed for one graph. Pure; safe to build in parallel.
struct GraphAnalysis {
  std::string id;
  std::optional<std::string> input_error;
  std::vector<ClaimOutcome> outcomes;  ///< parallel to the claim selection
  int delta = 0;
  int min_weight5 = 0;
  bool triangulation = false;
  DischargeStats thm1;
  DischargeStats thm2;
  bool consistency_checked = false;
  std::optional<std::string> consistency_failure;
  bool proof_cited_only = false;
};

namespace detail {

inline constexpr std::size_t kMaxListedFailures = 10;

inline void note_failure(DischargeStats& s, const std::string& id, const std::string& what) {
  if (s.failures.size() < kMaxListedFailures) s.failures.push_back(id + ": " + what);
}

inline std::vector<bool> listed_centers(const PlaneGraph& g, const std::vector<CyclicPattern>& list) {
  std::vector<bool> out(static_cast<std::size_t>(g.order()), false);
  std::array<int, 5> deg{};
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 5) continue;
    for (int i = 0; i < 5; ++i) deg[i] = g.degree(g.neighbor(v, i));
    out[v] = std::any_of(list.begin(), list.end(), [&](const CyclicPattern& p) { return cyclic_fits(deg, p); });
  }
  return out;
}

/// flow_to for every (receiver, funder) pair at once.
class FlowIndex {
public:
  FlowIndex(const DischargeResult& r, int n) : n_(n) {
    for (const Transfer& t : r.ledger) add(t.receiver, funder(t), t.amount);
  }
  [[nodiscard]] Charge get(Vertex receiver, Vertex source) const {
    const auto it = sums_.find(key(receiver, source));
    return it == sums_.end() ? Charge() : it->second;
  }

private:
  [[nodiscard]] long long key(Vertex r, Vertex s) const { return static_cast<long long>(r) * n_ + s; }
  void add(Vertex r, Vertex s, const Charge& c) { sums_[key(r, s)] += c; }

  int n_;
  std::unordered_map<long long, Charge> sums_;
};

/// Per-hub flow bounds. Rule set 1: hubs of degree 10 and 11; rule set
/// 2: hubs of degree 9.
inline void check_hub_flows(const PlaneGraph& g, const DischargeResult& r, const std::string& id,
                            DischargeStats& s) {
  const FlowIndex flows(r, g.order());
  for (Vertex w = 0; w < g.order(); ++w) {
    const int d = g.degree(w);
    const bool hub = r.rule_set == RuleSet::theorem1 ? (d == 10 || d == 11) : d == 9;
    if (!hub) continue;
    const auto degs = neighbor_degrees(g, w);
    for (int i = 0; i < d; ++i) {
      const NeighborClass c = classify_position(degs, i);
      if (!c.is_five()) continue;
      const Vertex u = g.neighbor(w, i);
      const Charge got = flows.get(u, w);
      std::optional<Charge> exact;
      Charge at_least;
      if (c.strong) {
        exact = r.rule_set == RuleSet::theorem1 ? Charge(4, 5) : Charge(2, 3);
      } else if (c.twice_weak && r.rule_set == RuleSet::theorem2) {
        exact = Charge(1, 3);
      } else if (c.twice_weak && d == 10) {
        exact = Charge(2, 5);
      } else {
        at_least = r.rule_set == RuleSet::theorem1 ? Charge(1, 2) : Charge(5, 12);
      }
      const bool ok = exact ? got == *exact : got >= at_least;
      auto& checks = c.strong ? s.strong_flow_checks : s.other_flow_checks;
      auto& fails = c.strong ? s.strong_flow_failures : s.other_flow_failures;
      ++checks;
      if (!ok) {
        ++fails;
        note_failure(s, id,
                     "vertex " + std::to_string(u + 1) + " receives " + got.str() + " from " + std::to_string(d) +
                         "-vertex " + std::to_string(w + 1) + ", expected " +
                         (exact ? exact->str() : ">= " + at_least.str()));
      }
    }
  }
}

inline DischargeStats discharge_stats(const PlaneGraph& g, RuleSet set, const std::string& id) {
  DischargeStats s;
  const DischargeResult r = apply_rules(g, set);
  ++s.runs;
  if (r.total_final() != Charge(-12) || r.total_initial() != Charge(-12)) {
    ++s.conservation_failures;
    note_failure(s, id, "total final charge " + r.total_final().str());
  }
  const auto& list = set == RuleSet::theorem1 ? theorem1_list() : theorem2_list();
  const auto neg = negative_vertices(r);
  if (!neg.empty()) {
    ++s.graphs_with_negative;
    const auto centers = listed_centers(g, list);
    if (std::none_of(centers.begin(), centers.end(), [](bool b) { return b; })) {
      ++s.star_presence_failures;
      note_failure(s, id, "negative charge but no listed star");
    }
    for (const auto& [v, c] : neg) {
      ++s.negative_vertices;
      bool near = centers[v];
      for (Vertex u : g.rotation(v)) near = near || centers[u];
      s.negative_localized += near ? 1 : 0;
    }
  }
  check_hub_flows(g, r, id, s);
  return s;
}

inline void accumulate(DischargeStats& into, const DischargeStats& s) {
  into.runs += s.runs;
  into.conservation_failures += s.conservation_failures;
  into.graphs_with_negative += s.graphs_with_negative;
  into.negative_vertices += s.negative_vertices;
  into.negative_localized += s.negative_localized;
  into.star_presence_failures += s.star_presence_failures;
  into.strong_flow_checks += s.strong_flow_checks;
  into.strong_flow_failures += s.strong_flow_failures;
  into.other_flow_checks += s.other_flow_checks;
  into.other_flow_failures += s.other_flow_failures;
  for (const auto& f : s.failures) {
    if (into.failures.size() < kMaxListedFailures) into.failures.push_back(f);
  }
}

/// The corollaries derived from a star list must hold wherever the list does.
inline std::optional<std::string> consistency_failure(const PlaneGraph& g, bool mr1, bool mr2) {
  if (!mr1 && !mr2) return std::nullopt;
  for (const char* id : {"T3", "T4", "T5", "T6", "T7"}) {
    const ClaimOutcome o = check_claim(g, find_claim(id));
    if (o.verdict == Verdict::counterexample) {
      return std::string(mr1 ? "MR1" : "MR2") + " holds but " + id + " fails: " + o.detail;
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline GraphAnalysis analyze_graph(const CorpusEntry& e, const std::vector<ClaimSpec>& claims) {
  GraphAnalysis a;
  a.id = e.id;
  const PlaneGraph& g = e.graph;
  if (g.min_degree() < 5) {
    a.input_error = "minimum degree " + std::to_string(g.min_degree()) + " < 5";
    return a;
  }
  a.delta = g.max_degree();
  a.min_weight5 = *min_weight_minor_star(g, 5);
  for (const auto& c : claims) a.outcomes.push_back(check_claim(g, c));

  const bool mr1 = find_listed_star(g, theorem1_list()).has_value();
  const bool mr2 = find_listed_star(g, theorem2_list()).has_value();
  a.consistency_checked = mr1 || mr2;
  a.consistency_failure = detail::consistency_failure(g, mr1, mr2);
  if (!mr1 || !mr2) {
    const auto& cited = proof_cited_patterns();
    a.proof_cited_only =
        std::any_of(cited.begin(), cited.end(), [&](const CyclicPattern& p) { return contains_cyclic(g, p); });
  }

  a.triangulation = is_triangulation(g);
  if (a.triangulation) {
    a.thm1 = detail::discharge_stats(g, RuleSet::theorem1, e.id);
    a.thm2 = detail::discharge_stats(g, RuleSet::theorem2, e.id);
  }
  return a;
}

/// Analyzes entries with up to `jobs` threads; results keep input order.
inline std::vector<GraphAnalysis> analyze_batch(const std::vector<CorpusEntry>& entries,
                                                const std::vector<ClaimSpec>& claims, unsigned jobs = 1) {
  std::vector<GraphAnalysis> out(entries.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(entries.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < entries.size(); ++i) out[i] = analyze_graph(entries[i], claims);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < entries.size(); i += jobs) out[i] = analyze_graph(entries[i], claims);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

/// Folds per-graph analyses into a Report in the order they are added.
class ReportBuilder {
public:
  ReportBuilder(std::vector<ClaimSpec> claims, std::string source, std::string rng = {}) : claims_(std::move(claims)) {
    report_.source = std::move(source);
    report_.rng = std::move(rng);
    for (const auto& c : claims_) report_.claims.push_back(ClaimTally{c.id, 0, 0, 0, {}});
  }

  [[nodiscard]] const std::vector<ClaimSpec>& claims() const { return claims_; }

  void add_input_error(std::string id, std::string message) {
    report_.input_errors.push_back({std::move(id), std::move(message)});
  }

  void add(const GraphAnalysis& a) {
    if (a.input_error) {
      add_input_error(a.id, *a.input_error);
      return;
    }
    ++report_.graphs;
    for (std::size_t i = 0; i < a.outcomes.size(); ++i) {
      ClaimTally& t = report_.claims[i];
      switch (a.outcomes[i].verdict) {
        case Verdict::holds: ++t.evaluated; break;
        case Verdict::vacuous: ++t.vacuous; break;
        case Verdict::counterexample:
          ++t.evaluated;
          ++t.failed;
          t.witnesses.emplace_back(a.id, a.outcomes[i].detail);
          break;
      }
    }
    auto [it, fresh] = report_.omega.try_emplace(a.delta, OmegaBucket{0, a.min_weight5, a.min_weight5});
    OmegaBucket& b = it->second;
    ++b.graphs;
    b.max_of_min = std::max(b.max_of_min, a.min_weight5);
    b.min_of_min = std::min(b.min_of_min, a.min_weight5);
    if (a.triangulation) {
      detail::accumulate(report_.thm1, a.thm1);
      detail::accumulate(report_.thm2, a.thm2);
    } else {
      ++report_.not_triangulations;
    }
    report_.consistency_checks += a.consistency_checked ? 1 : 0;
    if (a.consistency_failure) {
      ++report_.consistency_failures;
      if (report_.consistency_examples.size() < detail::kMaxListedFailures) {
        report_.consistency_examples.push_back(a.id + ": " + *a.consistency_failure);
      }
    }
    if (a.proof_cited_only) report_.proof_cited_only.push_back(a.id);
  }

  [[nodiscard]] const Report& report() const { return report_; }
  Report finish() && { return std::move(report_); }

private:
  std::vector<ClaimSpec> claims_;
  Report report_;
};

inline Report run_corpus(const std::vector<CorpusEntry>& corpus, const std::vector<ClaimSpec>& claims,
                         std::string source = "in-memory corpus", unsigned jobs = 1) {
  ReportBuilder b(claims, std::move(source));
  for (const auto& a : analyze_batch(corpus, claims, jobs)) b.add(a);
  return std::move(b).finish();
}

// ---------------------------------------------------------------------------
// Serialization. Both forms list everything in a fixed order so that equal
// inputs give byte-identical output.

namespace detail {

inline nlohmann::ordered_json discharge_json(const DischargeStats& s) {
  nlohmann::ordered_json j;
  j["runs"] = s.runs;
  j["conservation_failures"] = s.conservation_failures;
  j["star_presence_failures"] = s.star_presence_failures;
  j["graphs_with_negative"] = s.graphs_with_negative;
  j["negative_vertices"] = s.negative_vertices;
  j["negative_localized_radius1"] = s.negative_localized;
  j["strong_flow_checks"] = s.strong_flow_checks;
  j["strong_flow_failures"] = s.strong_flow_failures;
  j["other_flow_checks"] = s.other_flow_checks;
  j["other_flow_failures"] = s.other_flow_failures;
  j["failures"] = s.failures;
  return j;
}

inline std::string discharge_text(const char* name, const DischargeStats& s) {
  std::string out = std::string("discharge ") + name + ":\n";
  out += "  runs " + std::to_string(s.runs) + ", conservation failures " + std::to_string(s.conservation_failures) +
         ", star presence failures " + std::to_string(s.star_presence_failures) + "\n";
  out += "  strong-neighbor flows " + std::to_string(s.strong_flow_checks) + " checked, " +
         std::to_string(s.strong_flow_failures) + " failed; other 5-neighbor flows " +
         std::to_string(s.other_flow_checks) + " checked, " + std::to_string(s.other_flow_failures) + " failed\n";
  out += "  negative vertices " + std::to_string(s.negative_vertices) + " in " +
         std::to_string(s.graphs_with_negative) + " graphs, " + std::to_string(s.negative_localized) +
         " with a listed star within distance 1\n";
  for (const auto& f : s.failures) out += "  failure " + f + "\n";
  return out;
}

}  // namespace detail

inline nlohmann::ordered_json report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["source"] = r.source;
  if (!r.rng.empty()) j["rng"] = r.rng;
  j["graphs"] = r.graphs;
  j["input_errors"] = nlohmann::ordered_json::array();
  for (const auto& e : r.input_errors) j["input_errors"].push_back({{"graph", e.id}, {"message", e.message}});
  nlohmann::ordered_json claims = nlohmann::ordered_json::object();
  for (const auto& c : r.claims) {
    nlohmann::ordered_json w = nlohmann::ordered_json::array();
    for (const auto& [id, why] : c.witnesses) w.push_back({{"graph", id}, {"scan", why}});
    claims[c.id] = {{"evaluated", c.evaluated}, {"vacuous", c.vacuous}, {"failed", c.failed}, {"witnesses", w}};
  }
  j["claims"] = claims;
  nlohmann::ordered_json omega = nlohmann::ordered_json::object();
  for (const auto& [delta, b] : r.omega) {
    omega[std::to_string(delta)] = {{"graphs", b.graphs}, {"max_min_weight", b.max_of_min},
                                    {"min_min_weight", b.min_of_min}};
  }
  j["omega"] = omega;
  j["discharge"] = {{"thm1", detail::discharge_json(r.thm1)},
                    {"thm2", detail::discharge_json(r.thm2)},
                    {"not_triangulations", r.not_triangulations}};
  j["consistency"] = {{"checked", r.consistency_checks},
                      {"failures", r.consistency_failures},
                      {"examples", r.consistency_examples}};
  j["proof_cited_only"] = r.proof_cited_only;
  return j;
}

inline std::string report_text(const Report& r) {
  std::string out = "source: " + r.source + "\n";
  if (!r.rng.empty()) out += "rng: " + r.rng + "\n";
  out += "graphs: " + std::to_string(r.graphs) + "\n";
  out += "input errors: " + std::to_string(r.input_errors.size()) + "\n";
  for (const auto& e : r.input_errors) out += "  " + e.id + ": " + e.message + "\n";

  out += "\nclaim      evaluated    vacuous     failed\n";
  for (const auto& c : r.claims) {
    char line[96];
    std::snprintf(line, sizeof line, "%-8s %11ld %10ld %10ld\n", c.id.c_str(), c.evaluated, c.vacuous, c.failed);
    out += line;
  }
  for (const auto& c : r.claims) {
    for (const auto& [id, why] : c.witnesses) out += "counterexample " + c.id + " " + id + ": " + why + "\n";
  }

  out += "\nDelta   graphs  max-min-weight  min-min-weight\n";
  for (const auto& [delta, b] : r.omega) {
    char line[96];
    std::snprintf(line, sizeof line, "%5d %8ld %15d %15d\n", delta, b.graphs, b.max_of_min, b.min_of_min);
    out += line;
  }

  out += "\n" + detail::discharge_text("thm1", r.thm1) + detail::discharge_text("thm2", r.thm2);
  if (r.not_triangulations > 0) {
    out += "discharge skipped on " + std::to_string(r.not_triangulations) + " non-triangulations\n";
  }
  out += "consistency: " + std::to_string(r.consistency_checks) + " checked, " +
         std::to_string(r.consistency_failures) + " failed\n";
  for (const auto& e : r.consistency_examples) out += "  " + e + "\n";
  out += "proof-cited-only graphs: " + std::to_string(r.proof_cited_only.size()) + "\n";
  for (const auto& id : r.proof_cited_only) out += "  " + id + "\n";
  return out;
}

}  // namespace minorstar
