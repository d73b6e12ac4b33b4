// minorstar: validate, match, discharge, generate and verify plane graphs with
// minimum degree five.
//
// Exit codes: 0 success, 1 counterexample or failed invariant, 2 bad input or
// usage.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "minorstar/minorstar.hpp"

namespace ms = minorstar;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kBadInput = 2;
constexpr std::size_t kBatch = 256;

/// Usage or input problem already phrased for the user.
struct InputFailure {
  std::string message;
};

struct Options {
  bool json = false;
  std::string output;
  unsigned jobs = 1;
};

class Output {
public:
  explicit Output(const Options& o) : path_(o.output) {}
  std::string& buf() { return buf_; }
  void flush() {
    if (path_.empty()) {
      std::cout << buf_;
      std::cout.flush();
      return;
    }
    std::ofstream f(path_, std::ios::binary);
    if (!f) throw InputFailure{path_ + ": cannot open for writing"};
    f << buf_;
  }

private:
  std::string path_;
  std::string buf_;
};

class FileGraphs {
public:
  explicit FileGraphs(std::string path) : path_(std::move(path)), in_(path_, std::ios::binary) {
    if (!in_) throw InputFailure{path_ + ": cannot open"};
    std::string prefix(256, '\0');
    in_.read(prefix.data(), static_cast<std::streamsize>(prefix.size()));
    prefix.resize(static_cast<std::size_t>(in_.gcount()));
    in_.clear();
    in_.seekg(0);
    std::istream* stream = &in_;
    if (!in_) {
      // Pipes cannot rewind; keep the sniffed prefix in front of the rest.
      in_.clear();
      std::ostringstream rest;
      rest << in_.rdbuf();
      piped_.str(prefix + rest.str());
      stream = &piped_;
    }
    source_.emplace(*stream, ms::sniff_format(prefix));
  }

  /// Throws InputFailure carrying the file name on any parse error.
  std::optional<ms::PlaneGraph> next() {
    try {
      return source_->next();
    } catch (const ms::ParseError& e) {
      throw InputFailure{path_ + ": " + e.what()};
    }
  }

  /// Like next(), but hands parse errors to `on_error` and keeps going while
  /// the stream is still positioned at a graph boundary.
  template <typename OnError>
  std::optional<ms::PlaneGraph> next_tolerant(OnError&& on_error) {
    while (true) {
      try {
        return source_->next();
      } catch (const ms::ParseError& e) {
        on_error(e);
        if (!source_->synced()) return std::nullopt;
      }
    }
  }

  [[nodiscard]] std::size_t index() const { return source_->graphs_read(); }
  [[nodiscard]] const std::string& path() const { return path_; }

private:
  std::string path_;
  std::ifstream in_;
  std::istringstream piped_;
  std::optional<ms::GraphSource> source_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void require_discharge_input(const ms::PlaneGraph& g, const std::string& where) {
  if (g.min_degree() < 5) {
    throw InputFailure{where + ": minimum degree " + std::to_string(g.min_degree()) + " < 5"};
  }
  if (!ms::is_triangulation(g)) throw InputFailure{where + ": not a triangulation"};
}

std::string graph_label(const FileGraphs& f) { return f.path() + ": graph " + std::to_string(f.index()); }

// --- validate ---------------------------------------------------------------

int cmd_validate(const Options& opt, const std::string& path) {
  Output out(opt);
  FileGraphs file(path);
  json all = json::array();
  while (auto g = file.next()) {
    const auto faces = ms::trace_faces(*g);
    const bool tri = ms::is_triangulation(*g);
    const std::optional<bool> three = g->order() >= 4 ? std::optional<bool>(ms::is_three_connected(*g)) : std::nullopt;
    if (opt.json) {
      json j{{"graph", file.index()},         {"n", g->order()},
             {"edges", g->size()},            {"faces", faces.count()},
             {"min_degree", g->min_degree()}, {"max_degree", g->max_degree()},
             {"triangulation", tri}};
      j["three_connected"] = three ? json(*three) : json(nullptr);
      all.push_back(j);
    } else {
      out.buf() += "graph " + std::to_string(file.index()) + ": n=" + std::to_string(g->order()) +
                   " E=" + std::to_string(g->size()) + " F=" + std::to_string(faces.count()) +
                   " min-degree=" + std::to_string(g->min_degree()) + " max-degree=" +
                   std::to_string(g->max_degree()) + " triangulation=" + yes_no(tri) +
                   " 3-connected=" + (three ? yes_no(*three) : "n/a") + "\n";
    }
  }
  if (opt.json) out.buf() = all.dump(2) + "\n";
  out.flush();
  return kOk;
}

// --- stars ------------------------------------------------------------------

std::vector<ms::CyclicPattern> load_list(const std::string& which) {
  if (which == "thm1") return ms::theorem1_list();
  if (which == "thm2") return ms::theorem2_list();
  std::ifstream f(which, std::ios::binary);
  if (!f) throw InputFailure{which + ": cannot open pattern list (expected thm1, thm2 or a file)"};
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    auto list = ms::parse_pattern_list(ss.str());
    if (list.empty()) throw InputFailure{which + ": pattern list is empty"};
    return list;
  } catch (const ms::PatternError& e) {
    throw InputFailure{which + ": " + e.what()};
  }
}

std::string leaves_text(const ms::StarMatch& m) {
  std::string s;
  for (std::size_t i = 0; i < m.leaves.size(); ++i) s += (i ? " " : "") + std::to_string(m.leaves[i] + 1);
  return s;
}

int cmd_stars(const Options& opt, const std::string& path, const std::string& list_name) {
  const auto list = load_list(list_name);
  Output out(opt);
  FileGraphs file(path);
  json all = json::array();
  int code = kOk;
  while (auto g = file.next()) {
    if (g->min_degree() < 5) {
      throw InputFailure{graph_label(file) + ": minimum degree " + std::to_string(g->min_degree()) + " < 5"};
    }
    const auto m = ms::find_listed_star(*g, list);
    if (!m) code = kRefuted;
    if (opt.json) {
      json j{{"graph", file.index()}};
      if (m) {
        std::vector<int> leaves;
        for (auto v : m->leaves) leaves.push_back(v + 1);
        j["match"] = {{"pattern", m->pattern.str()},   {"list_position", m->list_position},
                      {"center", m->center + 1},      {"leaves", leaves},
                      {"orientation", ms::to_string(m->orientation)}, {"offset", m->offset},
                      {"weight", m->weight},          {"height", m->height}};
      } else {
        j["match"] = nullptr;
      }
      all.push_back(j);
    } else if (m) {
      out.buf() += "graph " + std::to_string(file.index()) + ": " + m->pattern.str() + " #" +
                   std::to_string(m->list_position) + " at vertex " + std::to_string(m->center + 1) + ", leaves " +
                   leaves_text(*m) + ", " + ms::to_string(m->orientation) + " offset " + std::to_string(m->offset) +
                   ", weight " + std::to_string(m->weight) + ", height " + std::to_string(m->height) + "\n";
    } else {
      out.buf() += "graph " + std::to_string(file.index()) + ": no listed star (scanned " +
                   std::to_string(list.size()) + " patterns at every 5-vertex)\n";
    }
  }
  if (opt.json) out.buf() = all.dump(2) + "\n";
  out.flush();
  return code;
}

// --- discharge --------------------------------------------------------------

ms::RuleSet parse_rules(const std::string& s) {
  if (s == "thm1") return ms::RuleSet::theorem1;
  if (s == "thm2") return ms::RuleSet::theorem2;
  throw InputFailure{"--rules must be thm1 or thm2, got '" + s + "'"};
}

int cmd_discharge(const Options& opt, const std::string& path, const std::string& rules, bool ledger) {
  const ms::RuleSet set = parse_rules(rules);
  Output out(opt);
  FileGraphs file(path);
  json all = json::array();
  int code = kOk;
  while (auto g = file.next()) {
    require_discharge_input(*g, graph_label(file));
    const auto r = ms::apply_rules(*g, set);
    const auto neg = ms::negative_vertices(r);
    if (r.total_final() != ms::Charge(-12)) code = kRefuted;
    if (opt.json) {
      json j{{"graph", file.index()}, {"rules", ms::to_string(set)}, {"transfers", r.ledger.size()},
             {"total", r.total_final().str()}};
      if (ledger) {
        json l = json::array();
        for (const auto& t : r.ledger) {
          std::vector<int> anchor;
          for (auto v : t.anchor) anchor.push_back(v + 1);
          json e{{"rule", std::string(t.rule)}, {"sender", t.sender + 1}, {"receiver", t.receiver + 1},
                 {"amount", t.amount.str()},   {"anchor", anchor}};
          e["hub"] = t.hub ? json(*t.hub + 1) : json(nullptr);
          l.push_back(e);
        }
        j["ledger"] = l;
      }
      std::vector<std::string> fin;
      for (const auto& c : r.final_charge) fin.push_back(c.str());
      j["final"] = fin;
      std::vector<int> nv;
      for (const auto& [v, c] : neg) nv.push_back(v + 1);
      j["negative"] = nv;
      all.push_back(j);
      continue;
    }
    std::string& b = out.buf();
    b += "graph " + std::to_string(file.index()) + ": rules " + ms::to_string(set) + ", " +
         std::to_string(r.ledger.size()) + " transfers, total " + r.total_final().str() + ", " +
         std::to_string(neg.size()) + " negative\n";
    if (ledger) {
      b += "ledger:\n";
      for (const auto& t : r.ledger) b += "  " + ms::format_transfer(t) + "\n";
    }
    b += "final:\n";
    for (ms::Vertex v = 0; v < g->order(); ++v) b += "  " + std::to_string(v + 1) + " " + r.final_charge[v].str() + "\n";
  }
  if (opt.json) out.buf() = all.dump(2) + "\n";
  out.flush();
  return code;
}

// --- generate ---------------------------------------------------------------

int cmd_generate(const Options& opt, const ms::GenConfig& cfg) {
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw InputFailure{std::string("generate: ") + e.what()};
  }
  Output out(opt);
  out.buf() = std::string(ms::kPlanarCodeHeader);
  int emitted = 0;
  const int stuck = ms::for_each_generated(cfg, [&](int, const ms::PlaneGraph& g) {
    ms::append_planar_code(out.buf(), g);
    ++emitted;
  });
  out.flush();
  std::cerr << "generated " << emitted << " graphs";
  if (stuck > 0) std::cerr << " (warning: " << stuck << " walks stuck)";
  std::cerr << "\n";
  return kOk;
}

// --- verify -----------------------------------------------------------------

std::string generated_source(const ms::GenConfig& c) {
  std::ostringstream s;
  s << "generated seed=" << c.seed << " count=" << c.count << " min-n=" << c.min_n << " max-n=" << c.max_n
    << " flip-fraction=" << c.flip_fraction;
  return s.str();
}

int cmd_verify(const Options& opt, const std::vector<std::string>& paths, const std::string& claim_sel,
               const ms::GenConfig& cfg) {
  std::vector<ms::ClaimSpec> claims;
  try {
    claims = ms::select_claims(claim_sel);
  } catch (const std::invalid_argument& e) {
    throw InputFailure{std::string("--claims: ") + e.what()};
  }

  std::string source;
  if (paths.empty()) {
    try {
      cfg.validate();
    } catch (const std::invalid_argument& e) {
      throw InputFailure{std::string("verify: ") + e.what()};
    }
    source = generated_source(cfg);
  } else {
    source = "files";
    for (const auto& p : paths) source += " " + p;
  }
  ms::ReportBuilder builder(claims, source, paths.empty() ? ms::kRngDescription : "");

  std::vector<ms::CorpusEntry> batch;
  auto drain = [&] {
    for (const auto& a : ms::analyze_batch(batch, claims, opt.jobs)) {
      if (a.input_error) std::cerr << a.id << ": " << *a.input_error << "\n";
      builder.add(a);
    }
    batch.clear();
  };
  auto push = [&](std::string id, ms::PlaneGraph g) {
    batch.push_back({std::move(id), std::move(g)});
    if (batch.size() >= kBatch) drain();
  };

  if (paths.empty()) {
    const int stuck = ms::for_each_generated(
        cfg, [&](int i, ms::PlaneGraph g) { push("seed" + std::to_string(cfg.seed) + ":" + std::to_string(i + 1), std::move(g)); });
    if (stuck > 0) std::cerr << "warning: " << stuck << " generator walks stuck\n";
  } else {
    for (const auto& p : paths) {
      FileGraphs file(p);
      auto on_error = [&](const ms::ParseError& e) {
        const std::string id = p + ": graph " + std::to_string(e.graph());
        std::cerr << p << ": " << e.what() << "\n";
        drain();  // keep report order equal to input order
        builder.add_input_error(id, std::string("byte ") + std::to_string(e.offset()) + ": " + e.reason());
      };
      while (auto g = file.next_tolerant(on_error)) push(p + ": graph " + std::to_string(file.index()), std::move(*g));
    }
  }
  drain();

  const ms::Report report = std::move(builder).finish();
  Output out(opt);
  out.buf() = opt.json ? ms::report_json(report).dump(2) + "\n" : ms::report_text(report);
  out.flush();
  if (!report.input_errors.empty()) return kBadInput;
  return report.refuted() ? kRefuted : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minor 5-star detection, discharging and claim verification for plane graphs of minimum degree 5"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Write JSON instead of text");
  app.add_option("-o,--output", opt.output, "Write to this file instead of stdout");
  app.add_option("--jobs", opt.jobs, "Worker threads for verify")->check(CLI::Range(1u, 256u));

  std::string path;
  auto* validate = app.add_subcommand("validate", "Parse and check every graph in a file");
  validate->add_option("file", path, "planar_code or text file")->required();

  std::string list = "thm1";
  auto* stars = app.add_subcommand("stars", "First listed minor 5-star in each graph");
  stars->add_option("file", path, "planar_code or text file")->required();
  stars->add_option("--list", list, "thm1, thm2 or a pattern-list file")->capture_default_str();

  std::string rules = "thm1";
  bool ledger = false;
  auto* discharge = app.add_subcommand("discharge", "Run a discharging rule set");
  discharge->add_option("file", path, "planar_code or text file")->required();
  discharge->add_option("--rules", rules, "thm1 or thm2")->capture_default_str();
  discharge->add_flag("--ledger", ledger, "Print every transfer");

  ms::GenConfig cfg;
  auto add_gen_flags = [&cfg](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
    sub->add_option("--count", cfg.count, "Number of graphs")->capture_default_str();
    sub->add_option("--min-n", cfg.min_n, "Smallest vertex count (>= 12)")->capture_default_str();
    sub->add_option("--max-n", cfg.max_n, "Largest vertex count (<= 255)")->capture_default_str();
    sub->add_option("--flip-fraction", cfg.flip_fraction, "Share of flip moves in the walk")->capture_default_str();
  };
  auto* generate = app.add_subcommand("generate", "Write a seeded random corpus as planar_code");
  add_gen_flags(generate);

  std::vector<std::string> paths;
  std::string claims = "all";
  auto* verify = app.add_subcommand("verify", "Check claims over files, or over a generated corpus when no file is given");
  verify->add_option("paths", paths, "planar_code or text files");
  verify->add_option("--claims", claims, "all or comma-separated claim ids")->capture_default_str();
  add_gen_flags(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*validate) return cmd_validate(opt, path);
    if (*stars) return cmd_stars(opt, path, list);
    if (*discharge) return cmd_discharge(opt, path, rules, ledger);
    if (*generate) return cmd_generate(opt, cfg);
    if (*verify) return cmd_verify(opt, paths, claims, cfg);
  } catch (const InputFailure& f) {
    std::cerr << f.message << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "minorstar: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
