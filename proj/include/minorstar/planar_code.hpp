#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "minorstar/plane_graph.hpp"

namespace minorstar {

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

/// Rejected input. `graph` is 1-based (0 when the failure precedes any graph,
/// e.g. a bad header) and `offset` is the byte offset in the input stream.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t graph, std::size_t offset, const std::string& what, bool structural = false)
      : std::runtime_error("graph " + std::to_string(graph) + ", byte " + std::to_string(offset) + ": " + what),
        graph_(graph),
        offset_(offset),
        reason_(what),
        structural_(structural) {}

  [[nodiscard]] std::size_t graph() const { return graph_; }
  [[nodiscard]] std::size_t offset() const { return offset_; }
  [[nodiscard]] const std::string& reason() const { return reason_; }
  /// The bytes were well formed but the graph violates a PlaneGraph invariant.
  [[nodiscard]] bool structural() const { return structural_; }

private:
  std::size_t graph_;
  std::size_t offset_;
  std::string reason_;
  bool structural_;
};

/// Streams graphs out of a 1-byte planar-code source one at a time.
///
/// Layout: optional ">>planar_code<<" header, then per graph a byte n
/// (1..255) followed by, for each vertex, its neighbors as 1-based bytes in
/// rotation order terminated by 0.
class PlanarCodeReader {
public:
  explicit PlanarCodeReader(std::istream& in) : in_(in) {}

  /// Next graph, or nullopt at a clean end of input. Throws ParseError.
  std::optional<PlaneGraph> next() {
    if (!header_checked_) check_header();
    const int first = in_.get();
    if (first == std::char_traits<char>::eof()) return std::nullopt;
    ++graph_;
    const std::size_t graph_start = offset_;
    ++offset_;
    const int n = first;
    if (n == 0) {
      synced_ = false;
      throw ParseError(graph_, graph_start, "vertex count 0 (multi-byte planar code is not supported)");
    }

    Rotation rot(static_cast<std::size_t>(n));
    std::vector<std::size_t> list_start(static_cast<std::size_t>(n));
    std::optional<ParseError> pending;
    for (int v = 0; v < n; ++v) {
      list_start[v] = offset_;
      while (true) {
        const int b = in_.get();
        if (b == std::char_traits<char>::eof()) {
          synced_ = false;
          throw ParseError(graph_, offset_,
                           "truncated stream inside the neighbor list of vertex " + std::to_string(v + 1));
        }
        const std::size_t at = offset_++;
        if (b == 0) break;
        if (b > n && !pending) {
          pending.emplace(graph_, at,
                          "neighbor index " + std::to_string(b) + " out of range 1.." + std::to_string(n) +
                              " (vertex " + std::to_string(v + 1) + ")");
        }
        rot[v].push_back(b - 1);
      }
    }
    // The whole graph has been consumed, so the reader stays usable.
    if (pending) throw *pending;
    try {
      return PlaneGraph::from_rotation(rot);
    } catch (const GraphError& e) {
      const std::size_t at = e.vertex() >= 0 ? list_start[e.vertex()] : graph_start;
      throw ParseError(graph_, at, std::string(to_string(e.kind())) + ": " + e.what(), true);
    }
  }

  [[nodiscard]] std::size_t graphs_read() const { return graph_; }
  /// False once an error left the stream in the middle of a graph.
  [[nodiscard]] bool synced() const { return synced_; }

private:
  void check_header() {
    header_checked_ = true;
    if (in_.peek() != '>') return;
    std::string head(kPlanarCodeHeader.size(), '\0');
    in_.read(head.data(), static_cast<std::streamsize>(head.size()));
    head.resize(static_cast<std::size_t>(in_.gcount()));
    if (head != kPlanarCodeHeader) {
      synced_ = false;
      throw ParseError(0, 0, "unrecognized header (only 1-byte '>>planar_code<<' is supported)");
    }
    offset_ = head.size();
  }

  std::istream& in_;
  bool header_checked_ = false;
  std::size_t offset_ = 0;
  std::size_t graph_ = 0;
  bool synced_ = true;
};

inline std::vector<PlaneGraph> parse_planar_code(std::string_view bytes) {
  std::istringstream in{std::string(bytes)};
  PlanarCodeReader reader(in);
  std::vector<PlaneGraph> out;
  while (auto g = reader.next()) out.push_back(std::move(*g));
  return out;
}

/// Appends one graph (no header) to `out`.
inline void append_planar_code(std::string& out, const PlaneGraph& g) {
  if (g.order() > 255) {
    throw std::invalid_argument("planar code supports at most 255 vertices, graph has " + std::to_string(g.order()));
  }
  out.push_back(static_cast<char>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex u : g.rotation(v)) out.push_back(static_cast<char>(u + 1));
    out.push_back('\0');
  }
}

inline std::string encode_planar_code(const std::vector<PlaneGraph>& graphs) {
  std::string out(kPlanarCodeHeader);
  for (const auto& g : graphs) append_planar_code(out, g);
  return out;
}

// ---------------------------------------------------------------------------
// Text format:
//
//   12
//   1: 2 3 4 5 6
//   2: 1 6 ...
//
// Several graphs may follow one another (blank lines between them are ignored)
// when read through parse_text_stream.

inline std::string encode_text(const PlaneGraph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out += std::to_string(v + 1) + ":";
    for (Vertex u : g.rotation(v)) out += " " + std::to_string(u + 1);
    out += "\n";
  }
  return out;
}

namespace detail {

class TextCursor {
public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
  [[nodiscard]] std::size_t offset() const { return pos_; }

  void skip_blank_lines() {
    while (!at_end()) {
      std::size_t p = pos_;
      while (p < text_.size() && (text_[p] == ' ' || text_[p] == '\t' || text_[p] == '\r')) ++p;
      if (p < text_.size() && text_[p] != '\n') return;
      pos_ = p < text_.size() ? p + 1 : p;
    }
  }

  /// Returns the next line (without its terminator) and its starting offset.
  std::optional<std::pair<std::string_view, std::size_t>> line() {
    if (at_end()) return std::nullopt;
    const std::size_t start = pos_;
    std::size_t end = text_.find('\n', pos_);
    if (end == std::string_view::npos) end = text_.size();
    pos_ = end < text_.size() ? end + 1 : end;
    std::string_view l = text_.substr(start, end - start);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    return std::make_pair(l, start);
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Parses whitespace-separated positive integers; nullopt on a malformed token.
inline std::optional<std::vector<long>> parse_ints(std::string_view s) {
  std::vector<long> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > 1'000'000) return std::nullopt;
      ++i;
    }
    if (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) return std::nullopt;
    out.push_back(v);
  }
  return out;
}

inline PlaneGraph parse_one_text(TextCursor& cur, std::size_t graph) {
  const auto header = cur.line();
  if (!header) throw ParseError(graph, cur.offset(), "missing vertex count line");
  const auto count = parse_ints(header->first);
  if (!count || count->size() != 1 || (*count)[0] < 1) {
    throw ParseError(graph, header->second, "first line must be a single positive vertex count");
  }
  const long n = (*count)[0];
  Rotation rot(static_cast<std::size_t>(n));
  std::vector<std::size_t> line_start(static_cast<std::size_t>(n));
  for (long v = 0; v < n; ++v) {
    const auto l = cur.line();
    if (!l) throw ParseError(graph, cur.offset(), "truncated: expected line for vertex " + std::to_string(v + 1));
    const auto [text, start] = *l;
    line_start[v] = start;
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError(graph, start, "expected 'i: neighbors'");
    const auto label = parse_ints(text.substr(0, colon));
    if (!label || label->size() != 1 || (*label)[0] != v + 1) {
      throw ParseError(graph, start, "expected vertex label " + std::to_string(v + 1));
    }
    const auto nbrs = parse_ints(text.substr(colon + 1));
    if (!nbrs) throw ParseError(graph, start, "malformed neighbor token (vertex " + std::to_string(v + 1) + ")");
    for (long u : *nbrs) {
      if (u < 1 || u > n) {
        throw ParseError(graph, start,
                         "neighbor index " + std::to_string(u) + " out of range 1.." + std::to_string(n) +
                             " (vertex " + std::to_string(v + 1) + ")");
      }
      rot[v].push_back(static_cast<Vertex>(u - 1));
    }
  }
  try {
    return PlaneGraph::from_rotation(rot);
  } catch (const GraphError& e) {
    const std::size_t at = e.vertex() >= 0 ? line_start[e.vertex()] : header->second;
    throw ParseError(graph, at, std::string(to_string(e.kind())) + ": " + e.what(), true);
  }
}

}  // namespace detail

/// Exactly one graph; anything but blank lines after it is an error.
inline PlaneGraph parse_text(std::string_view utf8) {
  detail::TextCursor cur(utf8);
  cur.skip_blank_lines();
  PlaneGraph g = detail::parse_one_text(cur, 1);
  cur.skip_blank_lines();
  if (!cur.at_end()) throw ParseError(1, cur.offset(), "trailing content after the graph");
  return g;
}

inline std::vector<PlaneGraph> parse_text_stream(std::string_view utf8) {
  detail::TextCursor cur(utf8);
  std::vector<PlaneGraph> out;
  cur.skip_blank_lines();
  while (!cur.at_end()) {
    out.push_back(detail::parse_one_text(cur, out.size() + 1));
    cur.skip_blank_lines();
  }
  return out;
}

enum class GraphFormat { planar_code, text };

/// Text input starts with a digit-only first line followed by an `i:` line.
/// Anything else, including the `>>planar_code<<` header, is binary.
inline GraphFormat sniff_format(std::string_view prefix) {
  if (prefix.empty() || !std::isdigit(static_cast<unsigned char>(prefix.front()))) return GraphFormat::planar_code;
  const auto nl = prefix.find('\n');
  if (nl == std::string_view::npos) return GraphFormat::planar_code;
  for (char c : prefix.substr(0, nl)) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != ' ' && c != '\r') return GraphFormat::planar_code;
  }
  const auto rest = prefix.substr(nl + 1);
  const auto line = rest.substr(0, rest.find('\n'));
  return line.find(':') != std::string_view::npos ? GraphFormat::text : GraphFormat::planar_code;
}

/// Reads graphs one at a time from either format. After a ParseError,
/// synced() tells whether next() may be called again.
class GraphSource {
public:
  GraphSource(std::istream& in, GraphFormat format) : format_(format), binary_(in) {
    if (format_ == GraphFormat::text) {
      std::ostringstream buf;
      buf << in.rdbuf();
      text_ = buf.str();
      cursor_.emplace(text_);
    }
  }

  std::optional<PlaneGraph> next() {
    if (format_ == GraphFormat::planar_code) return binary_.next();
    cursor_->skip_blank_lines();
    if (cursor_->at_end()) return std::nullopt;
    ++text_graphs_;
    try {
      return detail::parse_one_text(*cursor_, text_graphs_);
    } catch (const ParseError& e) {
      // Structural errors are raised after the whole graph was read.
      if (!e.structural()) text_synced_ = false;
      throw;
    }
  }

  [[nodiscard]] bool synced() const {
    return format_ == GraphFormat::planar_code ? binary_.synced() : text_synced_;
  }
  [[nodiscard]] std::size_t graphs_read() const {
    return format_ == GraphFormat::planar_code ? binary_.graphs_read() : text_graphs_;
  }

private:
  GraphFormat format_;
  PlanarCodeReader binary_;
  std::string text_;
  std::optional<detail::TextCursor> cursor_;
  std::size_t text_graphs_ = 0;
  bool text_synced_ = true;
};

}  // namespace minorstar
