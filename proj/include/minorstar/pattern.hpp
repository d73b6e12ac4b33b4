#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace minorstar {

/// Upper bound on a vertex degree: either "at most k" or unbounded.
class Bound {
public:
  static constexpr Bound at_most(int k) { return Bound(k); }
  static constexpr Bound infinite() { return Bound(); }

  [[nodiscard]] constexpr bool is_infinite() const { return !finite_; }
  /// Only meaningful for finite bounds.
  [[nodiscard]] constexpr int value() const { return value_; }
  [[nodiscard]] constexpr bool admits(int degree) const { return !finite_ || degree <= value_; }

  friend constexpr bool operator==(const Bound&, const Bound&) = default;
  /// Finite bounds order by value; infinity is above every finite bound.
  friend constexpr std::strong_ordering operator<=>(const Bound& a, const Bound& b) {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.finite_ ? a.value_ <=> b.value_ : std::strong_ordering::equal;
  }

  [[nodiscard]] std::string str() const { return finite_ ? std::to_string(value_) : std::string("*"); }

private:
  constexpr Bound() = default;
  constexpr explicit Bound(int k) : finite_(true), value_(k) {}

  bool finite_ = false;
  int value_ = 0;
};

inline constexpr int kMinBound = 5;

/// <k1,...,k5>: degree bounds on the five neighbors of a 5-vertex in cyclic order.
struct CyclicPattern {
  std::array<Bound, 5> bounds{Bound::infinite(), Bound::infinite(), Bound::infinite(), Bound::infinite(),
                              Bound::infinite()};

  friend bool operator==(const CyclicPattern&, const CyclicPattern&) = default;

  [[nodiscard]] std::string str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < bounds.size(); ++i) s += (i ? "," : "") + bounds[i].str();
    return s + ">";
  }
};

/// (k1,...,kk): degree bounds on k neighbors of the center in any order.
struct UnorderedPattern {
  std::vector<Bound> bounds;

  friend bool operator==(const UnorderedPattern&, const UnorderedPattern&) = default;

  [[nodiscard]] std::size_t rays() const { return bounds.size(); }
  [[nodiscard]] std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < bounds.size(); ++i) s += (i ? "," : "") + bounds[i].str();
    return s + ")";
  }
};

using Pattern = std::variant<CyclicPattern, UnorderedPattern>;

class PatternError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline Bound parse_bound(std::string_view tok, std::string_view whole) {
  tok = trim(tok);
  if (tok == "*") return Bound::infinite();
  if (tok.empty() || tok.size() > 6 ||
      !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw PatternError("malformed bound '" + std::string(tok) + "' in pattern '" + std::string(whole) + "'");
  }
  const int v = std::stoi(std::string(tok));
  if (v < kMinBound) {
    throw PatternError("bound " + std::to_string(v) + " < " + std::to_string(kMinBound) + " in pattern '" +
                       std::string(whole) + "'");
  }
  return Bound::at_most(v);
}

}  // namespace detail

/// `<k1,k2,k3,k4,k5>` gives a CyclicPattern, `(k1,...,kk)` an UnorderedPattern,
/// `*` stands for an unbounded degree.
inline Pattern parse_pattern(std::string_view text) {
  const std::string_view s = detail::trim(text);
  if (s.size() < 2) throw PatternError("malformed pattern '" + std::string(text) + "'");
  const char open = s.front();
  const char close = s.back();
  if (!((open == '<' && close == '>') || (open == '(' && close == ')'))) {
    throw PatternError("pattern must be <...> or (...): '" + std::string(text) + "'");
  }
  std::vector<Bound> bounds;
  std::string_view body = s.substr(1, s.size() - 2);
  while (true) {
    const auto comma = body.find(',');
    bounds.push_back(detail::parse_bound(body.substr(0, comma), s));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (open == '<') {
    if (bounds.size() != 5) {
      throw PatternError("cyclic pattern needs 5 bounds, got " + std::to_string(bounds.size()) + ": '" +
                         std::string(s) + "'");
    }
    CyclicPattern p;
    std::copy(bounds.begin(), bounds.end(), p.bounds.begin());
    return p;
  }
  if (bounds.size() > 5) {
    throw PatternError("unordered pattern needs 1..5 bounds, got " + std::to_string(bounds.size()) + ": '" +
                       std::string(s) + "'");
  }
  return UnorderedPattern{std::move(bounds)};
}

inline CyclicPattern parse_cyclic(std::string_view text) {
  Pattern p = parse_pattern(text);
  if (auto* c = std::get_if<CyclicPattern>(&p)) return *c;
  throw PatternError("expected a cyclic <...> pattern: '" + std::string(text) + "'");
}

inline UnorderedPattern parse_unordered(std::string_view text) {
  Pattern p = parse_pattern(text);
  if (auto* u = std::get_if<UnorderedPattern>(&p)) return *u;
  throw PatternError("expected an unordered (...) pattern: '" + std::string(text) + "'");
}

/// Pattern-list file: one cyclic pattern per line, `#` starts a comment.
inline std::vector<CyclicPattern> parse_pattern_list(std::string_view text) {
  std::vector<CyclicPattern> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    try {
      out.push_back(parse_cyclic(line));
    } catch (const PatternError& e) {
      throw PatternError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

inline std::string format_pattern_list(const std::vector<CyclicPattern>& list, std::string_view title) {
  std::string out = "# " + std::string(title) + "\n";
  for (const auto& p : list) out += p.str() + "\n";
  return out;
}

namespace detail {

inline std::vector<CyclicPattern> parse_builtin(std::initializer_list<std::string_view> items) {
  std::vector<CyclicPattern> out;
  out.reserve(items.size());
  for (auto s : items) out.push_back(parse_cyclic(s));
  return out;
}

}  // namespace detail

/// The 34 minor 5-stars of which every plane graph with minimum degree five
/// contains at least one (first description), in printed order.
inline const std::vector<CyclicPattern>& theorem1_list() {
  static const std::vector<CyclicPattern> list = detail::parse_builtin({
      "<5,7,7,5,17>", "<5,7,8,5,11>", "<5,7,5,8,8>",  "<8,5,5,11,6>", "<8,5,5,8,7>",  "<8,5,5,7,8>",
      "<8,5,5,6,9>",  "<5,6,5,8,11>", "<5,6,6,5,*>",  "<5,6,6,6,17>", "<6,6,6,6,11>", "<6,6,6,7,8>",
      "<6,6,7,6,8>",  "<5,6,6,11,7>", "<5,6,11,6,7>", "<5,6,6,8,8>",  "<5,6,8,6,8>",  "<5,7,6,8,7>",
      "<5,6,7,7,7>",  "<5,6,6,7,11>", "<5,6,7,6,11>", "<5,7,6,7,8>",  "<5,7,7,6,8>",  "<5,7,6,6,14>",
      "<5,8,6,6,11>", "<5,5,7,6,14>", "<5,6,7,5,35>", "<5,6,8,5,15>", "<5,6,9,5,10>", "<5,6,11,5,9>",
      "<5,5,10,5,12>", "<5,7,11,5,8>", "<5,6,5,7,14>", "<5,5,9,5,17>",
  });
  return list;
}

/// The 40 minor 5-stars of the second description, in printed order.
inline const std::vector<CyclicPattern>& theorem2_list() {
  static const std::vector<CyclicPattern> list = detail::parse_builtin({
      "<5,5,5,7,17>", "<7,5,5,7,11>", "<7,5,5,8,9>",  "<7,5,5,9,8>",  "<7,5,5,11,7>", "<5,5,5,8,11>",
      "<8,5,5,9,7>",  "<8,5,5,11,6>", "<6,6,6,6,11>", "<6,6,6,7,9>",  "<6,6,7,6,9>",  "<6,6,7,7,7>",
      "<6,7,6,7,7>",  "<5,6,6,8,9>",  "<5,6,8,6,9>",  "<5,6,7,7,9>",  "<5,6,6,7,11>", "<5,6,7,6,11>",
      "<5,7,6,7,9>",  "<5,7,7,6,9>",  "<5,6,6,6,17>", "<5,7,6,6,11>", "<5,8,6,6,10>", "<5,9,6,6,9>",
      "<5,5,9,6,9>",  "<5,6,6,5,*>",  "<5,6,7,5,23>", "<5,6,8,5,15>", "<5,6,9,5,14>", "<5,9,5,6,10>",
      "<5,8,5,6,11>", "<5,7,5,6,17>", "<5,7,7,5,11>", "<5,7,8,5,9>",  "<5,8,5,7,9>",  "<5,7,5,7,11>",
      "<5,7,5,8,10>", "<5,7,5,9,9>",  "<5,5,10,5,14>", "<5,5,11,5,13>",
  });
  return list;
}

/// Stars cited inside the two case analyses that are not entries of either
/// printed list. Used only for diagnostics on a graph where a list scan fails.
inline const std::vector<CyclicPattern>& proof_cited_patterns() {
  static const std::vector<CyclicPattern> list = detail::parse_builtin({
      "<5,6,7,8,6>", "<7,5,5,14,6>", "<8,5,5,5,11>", "<5,5,8,5,15>", "<5,8,8,5,11>", "<6,5,5,7,11>",
      "<6,5,5,11,7>", "<7,5,5,7,8>", "<5,5,7,5,23>", "<6,5,6,7,9>", "<6,5,5,8,9>", "<6,5,5,6,11>",
      "<6,5,5,7,9>", "<5,5,6,8,9>", "<5,5,6,7,11>", "<5,5,6,6,17>", "<5,5,9,5,14>",
  });
  return list;
}

}  // namespace minorstar
