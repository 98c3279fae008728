#pragma once

#include <compare>
#include <optional>
#include <string>

namespace repcat {

// Levels of the D_n quiver. -1 encodes the branch vertex 0bar, 0 encodes the
// branch vertex 0, and 1..n-2 are the tail levels. The natural integer order
// -1 < 0 < 1 < ... doubles as the serialization order "0bar, 0, 1, ...".
constexpr int kZeroBar = -1;
constexpr int kZero = 0;

inline bool level_valid(int n, int level) { return level >= kZeroBar && level <= n - 2; }
inline bool level_is_branch(int level) { return level <= kZero; }

// Exchange the branch levels 0 <-> 0bar; tail levels are fixed.
inline int level_swap(int level) { return level_is_branch(level) ? -1 - level : level; }

inline std::string level_name(int level) {
  return level == kZeroBar ? "0bar" : std::to_string(level);
}

inline std::optional<int> parse_level(const std::string& s) {
  if (s == "0bar") return kZeroBar;
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  if (s.size() > 1 && s[0] == '0') return std::nullopt;
  if (s.size() > 3) return std::nullopt;
  return std::stoi(s);
}

// Base quivers feeding build_zq carry plain integer labels.
inline std::string label(int v) { return std::to_string(v); }

// Vertex of ZQ^op, of one of its finite windows, or of a circular quotient:
// column index i and level j. In circular quivers i is reduced mod the
// circumference; in windows i ranges over the window interval.
struct DVertex {
  int i = 0;
  int level = 0;
  auto operator<=>(const DVertex&) const = default;
};

inline std::string label(const DVertex& v) {
  return std::to_string(v.i) + ":" + level_name(v.level);
}

inline std::optional<DVertex> parse_vertex_label(const std::string& s) {
  auto pos = s.find(':');
  if (pos == std::string::npos) return std::nullopt;
  const std::string is = s.substr(0, pos), ls = s.substr(pos + 1);
  if (is.empty() || is.find_first_not_of("-0123456789") != std::string::npos) return std::nullopt;
  auto lev = parse_level(ls);
  if (!lev) return std::nullopt;
  try {
    return DVertex{std::stoi(is), *lev};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// Tagged edge M_{a,b}^tag of the punctured polygon P_N: endpoints in 1..N,
// tag in {+1,-1} with tag = +1 required whenever a != b. Loops (a == b) come
// in both tags.
struct TaggedEdge {
  int a = 1;
  int b = 1;
  int tag = +1;
  bool loop() const { return a == b; }
  auto operator<=>(const TaggedEdge&) const = default;
};

inline std::string label(const TaggedEdge& e) {
  return std::to_string(e.a) + ":" + std::to_string(e.b) + ":" + (e.tag > 0 ? "+" : "-");
}

// Syntax-only parse of the literal "<a>:<b>:<+|->"; range and tag validity
// against a concrete (n, p) are checked separately.
inline std::optional<TaggedEdge> parse_edge_literal(const std::string& s) {
  auto p1 = s.find(':');
  if (p1 == std::string::npos) return std::nullopt;
  auto p2 = s.find(':', p1 + 1);
  if (p2 == std::string::npos || s.find(':', p2 + 1) != std::string::npos) return std::nullopt;
  const std::string as = s.substr(0, p1), bs = s.substr(p1 + 1, p2 - p1 - 1), ts = s.substr(p2 + 1);
  if (as.empty() || bs.empty()) return std::nullopt;
  if (as.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  if (bs.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  if (ts != "+" && ts != "-") return std::nullopt;
  try {
    return TaggedEdge{std::stoi(as), std::stoi(bs), ts == "+" ? +1 : -1};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace repcat
