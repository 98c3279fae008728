#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hammock.hpp"
#include "quiver.hpp"
#include "types.hpp"

namespace repcat {

// Tagged edges of the punctured polygon P_N, N = np. A non-loop M_{a,b} runs
// clockwise from a to b; its length |delta_{a,b}| counts the fan positions
// ((b - a) mod N) + 1, and loops M_{a,a} have length N + 1. An edge exists
// iff its length is at least N - n + 3, which leaves n - 2 non-loops per
// start plus the two tagged loops: pn^2 tagged edges in total.

inline int delta_length(int n, int p, const TaggedEdge& e) {
  const int N = n * p;
  return e.a == e.b ? N + 1 : ((e.b - e.a) % N + N) % N + 1;
}

inline bool edge_valid(int n, int p, const TaggedEdge& e) {
  if (n < 3 || p < 1) return false;
  const int N = n * p;
  if (e.a < 1 || e.a > N || e.b < 1 || e.b > N) return false;
  if (e.tag != 1 && e.tag != -1) return false;
  if (e.a != e.b && e.tag != 1) return false;
  return delta_length(n, p, e) >= N - n + 3;
}

inline void require_edge(int n, int p, const TaggedEdge& e) {
  if (!edge_valid(n, p, e))
    throw std::invalid_argument("invalid tagged edge " + label(e) + " for these parameters");
}

inline std::vector<TaggedEdge> enumerate_edges(int n, int p) {
  if (n < 3 || p < 1) throw std::invalid_argument("enumerate_edges: bad parameters");
  const int N = n * p;
  std::vector<TaggedEdge> out;
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b) {
      if (a == b) {
        out.push_back({a, a, +1});
        out.push_back({a, a, -1});
      } else if (edge_valid(n, p, {a, b, +1})) {
        out.push_back({a, b, +1});
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {
inline int cyc_inc(int x, int N) { return x % N + 1; }
inline int cyc_dec(int x, int N) { return (x + N - 2) % N + 1; }
}  // namespace detail

// Elementary moves (the arrows of the edge quiver). A loop rotates its start.
// A non-loop advances either endpoint, with two provisos: advancing the start
// is dropped when it would leave the valid range (this happens exactly at the
// minimal length, and for n = 3 also at length N), and advancing the end of a
// maximal-length non-loop lands on the puncture and produces both tagged
// loops instead of M_{a,a+...}. The move targets are listed start-advance
// first, then end-advance or the loop pair.
inline std::vector<TaggedEdge> elementary_moves(int n, int p, const TaggedEdge& e) {
  require_edge(n, p, e);
  const int N = n * p;
  if (e.loop()) return {TaggedEdge{detail::cyc_inc(e.a, N), e.a, +1}};
  std::vector<TaggedEdge> out;
  const TaggedEdge start_adv{detail::cyc_inc(e.a, N), e.b, +1};
  if (edge_valid(n, p, start_adv)) out.push_back(start_adv);
  if (delta_length(n, p, e) == N) {
    out.push_back({e.a, e.a, +1});
    out.push_back({e.a, e.a, -1});
  } else {
    out.push_back({e.a, detail::cyc_inc(e.b, N), +1});
  }
  return out;
}

// The geometric translation: rotate one step backwards; a full turn flips
// loop tags when N is odd.
inline TaggedEdge tau_geo(int n, int p, const TaggedEdge& e) {
  require_edge(n, p, e);
  const int N = n * p;
  if (e.loop()) return {detail::cyc_dec(e.a, N), detail::cyc_dec(e.a, N), -e.tag};
  return {detail::cyc_dec(e.a, N), detail::cyc_dec(e.b, N), e.tag};
}

inline TaggedEdge tau_geo_inverse(int n, int p, const TaggedEdge& e) {
  require_edge(n, p, e);
  const int N = n * p;
  if (e.loop()) return {detail::cyc_inc(e.a, N), detail::cyc_inc(e.a, N), -e.tag};
  return {detail::cyc_inc(e.a, N), detail::cyc_inc(e.b, N), e.tag};
}

// Rotation by one n-th of the polygon; the geometric shadow of F.
inline TaggedEdge rho(int n, int p, const TaggedEdge& e) {
  require_edge(n, p, e);
  const int N = n * p;
  auto r = [&](int x) { return (x - 1 + n) % N + 1; };
  return {r(e.a), r(e.b), e.tag};
}

// Collapse P_np onto P_n: reduce the start mod n and shorten the span by the
// n(p-1) positions that disappear. Loops map to loops with the same tag;
// rho-orbits collapse to a point, so mu_p o rho = mu_p.
inline TaggedEdge mu_p(int n, int p, const TaggedEdge& e) {
  require_edge(n, p, e);
  const int N = n * p;
  const int a2 = (e.a - 1) % n + 1;
  if (e.loop()) return {a2, a2, e.tag};
  const int d = ((e.b - e.a) % N + N) % N;
  const int b2 = ((a2 + d - n * (p - 1) - 1) % n + n) % n + 1;
  return {a2, b2, +1};
}

// All P_np edges collapsing onto a given P_n edge: the rho-orbit of any lift,
// p edges in total.
inline std::vector<TaggedEdge> mu_p_fiber(int n, int p, const TaggedEdge& target) {
  require_edge(n, 1, target);
  std::vector<TaggedEdge> out;
  for (const auto& e : enumerate_edges(n, p))
    if (mu_p(n, p, e) == target) out.push_back(e);
  return out;
}

// The stable translation quiver of tagged edges: elementary moves as arrows,
// tau_geo as translation.
inline TranslationQuiver<TaggedEdge> build_gamma_circle(int n, int p) {
  auto vs = enumerate_edges(n, p);
  std::vector<std::pair<TaggedEdge, TaggedEdge>> ar;
  std::map<TaggedEdge, TaggedEdge> tau;
  for (const auto& e : vs) {
    for (const auto& m : elementary_moves(n, p, e)) ar.push_back({e, m});
    tau[e] = tau_geo(n, p, e);
  }
  return TranslationQuiver<TaggedEdge>(Quiver<TaggedEdge>(vs, ar), tau);
}

// ---- Hom dimensions inside the polygon mesh category -----------------------
//
// The edge quiver is circular, so its mesh category is computed on the
// Z-cover that unrolls the start coordinate: vertices (winding, edge) with
// column winding * N + (a - 1). Orbit Hom dimensions are hammock sums over
// the windings, entirely in terms of moves and tau_geo; no detour through the
// AR side is involved, which is what makes the cross-model dimension check an
// independent one.

using CoverVertex = std::pair<int, TaggedEdge>;

inline std::string label(const CoverVertex& v) {
  return std::to_string(v.first) + "|" + label(v.second);
}

inline MeshWindow<CoverVertex> polygon_cover_window(int n, int p, int col_lo, int col_hi) {
  if (col_lo > col_hi) throw std::invalid_argument("cover window: inverted range");
  const int N = n * p;
  const auto edges = enumerate_edges(n, p);
  auto column = [&](const CoverVertex& v) { return v.first * N + (v.second.a - 1); };

  std::vector<CoverVertex> vs;
  std::map<CoverVertex, int> col;
  const int m_lo = (col_lo - (N - 1)) / N - 1, m_hi = col_hi / N + 1;
  for (int m = m_lo; m <= m_hi; ++m)
    for (const auto& e : edges) {
      CoverVertex v{m, e};
      const int c = column(v);
      if (c >= col_lo && c <= col_hi) {
        vs.push_back(v);
        col[v] = c;
      }
    }

  std::set<CoverVertex> inside(vs.begin(), vs.end());
  std::vector<std::pair<CoverVertex, CoverVertex>> ar;
  std::map<CoverVertex, CoverVertex> tau;
  for (const auto& v : vs) {
    for (const auto& m : elementary_moves(n, p, v.second)) {
      CoverVertex w{v.first + (v.second.a == N && m.a == 1 ? 1 : 0), m};
      if (inside.count(w)) ar.push_back({v, w});
    }
    const TaggedEdge t = tau_geo(n, p, v.second);
    CoverVertex w{v.first - (v.second.a == 1 ? 1 : 0), t};
    if (inside.count(w)) tau[v] = w;
  }
  return make_mesh_window(TranslationQuiver<CoverVertex>(Quiver<CoverVertex>(vs, ar), tau), col);
}

// Hom dimension between orbit objects, computed in the polygon model alone.
inline long long hom_polygon(int n, int p, const TaggedEdge& x, const TaggedEdge& y) {
  require_edge(n, p, x);
  require_edge(n, p, y);
  const int c0 = x.a - 1;
  int hi = c0 + 2 * n + 2;
  for (int attempt = 0; attempt < 3; ++attempt, hi += n + 2) {
    try {
      auto w = polygon_cover_window(n, p, c0 - 1, hi);
      auto h = hammock_profile(w, CoverVertex{0, x});
      long long s = 0;
      for (const auto& [v, d] : h)
        if (v.second == y) s += d;
      return s;
    } catch (const WindowTooSmall&) {
      continue;
    }
  }
  throw WindowTooSmall("hom_polygon: window growth cap reached");
}

}  // namespace repcat
