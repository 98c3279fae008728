#pragma once

#include <map>
#include <stdexcept>

#include "quiver.hpp"

namespace repcat {

// Raised when a hammock reaches the right edge of its window, i.e. the window
// was too narrow to contain the support. Callers enlarge and retry.
struct WindowTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Additive propagation of Hom(source, -) along the mesh structure of a
// window: h(source) = 1 and, in topological order,
//   h(w) = max(0, sum_{arrows u -> w} h(u) - h(tau w)),
// with h(tau w) read as 0 when tau is undefined (leftmost column). The
// profile must vanish on the two rightmost columns; otherwise the window may
// have truncated the support and WindowTooSmall is thrown. Since every arrow
// advances the column by at most one and tau steps one column back, two clean
// columns guarantee nothing nonzero lies beyond the window.
template <class V>
std::map<V, long long> hammock_profile(const MeshWindow<V>& w, const V& source) {
  if (!w.tq.quiver().has_vertex(source))
    throw std::invalid_argument("hammock: source " + label(source) + " not in window");
  std::map<V, long long> h;
  for (const V& v : w.order) {
    if (v == source) {
      h[v] = 1;
      continue;
    }
    long long s = 0;
    for (const V& u : w.tq.quiver().in_neighbors(v)) s += h.at(u);
    if (auto t = w.tq.tau_of(v)) s -= h.at(*t);
    h[v] = s > 0 ? s : 0;
  }
  for (const auto& [v, c] : w.column)
    if (c >= w.col_max - 1 && h.at(v) != 0)
      throw WindowTooSmall("hammock: support touches the window edge at " + label(v));
  return h;
}

template <class V>
long long hom_dim_hammock(const MeshWindow<V>& w, const V& x, const V& y) {
  auto h = hammock_profile(w, x);
  auto it = h.find(y);
  if (it == h.end()) throw std::invalid_argument("hammock: target " + label(y) + " not in window");
  return it->second;
}

}  // namespace repcat
