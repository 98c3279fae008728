#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quiver.hpp"
#include "rational.hpp"

namespace repcat {

// Exact mesh-category Hom dimensions from a window source, by linear algebra
// over the rationals rather than by counting.
//
// For each vertex w let V(w) = span(paths source -> w) / I(w), where I is the
// two-sided mesh ideal restricted to these path spaces. Splitting any ideal
// element q . m_v . r by the last arrow of r gives the recursion
//   I(w) = sum_{arrows u -> w} I(u) . (u -> w)  +  span(paths source -> tau w) . m_w,
// so the quotients can be built incrementally in topological order:
//   V(w) = ( direct sum over arrows u -> w of V(u), plus one seed line if
//            w = source ) / R(w),
// where R(w) has one generator per basis class [q] of V(tau w), namely
//   sum_{arrows u -> w} incl_u( C_{sigma}( [q] ) )
// with C_sigma the stored composition matrix along the polarized arrow
// tau w -> u. dim V(w) is the true mesh-category dimension for every target
// whose column lies in the window, independent of the window edges: all paths
// and all mesh insertions between source and target live between their
// columns.
template <class V>
std::map<V, int> mesh_quotient_profile(const MeshWindow<V>& w, const V& source) {
  const auto& q = w.tq.quiver();
  if (!q.has_vertex(source))
    throw std::invalid_argument("mesh oracle: source " + label(source) + " not in window");

  std::map<V, int> dim;
  std::map<std::pair<V, V>, RatMatrix> comp;  // arrow (u,v) -> matrix dim[v] x dim[u]

  for (const V& v : w.order) {
    const auto& ins = q.in_neighbors(v);
    std::map<V, int> off;
    int D = 0;
    for (const V& u : ins) {
      off[u] = D;
      D += dim.at(u);
    }
    const bool seeded = (v == source);
    if (seeded) D += 1;

    RatMatrix rel;
    if (auto t = w.tq.tau_of(v); t && dim.at(*t) > 0) {
      const int dt = dim.at(*t);
      for (int j = 0; j < dt; ++j) {
        RatRow row(D);
        for (const V& u : ins) {
          auto it = comp.find({*t, u});
          if (it == comp.end())
            throw std::invalid_argument("mesh oracle: missing polarized arrow " + label(*t) +
                                        " -> " + label(u));
          const RatMatrix& C = it->second;
          for (int r = 0; r < dim.at(u); ++r) row[off.at(u) + r] += C[r][j];
        }
        rel.push_back(std::move(row));
      }
    }
    const std::vector<int> pivots = row_reduce(rel);
    std::vector<int> coords;  // non-pivot columns carry the quotient basis
    {
      std::size_t pi = 0;
      for (int c = 0; c < D; ++c) {
        if (pi < pivots.size() && pivots[pi] == c)
          ++pi;
        else
          coords.push_back(c);
      }
    }
    dim[v] = (int)coords.size();

    auto project = [&](int k) {
      RatRow vec(D);
      vec[k] = 1;
      for (std::size_t t2 = 0; t2 < pivots.size(); ++t2) {
        const Rational f = vec[pivots[t2]];
        if (f == 0) continue;
        for (int c = 0; c < D; ++c) vec[c] -= f * rel[t2][c];
      }
      RatRow out(coords.size());
      for (std::size_t c = 0; c < coords.size(); ++c) out[c] = vec[coords[c]];
      return out;
    };

    for (const V& u : ins) {
      RatMatrix C(dim.at(v), RatRow(dim.at(u)));
      for (int r = 0; r < dim.at(u); ++r) {
        RatRow col = project(off.at(u) + r);
        for (int s = 0; s < dim.at(v); ++s) C[s][r] = col[s];
      }
      comp[{u, v}] = std::move(C);
    }
  }
  return dim;
}

template <class V>
int hom_dim_oracle(const MeshWindow<V>& w, const V& x, const V& y) {
  auto d = mesh_quotient_profile(w, x);
  auto it = d.find(y);
  if (it == d.end()) throw std::invalid_argument("mesh oracle: target " + label(y) + " not in window");
  return it->second;
}

}  // namespace repcat
