#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "types.hpp"

namespace repcat {

// Finite quiver over an ordered vertex type V. Every quiver in scope is
// simple: loops and parallel arrows are rejected at construction, which makes
// the polarization of a (stable) translation structure unique and lets arrows
// be identified with ordered vertex pairs.
template <class V>
class Quiver {
 public:
  Quiver() = default;

  Quiver(std::vector<V> vertices, std::vector<std::pair<V, V>> arrows) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    verts_ = std::move(vertices);
    for (std::size_t k = 0; k < verts_.size(); ++k) idx_[verts_[k]] = k;

    std::sort(arrows.begin(), arrows.end());
    for (const auto& [s, t] : arrows) {
      if (!has_vertex(s) || !has_vertex(t))
        throw std::invalid_argument("quiver: arrow endpoint not a vertex: " + label(s) + " -> " + label(t));
      if (s == t) throw std::invalid_argument("quiver: loop arrow at " + label(s));
      if (!arrow_set_.insert({s, t}).second)
        throw std::invalid_argument("quiver: parallel arrow " + label(s) + " -> " + label(t));
    }
    arrows_ = std::move(arrows);
    out_.assign(verts_.size(), {});
    in_.assign(verts_.size(), {});
    for (const auto& [s, t] : arrows_) {
      out_[idx_.at(s)].push_back(t);
      in_[idx_.at(t)].push_back(s);
    }
    for (auto& ns : out_) std::sort(ns.begin(), ns.end());
    for (auto& ns : in_) std::sort(ns.begin(), ns.end());
  }

  const std::vector<V>& vertices() const { return verts_; }
  const std::vector<std::pair<V, V>>& arrows() const { return arrows_; }
  bool has_vertex(const V& v) const { return idx_.count(v) != 0; }
  bool has_arrow(const V& s, const V& t) const { return arrow_set_.count({s, t}) != 0; }

  const std::vector<V>& out_neighbors(const V& v) const { return out_[index_of(v)]; }
  const std::vector<V>& in_neighbors(const V& v) const { return in_[index_of(v)]; }

  std::size_t index_of(const V& v) const {
    auto it = idx_.find(v);
    if (it == idx_.end()) throw std::invalid_argument("quiver: unknown vertex " + label(v));
    return it->second;
  }

 private:
  std::vector<V> verts_;
  std::vector<std::pair<V, V>> arrows_;
  std::map<V, std::size_t> idx_;
  std::set<std::pair<V, V>> arrow_set_;
  std::vector<std::vector<V>> out_, in_;
};

// Quiver with a partial translation tau. Stability (tau a total bijection) is
// not required here so that finite windows of ZQ, whose leftmost column has no
// translate, use the same type; check_stable_translation reports on the
// difference.
template <class V>
class TranslationQuiver {
 public:
  TranslationQuiver() = default;

  TranslationQuiver(Quiver<V> q, std::map<V, V> tau) : q_(std::move(q)), tau_(std::move(tau)) {
    for (const auto& [y, x] : tau_) {
      if (!q_.has_vertex(y) || !q_.has_vertex(x))
        throw std::invalid_argument("translation: tau endpoint not a vertex: " + label(y));
      if (!tau_inv_.insert({x, y}).second)
        throw std::invalid_argument("translation: tau not injective at " + label(x));
    }
  }

  const Quiver<V>& quiver() const { return q_; }
  const std::map<V, V>& tau() const { return tau_; }

  std::optional<V> tau_of(const V& v) const {
    auto it = tau_.find(v);
    return it == tau_.end() ? std::nullopt : std::optional<V>(it->second);
  }
  std::optional<V> tau_inv_of(const V& v) const {
    auto it = tau_inv_.find(v);
    return it == tau_inv_.end() ? std::nullopt : std::optional<V>(it->second);
  }

 private:
  Quiver<V> q_;
  std::map<V, V> tau_, tau_inv_;
};

// Translation-quiver axioms wherever tau is defined: for y with tau(y) = x,
// the in-neighbors of y must equal the out-neighbors of x (this is the mesh
// arrow-count symmetry; with simple quivers it also makes the polarization
// sigma(alpha: z -> y) = (x -> z) well formed). Violations are returned as
// human-readable strings; empty means clean.
template <class V>
std::vector<std::string> check_translation_quiver(const TranslationQuiver<V>& tq) {
  std::vector<std::string> bad;
  for (const auto& [y, x] : tq.tau()) {
    const auto& ins = tq.quiver().in_neighbors(y);
    const auto& outs = tq.quiver().out_neighbors(x);
    if (ins != outs) {
      for (const V& z : ins)
        if (!tq.quiver().has_arrow(x, z))
          bad.push_back("mesh asymmetry: arrow " + label(z) + " -> " + label(y) +
                        " has no partner " + label(x) + " -> " + label(z));
      for (const V& z : outs)
        if (!tq.quiver().has_arrow(z, y))
          bad.push_back("mesh asymmetry: arrow " + label(x) + " -> " + label(z) +
                        " has no partner " + label(z) + " -> " + label(y));
    }
  }
  return bad;
}

// Stability on top of the translation axioms: tau total and surjective
// (injectivity is enforced at construction).
template <class V>
std::vector<std::string> check_stable_translation(const TranslationQuiver<V>& tq) {
  std::vector<std::string> bad = check_translation_quiver(tq);
  for (const V& v : tq.quiver().vertices()) {
    if (!tq.tau_of(v)) bad.push_back("tau undefined at " + label(v));
    if (!tq.tau_inv_of(v)) bad.push_back("tau inverse undefined at " + label(v));
  }
  return bad;
}

// The mesh ending at `end`: starts at tau(end), passes through each in-arrow
// of `end`. m_end = sum over middles u of (end <- u) o (u <- tau(end)).
template <class V>
struct MeshRelation {
  V start;
  V end;
  std::vector<V> middles;
};

// Meshes for every vertex with defined translate; vertices without one are
// skipped. Requires the translation axioms to hold where tau is defined.
template <class V>
std::vector<MeshRelation<V>> mesh_relations(const TranslationQuiver<V>& tq) {
  auto bad = check_translation_quiver(tq);
  if (!bad.empty()) throw std::invalid_argument("mesh_relations: " + bad.front());
  std::vector<MeshRelation<V>> out;
  for (const auto& [y, x] : tq.tau())
    out.push_back({x, y, tq.quiver().in_neighbors(y)});
  return out;
}

// A finite window of a mesh quiver, directed by a column coordinate: arrows
// never decrease the column, tau decreases it by exactly one, and the arrow
// relation is acyclic. Carries a deterministic topological order (Kahn,
// ready vertices taken in (column, vertex) order).
template <class V>
struct MeshWindow {
  TranslationQuiver<V> tq;
  std::map<V, int> column;
  int col_min = 0;
  int col_max = 0;
  std::vector<V> order;
};

template <class V>
MeshWindow<V> make_mesh_window(TranslationQuiver<V> tq, std::map<V, int> column) {
  MeshWindow<V> w;
  const auto& q = tq.quiver();
  if (q.vertices().empty()) throw std::invalid_argument("mesh window: empty quiver");
  for (const V& v : q.vertices())
    if (!column.count(v)) throw std::invalid_argument("mesh window: no column for " + label(v));
  for (const auto& [s, t] : q.arrows())
    if (column.at(t) < column.at(s) || column.at(t) > column.at(s) + 1)
      throw std::invalid_argument("mesh window: arrow " + label(s) + " -> " + label(t) +
                                  " not column-directed");
  for (const auto& [y, x] : tq.tau())
    if (column.at(x) != column.at(y) - 1)
      throw std::invalid_argument("mesh window: tau does not step one column left at " + label(y));

  w.col_min = w.col_max = column.begin()->second;
  for (const auto& [v, c] : column) {
    w.col_min = std::min(w.col_min, c);
    w.col_max = std::max(w.col_max, c);
  }

  std::map<V, int> indeg;
  for (const V& v : q.vertices()) indeg[v] = (int)q.in_neighbors(v).size();
  std::set<std::pair<int, V>> ready;
  for (const auto& [v, d] : indeg)
    if (d == 0) ready.insert({column.at(v), v});
  while (!ready.empty()) {
    auto [c, v] = *ready.begin();
    ready.erase(ready.begin());
    w.order.push_back(v);
    for (const V& u : q.out_neighbors(v))
      if (--indeg[u] == 0) ready.insert({column.at(u), u});
  }
  if (w.order.size() != q.vertices().size())
    throw std::invalid_argument("mesh window: arrow relation has a cycle");

  w.tq = std::move(tq);
  w.column = std::move(column);
  return w;
}

// The window [i_min, i_max] of the stable translation quiver ZQ for a finite
// base quiver Q over integer labels: vertices (i, x), in-column arrows
// (i, x) -> (i, y) and cross arrows (i, y) -> (i+1, x) for every arrow
// x -> y of Q, and tau(i, x) = (i-1, x) where defined.
inline MeshWindow<DVertex> build_zq(const Quiver<int>& base, int i_min, int i_max) {
  if (base.vertices().empty()) throw std::invalid_argument("build_zq: empty base quiver");
  if (i_min > i_max) throw std::invalid_argument("build_zq: inverted column range");
  std::vector<DVertex> vs;
  std::vector<std::pair<DVertex, DVertex>> ar;
  std::map<DVertex, DVertex> tau;
  std::map<DVertex, int> col;
  for (int i = i_min; i <= i_max; ++i) {
    for (int x : base.vertices()) {
      vs.push_back({i, x});
      col[{i, x}] = i;
      if (i > i_min) tau[{i, x}] = {i - 1, x};
    }
    for (const auto& [x, y] : base.arrows()) {
      ar.push_back({{i, x}, {i, y}});
      if (i < i_max) ar.push_back({{i, y}, {i + 1, x}});
    }
  }
  return make_mesh_window(TranslationQuiver<DVertex>(Quiver<DVertex>(vs, ar), tau), col);
}

// Full translation subquiver on a vertex subset: keeps the arrows and tau
// pairs with both endpoints inside.
template <class V>
TranslationQuiver<V> full_subquiver(const TranslationQuiver<V>& tq, const std::set<V>& keep) {
  std::vector<V> vs(keep.begin(), keep.end());
  for (const V& v : vs)
    if (!tq.quiver().has_vertex(v))
      throw std::invalid_argument("full_subquiver: unknown vertex " + label(v));
  std::vector<std::pair<V, V>> ar;
  for (const auto& a : tq.quiver().arrows())
    if (keep.count(a.first) && keep.count(a.second)) ar.push_back(a);
  std::map<V, V> tau;
  for (const auto& [y, x] : tq.tau())
    if (keep.count(y) && keep.count(x)) tau[y] = x;
  return TranslationQuiver<V>(Quiver<V>(vs, ar), tau);
}

// Weakly connected components, each sorted, listed by smallest vertex.
template <class V>
std::vector<std::vector<V>> weak_components(const Quiver<V>& q) {
  std::map<V, V> parent;
  for (const V& v : q.vertices()) parent.emplace(v, v);
  auto find = [&](V v) {
    while (!(parent.at(v) == v)) v = parent.at(v);
    return v;
  };
  for (const auto& [s, t] : q.arrows()) {
    V a = find(s), b = find(t);
    if (!(a == b)) parent.at(std::max(a, b)) = std::min(a, b);
  }
  std::map<V, std::vector<V>> buckets;
  for (const V& v : q.vertices()) buckets[find(v)].push_back(v);
  std::vector<std::vector<V>> out;
  for (auto& [root, vs] : buckets) out.push_back(std::move(vs));
  return out;
}

// Checks that f is an isomorphism of translation quivers A -> B: a bijection
// on vertices carrying arrows to arrows bijectively and commuting with tau
// (including definedness). Violations returned as strings.
template <class V, class W>
std::vector<std::string> verify_translation_iso(const TranslationQuiver<V>& A,
                                                const TranslationQuiver<W>& B,
                                                const std::map<V, W>& f) {
  std::vector<std::string> bad;
  if (A.quiver().vertices().size() != B.quiver().vertices().size())
    bad.push_back("vertex counts differ");
  std::set<W> image;
  for (const V& v : A.quiver().vertices()) {
    auto it = f.find(v);
    if (it == f.end()) {
      bad.push_back("map undefined at " + label(v));
      continue;
    }
    if (!B.quiver().has_vertex(it->second))
      bad.push_back("image " + label(it->second) + " of " + label(v) + " not a vertex");
    else if (!image.insert(it->second).second)
      bad.push_back("map not injective at " + label(it->second));
  }
  if (!bad.empty()) return bad;

  if (A.quiver().arrows().size() != B.quiver().arrows().size())
    bad.push_back("arrow counts differ");
  for (const auto& [s, t] : A.quiver().arrows())
    if (!B.quiver().has_arrow(f.at(s), f.at(t)))
      bad.push_back("arrow " + label(s) + " -> " + label(t) + " has no image arrow");

  for (const V& v : A.quiver().vertices()) {
    auto ta = A.tau_of(v);
    auto tb = B.tau_of(f.at(v));
    if (ta.has_value() != tb.has_value())
      bad.push_back("tau definedness differs at " + label(v));
    else if (ta && !(f.at(*ta) == *tb))
      bad.push_back("tau not preserved at " + label(v));
  }
  return bad;
}

}  // namespace repcat
