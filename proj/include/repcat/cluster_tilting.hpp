#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "equivalence.hpp"

namespace repcat {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Guard rails for the exhaustive searches. The clique enumeration is
// exponential in the worst case, so callers state up front how large a
// parameter pair they are willing to search and, optionally, a wall-clock
// budget that aborts a search which outgrows it.
struct SearchLimits {
  int max_n = 5;
  int max_p = 3;
  std::optional<long long> budget_ms;
};

// All orbit Hom and Ext^1 dimensions between the objects of one category,
// computed with one hammock per source and then read off for every target
// translate. Objects are indexed in the sorted vertex order of Gamma_{n,p}.
class HomOrbitTable {
 public:
  HomOrbitTable(int n, int p) : n_(n), p_(p) {
    require_params(n, p);
    const auto gamma = build_gamma_np(n, p);
    objs_ = gamma.quiver().vertices();
    for (int k = 0; k < (int)objs_.size(); ++k) index_[objs_[k]] = k;

    const int V = (int)objs_.size();
    hom_.assign(V, std::vector<long long>(V, 0));
    ext_.assign(V, std::vector<long long>(V, 0));
    for (int xi = 0; xi < V; ++xi) {
      const auto profile = hom_d_profile(n_, objs_[xi]);
      for (int yi = 0; yi < V; ++yi) {
        long long total = 0;
        for (int m = -p_ - 2; m <= p_ + 3; ++m) {
          const DVertex ty = f_power(n_, objs_[yi], p_ * m);
          if (ty.i < objs_[xi].i || ty.i > objs_[xi].i + n_ - 2) continue;
          auto it = profile.find(ty);
          if (it != profile.end()) total += it->second;
        }
        hom_[xi][yi] = total;
      }
    }
    for (int xi = 0; xi < V; ++xi)
      for (int yi = 0; yi < V; ++yi) {
        const DVertex sy = canonicalize(n_, p_, shift1(n_, objs_[yi])).rep;
        ext_[xi][yi] = hom_[xi][index_.at(sy)];
      }
  }

  int n() const { return n_; }
  int p() const { return p_; }
  const std::vector<DVertex>& objects() const { return objs_; }

  int index_of(const DVertex& v) const {
    auto it = index_.find(canonicalize(n_, p_, v).rep);
    if (it == index_.end()) throw std::invalid_argument("not an object: " + label(v));
    return it->second;
  }

  long long hom(const DVertex& x, const DVertex& y) const {
    return hom_[index_of(x)][index_of(y)];
  }
  long long ext1(const DVertex& x, const DVertex& y) const {
    return ext_[index_of(x)][index_of(y)];
  }
  bool compatible(const DVertex& x, const DVertex& y) const {
    const int xi = index_of(x), yi = index_of(y);
    return ext_[xi][yi] == 0 && ext_[yi][xi] == 0;
  }

  long long hom_by_index(int xi, int yi) const { return hom_[xi][yi]; }
  long long ext1_by_index(int xi, int yi) const { return ext_[xi][yi]; }
  bool compatible_by_index(int xi, int yi) const {
    return ext_[xi][yi] == 0 && ext_[yi][xi] == 0;
  }

 private:
  int n_, p_;
  std::vector<DVertex> objs_;
  std::map<DVertex, int> index_;
  std::vector<std::vector<long long>> hom_, ext_;
};

namespace detail {

class CliqueSearch {
 public:
  CliqueSearch(const HomOrbitTable& table, std::optional<long long> budget_ms) : table_(table) {
    const int V = (int)table.objects().size();
    adj_.assign(V, std::vector<char>(V, 0));
    for (int i = 0; i < V; ++i)
      for (int j = 0; j < V; ++j) adj_[i][j] = i != j && table.compatible_by_index(i, j);
    if (budget_ms)
      deadline_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(*budget_ms);
  }

  std::vector<std::vector<int>> run() {
    std::vector<int> R, P((std::size_t)adj_.size()), X;
    for (int i = 0; i < (int)P.size(); ++i) P[i] = i;
    expand(R, P, X);
    for (auto& clique : out_) std::sort(clique.begin(), clique.end());
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void expand(std::vector<int>& R, std::vector<int> P, std::vector<int> X) {
    if (deadline_ && std::chrono::steady_clock::now() > *deadline_)
      throw BudgetExceeded("clique search exceeded its time budget");
    if (P.empty() && X.empty()) {
      out_.push_back(R);
      return;
    }
    // Pivot on the candidate covering most of P; ties break to the smallest
    // index so the traversal order is deterministic.
    int pivot = -1, best = -1;
    for (const auto& pool : {P, X})
      for (int u : pool) {
        int c = 0;
        for (int v : P) c += adj_[u][v];
        if (c > best) best = c, pivot = u;
      }
    std::vector<int> cand;
    for (int v : P)
      if (pivot < 0 || !adj_[pivot][v]) cand.push_back(v);
    for (int v : cand) {
      std::vector<int> P2, X2;
      for (int w : P) if (adj_[v][w]) P2.push_back(w);
      for (int w : X) if (adj_[v][w]) X2.push_back(w);
      R.push_back(v);
      expand(R, P2, X2);
      R.pop_back();
      P.erase(std::find(P.begin(), P.end(), v));
      X.insert(std::lower_bound(X.begin(), X.end(), v), v);
    }
  }

  const HomOrbitTable& table_;
  std::vector<std::vector<char>> adj_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::vector<std::vector<int>> out_;
};

}  // namespace detail

// Exhaustive, deterministic enumeration of the maximal pairwise-compatible
// sets of objects (Bron-Kerbosch with pivoting on the Ext-vanishing graph).
// Each set comes out sorted in object order and the list itself is sorted.
inline std::vector<std::vector<DVertex>> enumerate_tilting(int n, int p,
                                                           const SearchLimits& limits = {}) {
  require_params(n, p);
  if (n > limits.max_n || p > limits.max_p)
    throw std::invalid_argument("enumerate_tilting: parameters exceed the search limits");
  const HomOrbitTable table(n, p);
  detail::CliqueSearch search(table, limits.budget_ms);
  std::vector<std::vector<DVertex>> out;
  for (const auto& clique : search.run()) {
    std::vector<DVertex> set;
    for (int i : clique) set.push_back(table.objects()[i]);
    out.push_back(set);
  }
  return out;
}

inline std::size_t count_tilting(int n, int p, const SearchLimits& limits = {}) {
  return enumerate_tilting(n, p, limits).size();
}

// Checks the geometric characterization for one candidate set T: its edge
// picture X_T must be invariant under the rotation rho, collapse under mu_p
// onto exactly n edges of the small polygon forming a compatible
// configuration there, and be the full mu_p-preimage of that collapse.
// Returns the violations, empty when T is a genuine p-periodic
// triangulation picture.
inline std::vector<std::string> check_p_triangulation(int n, int p,
                                                      const std::vector<DVertex>& T) {
  require_params(n, p);
  std::vector<std::string> bad;

  std::set<TaggedEdge> xt;
  for (const auto& t : T) {
    const DVertex c = canonicalize(n, p, t).rep;
    if (!xt.insert(phi_p(n, p, c)).second)
      bad.push_back("duplicate object " + label(c));
  }
  if ((int)xt.size() != n * p)
    bad.push_back("expected " + std::to_string(n * p) + " edges, got " +
                  std::to_string(xt.size()));

  for (const auto& e : xt)
    if (!xt.count(rho(n, p, e))) bad.push_back("not rho-invariant at " + label(e));

  std::set<TaggedEdge> y;
  for (const auto& e : xt) y.insert(mu_p(n, p, e));
  if ((int)y.size() != n)
    bad.push_back("collapse has " + std::to_string(y.size()) + " edges, expected " +
                  std::to_string(n));

  for (const auto& e : enumerate_edges(n, p)) {
    const bool in_preimage = y.count(mu_p(n, p, e)) != 0;
    const bool in_xt = xt.count(e) != 0;
    if (in_preimage != in_xt)
      bad.push_back(std::string("preimage mismatch at ") + label(e));
  }

  for (const auto& y1 : y)
    for (const auto& y2 : y) {
      if (y2 <= y1) continue;
      const DVertex v1 = phi_p_inverse(n, 1, y1), v2 = phi_p_inverse(n, 1, y2);
      if (ext1_orbit(n, 1, v1, v2) != 0 || ext1_orbit(n, 1, v2, v1) != 0)
        bad.push_back("collapsed edges " + label(y1) + ", " + label(y2) +
                      " are not compatible");
    }
  return bad;
}

}  // namespace repcat
