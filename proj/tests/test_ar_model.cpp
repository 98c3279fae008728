#include <catch2/catch_amalgamated.hpp>

#include "repcat/ar_model.hpp"

using namespace repcat;

TEST_CASE("level helpers and the opposite D_n quiver", "[armodel]") {
  CHECK(level_swap(kZero) == kZeroBar);
  CHECK(level_swap(kZeroBar) == kZero);
  CHECK(level_swap(3) == 3);
  CHECK(level_name(kZeroBar) == "0bar");

  auto q = dn_quiver_op(5);
  CHECK(q.vertices() == std::vector<int>{-1, 0, 1, 2, 3});
  CHECK(q.has_arrow(1, 0));
  CHECK(q.has_arrow(1, -1));
  CHECK(q.has_arrow(3, 2));
  CHECK(q.arrows().size() == 4);
  CHECK_THROWS_AS(dn_quiver_op(2), std::invalid_argument);
}

TEST_CASE("suspension, F and canonical forms on coordinates", "[armodel]") {
  CHECK(shift1(3, {0, kZero}) == DVertex{2, kZeroBar});
  CHECK(shift1(4, {0, kZero}) == DVertex{3, kZero});
  CHECK(shift1(3, {0, 1}) == DVertex{2, 1});
  CHECK(f_power(3, {0, kZero}, 1) == DVertex{3, kZeroBar});
  CHECK(f_power(4, {0, kZero}, 1) == DVertex{4, kZero});
  CHECK(f_power(3, {0, 1}, 5) == DVertex{15, 1});

  auto c = canonicalize(3, 1, {3, kZero});
  CHECK(c.rep == DVertex{0, kZeroBar});
  CHECK(c.k == -1);

  for (int n : {3, 4, 5}) {
    for (int p : {1, 2, 3}) {
      for (int i : {-7, -1, 0, 2, n * p - 1, n * p, 3 * n * p + 1}) {
        for (int l = kZeroBar; l <= n - 2; ++l) {
          auto cf = canonicalize(n, p, {i, l});
          CHECK(cf.rep.i >= 0);
          CHECK(cf.rep.i < n * p);
          CHECK(f_power(n, cf.rep, -cf.k * p) == DVertex{i, l});
        }
      }
    }
  }
}

TEST_CASE("gamma_np shape and arrow counts", "[armodel]") {
  for (int n : {3, 4, 5, 6}) {
    for (int p : {1, 2, 3}) {
      auto g = build_gamma_np(n, p);
      const int N = n * p;
      CHECK(g.quiver().vertices().size() == (std::size_t)(N * n));
      CHECK(g.quiver().arrows().size() == (std::size_t)(N * (2 * n - 2)));
      CHECK(check_stable_translation(g).empty());
      // Every column carries the same arrow pattern.
      for (int i = 0; i < N; ++i) {
        int in_col = 0, cross = 0;
        for (const auto& [s, t] : g.quiver().arrows()) {
          if (s.i != i) continue;
          (s.i == t.i ? in_col : cross) += 1;
        }
        CHECK(in_col == n - 1);
        CHECK(cross == n - 1);
      }
    }
  }
}

TEST_CASE("gamma_np small cases checked by hand", "[armodel]") {
  auto g = build_gamma_np(3, 1);
  CHECK(g.quiver().has_arrow({0, 1}, {0, kZero}));
  CHECK(g.quiver().has_arrow({0, 1}, {0, kZeroBar}));
  CHECK(g.quiver().has_arrow({0, kZero}, {1, 1}));
  CHECK(g.quiver().has_arrow({0, kZeroBar}, {1, 1}));
  // np = 3 is odd: the wrap exchanges the branch levels.
  CHECK(tau_gamma(3, 1, {0, kZero}) == DVertex{2, kZeroBar});
  CHECK(tau_gamma(3, 1, {0, 1}) == DVertex{2, 1});
  CHECK(g.tau_of({0, kZero}) == DVertex{2, kZeroBar});
  // np = 4 and np = 6 are even: no exchange.
  CHECK(tau_gamma(4, 1, {0, kZero}) == DVertex{3, kZero});
  CHECK(tau_gamma(3, 2, {0, kZeroBar}) == DVertex{5, kZeroBar});
}

TEST_CASE("strips of the ambient quiver", "[armodel]") {
  for (int n : {3, 4, 5}) {
    for (int p : {2, 3}) {
      CHECK(check_strip_iso(n, p).empty());
      CHECK(check_a_component_iso(n, p).empty());
      auto d = decompose(n, p);
      CHECK(d.violations.empty());
      CHECK(d.ambient_connected);  // the strips are joined by level n-2 <-> n-1 arrows
      REQUIRE(d.a_part.has_value());
      CHECK(d.d_part.quiver().vertices().size() == (std::size_t)(n * n * p));
      CHECK(d.a_part->quiver().vertices().size() == (std::size_t)(n * (p - 1) * n * p));
    }
    auto d1 = decompose(n, 1);
    CHECK(d1.violations.empty());
    CHECK_FALSE(d1.a_part.has_value());
    CHECK(d1.d_part.quiver().vertices().size() == (std::size_t)(n * n));
  }
}

TEST_CASE("a-component rows have length np", "[armodel]") {
  const int n = 4, p = 2, N = n * p;
  auto a = a_component(n, p);
  std::set<DVertex> seen;
  int rows = 0;
  for (const auto& v : a.quiver().vertices()) {
    if (seen.count(v)) continue;
    DVertex x = v;
    int len = 0;
    do {
      seen.insert(x);
      x = *a.tau_of(x);
      ++len;
    } while (!(x == v));
    CHECK(len == N);
    ++rows;
  }
  CHECK(rows == n * (p - 1));
}

TEST_CASE("fundamental domains tile gamma_np", "[armodel]") {
  for (int n : {3, 4, 5}) {
    for (int p : {1, 2, 3}) {
      std::set<DVertex> all;
      for (int k = 1; k <= p; ++k) {
        auto fk = fundamental_domain(n, p, k);
        CHECK(fk.size() == (std::size_t)(n * n));
        for (const auto& v : fk) CHECK(all.insert(v).second);
      }
      CHECK(all.size() == (std::size_t)(n * n * p));
      // F carries F_k onto F_{k+1}, cyclically.
      for (int k = 1; k <= p; ++k) {
        auto fk = fundamental_domain(n, p, k);
        auto fn = fundamental_domain(n, p, k % p + 1);
        std::set<DVertex> image, want(fn.begin(), fn.end());
        for (const auto& v : fk) image.insert(f_gamma(n, p, v));
        CHECK(image == want);
      }
      CHECK_THROWS_AS(fundamental_domain(n, p, 0), std::invalid_argument);
      CHECK_THROWS_AS(fundamental_domain(n, p, p + 1), std::invalid_argument);
    }
  }
}

TEST_CASE("derived hom has singleton identity and bounded support", "[armodel]") {
  for (int n : {3, 4, 5}) {
    for (int l = kZeroBar; l <= n - 2; ++l) {
      const DVertex x{0, l};
      CHECK(hom_d(n, x, x) == 1);
      auto h = hom_d_profile(n, x);
      for (const auto& [y, d] : h) {
        CHECK(d >= 0);
        CHECK(d <= 2);
        if (d != 0) {
          CHECK(y.i >= x.i);
          CHECK(y.i <= x.i + n - 2);
        }
      }
    }
  }
  CHECK(hom_d(4, {0, 1}, {-3, 1}) == 0);
}

TEST_CASE("the Serre power nu^p equals the shift [2p] on the orbit", "[armodel]") {
  for (int n : {3, 4, 5, 6}) {
    for (int p : {1, 2, 3}) {
      const auto gamma = build_gamma_np(n, p);
      for (const auto& v : gamma.quiver().vertices()) {
        DVertex a = v, b = v;
        for (int k = 0; k < p; ++k) a = serre_nu(n, a);
        for (int k = 0; k < 2 * p; ++k) b = shift1(n, b);
        CHECK(canonicalize(n, p, a).rep == canonicalize(n, p, b).rep);
      }
    }
  }
}
