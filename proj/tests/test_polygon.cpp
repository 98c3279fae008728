#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "repcat/polygon.hpp"

using namespace repcat;

TEST_CASE("edge lengths and validity", "[polygon]") {
  // (4,2): N = 8, threshold 8 - 4 + 3 = 7.
  CHECK(delta_length(4, 2, {1, 7, +1}) == 7);
  CHECK(delta_length(4, 2, {1, 8, +1}) == 8);
  CHECK(delta_length(4, 2, {3, 1, +1}) == 7);
  CHECK(delta_length(4, 2, {5, 5, +1}) == 9);
  CHECK(edge_valid(4, 2, {1, 7, +1}));
  CHECK(edge_valid(4, 2, {1, 8, +1}));
  CHECK_FALSE(edge_valid(4, 2, {1, 6, +1}));   // too short
  CHECK_FALSE(edge_valid(4, 2, {1, 8, -1}));   // tag on a non-loop
  CHECK_FALSE(edge_valid(4, 2, {0, 7, +1}));   // endpoint out of range
  CHECK_FALSE(edge_valid(4, 2, {1, 9, +1}));
  CHECK(edge_valid(4, 2, {5, 5, -1}));
  CHECK_THROWS_AS(require_edge(4, 2, {1, 6, +1}), std::invalid_argument);
}

TEST_CASE("edge counts", "[polygon]") {
  for (int n = 3; n <= 7; ++n)
    for (int p = 1; p <= 4; ++p) {
      const auto edges = enumerate_edges(n, p);
      CHECK((int)edges.size() == p * n * n);
      const int loops = (int)std::count_if(edges.begin(), edges.end(),
                                           [](const TaggedEdge& e) { return e.loop(); });
      CHECK(loops == 2 * n * p);
      CHECK((int)edges.size() - loops == n * p * (n - 2));
      CHECK(std::is_sorted(edges.begin(), edges.end()));
      CHECK(std::adjacent_find(edges.begin(), edges.end()) == edges.end());
      for (const auto& e : edges) CHECK(edge_valid(n, p, e));
    }
}

TEST_CASE("elementary moves, case by case", "[polygon]") {
  // (4,2), N = 8. Minimal length 7: only the end advances.
  CHECK(elementary_moves(4, 2, {1, 7, +1}) == std::vector<TaggedEdge>{{1, 8, +1}});
  // Maximal non-loop length 8: start advances, end hits the puncture.
  CHECK(elementary_moves(4, 2, {1, 8, +1}) ==
        std::vector<TaggedEdge>{{2, 8, +1}, {1, 1, +1}, {1, 1, -1}});
  // Loops rotate.
  CHECK(elementary_moves(4, 2, {1, 1, +1}) == std::vector<TaggedEdge>{{2, 1, +1}});
  CHECK(elementary_moves(4, 2, {1, 1, -1}) == std::vector<TaggedEdge>{{2, 1, +1}});
  // (5,2), N = 10: a middle length has both successors.
  CHECK(elementary_moves(5, 2, {1, 9, +1}) ==
        std::vector<TaggedEdge>{{2, 9, +1}, {1, 10, +1}});

  // n = 3 degeneracy: lengths N - n + 3 and N coincide, so the start-advance
  // drops out of the maximal case and only the two loops remain.
  CHECK(elementary_moves(3, 1, {1, 3, +1}) ==
        std::vector<TaggedEdge>{{1, 1, +1}, {1, 1, -1}});
  CHECK(elementary_moves(3, 2, {2, 1, +1}) ==
        std::vector<TaggedEdge>{{2, 2, +1}, {2, 2, -1}});

  for (int n = 3; n <= 6; ++n)
    for (int p = 1; p <= 3; ++p)
      for (const auto& e : enumerate_edges(n, p))
        for (const auto& m : elementary_moves(n, p, e)) CHECK(edge_valid(n, p, m));
}

TEST_CASE("geometric translation", "[polygon]") {
  CHECK(tau_geo(4, 2, {3, 1, +1}) == TaggedEdge{2, 8, +1});
  CHECK(tau_geo(4, 2, {1, 7, +1}) == TaggedEdge{8, 6, +1});
  CHECK(tau_geo(4, 2, {1, 1, +1}) == TaggedEdge{8, 8, -1});

  for (int n = 3; n <= 6; ++n)
    for (int p = 1; p <= 3; ++p) {
      const int N = n * p;
      for (const auto& e : enumerate_edges(n, p)) {
        CHECK(tau_geo_inverse(n, p, tau_geo(n, p, e)) == e);
        CHECK(tau_geo(n, p, tau_geo_inverse(n, p, e)) == e);
        // A full turn fixes non-loops and flips loop tags iff N is odd.
        TaggedEdge t = e;
        for (int k = 0; k < N; ++k) t = tau_geo(n, p, t);
        if (e.loop() && N % 2 == 1)
          CHECK(t == TaggedEdge{e.a, e.b, -e.tag});
        else
          CHECK(t == e);
        for (int k = 0; k < N; ++k) t = tau_geo(n, p, t);
        CHECK(t == e);
      }
    }
}

TEST_CASE("rotation rho", "[polygon]") {
  CHECK(rho(4, 2, {1, 8, +1}) == TaggedEdge{5, 4, +1});
  CHECK(rho(3, 2, {5, 5, -1}) == TaggedEdge{2, 2, -1});

  for (int n = 3; n <= 6; ++n)
    for (int p = 1; p <= 3; ++p) {
      const auto edges = enumerate_edges(n, p);
      std::set<TaggedEdge> all(edges.begin(), edges.end());
      for (const auto& e : edges) {
        CHECK(all.count(rho(n, p, e)) == 1);
        TaggedEdge r = e;
        for (int k = 0; k < p; ++k) r = rho(n, p, r);
        CHECK(r == e);
        CHECK(rho(n, p, tau_geo(n, p, e)) == tau_geo(n, p, rho(n, p, e)));
        // rho carries moves to moves.
        auto lhs = elementary_moves(n, p, rho(n, p, e));
        auto rhs = elementary_moves(n, p, e);
        for (auto& m : rhs) m = rho(n, p, m);
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("covering map mu_p", "[polygon]") {
  CHECK(mu_p(4, 2, {1, 8, +1}) == TaggedEdge{1, 4, +1});
  CHECK(mu_p(3, 2, {5, 5, -1}) == TaggedEdge{2, 2, -1});
  CHECK(mu_p(3, 1, {1, 3, +1}) == TaggedEdge{1, 3, +1});  // p = 1 is the identity

  for (int n = 3; n <= 6; ++n)
    for (int p = 1; p <= 3; ++p) {
      std::map<TaggedEdge, int> hits;
      for (const auto& e : enumerate_edges(n, p)) {
        const auto m = mu_p(n, p, e);
        CHECK(edge_valid(n, 1, m));
        CHECK(mu_p(n, p, rho(n, p, e)) == m);
        ++hits[m];
      }
      // Every P_n edge is hit by exactly its rho-orbit.
      CHECK((int)hits.size() == n * n);
      for (const auto& [m, c] : hits) CHECK(c == p);
      for (const auto& m : enumerate_edges(n, 1)) {
        const auto fiber = mu_p_fiber(n, p, m);
        CHECK((int)fiber.size() == p);
        for (const auto& e : fiber) CHECK(mu_p(n, p, e) == m);
      }
    }
}

TEST_CASE("edge quiver is a stable translation quiver", "[polygon]") {
  for (int n = 3; n <= 6; ++n)
    for (int p = 1; p <= 3; ++p) {
      const auto g = build_gamma_circle(n, p);
      CHECK((int)g.quiver().vertices().size() == p * n * n);
      CHECK((int)g.quiver().arrows().size() == n * p * (2 * n - 2));
      const auto violations = check_stable_translation(g);
      CAPTURE(n, p);
      CHECK(violations.empty());
    }
}

TEST_CASE("move duality", "[polygon]") {
  // An arrow M -> N exists iff tau N -> M does; this is the mesh symmetry
  // stated directly on edges.
  for (int n = 3; n <= 7; ++n)
    for (int p = 1; p <= 4; ++p) {
      const auto g = build_gamma_circle(n, p);
      for (const auto& [src, tgt] : g.quiver().arrows())
        CHECK(g.quiver().has_arrow(tau_geo(n, p, tgt), src));
    }
}

TEST_CASE("cover window structure", "[polygon]") {
  const int n = 4, p = 2, N = n * p;
  const auto w = polygon_cover_window(n, p, -1, 12);
  for (const auto& v : w.tq.quiver().vertices()) {
    const int c = w.column.at(v);
    CHECK(c == v.first * N + (v.second.a - 1));
    CHECK(c >= -1);
    CHECK(c <= 12);
  }
  // Wrap-around arrows: a start at N advances into the next winding.
  CHECK(w.tq.quiver().has_arrow({0, {8, 8, +1}}, {1, {1, 8, +1}}));
  CHECK(w.tq.quiver().has_arrow({0, {8, 7, +1}}, {1, {1, 7, +1}}));
  // Wrap-around translation: start 1 steps back into the previous winding.
  const auto t = w.tq.tau_of({0, {1, 7, +1}});
  REQUIRE(t.has_value());
  CHECK(*t == CoverVertex{-1, {8, 6, +1}});
}

TEST_CASE("polygon hom dimensions", "[polygon]") {
  // Identity morphisms.
  for (int n = 3; n <= 5; ++n)
    for (int p = 1; p <= 2; ++p)
      for (const auto& e : enumerate_edges(n, p)) CHECK(hom_polygon(n, p, e, e) >= 1);

  CHECK(hom_polygon(3, 2, {1, 1, +1}, {1, 1, +1}) == 1);
  CHECK(hom_polygon(3, 2, {1, 1, +1}, {1, 1, -1}) == 0);

  // The profile is rho-invariant.
  for (const auto& x : enumerate_edges(3, 2))
    for (const auto& y : enumerate_edges(3, 2))
      CHECK(hom_polygon(3, 2, x, y) == hom_polygon(3, 2, rho(3, 2, x), rho(3, 2, y)));
}
