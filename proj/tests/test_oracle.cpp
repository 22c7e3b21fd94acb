#include <doctest.h>

#include <set>

#include "hsec/errors.hpp"
#include "hsec/oracle.hpp"
#include "hsec/solver.hpp"
#include "support.hpp"

using namespace hsec;
using hsec::test::q;

TEST_CASE("geometry of the second example") {
  SurfaceGeometry g = build_geometry(test::example2());
  CHECK(g.z.lambda == std::vector<Rational>{1, 1, 1, 2});
  CHECK(g.z.height == std::vector<Rational>{3, 6, 6, 4});
  Rational top = 0;
  for (const auto& t : g.top_pieces) top += t.hi - t.lo;
  CHECK(top == 5);
  CHECK(g.total_width() == 5);
  for (const auto& s : g.side_gluings) {
    CHECK(s.length == g.height(s.from) - g.alt(s.from));
    CHECK(s.length == g.height(s.to) - g.alt(s.to - 1));
    CHECK(s.offset == g.alt(s.to - 1) - g.alt(s.from));
  }
  ZipperedRectangles bad = test::example2();
  bad.height[0] += 1;
  CHECK_THROWS_AS(build_geometry(bad), InvalidSurface);
}

TEST_CASE("top pieces tile the base") {
  for (const auto& pi : h2_class())
    for (const auto& p : test::bounded_samples(pi, 10, 21)) {
      SurfaceGeometry g = build_geometry(p.to_surface());
      Rational covered = 0;
      for (const auto& t : g.top_pieces) {
        CHECK(t.hi > t.lo);
        covered += t.hi - t.lo;
      }
      CHECK(covered == g.total_width());
    }
}

TEST_CASE("oracle on the worked examples") {
  for (bool top : {false, true}) {
    SaddleConnection c1 = brute_force_min_slope(test::example1(), 8, top);
    CHECK(c1.slope == q("1/5"));
    CHECK(c1.path.rects == std::vector<int>{1, 2});
    SaddleConnection c2 = brute_force_min_slope(test::example2(), 5, top);
    CHECK(c2.slope == q("1/3"));
    CHECK(c2.path.rects == std::vector<int>{4, 2});
    CHECK(c2.start == 3);
  }
}

TEST_CASE("connection list of the first example") {
  auto all = enumerate_connections(test::example1(), 8, q("3/2"));
  auto has = [&](int start, std::vector<int> rects, const Rational& slope) {
    for (const auto& c : all)
      if (c.start == start && c.path.rects == rects && c.slope == slope) return true;
    return false;
  };
  CHECK(has(0, {1}, q("3/2")));
  CHECK(has(0, {1, 2}, q("1/5")));
  CHECK(has(2, {3, 4, 3}, q("1/4")));
  for (const auto& c : all) {
    CHECK(c.slope <= q("3/2"));
    CHECK(c.dx <= 8);
  }
}

TEST_CASE("horizontal connections at slope zero") {
  for (const auto& pi : h2_class()) {
    SectionPoint p = sample_point(pi, 3);
    ZipperedRectangles z = p.to_surface();
    auto flat = enumerate_connections(z, z.total_width(), 0);
    bool whole = false;
    for (const auto& c : flat) {
      CHECK(c.slope == 0);
      whole = whole || c.dx == z.total_width();
    }
    CHECK(whole);
  }
}

TEST_CASE("oracle agrees with the solver on bounded samples") {
  for (const auto& pi : h2_class())
    for (const auto& p : test::bounded_samples(pi, 40, 22)) {
      ZipperedRectangles z = p.to_surface();
      SaddleConnection s = smallest_slope(z, 1);
      for (bool top : {false, true}) {
        SaddleConnection o = brute_force_min_slope(z, 1, top);
        CHECK(o.slope == s.slope);
        CHECK(same_path(o.path, s.path));
      }
    }
}

TEST_CASE("holonomy is built from widths and altitude differences") {
  for (const auto& pi : h2_class())
    for (const auto& p : test::bounded_samples(pi, 10, 23)) {
      ZipperedRectangles z = p.to_surface();
      for (const auto& c : enumerate_connections(z, 1, z.a(1) / z.lam(1))) {
        Rational dx = 0;
        for (std::size_t i = 0; i < c.path.rects.size(); ++i) {
          // the last piece of a top crossing is partial, so only side paths add up exactly
          dx += z.lam(c.path.rects[i]);
        }
        if (!c.path.crosses_top()) CHECK(c.dx == dx);
        CHECK(c.dy == c.slope * c.dx);
      }
    }
}

TEST_CASE("larger budgets never raise the minimum") {
  for (const auto& pi : h2_class()) {
    SectionPoint p = sample_point(pi, 24);
    ZipperedRectangles z = p.to_surface();
    Rational prev;
    bool first = true;
    for (const char* b : {"1", "3/2", "2", "3"}) {
      Rational s = brute_force_min_slope(z, q(b), true).slope;
      if (!first) CHECK(s <= prev);
      prev = s;
      first = false;
    }
  }
}

TEST_CASE("loops never beat connections between distinct points") {
  for (const auto& pi : h2_class())
    for (const auto& p : test::bounded_samples(pi, 10, 25)) {
      ZipperedRectangles z = p.to_surface();
      std::optional<Rational> loop, distinct;
      for (const auto& c : enumerate_connections(z, 1, z.a(1) / z.lam(1))) {
        if (c.slope <= 0) continue;
        auto& slot = c.start == c.end ? loop : distinct;
        if (!slot || c.slope < *slot) slot = c.slope;
      }
      REQUIRE(distinct);
      if (loop) CHECK(*loop >= *distinct);
    }
}

TEST_CASE("no connection in range") {
  CHECK_THROWS_AS(brute_force_min_slope(test::example1(), q("1/2"), false), NoConnectionInRange);
}
