#include <doctest.h>

#include <algorithm>

#include "hsec/errors.hpp"
#include "hsec/section.hpp"
#include "support.hpp"

using namespace hsec;
using hsec::test::q;

namespace {

std::vector<std::string> texts(const std::vector<Constraint>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.to_string());
  return out;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

SectionPoint golden_3142() {
  SectionPoint p;
  p.pi = Permutation({3, 1, 4, 2});
  p.lambda = {q("3/10"), q("3/10"), q("1/5"), q("3/20")};
  p.a2 = q("6/5");
  p.a3 = q("7/20");
  return p;
}

}  // namespace

TEST_CASE("(3142) polytope") {
  PolytopeDescription d = polytope_description(Permutation({3, 1, 4, 2}));
  auto eq = texts(d.equalities);
  CHECK(contains(eq, "h_2 = a_2"));
  CHECK(contains(eq, "h_3 = a_2"));
  CHECK(contains(eq, "h_1 = h_3 - a_3"));
  CHECK(contains(eq, "h_4 = h_2 - a_1"));
  auto ineq = texts(d.inequalities);
  CHECK(contains(ineq, "0 < a_1"));
  CHECK(contains(ineq, "a_1 < h_1"));
  CHECK(contains(ineq, "a_1 + a_3 < a_2"));
  CHECK(contains(ineq, "a_3 < h_4"));
}

TEST_CASE("(2431) polytope") {
  auto ineq = texts(polytope_description(Permutation({2, 4, 3, 1})).inequalities);
  CHECK(contains(ineq, "0 < a_2"));
  CHECK(contains(ineq, "a_2 < a_1"));
  CHECK(contains(ineq, "0 < a_3"));
  CHECK(contains(ineq, "a_3 <= h_4"));
}

TEST_CASE("every polytope has the area identity and the width bounds") {
  for (const auto& pi : h2_class()) {
    PolytopeDescription d = polytope_description(pi);
    CHECK(contains(texts(d.equalities), "lambda_1 h_1 + lambda_2 h_2 + lambda_3 h_3 + lambda_4 h_4 = 1"));
    auto ineq = texts(d.inequalities);
    CHECK(contains(ineq, "lambda_1 + lambda_2 + lambda_3 + lambda_4 <= 1"));
    for (int i = 1; i <= 4; ++i) CHECK(contains(ineq, "0 < lambda_" + std::to_string(i)));
  }
  CHECK_THROWS_AS(polytope_description(Permutation({2, 3, 4, 1})), UnsupportedPermutation);
}

TEST_CASE("golden member of the (3142) polytope") {
  SectionPoint p = golden_3142();
  Membership m = membership(p);
  CHECK(m.member);
  CHECK(m.violated.empty());
  CHECK_FALSE(m.on_width_boundary);
  CHECK(p.epsilon() == q("1/20"));
  ZipperedRectangles z = p.to_surface();
  CHECK(z.a(1) == q("7/30"));
  CHECK(z.height == std::vector<Rational>{q("17/20"), q("6/5"), q("6/5"), q("29/30")});
  CHECK(area_of(z) == 1);
}

TEST_CASE("non-members name a constraint") {
  SectionPoint p = golden_3142();
  p.lambda[0] = 0;
  Membership m = membership(p);
  CHECK_FALSE(m.member);
  CHECK(m.violated.find("lambda_1") != std::string::npos);

  SectionPoint wide = golden_3142();
  wide.lambda = {q("1/2"), q("1/2"), q("1/16"), q("1/16")};
  CHECK(wide.total_width() == q("9/8"));
  Membership w = membership(wide);
  CHECK_FALSE(w.member);
  CHECK(w.violated == "lambda_1 + lambda_2 + lambda_3 + lambda_4 <= 1");

  SectionPoint out = golden_3142();
  out.a3 = q("11/10");  // a_1 + a_3 >= a_2
  CHECK_FALSE(membership(out).member);
}

TEST_CASE("width boundary is accepted and flagged") {
  SectionPoint p = golden_3142();
  p.lambda[3] = q("1/5");
  p.a3 = q("1/5");
  Membership m = membership(p);
  REQUIRE(m.member);
  CHECK(m.on_width_boundary);
}

TEST_CASE("sampler is deterministic and lands in the section") {
  for (const auto& pi : h2_class()) {
    SectionPoint a = sample_point(pi, 17);
    SectionPoint b = sample_point(pi, 17);
    CHECK(a.pi == b.pi);
    CHECK(a.a2 == b.a2);
    CHECK(a.a3 == b.a3);
    CHECK(a.lambda == b.lambda);
    Sampler s(3);
    for (int i = 0; i < 100; ++i) {
      SectionPoint p = sample_point(pi, s);
      CHECK(membership(p).member);
      CHECK(check_validity(p.to_surface()).empty());
    }
    for (const auto& p : test::bounded_samples(pi, 100, 4)) {
      CHECK(membership(p).member);
      CHECK(p.total_width() + p.min_width() > 1);
    }
  }
}

TEST_CASE("(4132) never gets equal altitudes") {
  for (const auto& p : test::bounded_samples(Permutation({4, 1, 3, 2}), 300, 8)) CHECK(p.a2 != p.a3);
}

TEST_CASE("sampler gives up on an empty region") {
  SampleOptions o;
  o.constraints = {lt(Expr(Symbol::L1), Expr(0))};
  o.max_attempts = 1000;
  CHECK_THROWS_AS(sample_point(Permutation({4, 3, 2, 1}), 1, o), SamplingExhausted);
}
