#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hsec/perm.hpp"
#include "hsec/rational.hpp"
#include "hsec/zr.hpp"

namespace hsec {

// Section coordinates for H(2): (pi; a2, a3; lambda_1..lambda_4) with a_4 = 0
// and a_1 and the heights fixed by the area-1 condition.
struct SectionPoint {
  Permutation pi;
  Rational a2, a3;
  std::array<Rational, 4> lambda;

  Rational total_width() const;
  Rational min_width() const;
  // 1 - sum lambda. Reported for information only.
  Rational epsilon() const { return 1 - total_width(); }
  // Throws like solve_heights.
  ZipperedRectangles to_surface() const;
  bool in_bounded_regime() const { return total_width() + min_width() > 1; }
};

enum class Symbol { A1, A2, A3, H1, H2, H3, H4, L1, L2, L3, L4 };

std::string to_string(Symbol s);

// Sum of coeff * product(factors) plus a constant; at most two factors per
// term so the area identity fits.
struct Expr {
  struct Term {
    Rational coeff;
    std::vector<Symbol> factors;
  };
  std::vector<Term> terms;
  Rational constant = 0;

  Expr() = default;
  Expr(Symbol s) : terms{{Rational(1), {s}}} {}
  Expr(int c) : constant(c) {}
  Expr(const Rational& c) : constant(c) {}

  Rational eval(const ZipperedRectangles& z) const;
  std::string to_string() const;
};

Expr operator+(Expr x, const Expr& y);
Expr operator-(Expr x, const Expr& y);
Expr operator*(const Rational& c, Expr x);
Expr product(Symbol s, Symbol t);

enum class Relation { Lt, Le, Eq, Ne };

struct Constraint {
  Expr lhs;
  Relation rel;
  Expr rhs;

  bool holds(const ZipperedRectangles& z) const;
  // Only widths appear, so it can be decided before solving for heights.
  bool widths_only() const;
  std::string to_string() const;
};

Constraint lt(Expr x, Expr y);
Constraint le(Expr x, Expr y);
Constraint eq(Expr x, Expr y);
Constraint ne(Expr x, Expr y);

struct PolytopeDescription {
  Permutation pi;
  std::vector<Constraint> equalities;
  std::vector<Constraint> inequalities;

  std::string to_text() const;
};

// Throws UnsupportedPermutation outside the Rauzy class of (4321).
PolytopeDescription polytope_description(const Permutation& pi);

// Sum lambda + lambda_i > 1 for every i.
std::vector<Constraint> bounded_regime_constraints();

struct Membership {
  bool member = false;
  std::string violated;  // first failing constraint, empty on success
  bool on_width_boundary = false;  // sum lambda = 1 exactly

  explicit operator bool() const { return member; }
};

Membership membership(const SectionPoint& point);

struct SampleOptions {
  std::vector<Constraint> constraints;  // extra, checked on the solved surface
  long denominator = 48;                // lambda_i and a_i are multiples of 1/denominator
  Rational altitude_bound = 2;          // a2, a3 drawn from (0, altitude_bound]
  long max_attempts = 2000000;

  static SampleOptions bounded();
};

// Explicit generator state; the same seed gives the same stream on every
// platform since only raw mt19937_64 output is used.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  // Uniform in [lo, hi].
  long uniform(long lo, long hi);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

SectionPoint sample_point(const Permutation& pi, Sampler& sampler, const SampleOptions& options = {});
SectionPoint sample_point(const Permutation& pi, std::uint64_t seed, const SampleOptions& options = {});

}  // namespace hsec
