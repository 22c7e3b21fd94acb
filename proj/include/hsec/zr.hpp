#pragma once

#include <string>
#include <vector>

#include "hsec/perm.hpp"
#include "hsec/rational.hpp"

namespace hsec {

// Rectangles R_1..R_m of widths lambda_i and heights h_i sitting on a common
// base; cone point x_i is on the shared vertical side of R_i and R_{i+1} at
// altitude a_i. Storage is 0-based, accessors are 1-based with the dummy
// values h_0 = h_{m+1} = a_0 = 0.
struct ZipperedRectangles {
  Permutation pi;
  std::vector<Rational> lambda;  // lambda_1..lambda_m
  std::vector<Rational> alt;     // a_0..a_m
  std::vector<Rational> height;  // h_1..h_m
  Rational area;

  int m() const { return pi.size(); }
  const Rational& lam(int i) const { return lambda[i - 1]; }
  const Rational& a(int i) const { return alt[i]; }
  Rational h(int i) const { return (i < 1 || i > m()) ? Rational(0) : height[i - 1]; }
  Rational total_width() const;
  Rational min_width() const;
};

enum class ConstraintKind {
  Gluing,          // h_i - a_i = h_{sigma(i)+1} - a_{sigma(i)}
  NonNegative,     // h_i, a_i >= 0
  LastAltitude,    // h_m >= a_m >= -h_{pi^{-1}(m)}
  AfterLast,       // h_{pi^{-1}(m)+1} >= a_{pi^{-1}(m)}
  Zipper,          // min(h_i, h_{i+1}) >= a_i
  WidthPositive,   // lambda_i > 0
  Area,            // sum lambda_i h_i = area
  Shape,           // vector sizes, a_0 = 0
};

struct Violation {
  ConstraintKind kind;
  int index = 0;  // the i of the constraint, 0 when not indexed
  std::string description;

  std::string id() const;  // e.g. "gluing[2]", "lambda_positive[3]"
};

std::string to_string(ConstraintKind kind);

// Solves the gluing relations together with the area equation for a_1 and
// h_1..h_m, with a_m = 0 and a_2..a_{m-1} given. Throws
// DegenerateConfiguration when the system is singular or inconsistent and
// OutsideCone when a solved value is negative.
ZipperedRectangles solve_heights(const Permutation& pi, const std::vector<Rational>& free_altitudes,
                                 const std::vector<Rational>& lambda, const Rational& area);

std::vector<Violation> check_validity(const ZipperedRectangles& z);

Rational area_of(const ZipperedRectangles& z);

// Widths and heights (and altitudes) multiplied by t.
ZipperedRectangles scaled(const ZipperedRectangles& z, const Rational& t);

}  // namespace hsec
