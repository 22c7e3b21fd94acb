#pragma once

#include <vector>

#include "hsec/paths.hpp"
#include "hsec/perm.hpp"
#include "hsec/rational.hpp"
#include "hsec/zr.hpp"

namespace hsec {

// Edge identifications of a zippered-rectangle surface. R_i occupies
// [L_i, L_i + lambda_i] x [0, h_i]. The right side of R_i below a_i meets
// the left side of R_{i+1}; above a_i it is glued to the left side of
// R_{sigma(i)+1} above a_{sigma(i)}. The top of R_i is glued to the base
// segment starting at L'_i, the left end of interval i in the bottom row.
struct SurfaceGeometry {
  struct SideGluing {
    int from = 0;  // right side of R_from, heights (a_from, h_from)
    int to = 0;    // left side of R_to, heights (a_{to-1}, h_to)
    Rational length;
    Rational offset;  // add to a height on R_from to get the height on R_to
  };
  struct TopPiece {
    int rect = 0;       // top of R_rect, local x in (lo, hi)
    Rational lo, hi;
    int base_rect = 0;  // lands on the base of R_base_rect
    Rational shift;     // local x on R_base_rect = local x on R_rect + shift
  };

  ZipperedRectangles z;
  GluingMap sigma;
  std::vector<Rational> left;       // L_1..L_m
  std::vector<Rational> top_image;  // L'_1..L'_m
  std::vector<SideGluing> side_gluings;
  std::vector<TopPiece> top_pieces;

  int m() const { return z.m(); }
  const Rational& width(int i) const { return z.lam(i); }
  Rational height(int i) const { return z.h(i); }
  const Rational& alt(int i) const { return z.a(i); }
  const Rational& L(int i) const { return left[i - 1]; }
  const Rational& Lp(int i) const { return top_image[i - 1]; }
  Rational total_width() const { return z.total_width(); }

  // Rectangle R_j with L_j <= b < L_j + lambda_j, or 0 outside the base.
  int base_rect_at(const Rational& b) const;
};

// Throws InvalidSurface when check_validity reports anything.
SurfaceGeometry build_geometry(const ZipperedRectangles& z);

enum class TraceOutcome {
  ConePoint,    // reached a cone point on the right side of the last rectangle
  TooLong,      // horizontal budget exhausted
  TopCrossing,  // would cross a top edge while those are disallowed
  Boundary,     // no room to start, or a degenerate zero-length gluing
};

struct TraceResult {
  TraceOutcome outcome = TraceOutcome::TooLong;
  PathCandidate path;  // rectangles visited so far; dx and dy travelled
};

// Straight ray of the given slope (>= 0) from cone point x_start, entering
// R_{start+1} at height a_start. Follows consecutive and gluing moves and,
// when allow_top is set, top-to-base transitions, until it hits a cone point
// or travels more than max_dx horizontally. Top corners other than cone
// points are regular points of the surface: they go to the base like any
// other top point, and count as top crossings when those are disallowed.
TraceResult trace_ray(const SurfaceGeometry& g, int start_vertex, const Rational& slope, const Rational& max_dx,
                      bool allow_top);

// One straight piece of a traced ray inside R_rect, in local coordinates.
struct Segment {
  int rect = 0;
  Rational x0, y0, x1, y1;
};

// trace_ray that also returns the pieces it drew, in order.
TraceResult trace_ray(const SurfaceGeometry& g, int start_vertex, const Rational& slope, const Rational& max_dx,
                      bool allow_top, std::vector<Segment>& segments);

}  // namespace hsec
