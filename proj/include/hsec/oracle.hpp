#pragma once

#include <optional>
#include <vector>

#include "hsec/geometry.hpp"
#include "hsec/paths.hpp"
#include "hsec/zr.hpp"

namespace hsec {

// Every crossing sequence of consecutive and gluing moves with dx <= max_dx
// from every cone point, no pruning at all. dy comes from the developed
// position of the end cone point.
std::vector<PathCandidate> enumerate_side_paths(const SurfaceGeometry& g, const Rational& max_dx);

struct SearchWindow {
  Rational max_dx;
  Rational min_slope = 0;
  bool min_open = false;  // exclude min_slope itself
  std::optional<Rational> max_slope;
  bool allow_top = true;
  bool best_only = false;  // stop once the smallest slope and its ties are known
  bool distinct_endpoints = false;  // skip loops and connections ending at x_m
};

// Exact search over the slope intervals of rays leaving each cone point.
// Each node holds the set of slopes whose ray from the start crosses the
// same sequence of edge pieces; it splits at cone points, top corners and
// base boundaries. Results are verified with trace_ray. Without max_slope
// the search must be best_only and is capped by the side-only minimum.
std::vector<SaddleConnection> interval_search(const SurfaceGeometry& g, const SearchWindow& w);

// Minimum positive slope with dx <= max_dx over connections between
// distinct points that do not end at x_m, ties broken as in the solver.
// Without top crossings this is the full enumeration above; with them it is
// the interval search, bounded by the slope of (R1) from x0 (or by the
// side-only minimum when R1 is wider than max_dx). Throws NoConnectionInRange.
SaddleConnection brute_force_min_slope(const ZipperedRectangles& z, const Rational& max_dx, bool allow_top_crossings);

// All saddle connections with min_slope <= slope <= max_slope and
// dx <= max_dx, sorted and deduplicated. Top crossings are included unless
// allow_top is false.
std::vector<SaddleConnection> enumerate_connections(const ZipperedRectangles& z, const Rational& max_dx,
                                                    const Rational& max_slope, const Rational& min_slope = 0,
                                                    bool allow_top = true);

}  // namespace hsec
