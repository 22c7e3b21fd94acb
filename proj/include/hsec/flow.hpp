#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hsec/geometry.hpp"
#include "hsec/paths.hpp"
#include "hsec/section.hpp"

namespace hsec {

struct Vec2 {
  Rational x, y;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

// h_s acts on holonomy by (x, y) -> (x, y - s x).
Vec2 shear(const Vec2& v, const Rational& s);

// A surface with the horocycle h_s applied. The base geometry is kept; what
// changes is the holonomy of every stored edge vector.
struct ShearedSurface {
  SurfaceGeometry base;
  Rational s;
  // Per rectangle R_i (index i-1): base edge (lambda_i, 0), side (0, h_i),
  // zipper (0, a_i), all after shearing.
  std::vector<Vec2> width_vectors;
  std::vector<Vec2> height_vectors;
  std::vector<Vec2> zipper_vectors;
  // Developed position of each cone point x_0..x_m on the base picture.
  std::vector<Vec2> cone_points;

  Vec2 transform(const Vec2& v) const { return shear(v, s); }
  // Sum of det(width, height) over the rectangles.
  Rational area() const;
};

ShearedSurface apply_horocycle(const ZipperedRectangles& z, const Rational& s);
// Composes: the result carries the holonomy action of s + t.
ShearedSurface apply_horocycle(const ShearedSurface& surface, const Rational& t);

struct ReturnStep {
  SectionPoint image;
  Rational return_time;
  SaddleConnection transversal;  // on the unsheared surface, slope = return_time
  bool used_oracle = false;      // outside the bounded regime
};

inline constexpr long kSolverMaxPathLength = 24;

// Smallest slope with dx <= 1 on the area-1 surface: the pruned solver in
// the bounded regime when paths have at most kSolverMaxPathLength
// rectangles, otherwise the oracle with top crossings.
SaddleConnection first_return_connection(const SectionPoint& point, bool* used_oracle = nullptr);

// Shear by the return time, take the longest horizontal saddle connection of
// length <= 1 as the new transversal and rebuild the zippered rectangles
// from the vertical flow's first return to it. Throws DegeneratePoint when a
// vertical separatrix misses the new transversal or two breakpoints
// coincide, ContractViolation when the rebuilt point fails its checks.
ReturnStep return_map_step(const SectionPoint& point);
SectionPoint return_map(const SectionPoint& point);

// Zippered rectangles over the saddle connection c of z (which must have
// positive slope) for the vertical flow. The result has area z.area.
ZipperedRectangles rebuild_over(const ZipperedRectangles& z, const SaddleConnection& c);

enum class SampleMode { Iid, Orbit };

// On the 1/48 lattice the vertical flow is periodic and orbits soon meet a
// vertical saddle connection, so orbits start on a fine prime lattice.
inline constexpr long kOrbitDenominator = 100003;

// Bounded-regime start point of an orbit.
SectionPoint orbit_start(const Permutation& pi, std::uint64_t seed);

struct ReturnTimeSample {
  std::uint64_t index = 0;
  SectionPoint point;
  Rational return_time;
};

struct ReturnTimeStats {
  std::vector<ReturnTimeSample> samples;
  double min = 0, max = 0, mean = 0;
  double hist_lo = 0, hist_hi = 0;
  std::vector<std::uint64_t> histogram;
};

// Iid draws bounded-regime points of pi from the seed; orbit samples one
// point and follows the return map n - 1 times.
ReturnTimeStats sample_return_times(const Permutation& pi, std::uint64_t n, std::uint64_t seed, SampleMode mode,
                                    int bins = 20);

}  // namespace hsec
