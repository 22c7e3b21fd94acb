#pragma once

#include <optional>
#include <vector>

#include "hsec/geometry.hpp"
#include "hsec/paths.hpp"
#include "hsec/section.hpp"
#include "hsec/zr.hpp"

namespace hsec {

enum class Pruning { On, Off };

// floor(max_dx / min lambda).
long max_path_length(const ZipperedRectangles& z, const Rational& max_dx);

// Sum lambda + min lambda > max_dx.
bool in_bounded_regime(const ZipperedRectangles& z, const Rational& max_dx);

// Every root-to-node path of the labeled trees rooted at the eligible cone
// points (a_k < h_{k+1}), with dx <= max_dx. Throws InvalidSurface for an
// invalid z and, with pruning on, OutsideBoundedRegime.
std::vector<PathCandidate> enumerate_candidates(const ZipperedRectangles& z, const Rational& max_dx,
                                                Pruning pruning = Pruning::On);

// Drops dy <= 0, paths ending at x_m, and paths ending where they started.
std::vector<PathCandidate> filter_positive_nonterminal(const std::vector<PathCandidate>& cands, int m);

enum class ValidityRule { Length, Slope, Endpoint, Rule3a, Rule3b, Rule3c, Rule3d };

const char* to_string(ValidityRule r);

// First broken condition of the valid-path definition, if any.
std::optional<ValidityRule> validity_violation(const PathCandidate& path, const ZipperedRectangles& z,
                                               const Rational& max_dx);
bool is_valid(const PathCandidate& path, const ZipperedRectangles& z, const Rational& max_dx);

// Exact trace without top crossings; true iff the straight segment realizes
// exactly this rectangle sequence and ends on a cone point.
bool trace_exists(const PathCandidate& path, const ZipperedRectangles& z);
bool trace_exists(const PathCandidate& path, const SurfaceGeometry& g);

struct SolverResult {
  SaddleConnection connection;
  std::vector<PathCandidate> candidates;  // filtered, sorted by slope
  std::size_t considered = 0;             // how many were examined before success
};

SolverResult solve_smallest_slope(const ZipperedRectangles& z, const Rational& max_dx);
SaddleConnection smallest_slope(const ZipperedRectangles& z, const Rational& max_dx);

// Smallest slope on the area-1 surface with max_dx = 1.
Rational return_time(const SectionPoint& point);

// 4 + sum_{i=2}^{C-3} F_i + 2 sum_{i=2}^{C+1} F_i with F_1 = F_2 = 1.
Integer path_count_bound(long C);
Integer fibonacci(long i);

}  // namespace hsec
