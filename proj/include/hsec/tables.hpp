#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hsec/paths.hpp"
#include "hsec/section.hpp"
#include "hsec/zr.hpp"

namespace hsec {

// Altitudes a_1..a_3 and widths of an H(2) surface, 1-based.
struct Coords {
  Rational a[4];
  Rational l[5];

  static Coords of(const ZipperedRectangles& z);
};

// One row of a closed-form table: a rectangle pattern prefix + k x block,
// its slope as a function of the coordinates, and the conditions under
// which the row asserts that the connection exists.
struct SlopeTableEntry {
  struct Condition {
    std::string text;
    std::function<bool(const Coords&, long k)> holds;
  };

  Permutation pi;
  std::string pattern;
  std::vector<int> prefix;
  std::vector<int> block;  // empty for rows without repetition
  long k_min = 0;
  std::function<Rational(const Coords&, long k)> slope;
  std::vector<Condition> conditions;

  bool repeated() const { return !block.empty(); }
  std::vector<int> rects(long k) const;
  // Labels and widths summed along the pattern; move tags follow sigma, and
  // a transition that is both consecutive and a gluing is tagged
  // consecutive. Throws ContractViolation if the pattern is not a path.
  PathCandidate instantiate(const ZipperedRectangles& z, long k) const;
  // Stated conditions plus slope > 0 and dx <= max_dx.
  bool applies(const ZipperedRectangles& z, long k, const Rational& max_dx) const;
};

// Throws UnsupportedPermutation outside the class.
const std::vector<SlopeTableEntry>& slope_table(const Permutation& pi);

struct TableCandidate {
  const SlopeTableEntry* row = nullptr;
  long k = 0;
  Rational slope;  // value of the row formula
  PathCandidate path;
};

// Every row instance whose conditions hold, for all k with dx <= max_dx.
std::vector<TableCandidate> table_candidates(const ZipperedRectangles& z, const Rational& max_dx);

// Minimum over table_candidates on the area-1 surface with max_dx = 1.
// Throws ContractViolation when no row applies.
SaddleConnection closed_form_smallest_slope(const SectionPoint& point);

}  // namespace hsec
