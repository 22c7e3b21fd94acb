#pragma once

#include <string>
#include <vector>

#include "hsec/rational.hpp"

namespace hsec {

enum class Move { Consecutive, Gluing, Top };

// A sequence of rectangles crossed left to right, starting at cone point
// x_{start_vertex} on the left side of the first rectangle. moves[i] is the
// transition from rects[i] to rects[i+1].
struct PathCandidate {
  int start_vertex = 0;
  std::vector<int> rects;
  std::vector<Move> moves;
  Rational dx;
  Rational dy;

  // A path that stops on the right side of R_i ends at x_i.
  int end_vertex() const { return rects.back(); }
  Rational slope() const { return dy / dx; }
  bool crosses_top() const;
  // (R1, R2, R3)
  std::string notation() const;
  std::vector<std::string> labels() const;  // {"R1", "R2", ...}
};

struct SaddleConnection {
  int start = 0;
  int end = 0;
  Rational dx;
  Rational dy;
  Rational slope;
  PathCandidate path;

  static SaddleConnection from_path(const PathCandidate& p);
};

// Tie-break order used everywhere: slope, then dx, then rectangle
// sequence, then moves.
bool path_less(const PathCandidate& x, const PathCandidate& y);
bool connection_less(const SaddleConnection& x, const SaddleConnection& y);
bool same_path(const PathCandidate& x, const PathCandidate& y);

}  // namespace hsec
