#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hsec/paths.hpp"
#include "hsec/section.hpp"
#include "hsec/zr.hpp"

namespace hsec::test {

inline Rational q(const char* s) { return parse_rational(s); }

// (1, 3; 2, 3, 1, 2), pi = (4321), area 28, paths up to length 8.
inline ZipperedRectangles example1() {
  return solve_heights(Permutation({4, 3, 2, 1}), {1, 3}, {2, 3, 1, 2}, 28);
}

// (6, 3; 1, 1, 1, 2), pi = (3142), area 23, paths up to length 5.
inline ZipperedRectangles example2() {
  return solve_heights(Permutation({3, 1, 4, 2}), {6, 3}, {1, 1, 1, 2}, 23);
}

inline std::vector<SectionPoint> bounded_samples(const Permutation& pi, int n, std::uint64_t seed) {
  Sampler s(seed);
  std::vector<SectionPoint> out;
  for (int i = 0; i < n; ++i) out.push_back(sample_point(pi, s, SampleOptions::bounded()));
  return out;
}

inline const PathCandidate* find_path(const std::vector<PathCandidate>& v, int start, std::vector<int> rects) {
  auto it = std::find_if(v.begin(), v.end(), [&](const PathCandidate& p) {
    return p.start_vertex == start && p.rects == rects;
  });
  return it == v.end() ? nullptr : &*it;
}

}  // namespace hsec::test
