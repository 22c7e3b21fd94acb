#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hsec/geometry.hpp"
#include "hsec/paths.hpp"
#include "hsec/section.hpp"
#include "hsec/zr.hpp"

namespace hsec {

using Json = nlohmann::ordered_json;

// Malformed input documents (the CLI treats these as usage errors).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"pi":[...], "lambda":["p/q",...], "a2":"p/q", ..., "a{m-1}":"p/q",
//  "area":"p/q", "max_dx":"p/q"}; area defaults to 1. Rationals may also be
// JSON integers. "a" and "h" arrays, when present, give a full surface.
struct SurfaceInput {
  Permutation pi;
  std::vector<Rational> free_altitudes;  // a_2..a_{m-1}
  std::vector<Rational> lambda;
  Rational area = 1;
  std::optional<Rational> max_dx;
  std::optional<std::vector<Rational>> a;  // a_1..a_m
  std::optional<std::vector<Rational>> h;

  // Section point; throws InputError unless m = 4 and area = 1.
  SectionPoint point() const;
  // Taken as given when a and h are present, otherwise solve_heights.
  ZipperedRectangles surface() const;
  // max_dx, else 1.
  Rational working_length() const;
};

Rational rational_from_json(const Json& v);
Json to_json(const Rational& q);

SurfaceInput parse_surface_input(const Json& doc);
SurfaceInput parse_surface_input(const std::string& text);

Json permutation_json(const Permutation& pi);
Json point_json(const SectionPoint& p);
Json surface_json(const ZipperedRectangles& z);
Json path_json(const PathCandidate& p);
Json connection_json(const SaddleConnection& c);
const char* to_string(Move mv);

// Stable text: two-space indent and a trailing newline.
std::string dump(const Json& doc);

struct SvgOptions {
  double size = 480;  // longest side of the drawing in pixels
  double margin = 40;
};

// Rectangles R_1..R_m, cone points x_0..x_m, the transversal and, when
// given, the pieces of the connection inside each rectangle.
std::string render_svg(const ZipperedRectangles& z, const std::optional<SaddleConnection>& highlight = std::nullopt,
                       const SvgOptions& options = {});

}  // namespace hsec
