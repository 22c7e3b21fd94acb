#include "hsec/io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "hsec/errors.hpp"

namespace hsec {

Rational rational_from_json(const Json& v) {
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
  }
  throw InputError("expected a rational as \"p/q\" or an integer, got " + v.dump());
}

Json to_json(const Rational& q) { return to_string(q); }

namespace {

std::vector<Rational> rational_array(const Json& doc, const char* key) {
  const Json& v = doc.at(key);
  if (!v.is_array()) throw InputError(std::string(key) + " must be an array");
  std::vector<Rational> out;
  for (const auto& x : v) out.push_back(rational_from_json(x));
  return out;
}

Json rational_array_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Permutation permutation_from_json(const Json& v) {
  if (v.is_string()) return Permutation::parse(v.get<std::string>());
  if (!v.is_array()) throw InputError("pi must be an array of integers");
  std::vector<int> row;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw InputError("pi must be an array of integers");
    row.push_back(x.get<int>());
  }
  return Permutation(row);
}

}  // namespace

SurfaceInput parse_surface_input(const Json& doc) {
  if (!doc.is_object()) throw InputError("input must be a JSON object");
  SurfaceInput in;
  try {
    in.pi = permutation_from_json(doc.at("pi"));
    in.lambda = rational_array(doc, "lambda");
    int m = in.pi.size();
    for (int i = 2; i < m; ++i) {
      std::string key = "a" + std::to_string(i);
      if (!doc.contains(key)) throw InputError("missing " + key);
      in.free_altitudes.push_back(rational_from_json(doc.at(key)));
    }
    if (doc.contains("area")) in.area = rational_from_json(doc.at("area"));
    if (doc.contains("max_dx")) in.max_dx = rational_from_json(doc.at("max_dx"));
    if (doc.contains("a") != doc.contains("h")) throw InputError("a and h must be given together");
    if (doc.contains("a")) {
      in.a = rational_array(doc, "a");
      in.h = rational_array(doc, "h");
    }
  } catch (const Json::exception& e) {
    throw InputError(e.what());
  }
  if (static_cast<int>(in.lambda.size()) != in.pi.size()) throw InputError("lambda needs one entry per interval");
  if (in.max_dx && *in.max_dx <= 0) throw InputError("max_dx must be positive");
  return in;
}

SurfaceInput parse_surface_input(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(e.what());
  }
  return parse_surface_input(doc);
}

SectionPoint SurfaceInput::point() const {
  if (pi.size() != 4) throw InputError("section points have four intervals");
  if (area != 1) throw InputError("section points have area 1");
  SectionPoint p;
  p.pi = pi;
  p.a2 = free_altitudes[0];
  p.a3 = free_altitudes[1];
  std::copy(lambda.begin(), lambda.end(), p.lambda.begin());
  return p;
}

ZipperedRectangles SurfaceInput::surface() const {
  if (!a) return solve_heights(pi, free_altitudes, lambda, area);
  int m = pi.size();
  if (static_cast<int>(a->size()) != m || static_cast<int>(h->size()) != m)
    throw InputError("a and h need one entry per interval");
  ZipperedRectangles z;
  z.pi = pi;
  z.lambda = lambda;
  z.alt.assign(1, Rational(0));
  z.alt.insert(z.alt.end(), a->begin(), a->end());
  z.height = *h;
  z.area = area;
  return z;
}

Rational SurfaceInput::working_length() const { return max_dx ? *max_dx : Rational(1); }

Json permutation_json(const Permutation& pi) { return Json(pi.bottom_row()); }

Json point_json(const SectionPoint& p) {
  Json out;
  out["pi"] = permutation_json(p.pi);
  out["lambda"] = rational_array_json({p.lambda.begin(), p.lambda.end()});
  out["a2"] = to_json(p.a2);
  out["a3"] = to_json(p.a3);
  out["area"] = "1";
  return out;
}

Json surface_json(const ZipperedRectangles& z) {
  Json out;
  out["pi"] = permutation_json(z.pi);
  out["lambda"] = rational_array_json(z.lambda);
  for (int i = 2; i < z.m(); ++i) out["a" + std::to_string(i)] = to_json(z.a(i));
  out["area"] = to_json(z.area);
  out["a"] = rational_array_json({z.alt.begin() + 1, z.alt.end()});
  out["h"] = rational_array_json(z.height);
  return out;
}

const char* to_string(Move mv) {
  switch (mv) {
    case Move::Consecutive:
      return "consecutive";
    case Move::Gluing:
      return "gluing";
    case Move::Top:
      return "top";
  }
  return "?";
}

Json path_json(const PathCandidate& p) {
  Json out;
  out["path"] = p.labels();
  out["start"] = p.start_vertex;
  out["end"] = p.end_vertex();
  out["dx"] = to_json(p.dx);
  out["dy"] = to_json(p.dy);
  out["slope"] = p.dx == 0 ? Json(nullptr) : to_json(p.slope());
  Json moves = Json::array();
  for (Move mv : p.moves) moves.push_back(to_string(mv));
  out["moves"] = moves;
  return out;
}

Json connection_json(const SaddleConnection& c) {
  Json out;
  out["slope"] = to_json(c.slope);
  out["path"] = c.path.labels();
  out["start"] = c.start;
  out["end"] = c.end;
  out["dx"] = to_json(c.dx);
  out["dy"] = to_json(c.dy);
  Json moves = Json::array();
  for (Move mv : c.path.moves) moves.push_back(to_string(mv));
  out["moves"] = moves;
  return out;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

}  // namespace

std::string render_svg(const ZipperedRectangles& z, const std::optional<SaddleConnection>& highlight,
                       const SvgOptions& options) {
  SurfaceGeometry g = build_geometry(z);
  int m = g.m();
  Rational extent = g.total_width();
  for (int i = 1; i <= m; ++i) extent = std::max(extent, g.height(i));
  double scale = options.size / to_double(extent);
  double w = to_double(g.total_width()) * scale + 2 * options.margin;
  Rational top = 0;
  for (int i = 1; i <= m; ++i) top = std::max(top, g.height(i));
  double h = to_double(top) * scale + 2 * options.margin;
  auto X = [&](const Rational& x) { return num(options.margin + to_double(x) * scale); };
  auto Y = [&](const Rational& y) { return num(h - options.margin - to_double(y) * scale); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h)
     << "\" viewBox=\"0 0 " << num(w) << ' ' << num(h) << "\">\n";
  os << "<g class=\"rectangles\" fill=\"none\" stroke=\"#222\" stroke-width=\"1.5\">\n";
  for (int i = 1; i <= m; ++i) {
    os << "<rect data-index=\"" << i << "\" x=\"" << X(g.L(i)) << "\" y=\"" << Y(g.height(i)) << "\" width=\""
       << num(to_double(g.width(i)) * scale) << "\" height=\"" << num(to_double(g.height(i)) * scale) << "\"/>\n";
  }
  os << "</g>\n";
  os << "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">\n";
  for (int i = 1; i <= m; ++i) {
    Rational cx = g.L(i) + g.width(i) / 2;
    os << "<text x=\"" << X(cx) << "\" y=\"" << Y(g.height(i) / 2) << "\">R" << i << "</text>\n";
  }
  os << "</g>\n";
  os << "<line class=\"transversal\" x1=\"" << X(Rational(0)) << "\" y1=\"" << Y(Rational(0)) << "\" x2=\""
     << X(g.total_width()) << "\" y2=\"" << Y(Rational(0)) << "\" stroke=\"#1f5fbf\" stroke-width=\"3\"/>\n";

  if (highlight) {
    std::vector<Segment> segs;
    TraceResult t =
        trace_ray(g, highlight->start, highlight->slope, highlight->dx, highlight->path.crosses_top(), segs);
    if (t.outcome != TraceOutcome::ConePoint) throw ContractViolation("highlighted connection does not trace");
    os << "<g class=\"connection\" stroke=\"#c0392b\" stroke-width=\"2\">\n";
    for (const auto& s : segs) {
      os << "<line class=\"segment\" data-rect=\"" << s.rect << "\" x1=\"" << X(g.L(s.rect) + s.x0) << "\" y1=\""
         << Y(s.y0) << "\" x2=\"" << X(g.L(s.rect) + s.x1) << "\" y2=\"" << Y(s.y1) << "\"/>\n";
    }
    os << "</g>\n";
  }

  os << "<g class=\"cone-points\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (int i = 0; i <= m; ++i) {
    Rational x = i == 0 ? Rational(0) : g.L(i) + g.width(i);
    Rational y = g.alt(i);
    os << "<circle data-index=\"" << i << "\" cx=\"" << X(x) << "\" cy=\"" << Y(y) << "\" r=\"3.5\" fill=\"#222\"/>\n";
    os << "<text x=\"" << num(options.margin + to_double(x) * scale + 5) << "\" y=\""
       << num(h - options.margin - to_double(y) * scale - 5) << "\">x" << i << "</text>\n";
  }
  os << "</g>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace hsec
