#include "hsec/geometry.hpp"

#include "hsec/errors.hpp"

namespace hsec {

int SurfaceGeometry::base_rect_at(const Rational& b) const {
  for (int j = 1; j <= m(); ++j)
    if (L(j) <= b && b < L(j) + width(j)) return j;
  return 0;
}

SurfaceGeometry build_geometry(const ZipperedRectangles& z) {
  auto bad = check_validity(z);
  if (!bad.empty()) throw InvalidSurface("invalid zippered rectangles: " + bad.front().id() + " " + bad.front().description);

  SurfaceGeometry g;
  g.z = z;
  g.sigma = compute_sigma(z.pi);
  int m = z.m();
  Rational acc = 0;
  for (int i = 1; i <= m; ++i) {
    g.left.push_back(acc);
    acc += z.lam(i);
  }
  g.top_image.assign(m, 0);
  acc = 0;
  for (int p = 1; p <= m; ++p) {
    int i = z.pi.interval_at(p);
    g.top_image[i - 1] = acc;
    acc += z.lam(i);
  }

  for (int i = 1; i <= m; ++i) {
    int s = g.sigma(i);
    Rational len = z.h(i) - z.a(i);
    if (s == m || len == 0) continue;
    g.side_gluings.push_back({i, s + 1, len, z.a(s) - z.a(i)});
  }

  for (int i = 1; i <= m; ++i) {
    Rational lo = g.Lp(i), hi = g.Lp(i) + z.lam(i);
    for (int j = 1; j <= m; ++j) {
      Rational blo = g.L(j), bhi = g.L(j) + z.lam(j);
      Rational plo = lo > blo ? lo : blo;
      Rational phi = hi < bhi ? hi : bhi;
      if (plo >= phi) continue;
      g.top_pieces.push_back({i, plo - lo, phi - lo, j, lo - blo});
    }
  }
  return g;
}

namespace {

TraceResult trace_impl(const SurfaceGeometry& g, int start_vertex, const Rational& slope, const Rational& max_dx,
                       bool allow_top, std::vector<Segment>* segs) {
  TraceResult res;
  PathCandidate& p = res.path;
  p.start_vertex = start_vertex;
  p.dx = 0;
  p.dy = 0;
  int m = g.m();
  int r = start_vertex + 1;
  Rational x = 0;
  Rational y = g.alt(start_vertex);
  if (r > m || y >= g.height(r)) {
    res.outcome = TraceOutcome::Boundary;
    return res;
  }
  p.rects.push_back(r);
  Rational travelled = 0;

  auto finish = [&](TraceOutcome o) {
    res.outcome = o;
    p.dx = travelled;
    p.dy = slope * travelled;
    return res;
  };

  for (;;) {
    if (g.height(r) == 0) return finish(TraceOutcome::Boundary);
    Rational rem = g.width(r) - x;
    Rational y_right = y + slope * rem;
    Rational h = g.height(r);
    if (y_right < h || (y_right == h && y_right == g.alt(r))) {
      if (travelled + rem > max_dx) return finish(TraceOutcome::TooLong);
      travelled += rem;
      if (segs) segs->push_back({r, x, y, g.width(r), y_right});
      const Rational& a = g.alt(r);
      if (y_right == a) return finish(TraceOutcome::ConePoint);
      if (y_right < a) {
        if (r == m) return finish(TraceOutcome::Boundary);
        r = r + 1;
        y = y_right;
        p.moves.push_back(Move::Consecutive);
      } else {
        int s = g.sigma(r);
        if (s == m) return finish(TraceOutcome::Boundary);
        r = s + 1;
        y = y_right - a + g.alt(s);
        p.moves.push_back(Move::Gluing);
      }
      x = 0;
      p.rects.push_back(r);
      continue;
    }
    // Leaves through the top edge, possibly at its right corner.
    Rational x_top = y_right == h ? g.width(r) : x + (h - y) / slope;
    if (travelled + (x_top - x) >= max_dx) return finish(TraceOutcome::TooLong);
    if (!allow_top) return finish(TraceOutcome::TopCrossing);
    travelled += x_top - x;
    if (segs) segs->push_back({r, x, y, x_top, h});
    Rational b = g.Lp(r) + x_top;
    int j = g.base_rect_at(b);
    if (j == 0) return finish(TraceOutcome::Boundary);
    r = j;
    x = b - g.L(j);
    y = 0;
    p.moves.push_back(Move::Top);
    p.rects.push_back(r);
  }
}

}  // namespace

TraceResult trace_ray(const SurfaceGeometry& g, int start_vertex, const Rational& slope, const Rational& max_dx,
                      bool allow_top) {
  return trace_impl(g, start_vertex, slope, max_dx, allow_top, nullptr);
}

TraceResult trace_ray(const SurfaceGeometry& g, int start_vertex, const Rational& slope, const Rational& max_dx,
                      bool allow_top, std::vector<Segment>& segments) {
  segments.clear();
  return trace_impl(g, start_vertex, slope, max_dx, allow_top, &segments);
}

}  // namespace hsec
