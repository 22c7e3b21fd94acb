#include "hsec/flow.hpp"

#include <algorithm>
#include <map>

#include "hsec/errors.hpp"
#include "hsec/oracle.hpp"
#include "hsec/solver.hpp"

namespace hsec {

Vec2 shear(const Vec2& v, const Rational& s) { return {v.x, v.y - s * v.x}; }

Rational ShearedSurface::area() const {
  Rational a = 0;
  for (std::size_t i = 0; i < width_vectors.size(); ++i)
    a += width_vectors[i].x * height_vectors[i].y - width_vectors[i].y * height_vectors[i].x;
  return a;
}

ShearedSurface apply_horocycle(const ZipperedRectangles& z, const Rational& s) {
  ShearedSurface out;
  out.base = build_geometry(z);
  out.s = 0;
  const auto& g = out.base;
  out.cone_points.push_back({0, 0});
  for (int i = 1; i <= g.m(); ++i) {
    out.width_vectors.push_back({g.width(i), 0});
    out.height_vectors.push_back({0, g.height(i)});
    out.zipper_vectors.push_back({0, g.alt(i)});
    out.cone_points.push_back({g.L(i) + g.width(i), g.alt(i)});
  }
  return apply_horocycle(out, s);
}

ShearedSurface apply_horocycle(const ShearedSurface& surface, const Rational& t) {
  ShearedSurface out = surface;
  out.s += t;
  for (auto* vs : {&out.width_vectors, &out.height_vectors, &out.zipper_vectors, &out.cone_points})
    for (auto& v : *vs) v = shear(v, t);
  return out;
}

namespace {

// The new transversal drawn on the old rectangles. t is the horizontal
// distance from its start, which is also the coordinate along it after the
// shear.
struct Transversal {
  const SurfaceGeometry& g;
  std::vector<Segment> segs;
  std::vector<Rational> start;  // t at the left end of each segment
  Rational length;
  Rational slope;

  Rational t_at(std::size_t k, const Rational& x) const { return start[k] + (x - segs[k].x0); }
  Rational y_at(std::size_t k, const Rational& x) const { return segs[k].y0 + slope * (x - segs[k].x0); }

  // t of the point of the base at b, if the transversal passes through it.
  std::optional<Rational> on_base(const Rational& b) const {
    for (std::size_t k = 0; k < segs.size(); ++k) {
      const Segment& sg = segs[k];
      if (sg.y0 == 0 && g.L(sg.rect) + sg.x0 == b) return start[k];
      if (sg.y1 == g.height(sg.rect) && g.Lp(sg.rect) + sg.x1 == b) return t_at(k, sg.x1);
    }
    return std::nullopt;
  }

  // Crossings of the zipper between R_{j-1} and R_j strictly between the base
  // and a_{j-1}, as (height, t).
  std::vector<std::pair<Rational, Rational>> zipper_crossings(int j) const {
    std::vector<std::pair<Rational, Rational>> out;
    const Rational& top = g.alt(j - 1);
    for (std::size_t k = 0; k < segs.size(); ++k) {
      const Segment& sg = segs[k];
      if (sg.rect == j - 1 && sg.x1 == g.width(j - 1) && sg.y1 > 0 && sg.y1 < top)
        out.push_back({sg.y1, t_at(k, sg.x1)});
      if (sg.rect == j && sg.x0 == 0 && sg.y0 > 0 && sg.y0 < top) out.push_back({sg.y0, start[k]});
    }
    return out;
  }
};

// Downward separatrix from the top of the zipper between R_{j-1} and R_j.
// Returns (time, t) of its first hit on the transversal.
std::pair<Rational, Rational> descend(const Transversal& tr, int j) {
  const SurfaceGeometry& g = tr.g;
  Rational time = 0;
  {
    auto cr = tr.zipper_crossings(j);
    if (!cr.empty()) {
      auto hit = *std::max_element(cr.begin(), cr.end());
      return {g.alt(j - 1) - hit.first, hit.second};
    }
  }
  time = g.alt(j - 1);
  Rational b = g.L(j);
  const Rational total = g.total_width();
  for (int guard = 0; guard < 1000000; ++guard) {
    if (auto t = tr.on_base(b)) return {time, *t};
    if (b <= 0 || b >= total) throw DegeneratePoint("vertical separatrix reaches a cone point on the base");
    int r = 0;
    bool corner = false;
    for (int i = 1; i <= g.m(); ++i) {
      if (g.Lp(i) < b && b < g.Lp(i) + g.width(i)) r = i;
      if (g.Lp(i) == b) {
        r = i;
        corner = true;
      }
    }
    if (r == 0) throw ContractViolation("base point outside every top image");
    if (!corner) {
      Rational x = b - g.Lp(r);
      std::optional<std::pair<Rational, Rational>> best;
      for (std::size_t k = 0; k < tr.segs.size(); ++k) {
        const Segment& sg = tr.segs[k];
        if (sg.rect != r || x < sg.x0 || x > sg.x1) continue;
        Rational y = tr.y_at(k, x);
        if (y <= 0 || y >= g.height(r)) continue;
        if (!best || y > best->first) best = {{y, tr.t_at(k, x)}};
      }
      if (best) return {time + g.height(r) - best->first, best->second};
      time += g.height(r);
      b = g.L(r) + x;
      continue;
    }
    // Top-left corner of R_r: the line below it is the side shared with the
    // rectangle just before r in the bottom row, down to that one's cone point.
    int pos = g.z.pi.position_of(r);
    int left = g.z.pi.interval_at(pos - 1);
    if (g.height(left) <= g.alt(left)) throw DegeneratePoint("vertical separatrix reaches a cone point");
    std::optional<std::pair<Rational, Rational>> best;
    for (std::size_t k = 0; k < tr.segs.size(); ++k) {
      const Segment& sg = tr.segs[k];
      if (sg.rect != left || sg.x1 != g.width(left) || sg.y1 <= g.alt(left) || sg.y1 >= g.height(left)) continue;
      if (!best || sg.y1 > best->first) best = {{sg.y1, tr.t_at(k, sg.x1)}};
    }
    if (!best) throw DegeneratePoint("vertical saddle connection misses the transversal");
    return {time + g.height(left) - best->first, best->second};
  }
  throw ContractViolation("vertical separatrix did not return");
}

// Upward flow from the transversal point in segment k at horizontal
// position x. Returns (time, t) of the first return.
std::pair<Rational, Rational> ascend(const Transversal& tr, std::size_t k0, const Rational& x0) {
  const SurfaceGeometry& g = tr.g;
  int r = tr.segs[k0].rect;
  Rational x = x0;
  Rational y = tr.y_at(k0, x0);
  Rational time = 0;
  for (int guard = 0; guard < 1000000; ++guard) {
    std::optional<std::pair<Rational, Rational>> best;
    for (std::size_t k = 0; k < tr.segs.size(); ++k) {
      const Segment& sg = tr.segs[k];
      if (sg.rect != r || x < sg.x0 || x > sg.x1) continue;
      Rational yy = tr.y_at(k, x);
      if (yy <= y || yy >= g.height(r)) continue;
      if (!best || yy < best->first) best = {{yy, tr.t_at(k, x)}};
    }
    if (best) return {time + best->first - y, best->second};
    time += g.height(r) - y;
    Rational b = g.Lp(r) + x;
    if (auto t = tr.on_base(b)) return {time, *t};
    int j = 0;
    for (int i = 1; i <= g.m(); ++i) {
      if (g.L(i) < b && b < g.L(i) + g.width(i)) {
        j = i;
        break;
      }
      if (g.L(i) == b && i >= 2) {
        auto cr = tr.zipper_crossings(i);
        if (cr.empty()) throw ContractViolation("upward trajectory from an interval interior reached a cone point");
        auto hit = *std::min_element(cr.begin(), cr.end());
        return {time + hit.first, hit.second};
      }
    }
    if (j == 0) throw ContractViolation("upward trajectory left the base");
    r = j;
    x = b - g.L(j);
    y = 0;
  }
  throw ContractViolation("upward trajectory did not return");
}

}  // namespace

ZipperedRectangles rebuild_over(const ZipperedRectangles& z, const SaddleConnection& c) {
  SurfaceGeometry g = build_geometry(z);
  Transversal tr{g, {}, {}, c.dx, c.slope};
  if (c.slope <= 0) throw ContractViolation("transversal must have positive slope");
  TraceResult res = trace_ray(g, c.start, c.slope, c.dx, true, tr.segs);
  if (res.outcome != TraceOutcome::ConePoint || res.path.dx != c.dx)
    throw ContractViolation("transversal " + c.path.notation() + " does not trace");
  Rational t = 0;
  for (const auto& sg : tr.segs) {
    tr.start.push_back(t);
    t += sg.x1 - sg.x0;
  }

  int m = z.m();
  std::vector<std::pair<Rational, Rational>> breaks;  // (t, altitude)
  for (int j = 2; j <= m; ++j) {
    if (g.alt(j - 1) <= 0) throw DegeneratePoint("zero-length zipper");
    auto [time, at] = descend(tr, j);
    if (at <= 0 || at >= tr.length) throw DegeneratePoint("vertical separatrix hits an end of the transversal");
    breaks.push_back({at, time});
  }
  std::sort(breaks.begin(), breaks.end());
  for (std::size_t i = 1; i < breaks.size(); ++i)
    if (breaks[i].first == breaks[i - 1].first) throw DegeneratePoint("two separatrices meet the transversal together");

  std::vector<Rational> cut{0};
  for (auto& b : breaks) cut.push_back(b.first);
  cut.push_back(tr.length);

  ZipperedRectangles out;
  out.alt.push_back(0);
  for (auto& b : breaks) out.alt.push_back(b.second);
  out.alt.push_back(0);
  std::vector<std::pair<Rational, int>> images;
  for (int i = 1; i <= m; ++i) {
    const Rational& lo = cut[i - 1];
    const Rational& hi = cut[i];
    out.lambda.push_back(hi - lo);
    // A point strictly inside one transversal segment.
    std::optional<std::pair<std::size_t, Rational>> probe;
    for (std::size_t k = 0; k < tr.segs.size() && !probe; ++k) {
      Rational a = std::max(lo, tr.start[k]);
      Rational e = std::min(hi, Rational(tr.start[k] + tr.segs[k].x1 - tr.segs[k].x0));
      if (a < e) probe = {{k, tr.segs[k].x0 + ((a + e) / 2 - tr.start[k])}};
    }
    if (!probe) throw ContractViolation("empty interval on the transversal");
    Rational t_probe = tr.t_at(probe->first, probe->second);
    auto [time, back] = ascend(tr, probe->first, probe->second);
    out.height.push_back(time);
    images.push_back({lo + (back - t_probe), i});
  }
  std::sort(images.begin(), images.end());
  std::vector<int> bottom;
  Rational expect = 0;
  for (auto& [left, i] : images) {
    if (left != expect) throw ContractViolation("first-return images do not tile the transversal");
    expect += out.lambda[i - 1];
    bottom.push_back(i);
  }
  try {
    out.pi = Permutation(bottom);
  } catch (const InvalidPermutation& e) {
    throw ContractViolation(std::string("rebuilt permutation is not admissible: ") + e.what());
  }
  out.area = area_of(out);
  return out;
}

SaddleConnection first_return_connection(const SectionPoint& point, bool* used_oracle) {
  ZipperedRectangles z = point.to_surface();
  // The pruned tree grows like the Fibonacci numbers in the path length, so
  // very thin rectangles go to the best-first search, which agrees with it.
  bool bounded = point.in_bounded_regime() && max_path_length(z, 1) <= kSolverMaxPathLength;
  if (used_oracle) *used_oracle = !bounded;
  if (bounded) return smallest_slope(z, 1);
  return brute_force_min_slope(z, 1, true);
}

namespace {

SectionPoint to_point(const ZipperedRectangles& z) {
  SectionPoint p;
  p.pi = z.pi;
  p.a2 = z.a(2);
  p.a3 = z.a(3);
  for (int i = 0; i < 4; ++i) p.lambda[i] = z.lambda[i];
  return p;
}

bool point_less(const SectionPoint& x, const SectionPoint& y) {
  if (x.pi != y.pi) return x.pi < y.pi;
  if (x.a2 != y.a2) return x.a2 < y.a2;
  if (x.a3 != y.a3) return x.a3 < y.a3;
  return x.lambda < y.lambda;
}

}  // namespace

ReturnStep return_map_step(const SectionPoint& point) {
  Membership mem = membership(point);
  if (!mem) throw InvalidSurface("point is not in the section: " + mem.violated);
  ZipperedRectangles z = point.to_surface();
  ReturnStep step;
  SaddleConnection first = first_return_connection(point, &step.used_oracle);
  step.return_time = first.slope;

  auto all = enumerate_connections(z, 1, first.slope, first.slope);
  std::vector<SaddleConnection> longest;
  for (auto& c : all) {
    if (c.slope != first.slope) continue;
    if (!longest.empty() && c.dx < longest.front().dx) continue;
    if (!longest.empty() && c.dx > longest.front().dx) longest.clear();
    longest.push_back(c);
  }
  if (longest.empty()) throw ContractViolation("the minimizing connection is missing from the enumeration");

  const auto& cls = h2_class();
  std::vector<std::pair<SectionPoint, SaddleConnection>> rebuilt;
  std::string first_error;
  bool degenerate = false;
  for (const auto& c : longest) {
    try {
      ZipperedRectangles nz = rebuild_over(z, c);
      if (nz.area != z.area) throw ContractViolation("rebuilt area " + to_string(nz.area));
      auto bad = check_validity(nz);
      if (!bad.empty()) throw ContractViolation("rebuilt surface violates " + bad.front().id());
      if (std::find(cls.begin(), cls.end(), nz.pi) == cls.end())
        throw ContractViolation("rebuilt permutation " + nz.pi.to_string() + " is outside the class");
      SectionPoint p = to_point(nz);
      Membership pm = membership(p);
      if (!pm) throw ContractViolation("rebuilt point fails " + pm.violated);
      ZipperedRectangles back = p.to_surface();
      if (back.alt != nz.alt || back.height != nz.height)
        throw ContractViolation("rebuilt point does not solve back to the rebuilt surface");
      rebuilt.push_back({p, c});
    } catch (const DegeneratePoint& e) {
      degenerate = true;
      if (first_error.empty()) first_error = e.what();
    } catch (const ContractViolation& e) {
      if (first_error.empty()) first_error = e.what();
    }
  }
  if (rebuilt.empty()) {
    if (degenerate) throw DegeneratePoint(first_error);
    throw ContractViolation(first_error);
  }
  auto best = std::min_element(rebuilt.begin(), rebuilt.end(),
                               [](const auto& x, const auto& y) { return point_less(x.first, y.first); });
  step.image = best->first;
  step.transversal = best->second;
  return step;
}

SectionPoint return_map(const SectionPoint& point) { return return_map_step(point).image; }

SectionPoint orbit_start(const Permutation& pi, std::uint64_t seed) {
  SampleOptions opt = SampleOptions::bounded();
  opt.denominator = kOrbitDenominator;
  return sample_point(pi, seed, opt);
}

ReturnTimeStats sample_return_times(const Permutation& pi, std::uint64_t n, std::uint64_t seed, SampleMode mode,
                                    int bins) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (bins < 1) throw std::invalid_argument("bins must be at least 1");
  ReturnTimeStats st;
  if (mode == SampleMode::Iid) {
    Sampler sampler(seed);
    SampleOptions opt = SampleOptions::bounded();
    for (std::uint64_t i = 0; i < n; ++i) {
      SectionPoint p = sample_point(pi, sampler, opt);
      Rational rt = return_time(p);
      st.samples.push_back({i, p, rt});
    }
  } else {
    SectionPoint p = orbit_start(pi, seed);
    for (std::uint64_t i = 0; i < n; ++i) {
      ReturnStep step = return_map_step(p);
      st.samples.push_back({i, p, step.return_time});
      p = step.image;
    }
  }
  std::vector<double> v;
  for (auto& s : st.samples) v.push_back(to_double(s.return_time));
  st.min = *std::min_element(v.begin(), v.end());
  st.max = *std::max_element(v.begin(), v.end());
  double sum = 0;
  for (double x : v) sum += x;
  st.mean = sum / static_cast<double>(v.size());
  st.hist_lo = st.min;
  st.hist_hi = st.max;
  st.histogram.assign(bins, 0);
  double width = (st.max - st.min) / bins;
  for (double x : v) {
    int b = width > 0 ? static_cast<int>((x - st.min) / width) : 0;
    st.histogram[std::clamp(b, 0, bins - 1)]++;
  }
  return st;
}

}  // namespace hsec
