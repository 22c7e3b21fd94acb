#include "hsec/solver.hpp"

#include <algorithm>
#include <functional>

#include "hsec/errors.hpp"

namespace hsec {

long max_path_length(const ZipperedRectangles& z, const Rational& max_dx) {
  return floor_div(max_dx, z.min_width()).get_num().get_si();
}

bool in_bounded_regime(const ZipperedRectangles& z, const Rational& max_dx) {
  return z.total_width() + z.min_width() > max_dx;
}

std::vector<PathCandidate> enumerate_candidates(const ZipperedRectangles& z, const Rational& max_dx, Pruning pruning) {
  auto bad = check_validity(z);
  if (!bad.empty()) throw InvalidSurface("invalid zippered rectangles: " + bad.front().id());
  bool prune = pruning == Pruning::On;
  if (prune && !in_bounded_regime(z, max_dx))
    throw OutsideBoundedRegime("sum lambda + min lambda must exceed " + to_string(max_dx));

  int m = z.m();
  GluingMap sigma = compute_sigma(z.pi);
  std::vector<PathCandidate> out;
  PathCandidate cur;

  std::function<void(bool)> visit = [&](bool all_consecutive) {
    out.push_back(cur);
    int r = cur.rects.back();
    int k = cur.start_vertex;
    bool consecutive = r < m;
    bool gluing = sigma(r) < m;
    if (prune) {
      if (cur.rects.size() == 1) {
        if (z.a(k) >= z.a(k + 1))
          consecutive = false;
        else
          gluing = false;
      }
      if (k == 0 && all_consecutive && r < m) gluing = false;
    }
    auto descend = [&](int next, Move mv) {
      if (cur.dx + z.lam(next) > max_dx) return;
      cur.rects.push_back(next);
      cur.moves.push_back(mv);
      cur.dx += z.lam(next);
      cur.dy += z.a(next) - z.a(next - 1);
      visit(all_consecutive && mv == Move::Consecutive);
      cur.dy -= z.a(next) - z.a(next - 1);
      cur.dx -= z.lam(next);
      cur.moves.pop_back();
      cur.rects.pop_back();
    };
    if (consecutive) descend(r + 1, Move::Consecutive);
    if (gluing) descend(sigma(r) + 1, Move::Gluing);
  };

  for (int k = 0; k < m; ++k) {
    if (!(z.a(k) < z.h(k + 1))) continue;
    if (z.lam(k + 1) > max_dx) continue;
    cur = PathCandidate{};
    cur.start_vertex = k;
    cur.rects = {k + 1};
    cur.dx = z.lam(k + 1);
    cur.dy = z.a(k + 1) - z.a(k);
    visit(true);
  }
  return out;
}

std::vector<PathCandidate> filter_positive_nonterminal(const std::vector<PathCandidate>& cands, int m) {
  std::vector<PathCandidate> out;
  for (const auto& c : cands) {
    if (c.dy <= 0) continue;
    if (c.end_vertex() == m) continue;
    if (c.end_vertex() == c.start_vertex) continue;
    out.push_back(c);
  }
  return out;
}

const char* to_string(ValidityRule r) {
  switch (r) {
    case ValidityRule::Length: return "length";
    case ValidityRule::Slope: return "slope";
    case ValidityRule::Endpoint: return "endpoint";
    case ValidityRule::Rule3a: return "3a";
    case ValidityRule::Rule3b: return "3b";
    case ValidityRule::Rule3c: return "3c";
    case ValidityRule::Rule3d: return "3d";
  }
  return "?";
}

namespace {

bool begins_with(const std::vector<int>& r, std::initializer_list<int> p) {
  return r.size() >= p.size() && std::equal(p.begin(), p.end(), r.begin());
}

bool ends_with(const std::vector<int>& r, std::initializer_list<int> p) {
  return r.size() >= p.size() && std::equal(p.begin(), p.end(), r.end() - p.size());
}

bool contains(const std::vector<int>& r, const std::vector<int>& p) {
  return std::search(r.begin(), r.end(), p.begin(), p.end()) != r.end();
}

// n x block for some n > 1, with nothing before or after.
bool wraps(const std::vector<int>& r, const std::vector<int>& block) {
  if (r.size() < 2 * block.size() || r.size() % block.size() != 0) return false;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] != block[i % block.size()]) return false;
  return true;
}

}  // namespace

std::optional<ValidityRule> validity_violation(const PathCandidate& path, const ZipperedRectangles& z,
                                               const Rational& max_dx) {
  if (path.dx > max_dx) return ValidityRule::Length;
  if (path.dy <= 0) return ValidityRule::Slope;
  int m = z.m();
  if (path.end_vertex() == path.start_vertex || path.end_vertex() == m) return ValidityRule::Endpoint;
  if (m != 4) return std::nullopt;

  GluingMap sigma = compute_sigma(z.pi);
  const auto& r = path.rects;
  int into1 = sigma.inverse(1);  // R_{into1} is glued onto R_2
  int into2 = sigma.inverse(2);  // R_{into2} is glued onto R_3

  if (begins_with(r, {2, 3}) || contains(r, {into1, 2, 3})) {
    if (ends_with(r, {1, 2})) return ValidityRule::Rule3a;
    if (sigma(2) < m && contains(r, {1, 2, sigma(2) + 1})) return ValidityRule::Rule3a;
  }
  if (begins_with(r, {2, 3, 4}) || contains(r, {into1, 2, 3, 4})) {
    if (ends_with(r, {1, 2, 3})) return ValidityRule::Rule3b;
    if (sigma(3) < m && contains(r, {1, 2, 3, sigma(3) + 1})) return ValidityRule::Rule3b;
  }
  if (begins_with(r, {3, 4}) || contains(r, {into2, 3, 4})) {
    if (ends_with(r, {2, 3})) return ValidityRule::Rule3c;
  }
  if (z.a(3) > z.a(1) && wraps(r, {2, 3})) return ValidityRule::Rule3d;
  if (wraps(r, {1, 2})) return ValidityRule::Rule3d;
  return std::nullopt;
}

bool is_valid(const PathCandidate& path, const ZipperedRectangles& z, const Rational& max_dx) {
  return !validity_violation(path, z, max_dx).has_value();
}

bool trace_exists(const PathCandidate& path, const SurfaceGeometry& g) {
  if (path.rects.empty() || path.dx <= 0 || path.dy < 0) return false;
  TraceResult t = trace_ray(g, path.start_vertex, path.dy / path.dx, path.dx, false);
  return t.outcome == TraceOutcome::ConePoint && t.path.rects == path.rects && t.path.moves == path.moves &&
         t.path.dx == path.dx;
}

bool trace_exists(const PathCandidate& path, const ZipperedRectangles& z) {
  return trace_exists(path, build_geometry(z));
}

SolverResult solve_smallest_slope(const ZipperedRectangles& z, const Rational& max_dx) {
  if (!in_bounded_regime(z, max_dx))
    throw OutsideBoundedRegime("sum lambda + min lambda = " + to_string(z.total_width() + z.min_width()) +
                               " does not exceed " + to_string(max_dx));
  SolverResult res;
  res.candidates = filter_positive_nonterminal(enumerate_candidates(z, max_dx, Pruning::On), z.m());
  std::sort(res.candidates.begin(), res.candidates.end(), path_less);
  SurfaceGeometry g = build_geometry(z);
  for (const auto& c : res.candidates) {
    ++res.considered;
    if (is_valid(c, z, max_dx) && trace_exists(c, g)) {
      res.connection = SaddleConnection::from_path(c);
      return res;
    }
  }
  throw NoConnectionInRange("no saddle connection with dx <= " + to_string(max_dx));
}

SaddleConnection smallest_slope(const ZipperedRectangles& z, const Rational& max_dx) {
  return solve_smallest_slope(z, max_dx).connection;
}

Rational return_time(const SectionPoint& point) { return smallest_slope(point.to_surface(), Rational(1)).slope; }

Integer fibonacci(long i) {
  if (i <= 0) return 0;
  Integer a = 1, b = 1;
  for (long k = 3; k <= i; ++k) {
    Integer c = a + b;
    a = b;
    b = c;
  }
  return i <= 2 ? Integer(1) : b;
}

Integer path_count_bound(long C) {
  auto fib_sum = [](long from, long to) {
    Integer s = 0;
    for (long i = from; i <= to; ++i) s += fibonacci(i);
    return s;
  };
  return 4 + fib_sum(2, C - 3) + 2 * fib_sum(2, C + 1);
}

}  // namespace hsec
