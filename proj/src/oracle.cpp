#include "hsec/oracle.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <tuple>

#include "hsec/errors.hpp"

namespace hsec {

std::vector<PathCandidate> enumerate_side_paths(const SurfaceGeometry& g, const Rational& max_dx) {
  std::vector<PathCandidate> out;
  int m = g.m();
  PathCandidate cur;
  Rational oy;  // developed altitude of the current rectangle's base

  std::function<void()> visit = [&] {
    int r = cur.rects.back();
    cur.dy = oy + g.alt(r);
    out.push_back(cur);
    auto descend = [&](int next, Move mv, const Rational& lift) {
      if (cur.dx + g.width(next) > max_dx) return;
      cur.rects.push_back(next);
      cur.moves.push_back(mv);
      cur.dx += g.width(next);
      oy += lift;
      visit();
      oy -= lift;
      cur.dx -= g.width(next);
      cur.moves.pop_back();
      cur.rects.pop_back();
    };
    if (r < m) descend(r + 1, Move::Consecutive, Rational(0));
    int s = g.sigma(r);
    if (s < m) descend(s + 1, Move::Gluing, g.alt(r) - g.alt(s));
  };

  for (int k = 0; k < m; ++k) {
    if (g.width(k + 1) > max_dx) continue;
    cur = PathCandidate{};
    cur.start_vertex = k;
    cur.rects = {k + 1};
    cur.dx = g.width(k + 1);
    oy = -g.alt(k);
    visit();
  }
  return out;
}

namespace {

struct Interval {
  Rational lo = 0;
  bool lo_open = false;
  bool hi_inf = true;
  Rational hi = 0;
  bool hi_open = false;

  bool empty() const {
    if (hi_inf) return false;
    return lo > hi || (lo == hi && (lo_open || hi_open));
  }
  bool contains(const Rational& v) const {
    if (v < lo || (v == lo && lo_open)) return false;
    if (hi_inf) return true;
    return v < hi || (v == hi && !hi_open);
  }
  // Keep slopes below v (or at most v when closed).
  Interval below(const Rational& v, bool open) const {
    Interval r = *this;
    if (r.hi_inf || v < r.hi || (v == r.hi && open)) {
      r.hi_inf = false;
      r.hi = v;
      r.hi_open = open;
    }
    return r;
  }
  Interval above(const Rational& v, bool open) const {
    Interval r = *this;
    if (v > r.lo || (v == r.lo && open)) {
      r.lo = v;
      r.lo_open = open;
    }
    return r;
  }
};

struct Node {
  int start = 0;
  int rect = 0;
  Rational ox, oy;  // developed position of the rectangle's lower-left corner
  Interval slopes;
  std::vector<int> rects;
  std::vector<Move> moves;
  std::uint64_t seq = 0;
};

struct NodeAfter {
  bool operator()(const Node& x, const Node& y) const {
    int c = cmp(x.slopes.lo, y.slopes.lo);
    if (c != 0) return c > 0;
    if (x.slopes.lo_open != y.slopes.lo_open) return x.slopes.lo_open;
    return x.seq > y.seq;
  }
};

}  // namespace

std::vector<SaddleConnection> interval_search(const SurfaceGeometry& g, const SearchWindow& w) {
  if (!w.best_only && !w.max_slope) throw ContractViolation("interval search needs a slope bound");
  int m = g.m();
  std::uint64_t seq = 0;
  std::priority_queue<Node, std::vector<Node>, NodeAfter> heap;
  std::vector<Node> stack;
  auto push = [&](Node n) {
    n.seq = seq++;
    if (w.best_only)
      heap.push(std::move(n));
    else
      stack.push_back(std::move(n));
  };

  Interval window;
  window.lo = w.min_slope;
  window.lo_open = w.min_open;
  if (w.max_slope) window = window.below(*w.max_slope, false);

  for (int k = 0; k < m; ++k) {
    if (!(g.alt(k) < g.height(k + 1))) continue;
    Node n;
    n.start = k;
    n.rect = k + 1;
    n.ox = 0;
    n.oy = -g.alt(k);
    n.slopes = window;
    n.rects = {k + 1};
    if (!n.slopes.empty()) push(std::move(n));
  }

  std::vector<SaddleConnection> found;
  std::optional<Rational> best;

  while (!heap.empty() || !stack.empty()) {
    Node n;
    if (w.best_only) {
      n = heap.top();
      heap.pop();
      if (best && n.slopes.lo > *best) break;
      if (best) n.slopes = n.slopes.below(*best, false);
      if (n.slopes.empty()) continue;
    } else {
      n = std::move(stack.back());
      stack.pop_back();
    }
    int r = n.rect;
    Rational h = g.height(r);
    if (h == 0) continue;
    Rational X = n.ox + g.width(r);
    Rational top_y = n.oy + h;
    const Interval& S = n.slopes;

    if (X <= w.max_dx) {
      Rational c = (n.oy + g.alt(r)) / X;
      bool counts = !w.distinct_endpoints || (r != n.start && r != m);
      if (counts && S.contains(c)) {
        PathCandidate p;
        p.start_vertex = n.start;
        p.rects = n.rects;
        p.moves = n.moves;
        p.dx = X;
        p.dy = n.oy + g.alt(r);
        found.push_back(SaddleConnection::from_path(p));
        if (w.best_only && (!best || c < *best)) best = c;
      }
      auto child = [&](int next, Move mv, const Rational& oy, const Interval& s) {
        if (s.empty()) return;
        Node k;
        k.start = n.start;
        k.rect = next;
        k.ox = X;
        k.oy = oy;
        k.slopes = s;
        k.rects = n.rects;
        k.rects.push_back(next);
        k.moves = n.moves;
        k.moves.push_back(mv);
        push(std::move(k));
      };
      if (r < m) child(r + 1, Move::Consecutive, n.oy, S.below(c, true));
      int s = g.sigma(r);
      Rational corner = top_y / X;
      if (s < m && c < corner)
        child(s + 1, Move::Gluing, n.oy + g.alt(r) - g.alt(s), S.above(c, true).below(corner, true));
    }

    if (!w.allow_top) continue;
    // Rays reaching the top edge at x < max_dx; the corner belongs to the
    // top unless it is a cone point.
    Interval T = S.above(top_y / w.max_dx, true);
    bool corner_is_cone = h == g.alt(r);
    const Rational lo_b = g.Lp(r), hi_b = g.Lp(r) + g.width(r);
    for (int j = 1; j <= m; ++j) {
      Rational bl = g.L(j), bh = g.L(j) + g.width(j);
      // [bl, bh) intersected with (lo_b, hi_b]
      bool lo_open = !(bl > lo_b);
      Rational b1 = bl > lo_b ? bl : lo_b;
      bool hi_open = bh <= hi_b || corner_is_cone;
      Rational b2 = bh <= hi_b ? bh : hi_b;
      if (b1 > b2 || (b1 == b2 && (lo_open || hi_open))) continue;
      Rational x1 = n.ox + (b1 - lo_b), x2 = n.ox + (b2 - lo_b);
      if (x2 <= 0) continue;
      Interval piece;
      piece.lo = top_y / x2;
      piece.lo_open = hi_open;
      if (x1 > 0) {
        piece.hi_inf = false;
        piece.hi = top_y / x1;
        piece.hi_open = lo_open;
      }
      Interval s = T.above(piece.lo, piece.lo_open);
      if (!piece.hi_inf) s = s.below(piece.hi, piece.hi_open);
      if (s.empty()) continue;
      Node k;
      k.start = n.start;
      k.rect = j;
      k.ox = n.ox + (bl - lo_b);
      k.oy = top_y;
      k.slopes = s;
      k.rects = n.rects;
      k.rects.push_back(j);
      k.moves = n.moves;
      k.moves.push_back(Move::Top);
      push(std::move(k));
    }
  }

  if (w.best_only && best) {
    std::erase_if(found, [&](const SaddleConnection& c) { return c.slope != *best; });
  }
  std::sort(found.begin(), found.end(), connection_less);
  for (const auto& c : found) {
    TraceResult t = trace_ray(g, c.start, c.slope, c.dx, w.allow_top);
    if (t.outcome != TraceOutcome::ConePoint || t.path.rects != c.path.rects || t.path.moves != c.path.moves ||
        t.path.dx != c.dx)
      throw ContractViolation("interval search and tracer disagree on " + c.path.notation() + " from x" +
                              std::to_string(c.start));
  }
  return found;
}

SaddleConnection brute_force_min_slope(const ZipperedRectangles& z, const Rational& max_dx, bool allow_top_crossings) {
  SurfaceGeometry g = build_geometry(z);
  int m = g.m();
  std::optional<Rational> cap;
  // (R1) from x0 always reaches x1 inside R1, so a1/lambda1 bounds the
  // search whenever R1 fits.
  if (allow_top_crossings && z.a(1) > 0 && z.lam(1) <= max_dx) cap = z.a(1) / z.lam(1);
  if (!cap) {
    std::optional<SaddleConnection> best;
    for (const auto& p : enumerate_side_paths(g, max_dx)) {
      if (p.dy <= 0 || p.end_vertex() == p.start_vertex || p.end_vertex() == m) continue;
      if (best && p.dy / p.dx > best->slope) continue;
      TraceResult t = trace_ray(g, p.start_vertex, p.dy / p.dx, p.dx, false);
      if (t.outcome != TraceOutcome::ConePoint || t.path.rects != p.rects || t.path.moves != p.moves) continue;
      if (!best || path_less(p, best->path)) best = SaddleConnection::from_path(p);
    }
    if (!allow_top_crossings) {
      if (!best) throw NoConnectionInRange("no saddle connection with dx <= " + to_string(max_dx));
      return *best;
    }
    if (!best) throw NoConnectionInRange("no side-only saddle connection bounds the search");
    cap = best->slope;
  }
  SearchWindow w;
  w.max_dx = max_dx;
  w.min_slope = 0;
  w.min_open = true;
  w.max_slope = *cap;
  w.allow_top = true;
  w.best_only = true;
  w.distinct_endpoints = true;
  auto all = interval_search(g, w);
  if (all.empty()) throw ContractViolation("interval search lost the connection that bounds it");
  return all.front();
}

std::vector<SaddleConnection> enumerate_connections(const ZipperedRectangles& z, const Rational& max_dx,
                                                    const Rational& max_slope, const Rational& min_slope,
                                                    bool allow_top) {
  SurfaceGeometry g = build_geometry(z);
  SearchWindow w;
  w.max_dx = max_dx;
  w.min_slope = min_slope;
  w.max_slope = max_slope;
  w.allow_top = allow_top;
  auto all = interval_search(g, w);
  std::vector<SaddleConnection> out;
  std::set<std::tuple<int, int, Rational, Rational>> seen;
  for (auto& c : all)
    if (seen.insert({c.start, c.end, c.dx, c.dy}).second) out.push_back(std::move(c));
  return out;
}

}  // namespace hsec
