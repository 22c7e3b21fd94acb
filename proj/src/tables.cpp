#include "hsec/tables.hpp"

#include <algorithm>
#include <map>

#include "hsec/errors.hpp"

namespace hsec {

Coords Coords::of(const ZipperedRectangles& z) {
  Coords c;
  for (int i = 0; i <= 3; ++i) c.a[i] = z.a(i);
  c.l[0] = 0;
  for (int i = 1; i <= 4; ++i) c.l[i] = z.lam(i);
  return c;
}

std::vector<int> SlopeTableEntry::rects(long k) const {
  std::vector<int> r = prefix;
  for (long i = 0; i < k; ++i) r.insert(r.end(), block.begin(), block.end());
  return r;
}

PathCandidate SlopeTableEntry::instantiate(const ZipperedRectangles& z, long k) const {
  GluingMap sigma = compute_sigma(z.pi);
  PathCandidate p;
  p.rects = rects(k);
  p.start_vertex = p.rects.front() - 1;
  p.dx = 0;
  p.dy = 0;
  for (std::size_t i = 0; i < p.rects.size(); ++i) {
    int r = p.rects[i];
    p.dx += z.lam(r);
    p.dy += z.a(r) - z.a(r - 1);
    if (i == 0) continue;
    int prev = p.rects[i - 1];
    bool consecutive = prev < z.m() && r == prev + 1;
    bool gluing = sigma(prev) < z.m() && r == sigma(prev) + 1;
    if (!consecutive && !gluing)
      throw ContractViolation(pattern + ": R" + std::to_string(prev) + " does not lead to R" + std::to_string(r));
    p.moves.push_back(consecutive ? Move::Consecutive : Move::Gluing);
  }
  return p;
}

bool SlopeTableEntry::applies(const ZipperedRectangles& z, long k, const Rational& max_dx) const {
  Coords c = Coords::of(z);
  PathCandidate p = instantiate(z, k);
  if (p.dx > max_dx) return false;
  if (slope(c, k) <= 0) return false;
  for (const auto& cond : conditions)
    if (!cond.holds(c, k)) return false;
  return true;
}

namespace {

using C = const Coords&;
using Fn = std::function<Rational(C, long)>;
using Cond = SlopeTableEntry::Condition;

Rational K(long k) { return Rational(k); }

SlopeTableEntry row(const char* pi, std::string pattern, std::vector<int> prefix, std::vector<int> block, Fn slope,
                    std::vector<Cond> conds = {}) {
  SlopeTableEntry e;
  e.pi = Permutation::parse(pi);
  e.pattern = std::move(pattern);
  e.prefix = std::move(prefix);
  e.block = std::move(block);
  e.k_min = e.block.empty() ? 0 : 1;
  e.slope = std::move(slope);
  e.conditions = std::move(conds);
  return e;
}

// Width of the k-th instance, used by the "fits in the unit" conditions.
Cond fits(std::string text, Fn width) {
  return {std::move(text), [width](C c, long k) { return width(c, k) <= 1; }};
}

std::map<std::string, std::vector<SlopeTableEntry>> build_tables() {
  std::map<std::string, std::vector<SlopeTableEntry>> t;

  // Shared rows.
  auto r1 = [](const char* pi) { return row(pi, "(R1)", {1}, {}, [](C c, long) -> Rational { return c.a[1] / c.l[1]; }); };
  auto r123 = [](const char* pi) {
    return row(pi, "(R1, R2, R3)", {1, 2, 3}, {}, [](C c, long) -> Rational { return c.a[3] / (c.l[1] + c.l[2] + c.l[3]); },
               {{"a1 > l1 a2 / (l1 + l2)", [](C c, long) { return c.a[1] > c.l[1] * c.a[2] / (c.l[1] + c.l[2]); }},
                {"a2 > (l1 + l2) a3 / (l1 + l2 + l3)",
                 [](C c, long) { return c.a[2] > (c.l[1] + c.l[2]) * c.a[3] / (c.l[1] + c.l[2] + c.l[3]); }}});
  };
  auto r12_cond = [](const char* pi) {
    return row(pi, "(R1, R2)", {1, 2}, {}, [](C c, long) -> Rational { return c.a[2] / (c.l[1] + c.l[2]); },
               {{"a1 > l1 a2 / (l1 + l2)", [](C c, long) { return c.a[1] > c.l[1] * c.a[2] / (c.l[1] + c.l[2]); }}});
  };
  auto r12_free = [](const char* pi) {
    return row(pi, "(R1, R2)", {1, 2}, {}, [](C c, long) -> Rational { return c.a[2] / (c.l[1] + c.l[2]); });
  };
  auto r2 = [](const char* pi, bool conditional) {
    std::vector<Cond> cs;
    if (conditional) cs.push_back({"a2 > a1", [](C c, long) { return c.a[2] > c.a[1]; }});
    return row(pi, "(R2)", {2}, {}, [](C c, long) -> Rational { return (c.a[2] - c.a[1]) / c.l[2]; }, cs);
  };
  auto r3 = [](const char* pi, bool conditional) {
    std::vector<Cond> cs;
    if (conditional) cs.push_back({"a3 > a2", [](C c, long) { return c.a[3] > c.a[2]; }});
    return row(pi, "(R3)", {3}, {}, [](C c, long) -> Rational { return (c.a[3] - c.a[2]) / c.l[3]; }, cs);
  };

  {
    auto& v = t["3142"];
    v.push_back(r1("3142"));
    v.push_back(r123("3142"));
    v.push_back(row("3142", "(R2, R3)", {2, 3}, {}, [](C c, long) -> Rational { return (c.a[3] - c.a[1]) / (c.l[2] + c.l[3]); },
                    {{"a3 > a1", [](C c, long) { return c.a[3] > c.a[1]; }}}));
    Fn w = [](C c, long k) -> Rational { return K(k + 1) * (c.l[2] + c.l[3]) + K(k) * c.l[4]; };
    Fn s = [w](C c, long k) -> Rational { return (c.a[3] - K(k + 1) * c.a[1]) / w(c, k); };
    v.push_back(row("3142", "(R2, R3, k x (R4, R2, R3))", {2, 3}, {4, 2, 3}, s,
                    {{"a3 > (k+1) a1", [](C c, long k) { return c.a[3] > K(k + 1) * c.a[1]; }},
                     {"a1 + (l2 + l3) s < a3", [s](C c, long k) { return c.a[1] + (c.l[2] + c.l[3]) * s(c, k) < c.a[3]; }},
                     fits("(k+1)(l2 + l3) + k l4 <= 1", w)}));
    v.push_back(row("3142", "(R4, R2)", {4, 2}, {},
                    [](C c, long) -> Rational { return (c.a[2] - (c.a[1] + c.a[3])) / (c.l[2] + c.l[4]); }));
  }
  {
    auto& v = t["3241"];
    v.push_back(row("3241", "(R1, R2, R3)", {1, 2, 3}, {},
                    [](C c, long) -> Rational { return c.a[3] / (c.l[1] + c.l[2] + c.l[3]); }));
    Fn w = [](C c, long k) -> Rational { return K(k) * c.l[1] + K(k + 1) * c.l[2] + K(k) * c.l[4]; };
    v.push_back(row("3241", "(R2, k x (R4, R1, R2))", {2}, {4, 1, 2},
                    [w](C c, long k) -> Rational { return (K(k + 1) * c.a[2] - K(k) * c.a[3] - c.a[1]) / w(c, k); },
                    {{"(k+1) a2 > a1 + k a3", [](C c, long k) { return K(k + 1) * c.a[2] > c.a[1] + K(k) * c.a[3]; }},
                     fits("k l1 + (k+1) l2 + k l4 <= 1", w)}));
    v.push_back(row("3241", "(R4, R1, R2)", {4, 1, 2}, {},
                    [](C c, long) -> Rational { return (c.a[2] - c.a[3]) / (c.l[1] + c.l[2] + c.l[4]); }));
  }
  {
    auto& v = t["4132"];
    v.push_back(r1("4132"));
    v.push_back(r123("4132"));
    v.push_back(r2("4132", false));
    v.push_back(row("4132", "(R2, R3)", {2, 3}, {}, [](C c, long) -> Rational { return (c.a[3] - c.a[1]) / (c.l[2] + c.l[3]); },
                    {{"a2 > l2 (a3 - a1) / (l2 + l3) + a1",
                      [](C c, long) { return c.a[2] > c.l[2] * (c.a[3] - c.a[1]) / (c.l[2] + c.l[3]) + c.a[1]; }}}));
    v.push_back(r3("4132", true));
    Fn w1 = [](C c, long k) -> Rational { return K(k) * c.l[1] + K(k + 1) * c.l[3] + K(k) * c.l[4]; };
    v.push_back(row("4132", "(R3, k x (R4, R1, R3))", {3}, {4, 1, 3},
                    [w1](C c, long k) -> Rational { return (K(k) * c.a[1] + c.a[3] - K(k + 1) * c.a[2]) / w1(c, k); },
                    {{"a3 > a2 + k (a2 - a1)", [](C c, long k) { return c.a[3] > c.a[2] + K(k) * (c.a[2] - c.a[1]); }},
                     fits("k l1 + (k+1) l3 + k l4 <= 1", w1)}));
    Fn w2 = [](C c, long k) -> Rational { return K(k) * c.l[2] + K(k + 1) * c.l[3]; };
    v.push_back(row("4132", "(R3, k x (R2, R3))", {3}, {2, 3},
                    [w2](C c, long k) -> Rational { return (K(k + 1) * c.a[3] - c.a[2] - K(k) * c.a[1]) / w2(c, k); },
                    {{"(k+1) a3 - a2 - k a1 > 0",
                      [](C c, long k) { return K(k + 1) * c.a[3] - c.a[2] - K(k) * c.a[1] > 0; }},
                     fits("k l2 + (k+1) l3 <= 1", w2)}));
  }
  {
    auto& v = t["2413"];
    v.push_back(r12_free("2413"));
    v.push_back(r3("2413", false));
    Fn s = [](C c, long) -> Rational { return (c.a[1] - c.a[2]) / (c.l[3] + c.l[4] + c.l[1]); };
    v.push_back(row("2413", "(R3, R4, R1)", {3, 4, 1}, {}, s,
                    {{"a3 > l3 (a1 - a2) / (l3 + l4 + l1) + a1",
                      [](C c, long) { return c.a[3] > c.l[3] * (c.a[1] - c.a[2]) / (c.l[3] + c.l[4] + c.l[1]) + c.a[1]; }}}));
    Fn w1 = [](C c, long k) -> Rational { return K(k + 1) * c.l[3] + K(k) * (c.l[1] + c.l[4]); };
    v.push_back(row("2413", "(R3, k x (R4, R1, R3))", {3}, {4, 1, 3},
                    [w1](C c, long k) -> Rational { return (c.a[3] + K(k) * c.a[1] - K(k + 1) * c.a[2]) / w1(c, k); },
                    {{"a3 > a2 + k (a2 - a1)", [](C c, long k) { return c.a[3] > c.a[2] + K(k) * (c.a[2] - c.a[1]); }},
                     fits("(k+1) l3 + k (l1 + l4) <= 1", w1)}));
    v.push_back(row("2413", "(R4, R1)", {4, 1}, {}, [](C c, long) -> Rational { return (c.a[1] - c.a[3]) / (c.l[1] + c.l[4]); },
                    {{"a1 > a3", [](C c, long) { return c.a[1] > c.a[3]; }}}));
    Fn w2 = [](C c, long k) -> Rational { return K(k + 1) * (c.l[4] + c.l[1]) + K(k) * c.l[2]; };
    Fn s2 = [w2](C c, long k) -> Rational { return (c.a[1] + K(k) * c.a[2] - K(k + 1) * c.a[3]) / w2(c, k); };
    v.push_back(row("2413", "(R4, R1, k x (R2, R4, R1))", {4, 1}, {2, 4, 1}, s2,
                    {{"a1 > a3 + k (a3 - a2)", [](C c, long k) { return c.a[1] > c.a[3] + K(k) * (c.a[3] - c.a[2]); }},
                     {"a3 + (l4 + l1) s < a1", [s2](C c, long k) { return c.a[3] + (c.l[4] + c.l[1]) * s2(c, k) < c.a[1]; }},
                     fits("(k+1)(l4 + l1) + k l2 <= 1", w2)}));
    Fn w3 = [](C c, long k) -> Rational { return K(k + 1) * (c.l[4] + c.l[1]) + K(k) * c.l[3]; };
    Fn s3 = [w3](C c, long k) -> Rational { return (K(k + 1) * c.a[1] - K(k) * c.a[2] - c.a[3]) / w3(c, k); };
    v.push_back(row("2413", "(R4, R1, k x (R3, R4, R1))", {4, 1}, {3, 4, 1}, s3,
                    {{"a3 < a1 + k (a1 - a2)", [](C c, long k) { return c.a[3] < c.a[1] + K(k) * (c.a[1] - c.a[2]); }},
                     {"a3 + (l4 + l1) s < a1", [s3](C c, long k) { return c.a[3] + (c.l[4] + c.l[1]) * s3(c, k) < c.a[1]; }},
                     fits("(k+1)(l4 + l1) + k l3 <= 1", w3)}));
  }
  {
    auto& v = t["2431"];
    v.push_back(r12_free("2431"));
    v.push_back(row("2431", "(R1, R2, R3)", {1, 2, 3}, {},
                    [](C c, long) -> Rational { return c.a[3] / (c.l[1] + c.l[2] + c.l[3]); },
                    {{"a2 > (l1 + l2) a3 / (l1 + l2 + l3)",
                      [](C c, long) { return c.a[2] > (c.l[1] + c.l[2]) * c.a[3] / (c.l[1] + c.l[2] + c.l[3]); }}}));
    v.push_back(r3("2431", true));
    Fn w1 = [](C c, long k) -> Rational { return K(k + 1) * c.l[3] + K(k) * c.l[4]; };
    v.push_back(row("2431", "(R3, k x (R4, R3))", {3}, {4, 3},
                    [w1](C c, long k) -> Rational { return (c.a[3] - K(k + 1) * c.a[2]) / w1(c, k); },
                    {{"a3 - (k+1) a2 > 0", [](C c, long k) { return c.a[3] - K(k + 1) * c.a[2] > 0; }},
                     fits("(k+1) l3 + k l4 <= 1", w1)}));
    Fn w2 = [](C c, long k) -> Rational { return K(k) * (c.l[1] + c.l[2]) + K(k + 1) * c.l[3]; };
    Fn s2 = [w2](C c, long k) -> Rational { return (K(k + 1) * c.a[3] - c.a[2]) / w2(c, k); };
    v.push_back(row("2431", "(R3, k x (R1, R2, R3))", {3}, {1, 2, 3}, s2,
                    {{"(l1 + l2 + l3) s < a2 < 2 a3",
                      [s2](C c, long k) {
                        return (c.l[1] + c.l[2] + c.l[3]) * s2(c, k) < c.a[2] && c.a[2] < 2 * c.a[3];
                      }},
                     {"a3 < a2 + l3 s", [s2](C c, long k) { return c.a[3] < c.a[2] + c.l[3] * s2(c, k); }},
                     fits("k (l1 + l2) + (k+1) l3 <= 1", w2)}));
    v.push_back(row("2431", "(R4, R3, R1)", {4, 3, 1}, {},
                    [](C c, long) -> Rational { return (c.a[1] - c.a[2]) / (c.l[1] + c.l[3] + c.l[4]); }));
  }
  {
    auto& v = t["4321"];
    v.push_back(r1("4321"));
    v.push_back(r12_cond("4321"));
    v.push_back(r123("4321"));
    v.push_back(r2("4321", true));
    v.push_back(row("4321", "(R2, R3)", {2, 3}, {}, [](C c, long) -> Rational { return (c.a[3] - c.a[1]) / (c.l[2] + c.l[3]); },
                    {{"a3 > a1", [](C c, long) { return c.a[3] > c.a[1]; }},
                     {"a2 > l2 (a3 - a1) / (l2 + l3) + a1",
                      [](C c, long) { return c.a[2] > c.l[2] * (c.a[3] - c.a[1]) / (c.l[2] + c.l[3]) + c.a[1]; }}}));
    Fn w1 = [](C c, long k) -> Rational { return c.l[2] + K(k + 1) * c.l[3] + K(k) * c.l[4]; };
    Fn s1 = [w1](C c, long k) -> Rational { return (c.a[3] - K(k) * c.a[2] - c.a[1]) / w1(c, k); };
    v.push_back(row("4321", "(R2, R3, k x (R4, R3))", {2, 3}, {4, 3}, s1,
                    {{"a3 > k a2 + a1", [](C c, long k) { return c.a[3] > K(k) * c.a[2] + c.a[1]; }},
                     {"a2 > a1 + l2 s", [s1](C c, long k) { return c.a[2] > c.a[1] + c.l[2] * s1(c, k); }},
                     fits("l2 + (k+1) l3 + k l4 <= 1", w1)}));
    Fn w2 = [](C c, long k) -> Rational { return K(k + 1) * c.l[2] + K(k) * c.l[3]; };
    Fn s2 = [w2](C c, long k) -> Rational { return (c.a[2] + K(k) * c.a[3] - K(k + 1) * c.a[1]) / w2(c, k); };
    v.push_back(row("4321", "(R2, k x (R3, R2))", {2}, {3, 2}, s2,
                    {{"(k+1) a1 < a2 + k a3", [](C c, long k) { return K(k + 1) * c.a[1] < c.a[2] + K(k) * c.a[3]; }},
                     {"a2 > l2 s + a1", [s2](C c, long k) { return c.a[2] > c.l[2] * s2(c, k) + c.a[1]; }},
                     fits("(k+1) l2 + k l3 <= 1", w2)}));
    Fn w3 = [](C c, long k) -> Rational { return c.l[1] + K(k + 1) * c.l[2] + K(k) * c.l[3]; };
    Fn s3 = [w3](C c, long k) -> Rational { return (c.a[2] + K(k) * c.a[3] - K(k) * c.a[1]) / w3(c, k); };
    v.push_back(row("4321", "(R2, R1, k x (R2, R3))", {2, 1}, {2, 3}, s3,
                    {{"k a1 < a2 + k a3", [](C c, long k) { return K(k) * c.a[1] < c.a[2] + K(k) * c.a[3]; }},
                     {"a2 > (a1 - a2) + (l1 + 2 l2) s",
                      [s3](C c, long k) { return c.a[2] > (c.a[1] - c.a[2]) + (c.l[1] + 2 * c.l[2]) * s3(c, k); }},
                     fits("l1 + (k+1) l2 + k l3 <= 1", w3)}));
    Fn w4 = [](C c, long k) -> Rational { return K(k) * c.l[1] + K(k + 1) * c.l[2]; };
    v.push_back(row("4321", "(R2, k x (R1, R2))", {2}, {1, 2},
                    [w4](C c, long k) -> Rational { return (K(k + 1) * c.a[2] - c.a[1]) / w4(c, k); },
                    {{"(k+1) a2 > a1", [](C c, long k) { return K(k + 1) * c.a[2] > c.a[1]; }},
                     fits("k l1 + (k+1) l2 <= 1", w4)}));
    v.push_back(r3("4321", true));
    Fn w5 = [](C c, long k) -> Rational { return K(k + 1) * c.l[3] + K(k) * c.l[4]; };
    v.push_back(row("4321", "(R3, k x (R4, R3))", {3}, {4, 3},
                    [w5](C c, long k) -> Rational { return (c.a[3] - K(k + 1) * c.a[2]) / w5(c, k); },
                    {{"a3 > (k+1) a2", [](C c, long k) { return c.a[3] > K(k + 1) * c.a[2]; }},
                     fits("(k+1) l3 + k l4 <= 1", w5)}));
  }
  {
    auto& v = t["4213"];
    v.push_back(r1("4213"));
    v.push_back(r12_cond("4213"));
    v.push_back(r2("4213", true));
    Fn w1 = [](C c, long k) -> Rational { return K(k + 1) * c.l[2] + K(k) * c.l[3] + K(k) * c.l[4]; };
    Fn s1 = [w1](C c, long k) -> Rational { return (c.a[2] - K(k + 1) * c.a[1]) / w1(c, k); };
    v.push_back(row("4213", "(R2, k x (R3, R4, R2))", {2}, {3, 4, 2}, s1,
                    {{"a2 > (k+1) a1", [](C c, long k) { return c.a[2] > K(k + 1) * c.a[1]; }},
                     {"a2 > a1 + l2 s", [s1](C c, long k) { return c.a[2] > c.a[1] + c.l[2] * s1(c, k); }},
                     {"a3 > a1 + (l2 + l3) s", [s1](C c, long k) { return c.a[3] > c.a[1] + (c.l[2] + c.l[3]) * s1(c, k); }},
                     fits("(k+1) l2 + k l3 + k l4 <= 1", w1)}));
    Fn w2 = [](C c, long k) -> Rational { return K(k + 1) * (c.l[2] + c.l[3]) + K(k) * c.l[4]; };
    Fn s2 = [w2](C c, long k) -> Rational { return (c.a[3] - K(k + 1) * c.a[1]) / w2(c, k); };
    v.push_back(row("4213", "(R2, R3, k x (R4, R2, R3))", {2, 3}, {4, 2, 3}, s2,
                    {{"a3 > (k+1) a1", [](C c, long k) { return c.a[3] > K(k + 1) * c.a[1]; }},
                     {"a2 > a1 + l2 s", [s2](C c, long k) { return c.a[2] > c.a[1] + c.l[2] * s2(c, k); }},
                     {"a3 > a1 + (l2 + l3) s", [s2](C c, long k) { return c.a[3] > c.a[1] + (c.l[2] + c.l[3]) * s2(c, k); }},
                     fits("(k+1)(l2 + l3) + k l4 <= 1", w2)}));
    Fn w3 = [](C c, long k) -> Rational { return K(k) * c.l[1] + K(k + 1) * c.l[2]; };
    v.push_back(row("4213", "(R2, k x (R1, R2))", {2}, {1, 2},
                    [w3](C c, long k) -> Rational { return (K(k + 1) * c.a[2] - c.a[1]) / w3(c, k); },
                    {{"(k+1) a2 > a1", [](C c, long k) { return K(k + 1) * c.a[2] > c.a[1]; }},
                     fits("k l1 + (k+1) l2 <= 1", w3)}));
    v.push_back(r3("4213", false));
  }
  return t;
}

}  // namespace

const std::vector<SlopeTableEntry>& slope_table(const Permutation& pi) {
  static const auto tables = build_tables();
  std::string key;
  for (int v : pi.bottom_row()) key += std::to_string(v);
  auto it = tables.find(key);
  if (it == tables.end()) throw UnsupportedPermutation(pi.to_string() + " has no slope table");
  return it->second;
}

std::vector<TableCandidate> table_candidates(const ZipperedRectangles& z, const Rational& max_dx) {
  std::vector<TableCandidate> out;
  Coords c = Coords::of(z);
  for (const auto& e : slope_table(z.pi)) {
    long k = e.k_min;
    do {
      PathCandidate p = e.instantiate(z, k);
      if (p.dx > max_dx) break;
      if (e.applies(z, k, max_dx)) out.push_back({&e, k, e.slope(c, k), p});
      ++k;
    } while (e.repeated());
  }
  return out;
}

SaddleConnection closed_form_smallest_slope(const SectionPoint& point) {
  ZipperedRectangles z = point.to_surface();
  auto cands = table_candidates(z, Rational(1));
  if (cands.empty()) throw ContractViolation("no table row applies at this point");
  auto best = std::min_element(cands.begin(), cands.end(), [](const TableCandidate& x, const TableCandidate& y) {
    if (x.slope != y.slope) return x.slope < y.slope;
    return path_less(x.path, y.path);
  });
  SaddleConnection s = SaddleConnection::from_path(best->path);
  s.slope = best->slope;
  return s;
}

}  // namespace hsec
