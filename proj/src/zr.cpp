#include "hsec/zr.hpp"

#include <algorithm>

#include "hsec/errors.hpp"

namespace hsec {

Rational ZipperedRectangles::total_width() const {
  Rational s = 0;
  for (const auto& l : lambda) s += l;
  return s;
}

Rational ZipperedRectangles::min_width() const { return *std::min_element(lambda.begin(), lambda.end()); }

std::string to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::Gluing: return "gluing";
    case ConstraintKind::NonNegative: return "nonnegative";
    case ConstraintKind::LastAltitude: return "last_altitude";
    case ConstraintKind::AfterLast: return "after_last";
    case ConstraintKind::Zipper: return "zipper";
    case ConstraintKind::WidthPositive: return "lambda_positive";
    case ConstraintKind::Area: return "area";
    case ConstraintKind::Shape: return "shape";
  }
  return "unknown";
}

std::string Violation::id() const {
  std::string s = to_string(kind);
  if (kind != ConstraintKind::Area && kind != ConstraintKind::Shape && kind != ConstraintKind::LastAltitude &&
      kind != ConstraintKind::AfterLast)
    s += "[" + std::to_string(index) + "]";
  return s;
}

namespace {

// Exact Gauss-Jordan on an augmented matrix; returns the unique solution or
// throws DegenerateConfiguration.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> rows, int unknowns) {
  int r = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < unknowns && r < static_cast<int>(rows.size()); ++c) {
    int p = r;
    while (p < static_cast<int>(rows.size()) && rows[p][c] == 0) ++p;
    if (p == static_cast<int>(rows.size())) continue;
    std::swap(rows[p], rows[r]);
    Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (int k = c; k <= unknowns; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r < unknowns) throw DegenerateConfiguration("height system is singular");
  for (std::size_t i = r; i < rows.size(); ++i)
    if (rows[i][unknowns] != 0) throw DegenerateConfiguration("height system is inconsistent");
  std::vector<Rational> x(unknowns);
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = rows[i][unknowns];
  return x;
}

}  // namespace

ZipperedRectangles solve_heights(const Permutation& pi, const std::vector<Rational>& free_altitudes,
                                 const std::vector<Rational>& lambda, const Rational& area) {
  int m = pi.size();
  if (static_cast<int>(lambda.size()) != m || static_cast<int>(free_altitudes.size()) != m - 2)
    throw DegenerateConfiguration("expected " + std::to_string(m) + " widths and " + std::to_string(m - 2) +
                                  " free altitudes");
  for (int i = 0; i < m; ++i)
    if (lambda[i] <= 0) throw DegenerateConfiguration("lambda_" + std::to_string(i + 1) + " must be positive");
  if (area <= 0) throw DegenerateConfiguration("area must be positive");

  GluingMap sigma = compute_sigma(pi);
  // Unknowns: a_1 (column 0), h_1..h_m (columns 1..m).
  int n = m + 1;
  std::vector<Rational> known_a(m + 1, 0);
  for (int i = 2; i < m; ++i) known_a[i] = free_altitudes[i - 2];

  auto add_a = [&](std::vector<Rational>& row, int i, const Rational& coef) {
    if (i == 1)
      row[0] += coef;
    else
      row[n] -= coef * known_a[i];
  };
  auto add_h = [&](std::vector<Rational>& row, int i, const Rational& coef) {
    if (i >= 1 && i <= m) row[i] += coef;
  };

  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i <= m; ++i) {
    std::vector<Rational> row(n + 1, 0);
    int s = sigma(i);
    add_h(row, i, 1);
    add_a(row, i, -1);
    add_h(row, s + 1, -1);
    add_a(row, s, 1);
    rows.push_back(std::move(row));
  }
  std::vector<Rational> area_row(n + 1, 0);
  for (int i = 1; i <= m; ++i) area_row[i] = lambda[i - 1];
  area_row[n] = area;
  rows.push_back(std::move(area_row));

  std::vector<Rational> x = solve_linear(std::move(rows), n);

  ZipperedRectangles z;
  z.pi = pi;
  z.lambda = lambda;
  z.alt = known_a;
  z.alt[1] = x[0];
  z.height.assign(x.begin() + 1, x.end());
  z.area = area;

  for (int i = 1; i < m; ++i)
    if (z.alt[i] < 0) throw OutsideCone("nonnegative[" + std::to_string(i) + "]: a_" + std::to_string(i) + " = " +
                                        to_string(z.alt[i]) + " is negative");
  for (int i = 1; i <= m; ++i)
    if (z.h(i) < 0) throw OutsideCone("nonnegative[" + std::to_string(i) + "]: h_" + std::to_string(i) + " = " +
                                      to_string(z.h(i)) + " is negative");
  return z;
}

std::vector<Violation> check_validity(const ZipperedRectangles& z) {
  std::vector<Violation> out;
  int m = z.m();
  if (static_cast<int>(z.lambda.size()) != m || static_cast<int>(z.alt.size()) != m + 1 ||
      static_cast<int>(z.height.size()) != m) {
    out.push_back({ConstraintKind::Shape, 0, "coordinate vectors have the wrong length"});
    return out;
  }
  if (z.alt[0] != 0) out.push_back({ConstraintKind::Shape, 0, "a_0 must be 0"});
  auto idx = [](const char* name, int i) { return std::string(name) + "_" + std::to_string(i); };

  for (int i = 1; i <= m; ++i)
    if (z.lam(i) <= 0) out.push_back({ConstraintKind::WidthPositive, i, idx("lambda", i) + " > 0"});

  GluingMap sigma = compute_sigma(z.pi);
  for (int i = 0; i <= m; ++i) {
    int s = sigma(i);
    if (z.h(i) - z.a(i) != z.h(s + 1) - z.a(s))
      out.push_back({ConstraintKind::Gluing, i,
                     idx("h", i) + " - " + idx("a", i) + " = " + idx("h", s + 1) + " - " + idx("a", s)});
  }
  for (int i = 1; i <= m; ++i)
    if (z.h(i) < 0) out.push_back({ConstraintKind::NonNegative, i, idx("h", i) + " >= 0"});
  for (int i = 1; i < m; ++i)
    if (z.a(i) < 0) out.push_back({ConstraintKind::NonNegative, i, idx("a", i) + " >= 0"});

  int last = z.pi.interval_at(m);
  if (!(z.h(m) >= z.a(m) && z.a(m) >= -z.h(last)))
    out.push_back({ConstraintKind::LastAltitude, m, idx("h", m) + " >= " + idx("a", m) + " >= -" + idx("h", last)});
  if (!(z.h(last + 1) >= z.a(last)))
    out.push_back({ConstraintKind::AfterLast, last, idx("h", last + 1) + " >= " + idx("a", last)});
  for (int i = 1; i < m; ++i) {
    if (i == last) continue;
    if (!(std::min(z.h(i), z.h(i + 1)) >= z.a(i)))
      out.push_back({ConstraintKind::Zipper, i,
                     "min(" + idx("h", i) + ", " + idx("h", i + 1) + ") >= " + idx("a", i)});
  }
  if (area_of(z) != z.area) out.push_back({ConstraintKind::Area, 0, "sum lambda_i h_i = area"});
  return out;
}

Rational area_of(const ZipperedRectangles& z) {
  Rational s = 0;
  for (int i = 1; i <= z.m(); ++i) s += z.lam(i) * z.h(i);
  return s;
}

ZipperedRectangles scaled(const ZipperedRectangles& z, const Rational& t) {
  ZipperedRectangles r = z;
  for (auto& v : r.lambda) v *= t;
  for (auto& v : r.alt) v *= t;
  for (auto& v : r.height) v *= t;
  r.area = z.area * t * t;
  return r;
}

}  // namespace hsec
