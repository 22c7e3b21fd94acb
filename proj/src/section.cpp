#include "hsec/section.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hsec/errors.hpp"

namespace hsec {

Rational SectionPoint::total_width() const {
  Rational s = 0;
  for (const auto& l : lambda) s += l;
  return s;
}

Rational SectionPoint::min_width() const { return *std::min_element(lambda.begin(), lambda.end()); }

ZipperedRectangles SectionPoint::to_surface() const {
  return solve_heights(pi, {a2, a3}, std::vector<Rational>(lambda.begin(), lambda.end()), Rational(1));
}

std::string to_string(Symbol s) {
  static const char* names[] = {"a_1", "a_2", "a_3", "h_1", "h_2", "h_3", "h_4",
                                "lambda_1", "lambda_2", "lambda_3", "lambda_4"};
  return names[static_cast<int>(s)];
}

namespace {

Rational value(Symbol s, const ZipperedRectangles& z) {
  int k = static_cast<int>(s);
  if (k <= static_cast<int>(Symbol::A3)) return z.a(k + 1);
  if (k <= static_cast<int>(Symbol::H4)) return z.h(k - static_cast<int>(Symbol::H1) + 1);
  return z.lam(k - static_cast<int>(Symbol::L1) + 1);
}

bool is_width(Symbol s) { return static_cast<int>(s) >= static_cast<int>(Symbol::L1); }

}  // namespace

Rational Expr::eval(const ZipperedRectangles& z) const {
  Rational v = constant;
  for (const auto& t : terms) {
    Rational p = t.coeff;
    for (Symbol s : t.factors) p *= value(s, z);
    v += p;
  }
  return v;
}

std::string Expr::to_string() const {
  std::string out;
  for (const auto& t : terms) {
    if (t.coeff == 0) continue;
    Rational c = t.coeff;
    if (!out.empty()) {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    } else if (c < 0) {
      out += "-";
      c = -c;
    }
    if (c != 1) out += hsec::to_string(c) + " ";
    for (std::size_t i = 0; i < t.factors.size(); ++i) {
      if (i) out += " ";
      out += hsec::to_string(t.factors[i]);
    }
  }
  if (constant != 0 || out.empty()) {
    if (out.empty())
      out = hsec::to_string(constant);
    else
      out += (constant < 0 ? " - " : " + ") + hsec::to_string(constant < 0 ? Rational(-constant) : constant);
  }
  return out;
}

Expr operator+(Expr x, const Expr& y) {
  x.terms.insert(x.terms.end(), y.terms.begin(), y.terms.end());
  x.constant += y.constant;
  return x;
}

Expr operator-(Expr x, const Expr& y) { return x + (Rational(-1) * y); }

Expr operator*(const Rational& c, Expr x) {
  for (auto& t : x.terms) t.coeff *= c;
  x.constant *= c;
  return x;
}

Expr product(Symbol s, Symbol t) {
  Expr e;
  e.terms.push_back({Rational(1), {s, t}});
  return e;
}

bool Constraint::holds(const ZipperedRectangles& z) const {
  Rational l = lhs.eval(z), r = rhs.eval(z);
  switch (rel) {
    case Relation::Lt: return l < r;
    case Relation::Le: return l <= r;
    case Relation::Eq: return l == r;
    case Relation::Ne: return l != r;
  }
  return false;
}

bool Constraint::widths_only() const {
  for (const Expr* e : {&lhs, &rhs})
    for (const auto& t : e->terms)
      for (Symbol s : t.factors)
        if (!is_width(s)) return false;
  return true;
}

std::string Constraint::to_string() const {
  static const char* ops[] = {" < ", " <= ", " = ", " != "};
  return lhs.to_string() + ops[static_cast<int>(rel)] + rhs.to_string();
}

Constraint lt(Expr x, Expr y) { return {std::move(x), Relation::Lt, std::move(y)}; }
Constraint le(Expr x, Expr y) { return {std::move(x), Relation::Le, std::move(y)}; }
Constraint eq(Expr x, Expr y) { return {std::move(x), Relation::Eq, std::move(y)}; }
Constraint ne(Expr x, Expr y) { return {std::move(x), Relation::Ne, std::move(y)}; }

std::string PolytopeDescription::to_text() const {
  std::ostringstream os;
  os << "pi = " << pi.to_string() << "\n";
  os << "equalities:\n";
  for (const auto& c : equalities) os << "  " << c.to_string() << "\n";
  os << "inequalities:\n";
  for (const auto& c : inequalities) os << "  " << c.to_string() << "\n";
  return os.str();
}

namespace {

using S = Symbol;

Expr width_sum() { return Expr(S::L1) + S::L2 + S::L3 + S::L4; }

Expr area_expr() {
  return product(S::L1, S::H1) + product(S::L2, S::H2) + product(S::L3, S::H3) + product(S::L4, S::H4);
}

std::vector<Constraint> common_inequalities() {
  return {le(width_sum(), 1), lt(0, S::L1), lt(0, S::L2), lt(0, S::L3), lt(0, S::L4)};
}

PolytopeDescription make(const Permutation& pi, std::vector<Constraint> eqs, std::vector<Constraint> ineqs) {
  PolytopeDescription d;
  d.pi = pi;
  d.equalities.push_back(eq(area_expr(), 1));
  for (auto& c : eqs) d.equalities.push_back(std::move(c));
  d.inequalities = common_inequalities();
  for (auto& c : ineqs) d.inequalities.push_back(std::move(c));
  return d;
}

}  // namespace

PolytopeDescription polytope_description(const Permutation& pi) {
  std::string t;
  for (int v : pi.bottom_row()) t += std::to_string(v);
  if (t == "3142")
    return make(pi, {eq(S::H2, S::A2), eq(S::H3, S::A2), eq(S::H1, Expr(S::H3) - S::A3), eq(S::H4, Expr(S::H2) - S::A1)},
                {lt(0, S::A1), lt(S::A1, S::H1), lt(Expr(S::A1) + S::A3, S::A2), lt(0, S::A3), lt(S::A3, S::H4)});
  if (t == "3241")
    return make(pi, {eq(S::H1, S::A1), eq(S::H3, S::A2), eq(S::H4, S::H1), eq(Expr(S::H3) - S::A3, Expr(S::H2) - S::A1)},
                {lt(0, S::A3), lt(S::A3, S::A2), lt(S::A2, S::A1), le(S::A1, S::H2)});
  if (t == "4132")
    return make(pi, {eq(S::H4, S::A3), eq(S::H2, S::A2), eq(S::H4, S::H1), eq(Expr(S::H1) - S::A1, Expr(S::H3) - S::A2)},
                {lt(0, S::A1), lt(S::A1, S::A2), lt(S::A1, S::A3), le(S::A2, S::H3), le(S::A3, S::H3),
                 ne(S::A2, S::A3)});
  if (t == "2413")
    return make(pi, {eq(S::H2, S::A1), eq(S::H3, S::A3), eq(S::H4, S::H1), eq(Expr(S::H1) - S::A1, Expr(S::H3) - S::A2)},
                {le(S::A1, S::H1), lt(0, S::A2), lt(S::A2, S::A1), le(S::A2, S::A3), le(S::A3, S::H1)});
  if (t == "2431")
    return make(pi, {eq(S::H2, S::A1), eq(S::H1, S::A1), eq(S::H1, Expr(S::H3) - S::A3), eq(S::H4, Expr(S::H3) - S::A2)},
                {lt(0, S::A2), lt(S::A2, S::A1), lt(0, S::A3), le(S::A3, S::H4)});
  if (t == "4321")
    return make(pi, {eq(S::H1, S::A1), eq(S::H4, S::A3), eq(S::H1, Expr(S::H2) - S::A2), eq(S::H4, Expr(S::H3) - S::A2)},
                {lt(0, S::A1), le(S::A1, S::H2), lt(0, S::A2), le(S::A2, S::H2), le(S::A2, S::H3), lt(0, S::A3),
                 le(S::A3, S::H3)});
  if (t == "4213")
    return make(pi, {eq(S::H3, S::A3), eq(S::H4, S::A3), eq(S::H1, Expr(S::H2) - S::A2), eq(S::H4, Expr(S::H2) - S::A1)},
                {lt(0, S::A1), lt(S::A1, S::H1), lt(0, S::A2), lt(S::A2, S::A3)});
  throw UnsupportedPermutation(pi.to_string() + " is not in the Rauzy class of (4321)");
}

std::vector<Constraint> bounded_regime_constraints() {
  return {lt(1, width_sum() + S::L1), lt(1, width_sum() + S::L2), lt(1, width_sum() + S::L3),
          lt(1, width_sum() + S::L4)};
}

Membership membership(const SectionPoint& point) {
  Membership res;
  PolytopeDescription d;
  try {
    d = polytope_description(point.pi);
  } catch (const UnsupportedPermutation& e) {
    res.violated = e.what();
    return res;
  }
  // Width-only constraints are decided first; they do not need heights.
  ZipperedRectangles probe;
  probe.pi = point.pi;
  probe.lambda.assign(point.lambda.begin(), point.lambda.end());
  probe.alt.assign(5, 0);
  probe.height.assign(4, 0);
  for (const auto& c : d.inequalities)
    if (c.widths_only() && !c.holds(probe)) {
      res.violated = c.to_string();
      return res;
    }

  ZipperedRectangles z;
  try {
    z = point.to_surface();
  } catch (const Error& e) {
    res.violated = e.what();
    return res;
  }
  for (const auto& v : check_validity(z)) {
    res.violated = v.id() + ": " + v.description;
    return res;
  }
  for (const auto* list : {&d.equalities, &d.inequalities})
    for (const auto& c : *list)
      if (!c.holds(z)) {
        res.violated = c.to_string();
        return res;
      }
  res.member = true;
  res.on_width_boundary = point.total_width() == 1;
  return res;
}

SampleOptions SampleOptions::bounded() {
  SampleOptions o;
  o.constraints = bounded_regime_constraints();
  return o;
}

long Sampler::uniform(long lo, long hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do v = rng_();
  while (v >= limit);
  return lo + static_cast<long>(v % span);
}

SectionPoint sample_point(const Permutation& pi, Sampler& sampler, const SampleOptions& options) {
  polytope_description(pi);  // rejects permutations outside the class
  const long D = options.denominator;
  Rational abound = options.altitude_bound * D;
  long amax = static_cast<long>(floor_div(abound, Rational(1)).get_num().get_si());
  if (D < 4 || amax < 1) throw SamplingExhausted("sampling box is empty");

  ZipperedRectangles probe;
  probe.pi = pi;
  probe.alt.assign(5, 0);
  probe.height.assign(4, 0);
  std::vector<Constraint> width_extra, other_extra;
  for (const auto& c : options.constraints) (c.widths_only() ? width_extra : other_extra).push_back(c);

  for (long attempt = 0; attempt < options.max_attempts; ++attempt) {
    SectionPoint p;
    p.pi = pi;
    long n[4];
    long total = 0;
    for (int i = 0; i < 4; ++i) total += n[i] = sampler.uniform(1, D);
    long a2 = sampler.uniform(1, amax);
    long a3 = sampler.uniform(1, amax);
    if (total > D) continue;
    for (int i = 0; i < 4; ++i) p.lambda[i] = Rational(n[i], D);
    for (auto& l : p.lambda) l.canonicalize();
    probe.lambda.assign(p.lambda.begin(), p.lambda.end());
    bool ok = true;
    for (const auto& c : width_extra) ok = ok && c.holds(probe);
    if (!ok) continue;
    p.a2 = Rational(a2, D);
    p.a3 = Rational(a3, D);
    p.a2.canonicalize();
    p.a3.canonicalize();
    if (!membership(p)) continue;
    if (!other_extra.empty()) {
      ZipperedRectangles z = p.to_surface();
      for (const auto& c : other_extra) ok = ok && c.holds(z);
      if (!ok) continue;
    }
    return p;
  }
  throw SamplingExhausted("no point of " + pi.to_string() + " found in " + std::to_string(options.max_attempts) +
                          " attempts");
}

SectionPoint sample_point(const Permutation& pi, std::uint64_t seed, const SampleOptions& options) {
  Sampler s(seed);
  return sample_point(pi, s, options);
}

}  // namespace hsec
