#include "sdg/synthetic.hpp"

#include "sdg/errors.hpp"

namespace sdg {

namespace {

void require_mutually_apart(const Point& a, const Point& b, const Point& c) {
  if (!apart(a, b) || !apart(b, c) || !apart(a, c)) {
    throw UsageError("points must be mutually apart: " + a.str() + ", " + b.str() + ", " + c.str());
  }
}

// First-order change of |h - m|^2 when m moves to a neighbour.
LinearForm variation(BatchTable& table, const Point& h, const Point& m) {
  auto d = table.fresh_batch(m.dim());
  Point moved = m;
  for (std::size_t k = 0; k < m.dim(); ++k) moved[k] += d.generators[k];
  return kl_cancel(table, dist2(h, moved) - dist2(h, m), d.id).coefficients;
}

// Identities for "distance s from the anchor and [a b c]", where the point at
// position `moving` (1 for b, 2 for c) has been replaced by a generic
// neighbour.  False when the unperturbed triple already fails them.
bool pinned(BatchTable& table, Point a, Point b, Point c, const NilElement& s, int moving) {
  require_mutually_apart(a, b, c);
  auto d = table.fresh_batch(a.dim());
  Point& m = moving == 1 ? b : c;
  for (std::size_t k = 0; k < m.dim(); ++k) m[k] += d.generators[k];

  std::vector<NilElement> conditions;
  conditions.push_back(dist2(b, c) - s * s);
  conditions.push_back(dist(a, b) + dist(b, c) - dist(a, c));
  // b1 as a proportionality of b - a and b - c.
  Point f1 = b - a, f2 = b - c;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) conditions.push_back(f1[i] * f2[j] - f1[j] * f2[i]);
  }
  for (const auto& cond : conditions) {
    if (!kl_cancel(table, cond, d.id).constant.is_zero()) return false;
  }
  return forces_zero(table, conditions, d.id);
}

}  // namespace

bool triangle_equality(const Point& a, const Point& b, const Point& c) {
  require_mutually_apart(a, b, c);
  return dist(a, b) + dist(b, c) == dist(a, c);
}

Point interpolate(const Point& a, const Point& c, const NilElement& s) {
  NilElement ac = dist(a, c);
  if (s.pure_sign() <= 0 || (ac - s).pure_sign() <= 0) {
    throw DomainError("interpolation needs 0 < s < ac; s = " + s.str() + ", ac = " + ac.str());
  }
  return c + (s / ac) * (a - c);
}

Point extrapolate(const Point& a, const Point& b, const NilElement& s) {
  if (s.pure_sign() <= 0) throw DomainError("extrapolation needs s > 0; s = " + s.str());
  return b + (s / dist(a, b)) * (b - a);
}

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::a1: return "a1";
    case Condition::a2: return "a2";
    case Condition::b1: return "b1";
    case Condition::b2: return "b2";
    case Condition::c1: return "c1";
    case Condition::c2: return "c2";
  }
  return "?";
}

std::optional<Condition> parse_condition(std::string_view s) {
  for (Condition c : kAllConditions) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

bool collinear_condition(BatchTable& table, const Point& a, const Point& b, const Point& c, Condition which) {
  if (!triangle_equality(a, b, c)) throw UsageError("collinearity conditions presuppose (abc)");
  const Point* moving = nullptr;
  const Point* hyp = nullptr;
  const Point* concl = nullptr;
  switch (which) {
    case Condition::a1: moving = &a; hyp = &b; concl = &c; break;
    case Condition::a2: moving = &a; hyp = &c; concl = &b; break;
    case Condition::b1: moving = &b; hyp = &a; concl = &c; break;
    case Condition::b2: moving = &b; hyp = &c; concl = &a; break;
    case Condition::c1: moving = &c; hyp = &a; concl = &b; break;
    case Condition::c2: moving = &c; hyp = &b; concl = &a; break;
  }
  return implies(variation(table, *hyp, *moving), variation(table, *concl, *moving));
}

bool collinear(BatchTable& table, const Point& a, const Point& b, const Point& c) {
  return triangle_equality(a, b, c) && collinear_condition(table, a, b, c, Condition::b1);
}

bool aligned(BatchTable& table, const Point& a, const Point& b, const Point& c) {
  return collinear(table, a, b, c) || collinear(table, b, a, c) || collinear(table, a, c, b);
}

bool extrapolation_pinned(BatchTable& table, const Point& a, const Point& b, const Point& c, const NilElement& s) {
  return pinned(table, a, b, c, s, 2);
}

bool interpolation_pinned(BatchTable& table, const Point& a, const Point& b, const Point& c, const NilElement& s) {
  return pinned(table, a, b, c, s, 1);
}

Ray::Ray(Point a, Point b) : director(std::move(a)), source(std::move(b)) {
  if (!apart(director, source)) throw DomainError("ray director must be apart from the source");
}

bool extrapolate_source_invariance(BatchTable& table, const Point& a_prime, const Point& a, const Point& b,
                                   const NilElement& s) {
  if (!collinear(table, a_prime, a, b)) throw UsageError("source invariance presupposes [a'ab]");
  return extrapolate(a_prime, b, s) == extrapolate(a, b, s);
}

AssociativityRecord collinearity_associativity(BatchTable& table, const Point& a, const Point& b, const Point& c,
                                               const Point& d) {
  AssociativityRecord r;
  r.holds = {collinear(table, a, b, c), collinear(table, a, b, d), collinear(table, a, c, d),
             collinear(table, b, c, d)};
  int count = 0;
  for (bool h : r.holds) count += h ? 1 : 0;
  r.triggered = count >= 2;
  r.closed = !r.triggered || count == 4;
  return r;
}

}  // namespace sdg
