#include "sdg/geometry.hpp"

#include <algorithm>

#include "sdg/errors.hpp"

namespace sdg {

namespace {

void require_same_dim(const Point& x, const Point& y) {
  if (x.dim() != y.dim()) {
    throw UsageError("dimension mismatch: " + std::to_string(x.dim()) + " vs " + std::to_string(y.dim()));
  }
}

std::optional<std::size_t> invertible_index(const std::vector<NilElement>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_invertible()) return i;
  }
  return std::nullopt;
}

Point normal_at(const Figure& f, const Point& b) {
  if (const auto* s = std::get_if<Sphere>(&f)) return b - s->center;
  return std::get<Hyperplane>(f).normal;
}

}  // namespace

Point Point::unit(std::size_t n, std::size_t i) {
  Point p = zero(n);
  p[i] = NilElement(1);
  return p;
}

bool Point::is_pure() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const NilElement& x) { return x.is_pure(); });
}

Point Point::pure() const {
  std::vector<NilElement> out;
  out.reserve(coords_.size());
  for (const auto& x : coords_) out.emplace_back(x.pure_part());
  return Point(std::move(out));
}

Point Point::operator-() const {
  Point out = *this;
  for (auto& x : out.coords_) x = -x;
  return out;
}

Point& Point::operator+=(const Point& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

Point& Point::operator*=(const NilElement& k) {
  for (auto& x : coords_) x *= k;
  return *this;
}

bool operator==(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

std::string Point::str(const BatchTable* names) const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) out += ", ";
    out += coords_[i].str(names);
  }
  return out + ")";
}

NilElement dot(const Point& x, const Point& y) {
  require_same_dim(x, y);
  NilElement s;
  for (std::size_t i = 0; i < x.dim(); ++i) s += x[i] * y[i];
  return s;
}

NilElement dot(const LinearForm& f, const Point& x) { return dot(Point(f), x); }

NilElement norm2(const Point& x) { return dot(x, x); }

bool is_proper(const Point& v) { return invertible_index(v.coords()).has_value(); }

bool apart(const Point& x, const Point& y) { return is_proper(y - x); }

bool neighbour(const Point& x, const Point& y) {
  Point u = y - x;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    for (std::size_t j = i; j < u.dim(); ++j) {
      if (!(u[i] * u[j]).is_zero()) return false;
    }
  }
  return true;
}

NilElement dist2(const Point& x, const Point& y) { return norm2(y - x); }

NilElement dist(const Point& x, const Point& y) {
  if (!apart(x, y)) throw DomainError("distance is only defined for apart points: " + x.str() + ", " + y.str());
  return sqrt(dist2(x, y));
}

Sphere::Sphere(Point c, NilElement r) : center(std::move(c)), radius(std::move(r)) {
  if (radius.pure_sign() <= 0) throw DomainError("sphere radius must be positive: " + radius.str());
}

Hyperplane::Hyperplane(Point p, Point n) : basepoint(std::move(p)), normal(std::move(n)) {
  require_same_dim(basepoint, normal);
  if (!is_proper(normal)) throw DomainError("hyperplane normal must be a proper vector: " + normal.str());
}

std::size_t dim(const Figure& f) {
  return std::visit([](const auto& g) -> std::size_t {
    if constexpr (std::is_same_v<std::decay_t<decltype(g)>, Sphere>) {
      return g.center.dim();
    } else {
      return g.basepoint.dim();
    }
  }, f);
}

NilElement membership(const Figure& f, const Point& p) {
  if (const auto* s = std::get_if<Sphere>(&f)) return dist2(s->center, p) - s->radius * s->radius;
  const auto& h = std::get<Hyperplane>(f);
  return dot(p - h.basepoint, h.normal);
}

bool on_figure(const Figure& f, const Point& p) { return membership(f, p).is_zero(); }
bool on_sphere(const Sphere& s, const Point& p) { return on_figure(s, p); }
bool on_hyperplane(const Hyperplane& h, const Point& p) { return on_figure(h, p); }

Slice full_monad(const Point& b) {
  Slice s{b, {}};
  for (std::size_t j = 0; j < b.dim(); ++j) s.directions.push_back(Point::unit(b.dim(), j));
  return s;
}

Slice orthogonal_slice(const Point& b, const Point& normal) {
  require_same_dim(b, normal);
  auto pivot = invertible_index(normal.coords());
  if (!pivot) throw DegenerateError("slice normal is not proper: " + normal.str());
  const std::size_t i = *pivot;
  Slice s{b, {}};
  for (std::size_t j = 0; j < b.dim(); ++j) {
    if (j == i) continue;
    Point v = Point::zero(b.dim());
    v[j] = normal[i];
    v[i] = -normal[j];
    s.directions.push_back(std::move(v));
  }
  return s;
}

Slice monad_slice(const Figure& f, const Point& b) {
  if (!on_figure(f, b)) throw UsageError("point " + b.str() + " is not on the figure");
  return orthogonal_slice(b, normal_at(f, b));
}

GenericPoint generic_point(BatchTable& table, const Slice& s) {
  auto batch = table.fresh_batch(s.directions.size());
  Point p = s.base;
  for (std::size_t k = 0; k < s.directions.size(); ++k) p += batch.generators[k] * s.directions[k];
  return {std::move(p), batch.id};
}

LinearForm monad_condition(BatchTable& table, const Figure& f, const Point& b) {
  if (dim(f) != b.dim()) throw UsageError("dimension mismatch in monad_condition");
  auto d = table.fresh_batch(b.dim());
  Point moved = b;
  for (std::size_t k = 0; k < b.dim(); ++k) moved[k] += d.generators[k];
  auto kl = kl_cancel(table, membership(f, moved), d.id);
  if (!kl.constant.is_zero()) throw UsageError("point " + b.str() + " is not on the figure");
  return kl.coefficients;
}

std::optional<NilElement> invertible_ratio(const LinearForm& f1, const LinearForm& f2) {
  if (f1.size() != f2.size()) throw UsageError("linear forms of different length");
  auto i = invertible_index(f1);
  if (!i) return std::nullopt;
  NilElement lambda = f2[*i] / f1[*i];
  if (!lambda.is_invertible()) return std::nullopt;
  for (std::size_t j = 0; j < f1.size(); ++j) {
    if (!(f2[j] == lambda * f1[j])) return std::nullopt;
  }
  return lambda;
}

bool implies(const LinearForm& f1, const LinearForm& f2) {
  if (f1.size() != f2.size()) throw UsageError("linear forms of different length");
  auto i = invertible_index(f1);
  if (!i) throw DegenerateError("hypothesis form is not proper; the implication is vacuous");
  NilElement lambda = f2[*i] / f1[*i];
  for (std::size_t j = 0; j < f1.size(); ++j) {
    if (!(f2[j] == lambda * f1[j])) return false;
  }
  return true;
}

bool touches(BatchTable& table, const Figure& a, const Figure& b, const Point& z) {
  if (!on_figure(a, z) || !on_figure(b, z)) {
    throw UsageError("touching is only asked at a common point; " + z.str() + " is not on both");
  }
  return invertible_ratio(monad_condition(table, a, z), monad_condition(table, b, z)).has_value();
}

bool slice_contained(BatchTable& table, const Slice& s, const Figure& g) {
  GenericPoint gp = generic_point(table, s);
  return kl_cancel(table, membership(g, gp.point), gp.batch).vanishes();
}

std::size_t pure_rank(const std::vector<LinearForm>& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<Scalar>> m;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (const auto& x : r) row.push_back(x.pure_part());
    m.push_back(std::move(row));
  }
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      Scalar k = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= k * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

bool forces_zero(const BatchTable& table, const std::vector<NilElement>& conditions, BatchId batch) {
  const std::size_t size = table.batch(batch).size;
  if (size == 0) return true;
  std::vector<LinearForm> rows;
  for (const auto& c : conditions) rows.push_back(kl_cancel(table, c, batch).coefficients);
  return pure_rank(rows) == size;
}

bool is_focused(BatchTable& table, const Slice& s) {
  const std::size_t k = s.directions.size();
  if (k == 0) return true;
  const std::size_t n = s.base.dim();
  auto xi = table.fresh_batch(k);
  auto delta = table.fresh_batch(k);
  Point u = Point::zero(n);
  for (std::size_t l = 0; l < k; ++l) u += (xi.generators[l] - delta.generators[l]) * s.directions[l];
  std::vector<NilElement> conditions;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      auto kl = kl_cancel(table, u[i] * u[j], delta.id);
      if (!kl.constant.is_zero()) return false;
      for (auto& c : kl.coefficients) conditions.push_back(std::move(c));
    }
  }
  return forces_zero(table, conditions, xi.id);
}

bool is_focused(BatchTable& table, const Figure& f, const Point& b) {
  return is_focused(table, monad_slice(f, b));
}

bool apart_from(const Point& a, const Hyperplane& u) {
  return dot(a - u.basepoint, u.normal).is_invertible();
}

Point foot(const Point& a, const Hyperplane& u) {
  if (!apart_from(a, u)) throw DegenerateError("point " + a.str() + " is not apart from the hyperplane");
  NilElement t = dot(a - u.basepoint, u.normal) / norm2(u.normal);
  return a - t * u.normal;
}

bool equidistant_on_slice(BatchTable& table, const Point& a, const Slice& s) {
  GenericPoint gp = generic_point(table, s);
  return kl_cancel(table, dist2(a, gp.point) - dist2(a, s.base), gp.batch).vanishes();
}

Point touching_point_external(const Sphere& a, const Sphere& c) {
  if (!apart(a.center, c.center)) throw NotTouchingError("sphere centers are not apart");
  NilElement sum = a.radius + c.radius;
  if (!(dist2(a.center, c.center) == sum * sum)) {
    throw NotTouchingError("center distance differs from the sum of radii");
  }
  return a.center + (a.radius / sum) * (c.center - a.center);
}

Point touching_point_internal(const Sphere& a, const Sphere& b) {
  if (!apart(a.center, b.center)) throw NotTouchingError("sphere centers are not apart");
  NilElement gap = a.radius - b.radius;
  if (gap.pure_sign() <= 0 || !(dist2(a.center, b.center) == gap * gap)) {
    throw NotTouchingError("center distance differs from the difference of radii");
  }
  return a.center + (a.radius / gap) * (b.center - a.center);
}

}  // namespace sdg
