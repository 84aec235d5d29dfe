#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sdg/errors.hpp"
#include "sdg/synthetic.hpp"

using namespace sdg;

namespace {

NilElement q(long n, long d = 1) { return NilElement(Scalar(n, d)); }

Point random_point(std::mt19937_64& rng, std::size_t n, long bound = 20) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, 5);
  Point p = Point::zero(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = q(num(rng), den(rng));
  return p;
}

NilElement random_positive(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 30), den(1, 7);
  return q(num(rng), den(rng));
}

// A vector orthogonal to v: rotate the first two coordinates.
Point orthogonal_to(const Point& v) {
  if (v[0].is_zero() && v[1].is_zero()) return Point::unit(v.dim(), 0);
  Point w = Point::zero(v.dim());
  w[0] = -v[1];
  w[1] = v[0];
  return w;
}

int count_conditions(BatchTable& t, const Point& a, const Point& b, const Point& c) {
  int n = 0;
  for (Condition w : kAllConditions) n += collinear_condition(t, a, b, c, w) ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("triangle equality") {
  BatchTable t;
  auto eps = t.fresh_batch(1, "eps").generators[0];
  CHECK(triangle_equality(Point{-3, 0}, Point{0, 0}, Point{4, 0}));
  CHECK(triangle_equality(Point{-3, 0}, Point{0, eps}, Point{4, 0}));
  // 2*sqrt(2) against 2.
  CHECK((dist(Point{0, 0}, Point{1, 1}) * 2 - NilElement(2)).pure_sign() == 1);
  CHECK_FALSE(triangle_equality(Point{0, 0}, Point{1, 1}, Point{2, 0}));
  CHECK_THROWS_AS(triangle_equality(Point{0, 0}, Point{0, eps}, Point{2, 0}), UsageError);
}

TEST_CASE("interpolation") {
  BatchTable t;
  struct Case { Point a, c; NilElement s; Point expected; };
  for (const auto& k : {Case{{0, 0}, {5, 0}, 2, {3, 0}}, Case{{0, 0}, {0, 5}, q(5, 2), {0, q(5, 2)}},
                        Case{{0, 0}, {3, 4}, q(5, 2), {q(3, 2), 2}}}) {
    Point b = interpolate(k.a, k.c, k.s);
    CHECK(b == k.expected);
    CHECK(dist(b, k.c) == k.s);
    CHECK(collinear(t, k.a, b, k.c));
    CHECK(interpolation_pinned(t, k.a, b, k.c, k.s));
  }
  CHECK_THROWS_AS(interpolate(Point{0, 0}, Point{5, 0}, 5), DomainError);
  CHECK_THROWS_AS(interpolate(Point{0, 0}, Point{5, 0}, 0), DomainError);
}

TEST_CASE("extrapolation") {
  BatchTable t;
  Point c = extrapolate(Point{-1, 0}, Point{0, 0}, 1);
  CHECK(c == Point{1, 0});
  Point c2 = extrapolate(Point{0, 0}, Point{3, 4}, 5);
  CHECK(c2 == Point{6, 8});
  CHECK(dist(Point{3, 4}, c2) == NilElement(5));
  CHECK(collinear(t, Point{0, 0}, Point{3, 4}, c2));
  CHECK(extrapolation_pinned(t, Point{0, 0}, Point{3, 4}, c2, 5));
  CHECK_FALSE(extrapolation_pinned(t, Point{0, 0}, Point{3, 4}, Point{6, 9}, 5));
  CHECK(interpolate(Point{0, 0}, c2, 5) == Point{3, 4});
  CHECK_THROWS_AS(extrapolate(Point{0, 0}, Point{1, 0}, 0), DomainError);
}

TEST_CASE("six conditions on the axis and on the basic picture") {
  BatchTable t;
  auto eps = t.fresh_batch(1, "eps").generators[0];
  Point a{-3, 0}, b{0, 0}, bp{0, eps}, c{4, 0};
  CHECK(count_conditions(t, a, b, c) == 6);
  CHECK(count_conditions(t, a, bp, c) == 0);
  CHECK(collinear(t, a, b, c));
  CHECK_FALSE(collinear(t, a, bp, c));
  CHECK_THROWS_AS(collinear_condition(t, Point{0, 0}, Point{1, 1}, Point{2, 0}, Condition::b1), UsageError);
  CHECK_FALSE(collinear(t, Point{0, 0}, Point{1, 1}, Point{2, 0}));
}

TEST_CASE("condition names round trip") {
  for (Condition c : kAllConditions) CHECK(parse_condition(to_string(c)) == c);
  CHECK_FALSE(parse_condition("d1").has_value());
}

TEST_CASE("alignment") {
  BatchTable t;
  Point p0{0, 0}, p1{1, 0}, p2{2, 0};
  CHECK(aligned(t, p0, p1, p2));
  CHECK(aligned(t, p1, p0, p2));
  CHECK(aligned(t, p2, p0, p1));
  auto eps = t.fresh_batch(1).generators[0];
  CHECK_FALSE(aligned(t, Point{-3, 0}, Point{0, eps}, Point{4, 0}));
  CHECK_FALSE(aligned(t, Point{0, 0}, Point{1, 0}, Point{0, 1}));
}

TEST_CASE("rays") {
  Ray r(Point{0, 0}, Point{1, 0});
  CHECK(r.eval(1) == Point{2, 0});
  CHECK(extrapolate(Point{0, 0}, r.eval(1), 1) == Point{3, 0});
  CHECK(r.eval(2) == Point{3, 0});
  CHECK_THROWS_AS(r.eval(-1), DomainError);
  CHECK_THROWS_AS(Ray(Point{1, 0}, Point{1, 0}), DomainError);
}

TEST_CASE("non-ray isometry: taut but not stiff") {
  BatchTable t;
  auto eps = t.fresh_batch(1, "eps").generators[0];
  auto curve = [&](const NilElement& s) { return Point{s, eps * s * s}; };
  Point x = curve(1), y = curve(2), z = curve(4);
  CHECK(dist(x, y) == NilElement(1));
  CHECK(dist(y, z) == NilElement(2));
  CHECK(triangle_equality(x, y, z));
  CHECK_FALSE(collinear(t, x, y, z));
}

TEST_CASE("source invariance") {
  BatchTable t;
  CHECK(extrapolate_source_invariance(t, Point{-2, 0}, Point{-1, 0}, Point{0, 0}, 3));
  CHECK(extrapolate(Point{-2, 0}, Point{0, 0}, 3) == Point{3, 0});
  CHECK_THROWS_AS(extrapolate_source_invariance(t, Point{-2, 1}, Point{-1, 0}, Point{0, 0}, 3), UsageError);
}

TEST_CASE("associativity of collinearity") {
  BatchTable t;
  auto rec = collinearity_associativity(t, Point{0, 0}, Point{1, 0}, Point{3, 0}, Point{7, 0});
  CHECK(rec.holds == std::array<bool, 4>{true, true, true, true});
  CHECK(rec.closed);
  auto generic = collinearity_associativity(t, Point{0, 0}, Point{5, 1}, Point{-2, 7}, Point{3, -4});
  CHECK_FALSE(generic.triggered);
  CHECK(generic.closed);
}

TEST_CASE("property: six conditions agree") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    BatchTable t;
    std::size_t n = 2 + trial % 2;
    Point a = random_point(rng, n), b = random_point(rng, n);
    if (!apart(a, b)) continue;
    Point c = extrapolate(a, b, random_positive(rng));
    CHECK(count_conditions(t, a, b, c) == 6);

    // Transversal infinitesimal push of the middle point keeps (abc).
    auto eps = t.fresh_batch(1).generators[0];
    Point bp = b + eps * orthogonal_to(c - a);
    REQUIRE(triangle_equality(a, bp, c));
    CHECK(count_conditions(t, a, bp, c) == 0);
  }
}

TEST_CASE("property: round trips, closure, invariance, rays") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    BatchTable t;
    std::size_t n = 2 + trial % 2;
    Point a = random_point(rng, n), b = random_point(rng, n);
    if (!apart(a, b)) continue;
    NilElement s = random_positive(rng), u = random_positive(rng);
    Point c = extrapolate(a, b, s);
    CHECK(interpolate(a, c, s) == b);
    NilElement ab = dist(a, b);
    if ((ab - s).pure_sign() > 0) CHECK(extrapolate(a, interpolate(a, b, s), s) == b);

    Point d = extrapolate(b, c, u);
    auto rec = collinearity_associativity(t, a, b, c, d);
    CHECK(rec.triggered);
    CHECK(rec.closed);

    CHECK(extrapolate_source_invariance(t, a, b, c, u));

    CHECK(extrapolate(a, extrapolate(a, b, s), u) == extrapolate(a, b, s + u));
    Ray ray(a, b);
    NilElement lo = s, hi = s + u;
    CHECK(dist(ray.eval(lo), ray.eval(hi)) == u);
    CHECK(collinear(t, c, b, a) == collinear(t, a, b, c));
  }
}
