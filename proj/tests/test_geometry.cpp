#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sdg/errors.hpp"
#include "sdg/geometry.hpp"

using namespace sdg;

namespace {

NilElement q(long n, long d = 1) { return NilElement(Scalar(n, d)); }

Point random_point(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-100, 100), den(1, 100);
  Point p = Point::zero(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = q(num(rng), den(rng));
  return p;
}

}  // namespace

TEST_CASE("apartness") {
  BatchTable t;
  auto eps = t.fresh_batch(1, "eps").generators[0];
  CHECK(apart(Point{0, 0}, Point{3, 0}));
  CHECK_FALSE(apart(Point{0, 0}, Point{eps, 0}));
  CHECK(apart(Point{0, 0}, Point{NilElement(1) + eps, 0}));
}

TEST_CASE("neighbour relation") {
  BatchTable t;
  auto d = t.fresh_batch(2, "d").generators;
  auto e1 = t.fresh_batch(1).generators[0];
  auto e2 = t.fresh_batch(1).generators[0];
  Point x{q(1, 2), 7};
  CHECK(neighbour(x, x));
  CHECK(neighbour(Point{0, 0}, Point{d[0], d[1]}));
  CHECK_FALSE(neighbour(Point{0, 0}, Point{e1, e2}));
  CHECK(neighbour(Point{0, 0}, Point{e1, 0}));
}

TEST_CASE("distance") {
  BatchTable t;
  auto eps = t.fresh_batch(1, "eps").generators[0];
  CHECK(dist(Point{-3, 0}, Point{0, eps}) == NilElement(3));
  CHECK(dist(Point{0, 0}, Point{3, 4}) == NilElement(5));
  NilElement r = dist(Point{0, 0}, Point{NilElement(1) + eps, 0});
  CHECK(r * r == (NilElement(1) + eps) * (NilElement(1) + eps));
  CHECK(r.pure_sign() == 1);
  CHECK(r == NilElement(1) + eps);
  CHECK_THROWS_AS(dist(Point{0, 0}, Point{eps, 0}), DomainError);
  CHECK(dist(Point{0, 0}, Point{1, 1}) == NilElement(sqrt(Scalar(2))));
}

TEST_CASE("membership") {
  BatchTable t;
  auto d = t.fresh_batch(2).generators;
  CHECK(on_sphere(Sphere(Point{0, 0}, 1), Point{0, 1}));
  CHECK_FALSE(on_sphere(Sphere(Point{0, 0}, 1), Point{1, 1}));
  CHECK(on_sphere(Sphere(Point{0, 0, 1}, 1), Point{d[0], d[1], 0}));
  CHECK(on_hyperplane(Hyperplane(Point{0, 0}, Point{0, 1}), Point{5, 0}));
  CHECK_THROWS_AS(Sphere(Point{0, 0}, 0), DomainError);
  CHECK_THROWS_AS(Hyperplane(Point{0, 0}, Point{0, 0}), DomainError);
}

TEST_CASE("monad conditions") {
  BatchTable t;
  // |b + d|^2 - 1 with b = (0,1) expands to 2 d_2.
  auto c = monad_condition(t, Sphere(Point{0, 0}, 1), Point{0, 1});
  CHECK(c == LinearForm{0, 2});
  CHECK(monad_condition(t, Hyperplane(Point{0, 0}, Point{0, 1}), Point{0, 0}) == LinearForm{0, 1});
  // |d - (0,0,1)|^2 - 1 = -2 d_3.
  CHECK(monad_condition(t, Sphere(Point{0, 0, 1}, 1), Point{0, 0, 0}) == LinearForm{0, 0, -2});
  CHECK_THROWS_AS(monad_condition(t, Sphere(Point{0, 0}, 1), Point{1, 1}), UsageError);
}

TEST_CASE("touching") {
  BatchTable t;
  Sphere a(Point{0, 0}, 2), c(Point{3, 0}, 1);
  // Coefficients 2(b - a) = (4,0) and 2(b - c) = (-2,0): ratio -1/2.
  auto ca = monad_condition(t, a, Point{2, 0});
  auto cc = monad_condition(t, c, Point{2, 0});
  REQUIRE(ca == LinearForm{4, 0});
  REQUIRE(cc == LinearForm{-2, 0});
  CHECK(*invertible_ratio(ca, cc) == q(-1, 2));
  CHECK(touches(t, a, c, Point{2, 0}));
  CHECK_THROWS_AS(touches(t, a, Sphere(Point{0, 3}, 1), Point{2, 0}), UsageError);
  CHECK(touches(t, Sphere(Point{0, 0, 1}, 1), Hyperplane(Point{0, 0, 0}, Point{0, 0, 1}), Point{0, 0, 0}));
  // Crossing circles do not touch.
  CHECK_FALSE(touches(t, Sphere(Point{0, 0}, 5), Sphere(Point{6, 0}, 5), Point{3, 4}));
}

TEST_CASE("nilpotent ratio is not proportionality") {
  BatchTable t;
  auto eps = t.fresh_batch(1).generators[0];
  CHECK_FALSE(invertible_ratio(LinearForm{1, 0}, LinearForm{eps, 0}).has_value());
  CHECK(invertible_ratio(LinearForm{1, 0}, LinearForm{NilElement(2) + eps, 0}).has_value());
  CHECK_THROWS_AS(implies(LinearForm{eps, 0}, LinearForm{1, 0}), DegenerateError);
  CHECK(implies(LinearForm{1, 2}, LinearForm{0, 0}));
}

TEST_CASE("touching points") {
  BatchTable t;
  Point b = touching_point_external(Sphere(Point{0, 0}, 2), Sphere(Point{3, 0}, 1));
  CHECK(b == Point{2, 0});
  CHECK(on_sphere(Sphere(Point{0, 0}, 2), b));
  CHECK(on_sphere(Sphere(Point{3, 0}, 1), b));
  CHECK(touches(t, Sphere(Point{0, 0}, 2), Sphere(Point{3, 0}, 1), b));
  CHECK(dist(Point{0, 0}, b) + dist(b, Point{3, 0}) == dist(Point{0, 0}, Point{3, 0}));
  CHECK(touching_point_external(Sphere(Point{0, 0}, 3), Sphere(Point{0, 5}, 2)) == Point{0, 3});
  CHECK_THROWS_AS(touching_point_external(Sphere(Point{0, 0}, 1), Sphere(Point{3, 0}, 1)), NotTouchingError);

  Point c = touching_point_internal(Sphere(Point{0, 0}, 3), Sphere(Point{1, 0}, 2));
  CHECK(c == Point{3, 0});
  CHECK(on_sphere(Sphere(Point{0, 0}, 3), c));
  CHECK(on_sphere(Sphere(Point{1, 0}, 2), c));
  CHECK(touches(t, Sphere(Point{0, 0}, 3), Sphere(Point{1, 0}, 2), c));
  CHECK(touching_point_internal(Sphere(Point{0, 0}, 2), Sphere(Point{0, 1}, 1)) == Point{0, 2});
  CHECK_THROWS_AS(touching_point_internal(Sphere(Point{0, 0}, 3), Sphere(Point{0, 0}, 2)), NotTouchingError);
}

TEST_CASE("monad slices lie on their figure") {
  BatchTable t;
  Sphere s(Point{0, 0, 1}, 1);
  Slice sl = monad_slice(s, Point{0, 0, 0});
  CHECK(sl.directions.size() == 2);
  CHECK(slice_contained(t, sl, s));
  CHECK(slice_contained(t, sl, Hyperplane(Point{0, 0, 0}, Point{0, 0, 1})));
  CHECK_FALSE(slice_contained(t, full_monad(Point{0, 0, 0}), s));
}

TEST_CASE("focused sets") {
  BatchTable t;
  CHECK(is_focused(t, full_monad(Point{0, 0})));
  CHECK(is_focused(t, Hyperplane(Point{1, 1}, Point{1, 2}), Point{1, 1}));
  CHECK(is_focused(t, Sphere(Point{0, 0, 0}, 3), Point{0, 0, 3}));

  // {eps * x}: the base and eps*(1,0) both neighbour every element.
  auto eps = t.fresh_batch(1, "eps").generators[0];
  std::mt19937_64 rng(1);
  Point alt{eps, 0};
  for (int k = 0; k < 10; ++k) {
    Point y = eps * random_point(rng, 2);
    CHECK(neighbour(Point{0, 0}, y));
    CHECK(neighbour(alt, y));
  }
  CHECK_FALSE(alt == Point{0, 0});
}

TEST_CASE("feet on hyperplanes") {
  BatchTable t;
  Hyperplane xy(Point{0, 0, 0}, Point{0, 0, 1});
  CHECK(foot(Point{0, 0, 1}, xy) == Point{0, 0, 0});
  Hyperplane x_axis(Point{0, 0}, Point{0, 1});
  CHECK(foot(Point{3, 4}, x_axis) == Point{3, 0});
  Hyperplane diag(Point{0, 0}, Point{1, 1});
  Point f = foot(Point{1, 1}, diag);
  CHECK(f == Point{0, 0});
  CHECK(equidistant_on_slice(t, Point{1, 1}, monad_slice(diag, f)));
  CHECK_FALSE(equidistant_on_slice(t, Point{1, 1}, monad_slice(diag, Point{1, -1})));
  CHECK_THROWS_AS(foot(Point{1, -1}, diag), DegenerateError);
}

TEST_CASE("red herring: touching set smaller than the intersection") {
  BatchTable t;
  auto e1 = t.fresh_batch(1, "e1").generators[0];
  auto e2 = t.fresh_batch(1, "e2").generators[0];
  Sphere a(Point{0, 0, 1}, 1);
  Hyperplane h(Point{0, 0, 0}, Point{0, 0, 1});
  Point p{e1, e2, 0};
  CHECK(on_sphere(a, p) == (e1 * e1 + e2 * e2).is_zero());
  CHECK(on_sphere(a, p));
  CHECK(on_hyperplane(h, p));
  CHECK_FALSE(neighbour(Point{0, 0, 0}, p));
  CHECK(touches(t, a, h, Point{0, 0, 0}));
}

TEST_CASE("property: symmetry and apart/neighbour compatibility") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    BatchTable t;
    std::size_t n = 2 + trial % 2;
    Point x = random_point(rng, n), y = random_point(rng, n);
    if (!apart(x, y)) continue;
    CHECK(dist(x, y) == dist(y, x));
    auto d = t.fresh_batch(n).generators;
    Point y2 = y + Point(d);
    CHECK(neighbour(y, y2));
    CHECK(apart(x, y2));
    CHECK_FALSE((apart(x, y2) && neighbour(x, y2)));
    CHECK_FALSE(neighbour(x, y));
  }
}

TEST_CASE("property: order ignores infinitesimal offsets") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> num(-100, 100), den(1, 100);
  for (int trial = 0; trial < 100; ++trial) {
    BatchTable t;
    auto eps = t.fresh_batch(1).generators[0];
    NilElement x = q(num(rng), den(rng)), y = q(num(rng), den(rng));
    if (!pure_less(x, y)) std::swap(x, y);
    if (!pure_less(x, y)) continue;
    CHECK(pure_less(x + eps, y));
    CHECK(pure_less(x, y + eps));
  }
}

TEST_CASE("property: containment of sphere monads forces equality") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<long> num(1, 20);
  for (int trial = 0; trial < 25; ++trial) {
    BatchTable t;
    std::size_t n = 2 + trial % 2;
    Point a = random_point(rng, n);
    Point b = a;
    b[0] += q(num(rng));  // b - a along the first axis keeps radii rational
    NilElement r = dist(a, b);
    // A second sphere through b with center on the line ab.
    Point c = a + q(num(rng) + 20, 7) * (b - a);
    Sphere sa(a, r), sc(c, dist(c, b));
    REQUIRE(on_sphere(sc, b));
    CHECK(slice_contained(t, monad_slice(sa, b), sc));
    CHECK(slice_contained(t, monad_slice(sc, b), sa));
    CHECK(touches(t, sa, sc, b));
    CHECK(is_focused(t, sa, b));
  }
}
