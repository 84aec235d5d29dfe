#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sdg/contact.hpp"
#include "sdg/errors.hpp"
#include "sdg/synthetic.hpp"

using namespace sdg;

namespace {

NilElement q(long n, long d = 1) { return NilElement(Scalar(n, d)); }

}  // namespace

TEST_CASE("contact elements from spheres") {
  BatchTable t;
  Sphere unit(Point{0, 0}, 1);
  auto p = contact_from_sphere(unit, Point{1, 0}, Side::inside);
  CHECK(p.base == Point{1, 0});
  CHECK(p.orientation == 1);
  CHECK(invertible_ratio(p.normal.coords(), LinearForm{1, 0}).has_value());
  // The normal matches the monad condition of the sphere.
  CHECK(invertible_ratio(p.normal.coords(), monad_condition(t, unit, Point{1, 0})).has_value());
  auto top = contact_from_sphere(unit, Point{0, 1}, Side::inside);
  CHECK(invertible_ratio(top.normal.coords(), LinearForm{0, 1}).has_value());
  CHECK(contact_from_sphere(unit, Point{0, 1}, Side::outside).orientation == -1);
  CHECK_THROWS_AS(contact_from_sphere(unit, Point{1, 1}, Side::inside), UsageError);

  // S((0,0),3) and S((1,0),2) touch internally at (3,0).
  auto big = contact_from_sphere(Sphere(Point{0, 0}, 3), Point{3, 0}, Side::inside);
  auto small = contact_from_sphere(Sphere(Point{1, 0}, 2), Point{3, 0}, Side::inside);
  CHECK(same_set(big, small));
  CHECK(same_oriented(big, small));
  CHECK_FALSE(same_oriented(big, contact_from_sphere(Sphere(Point{0, 0}, 3), Point{3, 0}, Side::outside)));
  CHECK(is_focused(t, slice_of(big)));
}

TEST_CASE("orthogonality") {
  BatchTable t;
  ContactElement p(Point{0, 0}, Point{0, 1}, 1);
  CHECK(orthogonal(t, Point{0, 3}, p));
  CHECK_FALSE(orthogonal(t, Point{1, 3}, p));
  CHECK_THROWS_AS(orthogonal(t, Point{0, 0}, p), UsageError);

  // b ⊥ P at a and [abc] give c ⊥ P.
  Point a{0, 0}, b{0, 2}, c = extrapolate(a, b, 3);
  REQUIRE(collinear(t, a, b, c));
  CHECK(orthogonal(t, b, p));
  CHECK(orthogonal(t, c, p));
}

TEST_CASE("front steps") {
  ContactElement p(Point{0, 0}, Point{0, 1}, 1);
  CHECK(front_step(p, 2) == Point{0, 2});
  CHECK(ContactElement(Point{0, 0}, Point{0, 1}, -1).base == Point{0, 0});
  CHECK(front_step(ContactElement(Point{0, 0}, Point{0, 1}, -1), 2) == Point{0, -2});
  // Via two inside-touching representatives.
  CHECK(extrapolate(Point{0, -1}, Point{0, 0}, 2) == Point{0, 2});
  CHECK(extrapolate(Point{0, -2}, Point{0, 0}, 2) == Point{0, 2});
  CHECK(inside_sphere(p, 1).center == Point{0, -1});
  CHECK(inside_sphere(p, 2).center == Point{0, -2});
  // Unnormalized normal.
  CHECK(front_step(ContactElement(Point{0, 0}, Point{0, 7}, 1), 2) == Point{0, 2});
  CHECK(front_step(ContactElement(Point{0, 0}, Point{1, 1}, 1), 1) ==
        Point{NilElement(sqrt(Scalar(1, 2))), NilElement(sqrt(Scalar(1, 2)))});
}

TEST_CASE("inflation") {
  BatchTable t;
  Sphere a(Point{0, 0}, 3), b(Point{1, 0}, 2);
  Point c = touching_point_internal(a, b);
  REQUIRE(c == Point{3, 0});
  Sphere a1 = inflate(a, 1), b1 = inflate(b, 1);
  Point c1 = touching_point_internal(a1, b1);
  CHECK(c1 == Point{4, 0});
  // s = 2 (radius of b), t = 1: a |>_{s+t} b = a |>_t c = b |>_t c.
  CHECK(c1 == extrapolate(a.center, b.center, 3));
  CHECK(c1 == extrapolate(a.center, c, 1));
  CHECK(c1 == extrapolate(b.center, c, 1));
  CHECK(touches(t, a1, b1, c1));
  CHECK(inflate(Sphere(Point{0, 0}, 1), 1).radius == NilElement(2));
  // External touching is not preserved.
  Sphere e1(Point{0, 0}, 2), e2(Point{3, 0}, 1);
  CHECK_THROWS_AS(touching_point_external(inflate(e1, 1), inflate(e2, 1)), NotTouchingError);
  CHECK_THROWS_AS(inflate(a, 0), DomainError);
}

TEST_CASE("flow") {
  BatchTable t;
  ContactElement p(Point{0, 0}, Point{0, 1}, 1);
  auto two = flow_step(flow_step(p, 1), 2);
  auto one = flow_step(p, 3);
  CHECK(same_oriented(two, one));
  CHECK(two.base == Point{0, 3});
  CHECK(two.orientation == p.orientation);
  CHECK(is_focused(t, slice_of(one)));
  CHECK(one.base == front_step(p, 3));
  // Through a representative sphere S((0,-1),1): a |>_1 then |>_2 is |>_3.
  Point a{0, -1};
  CHECK(extrapolate(a, extrapolate(a, Point{0, 0}, 1), 2) == extrapolate(a, Point{0, 0}, 3));
}

TEST_CASE("feet on sampled surfaces") {
  BatchTable t;
  Sphere unit(Point{0, 0}, 1);
  auto clock = sampled_sphere(unit, clock_samples(Point{0, 0}, 1, 12));
  CHECK(feet_on_surface(t, Point{0, 0}, clock).size() == 12);

  // Closed circles have antipodal feet; use an upper arc.
  std::vector<Point> arc;
  for (const auto& p : clock_samples(Point{0, 0}, 1, 12)) {
    if (p[1].pure_sign() > 0) arc.push_back(p);
  }
  auto upper = sampled_sphere(unit, arc);
  Point x = front_step(upper.samples[2], 3);
  CHECK(feet_on_surface(t, x, upper) == std::vector<std::size_t>{2});
  CHECK(feet_on_surface(t, Point{5, q(1, 3)}, upper).empty());
}

TEST_CASE("parallel surfaces") {
  BatchTable t;
  Sphere unit(Point{0, 0}, 1);
  auto circle = sampled_sphere(unit, clock_samples(Point{0, 0}, 1, 12));
  CHECK(foot_violations(t, circle, 1).empty());
  auto outer = parallel_surface(t, circle, 1);
  REQUIRE(outer.samples.size() == 12);
  for (std::size_t i = 0; i < 12; ++i) {
    CHECK(on_sphere(Sphere(Point{0, 0}, 2), outer.samples[i].base));
    CHECK(envelope_touch(t, circle.samples[i], 1));
    CHECK(touches(t, Sphere(circle.samples[i].base, 1), Sphere(Point{0, 0}, 2), outer.samples[i].base));
  }
  CHECK(same_surface(parallel_surface(t, circle, 3), parallel_surface(t, outer, 2)));

  Hyperplane axis(Point{0, 0}, Point{0, 1});
  auto line = sampled_hyperplane(axis, {Point{-2, 0}, Point{0, 0}, Point{q(1, 3), 0}, Point{5, 0}});
  auto shifted = parallel_surface(t, line, q(3, 2));
  for (std::size_t i = 0; i < shifted.samples.size(); ++i) {
    CHECK(shifted.samples[i].base == line.samples[i].base + Point{0, q(3, 2)});
  }
  CHECK(same_surface(parallel_surface(t, line, 4), parallel_surface(t, shifted, q(5, 2))));

  // Flowing inward past the centre of a circle: the centre's other feet get close.
  auto inward = sampled_sphere(unit, clock_samples(Point{0, 0}, 1, 12), Side::outside);
  CHECK_FALSE(foot_violations(t, inward, 1).empty());
  CHECK_THROWS_AS(parallel_surface(t, inward, 1), AssumptionError);
}

TEST_CASE("sample generators") {
  for (int offset : {0, 1}) {
    for (const auto& p : sphere_samples(Point{1, 2}, 3, 8, offset)) CHECK(on_sphere(Sphere(Point{1, 2}, 3), p));
    for (const auto& p : sphere_samples(Point{1, 2, 3}, 2, 9, offset)) {
      CHECK(on_sphere(Sphere(Point{1, 2, 3}, 2), p));
    }
  }
  auto pts = sphere_samples(Point{0, 0}, 1, 6);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) CHECK(apart(pts[i], pts[j]));
  }
  for (std::size_t m : {1, 2, 3, 4, 6, 8, 12}) {
    auto c = clock_samples(Point{0, 0}, 2, m);
    CHECK(c.size() == m);
    for (const auto& p : c) CHECK(on_sphere(Sphere(Point{0, 0}, 2), p));
  }
  CHECK_THROWS_AS(clock_samples(Point{0, 0}, 1, 5), UsageError);
}

TEST_CASE("huygens envelope for spheres") {
  BatchTable t;
  Point a{0, 0};
  auto rec = huygens_sphere_envelope(t, a, 2, 1, sphere_samples(a, 2, 8), sphere_samples(a, 3, 8, 1));
  CHECK(rec.checks() == 16);
  CHECK(rec.all_pass());
  auto single = huygens_sphere_envelope(t, a, 2, 1, sphere_samples(a, 2, 1), {});
  CHECK(single.checks() == 1);
  CHECK(single.all_pass());
  CHECK(interpolate(a, Point{3, 0}, 1) == Point{2, 0});
  CHECK(extrapolate(a, Point{2, 0}, 1) == Point{3, 0});
  CHECK_THROWS_AS(huygens_sphere_envelope(t, a, 2, 1, {Point{1, 0}}, {}), UsageError);
}

TEST_CASE("united position") {
  BatchTable t;
  Sphere unit(Point{0, 0}, 1);
  Point b = clock_samples(Point{0, 0}, 1, 12)[1];
  auto p = contact_from_sphere(unit, b, Side::inside);
  GenericPoint moved = generic_point(t, monad_slice(unit, b));
  REQUIRE(on_sphere(unit, moved.point));
  auto p2 = contact_from_sphere(unit, moved.point, Side::inside);
  CHECK(united_position(p, p2));
  CHECK(united_position(p, p));
  auto far = contact_from_sphere(unit, Point{0, 1}, Side::inside);
  CHECK_FALSE(united_position(p, far));
}
