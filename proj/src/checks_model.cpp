// The coordinate model: monads of spheres and hyperplanes, focusedness,
// feet, and the red herring.

#include "check_util.hpp"

namespace sdg::suite {

namespace {

using util::slice_in;
using util::small;
using util::touches_at;

// M(b) cap A = M(b) cap H for the hyperplane H through b orthogonal to b - a.
void sphere_monad_hyperplane(Trial& t, bool tilted) {
  auto& tab = t.table();
  Sphere A(t.point(), t.positive(20));
  Point u = t.unit_direction();
  Point b = A.center + A.radius * u;
  Point normal = tilted ? u + t.orthogonal_direction(u) : b - A.center;
  Hyperplane H(b, normal);
  t.note("a", A.center);
  t.note("b", b);
  t.note("normal", normal);
  t.expect(slice_in(tab, monad_slice(A, b), [&](const Point& p) { return on_hyperplane(H, p); }),
           "M(b) cap A in H");
  t.expect(slice_in(tab, monad_slice(H, b), [&](const Point& p) { return on_sphere(A, p); }), "M(b) cap H in A");
}

// Hyperplanes H, K through b with M(b) cap H in K are equal.
void hyperplane_monad_containment(Trial& t, bool sphere_instead) {
  auto& tab = t.table();
  Point b = t.point();
  Point n = t.point(9);
  t.require(is_proper(n), "zero normal");
  Hyperplane H(b, n);
  bool same = t.integer(0, 1) == 1;
  Point m = same ? t.positive(9) * n : t.point(9);
  t.require(is_proper(m), "zero normal");
  t.require(same || !invertible_ratio(n.coords(), m.coords()), "random normal parallel to N_H");
  Figure K = Hyperplane(b, m);
  if (sphere_instead) {
    // A sphere tangent to H at b: containment holds, equality of sets fails.
    NilElement r = t.positive(20);
    K = Sphere(b + r * inverse(sqrt(norm2(n))) * n, r);
    same = true;
  }
  t.note("b", b);
  t.note("N_H", n);
  t.note(sphere_instead ? "K" : "N_K", sphere_instead ? std::get<Sphere>(K).center : m);
  bool contained = slice_in(tab, monad_slice(H, b), [&](const Point& p) { return on_figure(K, p); });
  t.expect(contained == same, "containment exactly for equal hyperplanes");
  if (!contained) return;
  // H = K as sets: far points of H lie on K and H's normal is K's.
  Point w = t.orthogonal_direction(n);
  Point far = b + NilElement(Scalar(t.integer(2, 50))) * w;
  t.expect(on_figure(K, far), "far point of H lies on K");
  t.expect(sphere_instead || invertible_ratio(n.coords(), m.coords()).has_value(), "normals proportional");
}

// Monads, hyperplane monads, and sphere monads are focused; {eps x} is not.
void monad_focused(Trial& t, bool claim_eps_set) {
  auto& tab = t.table();
  Point x = t.point();
  NilElement eps = small(t);
  t.note("x", x);
  t.note("eps", eps);
  // {eps y : y in R^n}: the origin and eps x both neighbour every element.
  Point y = t.point();
  auto batch = tab.fresh_batch(t.dim(), "d");
  for (std::size_t i = 0; i < t.dim(); ++i) y[i] += batch.generators[i];
  t.require(is_proper(x), "x = 0");
  Point ex = eps * x, ey = eps * y;
  bool origin_neighbours = neighbour(Point::zero(t.dim()), ey);
  bool ex_neighbours = neighbour(ex, ey);
  bool unique_focus = !(origin_neighbours && ex_neighbours && !(ex == Point::zero(t.dim())));
  if (claim_eps_set) {
    t.expect(unique_focus, "{eps x} has a unique focus");
    return;
  }
  t.expect(is_focused(tab, full_monad(x)), "M(x) focused");
  Hyperplane H(x, t.unit_direction());
  t.expect(is_focused(tab, H, x), "M(x) cap H focused");
  NilElement r = t.positive(20);
  Sphere A(x - r * t.unit_direction(), r);
  t.expect(is_focused(tab, A, x), "M(x) cap A focused");
  t.expect(!unique_focus, "{eps x}: 0 and eps x are both foci");
}

// b = foot(a, U) iff a is equidistant from M(b) cap U; then S(a, ab) touches
// U at b, and a sphere centered a touching U does so at the foot.
void foot_characterization(Trial& t, bool off_foot) {
  auto& tab = t.table();
  Point p = t.point(), n = t.point(9);
  t.require(is_proper(n), "zero normal");
  Hyperplane U(p, n);
  Point a = t.point();
  t.require(apart_from(a, U), "a on U");
  Point b = foot(a, U);
  Point other = b + t.orthogonal_direction(n);
  Point used = off_foot ? other : b;
  t.note("a", a);
  t.note("U.point", p);
  t.note("U.normal", n);
  t.note("b", used);
  t.expect(equidistant_on_slice(tab, a, monad_slice(U, used)), "a equidistant from M(b) cap U");
  t.expect(touches(tab, Sphere(a, dist(a, used)), U, used), "S(a, ab) touches U at b");
  if (off_foot) return;
  t.expect(!equidistant_on_slice(tab, a, monad_slice(U, other)), "not equidistant at a non-foot");
  t.expect(!touches(tab, Sphere(a, dist(a, other)), U, other), "no touching at a non-foot");
  // Linear version: a proper, U through 0; a orthogonal to U iff |a| = |a + d|.
  Point w = t.orthogonal_direction(n);
  Point orth = t.positive(9) * n;
  Slice lin{Point::zero(t.dim()), {w}};
  t.expect(equidistant_on_slice(tab, orth, lin), "a orthogonal to U: |a + d| = |a|");
  t.expect(!equidistant_on_slice(tab, orth + w, lin), "a not orthogonal to U: |a + d| varies");
  if (t.dim() >= 3) {
    // Codimension two: a line through p with direction w.
    Point q = p + (dot(a - p, w) / norm2(w)) * w;
    t.expect(equidistant_on_slice(tab, a, Slice{q, {w}}), "foot on a line");
  }
}

// x, y in A cap B give <x - y, a - b> = 0.
void chord_orthogonality(Trial& t, bool one_sided) {
  Point x = t.point(), y = t.point();
  t.require(apart(x, y), "x, y not apart");
  Point mid = NilElement(Scalar(1, 2)) * (x + y);
  Point a = mid + t.orthogonal_direction(x - y), b = mid + t.positive(9) * t.orthogonal_direction(x - y);
  t.require(apart(a, b) && apart(a, x) && apart(b, x), "degenerate spheres");
  Sphere A(a, dist(a, x)), B(b, dist(b, x));
  // The control moves y off both spheres along the line of centers.
  if (one_sided) y = y + (a - b);
  t.note("x", x);
  t.note("y", y);
  t.note("a", a);
  t.note("b", b);
  t.expect(on_sphere(A, y), "y on A");
  t.expect(on_sphere(B, y), "y on B");
  t.expect(dot(x - y, a - b).is_zero(), "<x - y, a - b> = 0");
}

// Sphere-hyperplane and sphere-sphere touching is focused with a unique
// touching point.
void focused_touching(Trial& t, bool coincide) {
  auto& tab = t.table();
  Point p = t.point(), n = t.unit_direction();
  Hyperplane H(p, n);
  NilElement r = t.positive(20);
  Point b = p + t.orthogonal_direction(n);
  Point a = b + r * n;
  Sphere A(a, r);
  t.note("a", a);
  t.note("b", b);
  t.expect(touches(tab, A, H, b), "A touches H at b");
  t.expect(is_focused(tab, H, b), "touching set focused");
  t.expect(foot(a, H) == b, "touching point is the foot");
  // Any touching point of A and H is a point of A cap H where 2(z - a) is
  // proportional to N, so z = a +- r n; only b lies on H.
  int hits = 0;
  for (int sign : {1, -1}) hits += touches_at(tab, A, H, a + NilElement(sign) * r * n) ? 1 : 0;
  t.expect(hits == 1, "sphere-hyperplane touching point unique");
  // Two spheres touching at b share the touching set with H.
  NilElement s = t.positive(20);
  Sphere C = coincide ? A : Sphere(b - s * n, s);
  t.note("c", C.center);
  t.expect(touches(tab, A, C, b) && touches(tab, C, H, b), "M(b) cap A = M(b) cap H = M(b) cap C");
  int sphere_hits = 0;
  for (int sign : {1, -1}) sphere_hits += touches_at(tab, A, C, a + NilElement(sign) * r * n) ? 1 : 0;
  t.expect(sphere_hits == 1, "sphere-sphere touching point unique");
}

// The unit sphere about (0,0,1) touches the xy-plane at 0 with touching set
// D(2) x {0}, while (eps1, eps2, 0) from distinct batches lies on A cap H
// without being a neighbour of 0.
void red_herring(Trial& t, bool same_batch) {
  auto& tab = t.table();
  const std::size_t n = t.dim();
  Point center = Point::zero(n);
  center[2] = 1;
  Sphere A(center, 1);
  Hyperplane H(Point::zero(n), Point::unit(n, 2));
  NilElement e1, e2;
  if (same_batch) {
    auto d = tab.fresh_batch(2, "d");
    e1 = d.generators[0];
    e2 = d.generators[1];
  } else {
    e1 = tab.fresh_batch(1, "eps1").generators[0];
    e2 = tab.fresh_batch(1, "eps2").generators[0];
  }
  Point z = Point::zero(n);
  Point p = z;
  p[0] = e1;
  p[1] = e2;
  t.note("p", p);
  t.expect(touches(tab, A, H, z), "A touches H at 0");
  t.expect(on_sphere(A, p) && on_hyperplane(H, p), "p in A cap H");
  t.expect(!neighbour(z, p), "p not a neighbour of 0");
  t.expect(!(e1 * e2).is_zero(), "eps1 eps2 != 0");
}

template <auto F>
Check make(std::string id, std::string claim, std::size_t min_dim = 2) {
  return Check{std::move(id), std::move(claim), [](Trial& t) { F(t, false); }, [](Trial& t) { F(t, true); },
               min_dim};
}

}  // namespace

void register_model_checks(std::vector<Check>& out) {
  out.push_back(make<sphere_monad_hyperplane>("sphere-monad-hyperplane",
                                              "M(b) cap A equals M(b) cap H for H orthogonal to b - a"));
  out.push_back(make<hyperplane_monad_containment>("hyperplane-monad-containment",
                                                   "M(b) cap H in K implies H = K for hyperplanes"));
  out.push_back(make<monad_focused>("monad-focused", "monads and figure monads are focused; {eps x} is not"));
  out.push_back(make<foot_characterization>("foot-characterization",
                                            "b is the foot of a iff a is equidistant from M(b) cap U"));
  out.push_back(make<chord_orthogonality>("chord-orthogonality", "x, y in A cap B give <x - y, a - b> = 0"));
  out.push_back(make<focused_touching>("focused-touching",
                                       "sphere-hyperplane and sphere-sphere touching is focused and unique"));
  out.push_back(make<red_herring>("red-herring",
                                  "(eps1, eps2, 0) lies on A cap H but is not a neighbour of the touching point",
                                  3));
}

}  // namespace sdg::suite
