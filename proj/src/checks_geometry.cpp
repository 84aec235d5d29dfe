// Metric and neighbour basics, and the sphere-touching axioms.

#include "check_util.hpp"
#include "sdg/synthetic.hpp"

namespace sdg::suite {

namespace {

using util::slice_in;
using util::small;
using util::touches_at;

// a = (-3,0), b' = (0, eps), c = (4,0), padded with zeros.
void basic_picture(Trial& t, bool use_perturbed) {
  auto& tab = t.table();
  NilElement eps = tab.fresh_batch(1, "eps").generators[0];
  Point a = Point::zero(t.dim()), b = Point::zero(t.dim()), c = Point::zero(t.dim());
  a[0] = -3;
  c[0] = 4;
  Point bp = b;
  bp[1] = eps;
  t.note("a", a);
  t.note("b'", bp);
  t.note("c", c);
  t.expect(dist(a, bp) == NilElement(3), "dist(a,b') = 3");
  t.expect(dist(bp, c) == NilElement(4), "dist(b',c) = 4");
  t.expect(triangle_equality(a, bp, c), "(ab'c)");
  t.expect(triangle_equality(a, b, c), "(abc)");
  t.expect(collinear(tab, a, b, c), "[abc]");
  if (use_perturbed) {
    // The taut string is not a ruler: claiming [ab'c] must fail.
    t.expect(collinear(tab, a, bp, c), "[ab'c]");
  } else {
    t.expect(!collinear(tab, a, bp, c), "not [ab'c]");
  }
}

// x < y and eps ~ 0 give x + eps < y.
void order_robustness(Trial& t, bool macroscopic) {
  NilElement x = t.rational(), y = t.rational();
  t.require(x.pure_sign() != y.pure_sign() || !(x == y), "x = y");
  if (pure_less(y, x)) std::swap(x, y);
  t.require(pure_less(x, y), "x = y");
  NilElement eps = macroscopic ? y - x : small(t);
  t.note("x", x);
  t.note("y", y);
  t.note("eps", eps);
  t.expect(pure_less(x + eps, y), "x + eps < y");
  t.expect(pure_less(x - eps, y), "x - eps < y");
}

// x # y and y ~ y' give x # y'; x # y and x ~ y exclude each other.
void apart_neighbour(Trial& t, bool far_move) {
  Point x = t.point(), y = t.point();
  t.require(apart(x, y), "x, y not apart");
  Point dy = Point::zero(t.dim());
  auto batch = t.table().fresh_batch(t.dim(), "d");
  for (std::size_t i = 0; i < t.dim(); ++i) dy[i] = t.rational(9) * batch.generators[i];
  Point yp = far_move ? x : y + dy;
  t.note("x", x);
  t.note("y", y);
  t.note("y'", yp);
  t.expect(!neighbour(x, y), "x # y excludes x ~ y");
  t.expect(neighbour(y, yp), "y ~ y'");
  t.expect(apart(x, yp), "x # y'");
  t.expect(apart(yp, x), "y' # x");
}

// dist is symmetric and positive on apart pairs; a neighbour of y moves the
// distance by an infinitesimal only.
void metric_symmetry(Trial& t, bool neighbours) {
  Point x = t.point(), y = t.point();
  t.require(apart(x, y), "x, y not apart");
  if (neighbours) {
    // Violates the apartness hypothesis; dist is undefined there.
    auto batch = t.table().fresh_batch(t.dim(), "d");
    y = x;
    for (std::size_t i = 0; i < t.dim(); ++i) y[i] += batch.generators[i];
  }
  t.note("x", x);
  t.note("y", y);
  NilElement xy = dist(x, y), yx = dist(y, x);
  t.expect(xy == yx, "xy = yx");
  t.expect(xy.pure_sign() > 0, "xy > 0");
  t.expect(xy * xy == dist2(x, y), "xy^2 = |x - y|^2");
  NilElement eps = small(t);
  Point y2 = y;
  y2[0] += eps;
  t.expect((dist(x, y2) - xy).pure_sign() == 0, "distance changes by an infinitesimal");
}

// Containment of monad intersections implies equality.
void sphere_monad_dimension(Trial& t, bool point_figure) {
  auto& tab = t.table();
  Point a = t.point(), u = t.unit_direction();
  NilElement r = t.positive(20), s = t.positive(20);
  Point b = a + r * u;
  Sphere A(a, r);
  int kind = static_cast<int>(t.integer(0, 2));
  Point c = kind == 0 ? b + s * u : kind == 1 ? b - s * u : b + s * util::transversal_unit(t, u);
  t.require(apart(a, c), "concentric");
  Sphere C(c, s);
  t.note("a", a);
  t.note("r", r);
  t.note("b", b);
  t.note("c", c);
  t.note("s", s);
  t.note("kind", kind == 0 ? "external" : kind == 1 ? "internal" : "transversal");
  auto in_A = [&](const Point& p) { return on_figure(A, p); };
  auto in_C = [&](const Point& p) { return on_figure(C, p); };
  if (point_figure) {
    // {b} has lower dimension: M(b) cap {b} lies in C, but not conversely.
    Slice singleton{b, {}};
    auto at_b = [&](const Point& p) { return p == b; };
    bool contained = slice_in(tab, singleton, in_C);
    t.expect(!contained || slice_in(tab, monad_slice(C, b), at_b), "containment implies equality");
    return;
  }
  bool ac = slice_in(tab, monad_slice(A, b), in_C);
  bool ca = slice_in(tab, monad_slice(C, b), in_A);
  t.expect(!ac || ca, "M(b)cap A in C implies M(b)cap C in A");
  t.expect(!ca || ac, "M(b)cap C in A implies M(b)cap A in C");
  t.expect(ac == (kind != 2), "containment holds exactly for the tangent pairs");
  t.expect(ac == touches(tab, A, C, b), "containment agrees with touching");
  // The same for the tangent hyperplane through b.
  Hyperplane H(b, u);
  auto in_H = [&](const Point& p) { return on_figure(H, p); };
  t.expect(slice_in(tab, monad_slice(A, b), in_H) && slice_in(tab, monad_slice(H, b), in_A),
           "sphere and tangent hyperplane: containment both ways");
}

// Touching spheres with apart centers touch in a unique, focused point.
void sphere_touching_focused(Trial& t, bool same_sphere) {
  auto& tab = t.table();
  bool external = t.integer(0, 1) == 1;
  auto pair = detail::touching_pair(t, external);
  Sphere A = pair.first;
  Sphere C = same_sphere ? pair.first : pair.second;
  Point u = (pair.point - A.center);
  u = inverse(A.radius) * u;
  t.note("A.center", A.center);
  t.note("A.radius", A.radius);
  t.note("C.center", C.center);
  t.note("C.radius", C.radius);
  t.note("z", pair.point);
  t.expect(touches_at(tab, A, C, pair.point), "touches at z");
  t.expect(is_focused(tab, A, pair.point), "M(z) cap A is focused");
  t.expect(is_focused(tab, C, pair.point), "M(z) cap C is focused");
  // A touching point y needs 2(y - a) proportional to 2(y - c), so y lies on
  // the line of the centers: y = a +- R u.  Exactly one of them may touch.
  int touching = 0;
  for (int sign : {1, -1}) {
    Point y = A.center + NilElement(sign) * A.radius * u;
    touching += touches_at(tab, A, C, y) ? 1 : 0;
  }
  t.expect(touching == 1, "unique touching point");
}

// b in A cap C and M(b) cap A in C make b the touching point.
void one_sided_touching(Trial& t, bool transversal) {
  auto& tab = t.table();
  Point a = t.point(), u = t.unit_direction();
  NilElement r = t.positive(20), s = t.positive(20);
  Point b = a + r * u;
  Sphere A(a, r);
  Point dir = transversal ? util::transversal_unit(t, u) : (t.integer(0, 1) ? u : -u);
  Point c = b + s * dir;
  t.require(apart(a, c), "concentric");
  Sphere C(c, s);
  t.note("a", a);
  t.note("b", b);
  t.note("c", c);
  auto in_C = [&](const Point& p) { return on_figure(C, p); };
  bool hyp = slice_in(tab, monad_slice(A, b), in_C);
  t.note("hypothesis", hyp ? "holds" : "fails");
  // The control violates the hypothesis and asserts the conclusion anyway.
  if (!transversal) t.expect(hyp, "M(b) cap A in C");
  t.expect(touches(tab, A, C, b), "A and C touch at b");
  t.expect(is_focused(tab, A, b), "touching set is focused");
}

// S(a,r) and S(c,s) with ac > r touch iff ac = r + s; their touching point
// is a <|_s c.
void external_touching(Trial& t, bool mismatch) {
  auto& tab = t.table();
  Point a = t.point(), u = t.unit_direction();
  NilElement r = t.positive(20), s = t.positive(20);
  Point c = a + (r + s) * u;
  NilElement s_used = mismatch ? s + NilElement(Scalar(1, 7)) : s;
  Sphere A(a, r), C(c, s_used);
  Point b = interpolate(a, c, s_used);
  t.note("a", a);
  t.note("r", r);
  t.note("c", c);
  t.note("s", s_used);
  t.note("b", b);
  t.expect(touches_at(tab, A, C, b), "touch at a <|_s c");
  t.expect(is_focused(tab, A, b), "focused");
  t.expect(triangle_equality(a, b, c), "(abc)");
  bool formula = false;
  try {
    formula = touching_point_external(A, C) == b;
  } catch (const NotTouchingError&) {
  }
  t.expect(formula, "touching point formula");
  if (mismatch) return;
  // Converse direction on a secant pair through a common point z.
  Point z = a + r * u;
  Point w = util::transversal_unit(t, u);
  Sphere C2(z + s * w, s);
  t.require(apart(a, C2.center), "concentric");
  NilElement ac2 = dist(a, C2.center);
  t.require(pure_less(r, ac2), "hypothesis ac > r fails");
  t.expect(touches(tab, A, C2, z) == (ac2 == r + s), "touching iff ac = r + s (secant pair)");
}

// S(a, r+s) and S(b,s) with ab < r + s touch iff ab = r; their touching
// point is a |>_s b.
void internal_touching(Trial& t, bool mismatch) {
  auto& tab = t.table();
  Point a = t.point(), u = t.unit_direction();
  NilElement r = t.positive(20), s = t.positive(20);
  Point b = a + r * u;
  NilElement s_used = mismatch ? s + NilElement(Scalar(1, 7)) : s;
  Sphere A(a, r + s), B(b, s_used);
  Point c = extrapolate(a, b, s);
  t.note("a", a);
  t.note("b", b);
  t.note("r", r);
  t.note("s", s_used);
  t.note("c", c);
  t.expect(touches_at(tab, A, B, c), "touch at a |>_s b");
  t.expect(is_focused(tab, B, c), "focused");
  t.expect(triangle_equality(a, b, c), "(abc)");
  bool formula = false;
  try {
    formula = touching_point_internal(A, B) == c;
  } catch (const NotTouchingError&) {
  }
  t.expect(formula, "touching point formula");
  if (mismatch) return;
  Point z = a + (r + s) * u;
  Point w = util::transversal_unit(t, u);
  Point b2 = z - s * w;
  t.require(apart(a, b2), "concentric");
  NilElement ab2 = dist(a, b2);
  t.require(pure_less(ab2, r + s), "hypothesis ab < r + s fails");
  t.expect(touches(tab, A, Sphere(b2, s), z) == (ab2 == r), "touching iff ab = r (secant pair)");
}

template <auto F>
Check make(std::string id, std::string claim) {
  return Check{std::move(id), std::move(claim), [](Trial& t) { F(t, false); }, [](Trial& t) { F(t, true); }};
}

}  // namespace

void register_geometry_checks(std::vector<Check>& out) {
  out.push_back(make<basic_picture>("basic-picture",
                                    "a=(-3,0), b'=(0,eps), c=(4,0): (ab'c) holds, [ab'c] fails, [abc] holds"));
  out.push_back(make<order_robustness>("order-robustness", "x < y and eps ~ 0 give x + eps < y"));
  out.push_back(make<apart_neighbour>("apart-neighbour-compatibility",
                                      "x # y and y ~ y' give x # y'; # and ~ are incompatible"));
  out.push_back(make<metric_symmetry>("metric-symmetry", "dist is symmetric and positive on apart pairs"));
  out.push_back(make<sphere_monad_dimension>("sphere-monad-dimension",
                                             "M(b) cap A in M(b) cap C implies equality for spheres"));
  out.push_back(make<sphere_touching_focused>("sphere-touching-focused",
                                              "touching spheres with apart centers touch in one focused point"));
  out.push_back(make<one_sided_touching>("one-sided-touching",
                                         "b' ~ b, b' in A imply b' in C makes b the touching point"));
  out.push_back(make<external_touching>("external-touching",
                                        "S(a,r), S(c,s) with ac > r touch iff ac = r + s, at a <|_s c"));
  out.push_back(make<internal_touching>("internal-touching",
                                        "S(a,r+s), S(b,s) with ab < r + s touch iff ab = r, at a |>_s b"));
}

}  // namespace sdg::suite
