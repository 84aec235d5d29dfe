// Collinearity, interpolation and extrapolation, rays.

#include "check_util.hpp"
#include "sdg/synthetic.hpp"

namespace sdg::suite {

namespace {

using util::small;
using util::touches_at;

struct Triple {
  Point a, b, c;
  NilElement s;  // bc
};

// [abc] by construction: c = a |>_s b.
Triple collinear_triple(Trial& t) {
  Point a = t.point(), b = t.point();
  t.require(apart(a, b), "a, b not apart");
  NilElement s = t.positive();
  return {a, b, extrapolate(a, b, s), s};
}

int count_conditions(BatchTable& tab, const Point& a, const Point& b, const Point& c) {
  int n = 0;
  for (Condition w : kAllConditions) n += collinear_condition(tab, a, b, c, w) ? 1 : 0;
  return n;
}

// All six conditions hold on constructed triples; after a transversal
// infinitesimal push of b, (abc) survives and all six fail.
void collinearity_conditions(Trial& t, bool claim_perturbed) {
  auto& tab = t.table();
  Triple k = collinear_triple(t);
  Point bp = k.b + small(t) * t.orthogonal_direction(k.c - k.a);
  t.note("a", k.a);
  t.note("b", k.b);
  t.note("c", k.c);
  t.note("b'", bp);
  t.expect(triangle_equality(k.a, k.b, k.c), "(abc)");
  t.expect(triangle_equality(k.a, bp, k.c), "(ab'c)");
  if (claim_perturbed) {
    t.expect(count_conditions(tab, k.a, bp, k.c) == 6, "all six conditions on (a,b',c)");
    return;
  }
  for (Condition w : kAllConditions) {
    t.expect(collinear_condition(tab, k.a, k.b, k.c, w), std::string(to_string(w)) + " on (a,b,c)");
    t.expect(!collinear_condition(tab, k.a, bp, k.c, w), std::string(to_string(w)) + " fails on (a,b',c)");
  }
}

// c = a |>_s b is the unique point with bc = s and [abc]; b = a <|_s c
// likewise for s < ac; the two constructions invert each other.
void extrapolation_characterization(Trial& t, bool shifted) {
  auto& tab = t.table();
  Triple k = collinear_triple(t);
  Point c = shifted ? extrapolate(k.a, k.b, k.s + NilElement(Scalar(1, 5))) : k.c;
  t.note("a", k.a);
  t.note("b", k.b);
  t.note("s", k.s);
  t.note("c", c);
  t.expect(dist(k.b, c) == k.s, "bc = s");
  t.expect(collinear(tab, k.a, k.b, c), "[abc]");
  t.expect(extrapolation_pinned(tab, k.a, k.b, c, k.s), "c locally unique");
  t.expect(interpolate(k.a, c, k.s) == k.b, "a <|_s (a |>_s b) = b");
  if (shifted) return;
  Point c2 = t.point();
  t.require(apart(k.a, c2), "a, c not apart");
  NilElement ac = dist(k.a, c2);
  NilElement s2 = ac * NilElement(Scalar(t.integer(1, 99), 100));
  Point b2 = interpolate(k.a, c2, s2);
  t.note("c2", c2);
  t.note("s2", s2);
  t.expect(dist(b2, c2) == s2 && collinear(tab, k.a, b2, c2), "a <|_s c has bc = s and [abc]");
  t.expect(interpolation_pinned(tab, k.a, b2, c2, s2), "a <|_s c locally unique");
  t.expect(extrapolate(k.a, b2, s2) == c2, "a |>_s (a <|_s c) = c");
}

// Two of [abc], [abd], [acd], [bcd] give all four.
void collinearity_associativity_check(Trial& t, bool perturbed) {
  auto& tab = t.table();
  Triple k = collinear_triple(t);
  NilElement u = t.positive();
  // Chain the next point from a random earlier pair.
  Point d;
  switch (t.integer(0, 2)) {
    case 0: d = extrapolate(k.b, k.c, u); break;
    case 1: d = extrapolate(k.a, k.c, u); break;
    default: d = extrapolate(k.a, k.b, k.s + u); break;
  }
  if (perturbed) d = d + small(t) * t.orthogonal_direction(d - k.a);
  t.note("a", k.a);
  t.note("b", k.b);
  t.note("c", k.c);
  t.note("d", d);
  auto rec = collinearity_associativity(tab, k.a, k.b, k.c, d);
  static const char* names[] = {"[abc]", "[abd]", "[acd]", "[bcd]"};
  for (int i = 0; i < 4; ++i) t.expect(rec.holds[i], names[i]);
  t.expect(rec.closed, "two of four imply four");
  if (perturbed) return;
  // A generic quadruple triggers nothing and stays closed.
  Point p = t.point(), q = t.point();
  t.require(apart(p, k.a) && apart(p, k.b) && apart(q, k.a) && apart(q, k.b) && apart(p, q), "not apart");
  auto generic = collinearity_associativity(tab, k.a, k.b, p, q);
  t.expect(generic.closed, "generic quadruple closed");
}

// [a'ab] gives a' |>_s b = a |>_s b.
void source_invariance(Trial& t, bool off_line) {
  auto& tab = t.table();
  Point ap = t.point(), a = t.point();
  t.require(apart(ap, a), "a', a not apart");
  Point b = extrapolate(ap, a, t.positive());
  if (off_line) ap = ap + small(t) * t.orthogonal_direction(b - ap);
  NilElement s = t.positive();
  t.note("a'", ap);
  t.note("a", a);
  t.note("b", b);
  t.note("s", s);
  if (!off_line) t.expect(collinear(tab, ap, a, b), "[a'ab]");
  t.expect(extrapolate(ap, b, s) == extrapolate(a, b, s), "a' |>_s b = a |>_s b");
}

// Centers of touching spheres are aligned with the touching point, and
// [abc] at each position is touching of the matching sphere pair.
void touching_centers_aligned(Trial& t, bool secant) {
  auto& tab = t.table();
  bool external = t.integer(0, 1) == 1;
  auto pair = detail::touching_pair(t, external);
  Point z = pair.point;
  Sphere second = pair.second;
  if (secant) {
    // Swing the second sphere about z: still through z, no longer touching.
    Point u = inverse(pair.first.radius) * (z - pair.first.center);
    Point w = util::transversal_unit(t, u);
    second = Sphere(z - second.radius * w, second.radius);
  }
  Point a = pair.first.center, c = second.center;
  t.note("a", a);
  t.note("c", c);
  t.note("z", z);
  t.expect(touches_at(tab, pair.first, second, z), "spheres touch at z");
  t.require(apart(a, c), "concentric");
  t.expect(aligned(tab, a, z, c), "centers aligned with z");
  if (secant) return;

  Triple k = collinear_triple(t);
  NilElement ab = dist(k.a, k.b), ac = dist(k.a, k.c), bc = k.s;
  t.expect(touches_at(tab, Sphere(k.b, ab), Sphere(k.c, ac), k.a), "[abc] at a: S(b,ab) touches S(c,ac)");
  t.expect(touches_at(tab, Sphere(k.a, ab), Sphere(k.c, bc), k.b), "[abc] at b: S(a,ab) touches S(c,bc)");
  t.expect(touches_at(tab, Sphere(k.a, ac), Sphere(k.b, bc), k.c), "[abc] at c: S(a,ac) touches S(b,bc)");
  Point bp = k.b + small(t) * t.orthogonal_direction(k.c - k.a);
  t.expect(!touches_at(tab, Sphere(k.a, dist(k.a, bp)), Sphere(k.c, dist(bp, k.c)), bp),
           "(ab'c) alone: no touching at b'");
}

// a |>_t (a |>_s b) = a |>_(s+t) b.
void ray_semigroup(Trial& t, bool wrong_director) {
  Point a = t.point(), b = t.point();
  t.require(apart(a, b), "a, b not apart");
  NilElement s = t.positive(), u = t.positive();
  Point c = extrapolate(a, b, s);
  Point from = a;
  if (wrong_director) {
    from = a + t.orthogonal_direction(b - a);
    t.require(apart(from, c), "director meets c");
  }
  t.note("a", a);
  t.note("b", b);
  t.note("s", s);
  t.note("t", u);
  t.expect(extrapolate(from, c, u) == extrapolate(a, b, s + u), "a |>_t (a |>_s b) = a |>_(s+t) b");
}

// Rays are isometries and any three of their points are aligned.
void ray_isometry(Trial& t, bool parabola) {
  auto& tab = t.table();
  Point a = t.point(), b = t.point();
  t.require(apart(a, b), "a, b not apart");
  Ray ray(a, b);
  auto curve = [&](const NilElement& s) {
    if (!parabola) return ray.eval(s);
    Point p = Point::zero(t.dim());
    p[0] = s;
    p[1] = s * s;
    return p;
  };
  std::array<NilElement, 3> s{t.positive(), t.positive(), t.positive()};
  std::sort(s.begin(), s.end(), pure_less);
  t.require(pure_less(s[0], s[1]) && pure_less(s[1], s[2]), "parameters coincide");
  Point x = curve(s[0]), y = curve(s[1]), z = curve(s[2]);
  t.note("x", x);
  t.note("y", y);
  t.note("z", z);
  t.expect(dist(x, y) == s[1] - s[0], "dist(x,y) = s2 - s1");
  t.expect(dist(y, z) == s[2] - s[1], "dist(y,z) = s3 - s2");
  t.expect(dist(x, z) == s[2] - s[0], "dist(x,z) = s3 - s1");
  t.expect(collinear(tab, x, y, z), "[xyz]");
}

// s -> (s, eps s^2) is distance preserving on triples but not a ray.
void non_ray_isometry(Trial& t, bool eps_zero) {
  auto& tab = t.table();
  NilElement eps = eps_zero ? NilElement(0) : small(t);
  auto curve = [&](const NilElement& s) {
    Point p = Point::zero(t.dim());
    p[0] = s;
    p[1] = eps * s * s;
    return p;
  };
  std::array<NilElement, 3> s{t.rational(), t.rational(), t.rational()};
  std::sort(s.begin(), s.end(), pure_less);
  t.require(pure_less(s[0], s[1]) && pure_less(s[1], s[2]), "parameters coincide");
  Point x = curve(s[0]), y = curve(s[1]), z = curve(s[2]);
  t.note("eps", eps);
  t.note("x", x);
  t.note("y", y);
  t.note("z", z);
  t.expect(dist(x, y) == s[1] - s[0] && dist(y, z) == s[2] - s[1], "isometric on the triple");
  t.expect(triangle_equality(x, y, z), "(xyz)");
  t.expect(!collinear(tab, x, y, z), "not [xyz]");
}

template <auto F>
Check make(std::string id, std::string claim) {
  return Check{std::move(id), std::move(claim), [](Trial& t) { F(t, false); }, [](Trial& t) { F(t, true); }};
}

}  // namespace

void register_synthetic_checks(std::vector<Check>& out) {
  out.push_back(make<collinearity_conditions>(
      "collinearity-conditions", "six conditions hold on [abc] and fail on a transversal push of b"));
  out.push_back(make<extrapolation_characterization>(
      "extrapolation-characterization", "a |>_s b and a <|_s c are characterized by bc = s and [abc]"));
  out.push_back(make<collinearity_associativity_check>("collinearity-associativity",
                                                       "two of [abc], [abd], [acd], [bcd] imply all four"));
  out.push_back(make<source_invariance>("extrapolation-source-invariance", "[a'ab] gives a' |>_s b = a |>_s b"));
  out.push_back(make<touching_centers_aligned>("touching-centers-aligned",
                                               "centers of touching spheres are aligned with the touching point"));
  out.push_back(make<ray_semigroup>("ray-semigroup", "a |>_t (a |>_s b) = a |>_(s+t) b"));
  out.push_back(make<ray_isometry>("ray-isometry", "rays preserve distance and have aligned triples"));
  out.push_back(make<non_ray_isometry>("non-ray-isometry", "s -> (s, eps s^2) satisfies (xyz) but not [xyz]"));
}

}  // namespace sdg::suite
