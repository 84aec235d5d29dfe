// Contact elements, orthogonality, wavefronts, and Huygens envelopes.

#include "check_util.hpp"
#include "sdg/contact.hpp"
#include "sdg/synthetic.hpp"

namespace sdg::suite {

namespace {

using util::small;
using util::touches_at;

int random_orientation(Trial& t) { return t.integer(0, 1) == 1 ? 1 : -1; }

// A contact element at b with a rational unit direction scaled by a random
// nonzero rational, so |n| is rational.
ContactElement random_element(Trial& t, const Point& b) {
  NilElement k = t.rational(9);
  t.require(k.is_invertible(), "zero normal");
  return ContactElement(b, k * t.unit_direction(), random_orientation(t));
}

// With [abc], orthogonality to a contact element at one of the three points
// transfers between the other two.
void orthogonality_transfer(Trial& t, bool perturbed) {
  auto& tab = t.table();
  Point a = t.point(), b = t.point();
  t.require(apart(a, b), "a, b not apart");
  Point c = extrapolate(a, b, t.positive());
  if (perturbed) b = b + small(t) * t.orthogonal_direction(c - a);
  t.note("a", a);
  t.note("b", b);
  t.note("c", c);
  const Point* pts[3] = {&a, &b, &c};
  static const char* names[3] = {"a", "b", "c"};
  for (int at = 0; at < 3; ++at) {
    int i = (at + 1) % 3, j = (at + 2) % 3;
    if (i > j) std::swap(i, j);
    const Point& base = *pts[at];
    // Normal toward the first other point, so that it is orthogonal.
    NilElement k = t.rational(9);
    t.require(k.is_invertible(), "zero normal");
    ContactElement p(base, k * (*pts[i] - base), random_orientation(t));
    bool oi = orthogonal(tab, *pts[i], p), oj = orthogonal(tab, *pts[j], p);
    std::string where = std::string(" at ") + names[at];
    t.expect(oi, std::string(names[i]) + " orthogonal to P" + where);
    t.expect(oi == oj, std::string(names[i]) + " orthogonal iff " + names[j] + " orthogonal" + where);
    if (perturbed) continue;
    // A generic element: neither is orthogonal, so the equivalence still holds.
    ContactElement q = random_element(t, base);
    t.expect(orthogonal(tab, *pts[i], q) == orthogonal(tab, *pts[j], q), "equivalence for a generic P" + where);
  }
}

// P |- s does not depend on the inside-touching representative; a point c
// orthogonal to P on the positive side with bc = s is P |- s.
void front_independence(Trial& t, bool outside) {
  auto& tab = t.table();
  Point b = t.point();
  ContactElement p = random_element(t, b);
  NilElement s = t.positive(), t1 = t.positive(), t2 = t.positive();
  Point n = unit_normal(p);
  Point a1 = b - t1 * n, a2 = outside ? b + t2 * n : b - t2 * n;
  Point front = front_step(p, s);
  t.note("b", b);
  t.note("n", p.normal);
  t.note("sigma", p.orientation == 1 ? "+1" : "-1");
  t.note("a1", a1);
  t.note("a2", a2);
  t.note("front", front);
  t.expect(touches(tab, inside_sphere(p, t1), Sphere(a2, t2), b), "representatives touch at b");
  t.expect(extrapolate(a1, b, s) == front, "a1 |>_s b = P |- s");
  t.expect(extrapolate(a2, b, s) == front, "a2 |>_s b = P |- s");
  t.expect(dist(b, front) == s && orthogonal(tab, front, p), "P |- s orthogonal to P at distance s");
  // S(c, s) touches P from the outside: its center is on the positive side.
  t.expect(same_set(contact_from_sphere(Sphere(front, s), b, Side::outside), p) &&
               same_oriented(contact_from_sphere(Sphere(front, s), b, Side::outside), p),
           "S(P |- s, s) touches P from the outside");
}

// The t-inflations of internally touching spheres touch internally at
// a |>_(s+t) b = a |>_t (a |>_s b) = a |>_t c = b |>_t c.
void inflation_touching(Trial& t, bool external) {
  auto& tab = t.table();
  auto pair = detail::touching_pair(t, external);
  NilElement inc = t.positive(20);
  Sphere A = inflate(pair.first, inc), B = inflate(pair.second, inc);
  Point a = pair.first.center, b = pair.second.center, c = pair.point;
  NilElement s = pair.second.radius;
  t.note("a", a);
  t.note("b", b);
  t.note("c", c);
  t.note("t", inc);
  std::optional<Point> d;
  try {
    d = touching_point_internal(A, B);
  } catch (const NotTouchingError&) {
  }
  t.expect(d && touches_at(tab, A, B, *d), "inflated spheres touch internally");
  if (!d) return;
  t.note("d", *d);
  t.expect(*d == extrapolate(a, b, s + inc), "d = a |>_(s+t) b");
  t.expect(*d == extrapolate(a, extrapolate(a, b, s), inc), "d = a |>_t (a |>_s b)");
  t.expect(*d == extrapolate(a, c, inc), "d = a |>_t c");
  t.expect(*d == extrapolate(b, c, inc), "d = b |>_t c");
}

// (P |= s) |= t = P |= (s + t), and P |= s = M(P |- s) cap S(a, r + s) for
// any inside representative S(a, r).
void flow_semigroup(Trial& t, bool outside) {
  auto& tab = t.table();
  Point b = t.point();
  ContactElement p = random_element(t, b);
  NilElement s = t.positive(), u = t.positive(), r = t.positive();
  Point n = unit_normal(p);
  Point a = outside ? b + r * n : b - r * n;
  t.note("b", b);
  t.note("n", p.normal);
  t.note("a", a);
  auto twice = flow_step(flow_step(p, s), u), once = flow_step(p, s + u);
  t.expect(same_oriented(twice, once), "(P |= s) |= t = P |= (s+t)");
  t.expect(is_focused(tab, slice_of(once)), "P |= (s+t) is focused");
  Point c = extrapolate(a, b, s);
  auto via = contact_from_sphere(Sphere(a, r + s), c, Side::inside);
  t.expect(c == front_step(p, s), "focus of P |= s is P |- s");
  t.expect(same_oriented(via, flow_step(p, s)), "P |= s = M(P |- s) cap S(a, r+s)");
}

// Every S(b, s), b on S(a, r), touches S(a, r + s) at a |>_s b and every
// point of S(a, r + s) is touched by exactly one of them.
void huygens_sphere(Trial& t, bool wrong_radius) {
  auto& tab = t.table();
  Point a = t.point();
  NilElement r = t.positive(20), s = t.positive(20);
  std::size_t m = static_cast<std::size_t>(t.integer(3, 6));
  t.note("a", a);
  t.note("r", r);
  t.note("s", s);
  auto inner = sphere_samples(a, r, m, static_cast<int>(t.integer(0, 3)));
  if (wrong_radius) {
    // The envelope claimed at radius r + s + 1/3.
    Sphere E(a, r + s + NilElement(Scalar(1, 3)));
    for (const auto& b : inner) {
      t.expect(touches_at(tab, Sphere(b, s), E, extrapolate(a, b, s)), "S(b,s) touches the envelope");
    }
    return;
  }
  auto rec = huygens_sphere_envelope(tab, a, r, s, inner, sphere_samples(a, r + s, m, 4));
  for (std::size_t i = 0; i < rec.samples.size(); ++i) {
    const auto& k = rec.samples[i];
    std::string at = " (inner sample " + std::to_string(i) + ")";
    t.expect(k.forward, "S(b,s) touches S(a,r+s) at a |>_s b" + at);
    t.expect(k.unique, "touching point pinned by distance and bracket" + at);
  }
  for (std::size_t i = 0; i < rec.converse_samples.size(); ++i) {
    const auto& k = rec.converse_samples[i];
    std::string at = " (outer sample " + std::to_string(i) + ")";
    t.expect(k.forward && k.converse, "c touched by S(a <|_s c, s)" + at);
    t.expect(k.unique, "touching sphere unique" + at);
  }
}

Hypersurface random_surface(Trial& t, bool sphere, Sphere* a_out) {
  std::size_t m = static_cast<std::size_t>(t.integer(3, 6));
  if (sphere) {
    Sphere A(t.point(), t.positive(20));
    *a_out = A;
    return sampled_sphere(A, sphere_samples(A.center, A.radius, m, static_cast<int>(t.integer(0, 3))));
  }
  Point p = t.point();
  Point n = t.rational(9) * t.unit_direction();
  t.require(is_proper(n), "zero normal");
  Hyperplane H(p, n);
  std::vector<Point> pts;
  for (std::size_t i = 0; i < m; ++i) {
    Point q = p + t.orthogonal_direction(n);
    for (const auto& o : pts) t.require(apart(o, q), "repeated sample");
    pts.push_back(q);
  }
  return sampled_hyperplane(H, pts);
}

// B |- (s + t) = (B |- s) |- t sample by sample, and B |- s envelopes the
// spheres S(b, s).
void parallel_surface_check(Trial& t, bool inward_to_center) {
  auto& tab = t.table();
  bool sphere = inward_to_center || t.integer(0, 1) == 1;
  Sphere A(Point::zero(t.dim()), 1);
  Hypersurface B = random_surface(t, sphere, &A);
  NilElement s = t.positive(20), u = t.positive(20);
  if (inward_to_center) {
    // Flow the inward-oriented sphere to its center, where every sample is
    // a foot at distance s: the small-s assumption fails.
    B = sampled_sphere(A, sphere_samples(A.center, A.radius, 4), Side::outside);
    s = A.radius;
  }
  t.note("kind", sphere ? "sphere" : "hyperplane");
  t.note("s", s);
  t.note("t", u);
  Hypersurface C = parallel_surface(tab, B, s);
  t.expect(same_surface(parallel_surface(tab, B, s + u), parallel_surface(tab, C, u)),
           "B |- (s+t) = (B |- s) |- t");
  for (std::size_t i = 0; i < B.samples.size(); ++i) {
    std::string at = " (sample " + std::to_string(i) + ")";
    t.expect(envelope_touch(tab, B.samples[i], s), "S(b,s) touches B |- s" + at);
    t.expect(dist(B.samples[i].base, C.samples[i].base) == s, "bc = s" + at);
    std::vector<std::size_t> feet = feet_on_surface(tab, C.samples[i].base, B);
    t.expect(std::find(feet.begin(), feet.end(), i) != feet.end(), "b is a foot of c" + at);
    if (sphere) t.expect(on_sphere(inflate(A, s), C.samples[i].base), "B |- s lies on S(a, r+s)" + at);
  }
}

// Contact elements of a hypersurface at neighbouring points are in united
// position.
void united_position_check(Trial& t, bool far_point) {
  auto& tab = t.table();
  Sphere A(t.point(), t.positive(20));
  auto pts = sphere_samples(A.center, A.radius, 2, static_cast<int>(t.integer(0, 3)));
  Point b = pts[0];
  Point bp = far_point ? pts[1] : generic_point(tab, monad_slice(A, b)).point;
  t.note("b", b);
  t.note("b'", bp);
  auto p = contact_from_sphere(A, b, Side::inside), q = contact_from_sphere(A, bp, Side::inside);
  t.expect(united_position(p, q), "P and P' in united position");
  t.expect(contains(p, bp) && contains(q, b), "b' in P and b in P'");
}

template <auto F>
Check make(std::string id, std::string claim) {
  return Check{std::move(id), std::move(claim), [](Trial& t) { F(t, false); }, [](Trial& t) { F(t, true); }};
}

}  // namespace

void register_contact_checks(std::vector<Check>& out) {
  out.push_back(make<orthogonality_transfer>(
      "orthogonality-transfer", "with [abc], orthogonality to a contact element at one point transfers"));
  out.push_back(make<front_independence>("front-representative-independence",
                                         "P |- s does not depend on the inside-touching sphere"));
  out.push_back(make<inflation_touching>("inflation-touching",
                                         "inflated internally touching spheres touch at a |>_(s+t) b"));
  out.push_back(make<flow_semigroup>("flow-semigroup", "(P |= s) |= t = P |= (s + t)"));
  out.push_back(make<huygens_sphere>("huygens-sphere", "S(a, r+s) is an envelope of S(b, s), b on S(a, r)"));
  out.push_back(make<parallel_surface_check>("parallel-surface",
                                             "B |- (s+t) = (B |- s) |- t and B |- s envelopes S(b, s)"));
  out.push_back(make<united_position_check>("united-position",
                                            "neighbouring contact elements of a hypersurface are united"));
}

}  // namespace sdg::suite
