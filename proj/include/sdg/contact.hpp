#pragma once

// Contact elements, wavefronts, and sampled hypersurfaces.
//
// A contact element at b is the set M(b) cap H for the hyperplane H through b
// with the stored normal.  Its orientation says where the inside-touching
// spheres live: their centers are b - t*sigma*n/|n|, so the wavefront moves
// along +sigma*n.

#include <string>
#include <vector>

#include "sdg/geometry.hpp"

namespace sdg {

struct ContactElement {
  Point base;
  Point normal;  // unnormalized
  int orientation = 1;
  /// Throws DomainError unless the normal is proper and orientation is +-1.
  ContactElement(Point b, Point n, int sigma);
};

enum class Side { inside, outside };

/// M(b) cap A, oriented so that A is an inside (or outside) representative.
ContactElement contact_from_sphere(const Sphere& a, const Point& b, Side side);

/// The two elements are the same set: equal bases, normals proportional by
/// an invertible factor.
bool same_set(const ContactElement& p, const ContactElement& q);
/// Same set and same transversal orientation.
bool same_oriented(const ContactElement& p, const ContactElement& q);

/// x ~ b and <x - b, n> = 0.
bool contains(const ContactElement& p, const Point& x);
Slice slice_of(const ContactElement& p);

/// sigma * n / |n|
Point unit_normal(const ContactElement& p);
/// The inside-touching sphere of radius t.
Sphere inside_sphere(const ContactElement& p, const NilElement& t);

/// c ⊥ P: every element of P has the same distance to c.  Throws UsageError
/// unless c is apart from the base.
bool orthogonal(BatchTable& table, const Point& c, const ContactElement& p);

/// P |- s: the point at distance s on the positive side.
Point front_step(const ContactElement& p, const NilElement& s);
/// P |= s: the contact element at P |- s with the same normal and orientation.
ContactElement flow_step(const ContactElement& p, const NilElement& s);

/// Same center, radius + t.  Throws DomainError unless t > 0.
Sphere inflate(const Sphere& a, const NilElement& t);

struct Hypersurface {
  std::vector<ContactElement> samples;
};

/// Indices of the samples at which x is orthogonal to the surface.
std::vector<std::size_t> feet_on_surface(BatchTable& table, const Point& x, const Hypersurface& b);

/// Per-sample spot check of the small-s assumption: the front point of sample
/// i must have no other foot within distance s.  Returns the offending sample
/// indices.
std::vector<std::size_t> foot_violations(BatchTable& table, const Hypersurface& b, const NilElement& s);

/// S(b, s) touches both the flowed element and its inside sphere of radius
/// one at P |- s.
bool envelope_touch(BatchTable& table, const ContactElement& p, const NilElement& s);

/// B |- s, sample by sample.  Throws AssumptionError listing the violating
/// samples when foot_violations is nonempty.
Hypersurface parallel_surface(BatchTable& table, const Hypersurface& b, const NilElement& s);

/// Pointwise oriented equality.
bool same_surface(const Hypersurface& x, const Hypersurface& y);

/// Rational points on S(a, radius): Pythagorean parametrization for n = 2,
/// inverse stereographic projection for n >= 3.  `offset` shifts the
/// parameter lattice so that distinct offsets give disjoint sample sets.
std::vector<Point> sphere_samples(const Point& a, const NilElement& radius, std::size_t m, int offset = 0);

/// The m points at angles 2*pi*k/m on a circle, for m in {1, 2, 3, 4, 6, 8, 12};
/// coordinates lie in Q(sqrt 2, sqrt 3).
std::vector<Point> clock_samples(const Point& a, const NilElement& radius, std::size_t m);

Hypersurface sampled_sphere(const Sphere& a, const std::vector<Point>& points, Side side = Side::inside);
/// Samples of a hyperplane at the given points, oriented along +normal.
Hypersurface sampled_hyperplane(const Hyperplane& h, const std::vector<Point>& points);

struct HuygensSample {
  Point b;      // on S(a, r)
  Point c;      // a |>_s b, on S(a, r + s)
  bool forward = false;  // S(b, s) touches S(a, r + s) at c
  bool converse = false; // the touching sphere at c is centred at a <|_s c = b
  bool unique = false;   // c is pinned down by distance and bracket
};

struct HuygensRecord {
  std::vector<HuygensSample> samples;
  std::vector<HuygensSample> converse_samples;  // c sampled on the outer sphere
  bool all_pass() const;
  std::size_t checks() const { return samples.size() + converse_samples.size(); }
};

/// Envelope verification for the spheres S(b, s) with b on S(a, r).
HuygensRecord huygens_sphere_envelope(BatchTable& table, const Point& a, const NilElement& r,
                                      const NilElement& s, const std::vector<Point>& inner,
                                      const std::vector<Point>& outer);

/// Each base lies in the other element and the bases are neighbours.  The
/// neighbour clause in the manifold of contact elements is not modelled.
bool united_position(const ContactElement& p, const ContactElement& q);

}  // namespace sdg
