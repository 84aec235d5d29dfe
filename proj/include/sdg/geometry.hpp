#pragma once

// Coordinate space R^n over the nilpotent-extended number line.
//
// Set-level questions (is the monad intersection at b contained in C, do two
// figures touch, is a set focused) are decided on generic elements: a monad
// slice b + sum_k delta_k v_k is evaluated at a fresh batch delta and the
// resulting identities are read off with kl_cancel.

#include <initializer_list>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sdg/nilalg.hpp"

namespace sdg {

class Point {
 public:
  Point() = default;
  explicit Point(std::vector<NilElement> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<NilElement> coords) : coords_(coords) {}

  static Point zero(std::size_t n) { return Point(std::vector<NilElement>(n)); }
  static Point unit(std::size_t n, std::size_t i);

  std::size_t dim() const { return coords_.size(); }
  const NilElement& operator[](std::size_t i) const { return coords_[i]; }
  NilElement& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<NilElement>& coords() const { return coords_; }

  bool is_pure() const;
  /// Pure parts of every coordinate.
  Point pure() const;

  Point operator-() const;
  Point& operator+=(const Point& rhs);
  Point& operator-=(const Point& rhs);
  Point& operator*=(const NilElement& k);

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(const NilElement& k, Point p) { return p *= k; }
  friend bool operator==(const Point& a, const Point& b);

  std::string str(const BatchTable* names = nullptr) const;

 private:
  std::vector<NilElement> coords_;
};

using LinearForm = std::vector<NilElement>;

NilElement dot(const Point& x, const Point& y);
NilElement dot(const LinearForm& f, const Point& x);
NilElement norm2(const Point& x);

/// Some coordinate is invertible.
bool is_proper(const Point& v);
/// y - x is proper.
bool apart(const Point& x, const Point& y);
/// All products (x_i - y_i)(x_j - y_j) vanish.
bool neighbour(const Point& x, const Point& y);

NilElement dist2(const Point& x, const Point& y);
/// Throws DomainError unless x and y are apart.
NilElement dist(const Point& x, const Point& y);

struct Sphere {
  Point center;
  NilElement radius;
  /// Throws DomainError unless the radius is positive.
  Sphere(Point c, NilElement r);
};

struct Hyperplane {
  Point basepoint;
  Point normal;
  /// Throws DomainError unless the normal is proper.
  Hyperplane(Point p, Point n);
};

using Figure = std::variant<Sphere, Hyperplane>;

std::size_t dim(const Figure& f);

/// |p - a|^2 - r^2 for spheres, <p - b, N> for hyperplanes.
NilElement membership(const Figure& f, const Point& p);
bool on_figure(const Figure& f, const Point& p);
bool on_sphere(const Sphere& s, const Point& p);
bool on_hyperplane(const Hyperplane& h, const Point& p);

/// The set b + sum_k delta_k v_k for a generic delta in D(k).
struct Slice {
  Point base;
  std::vector<Point> directions;
};

struct GenericPoint {
  Point point;
  BatchId batch = 0;
};

/// The whole monad M(b).
Slice full_monad(const Point& b);
/// M(b) cut by a hyperplane through b with the given proper normal.
Slice orthogonal_slice(const Point& b, const Point& normal);
/// M(b) intersected with F; throws UsageError if b is off F.
Slice monad_slice(const Figure& f, const Point& b);

/// Evaluates a slice at a fresh batch of the right size.
GenericPoint generic_point(BatchTable& table, const Slice& s);

/// Coefficients c with b + d in F iff sum c_i d_i = 0, for generic d in D(n).
LinearForm monad_condition(BatchTable& table, const Figure& f, const Point& b);

/// lambda with f2 = lambda * f1 and lambda invertible, if one exists.
std::optional<NilElement> invertible_ratio(const LinearForm& f1, const LinearForm& f2);

/// Whether f1(d) = 0 implies f2(d) = 0 on D(n), i.e. f2 = lambda * f1.
/// Throws DegenerateError when f1 is not proper.
bool implies(const LinearForm& f1, const LinearForm& f2);

/// M(b) cap A = M(b) cap B; throws UsageError unless b is on both.
bool touches(BatchTable& table, const Figure& a, const Figure& b, const Point& z);

/// Every element of the slice lies on g.
bool slice_contained(BatchTable& table, const Slice& s, const Figure& g);

/// Rank of the pure-part matrix; a matrix over the local ring has a left
/// inverse iff this equals its column count.
std::size_t pure_rank(const std::vector<LinearForm>& rows);

/// Whether the identities conditions = 0, each linear in the generators of
/// `batch`, force every generator of the batch to vanish.
bool forces_zero(const BatchTable& table, const std::vector<NilElement>& conditions, BatchId batch);

/// The slice has exactly one element neighbouring all of its elements, namely
/// its base.  Decided by the cancellation argument for monads: a candidate
/// x = b + V xi neighbouring a generic b + V delta must have xi = 0.
bool is_focused(BatchTable& table, const Slice& s);
bool is_focused(BatchTable& table, const Figure& f, const Point& b);

/// <a - p, N> invertible.
bool apart_from(const Point& a, const Hyperplane& u);
/// Orthogonal projection; throws DegenerateError when a lies on U.
Point foot(const Point& a, const Hyperplane& u);

/// |a - x|^2 takes the same value at every element of the slice.
bool equidistant_on_slice(BatchTable& table, const Point& a, const Slice& s);

/// b = a + r/(r+s) (c - a); throws NotTouchingError unless ac = r + s.
Point touching_point_external(const Sphere& a, const Sphere& c);
/// c = a + R/(R-s) (b - a) for A = S(a,R), B = S(b,s); throws
/// NotTouchingError unless ab = R - s > 0.
Point touching_point_internal(const Sphere& a, const Sphere& b);

}  // namespace sdg
