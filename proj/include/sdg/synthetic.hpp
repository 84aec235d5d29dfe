#pragma once

// Interpolation, extrapolation, and collinearity built from distances.
//
// a <|_s c and a |>_s b are given by affine formulas; what makes them the
// touching points of the synthetic construction is checked separately
// (distance s plus the bracket [abc], and local uniqueness of that pair of
// conditions).

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "sdg/geometry.hpp"

namespace sdg {

/// (abc): ab + bc = ac.  Throws UsageError unless mutually apart.
bool triangle_equality(const Point& a, const Point& b, const Point& c);

/// a <|_s c = c + (s/ac)(a - c).  Needs 0 < s < ac.
Point interpolate(const Point& a, const Point& c, const NilElement& s);
/// a |>_s b = b + (s/ab)(b - a).  Needs s > 0.
Point extrapolate(const Point& a, const Point& b, const NilElement& s);

/// The six generic implications characterizing collinearity.  The letter
/// is the point that moves to a neighbour; variant 1 takes the alphabetically
/// first remaining point as hypothesis and the other as conclusion, variant 2
/// swaps them.  So b1 reads: b' ~ b and ab' = ab imply b'c = bc.
enum class Condition { a1, a2, b1, b2, c1, c2 };

inline constexpr std::array<Condition, 6> kAllConditions = {
    Condition::a1, Condition::a2, Condition::b1, Condition::b2, Condition::c1, Condition::c2};

std::string_view to_string(Condition c);
std::optional<Condition> parse_condition(std::string_view s);

/// Evaluates one condition at a fresh neighbour.  Throws UsageError unless
/// (abc) holds.
bool collinear_condition(BatchTable& table, const Point& a, const Point& b, const Point& c, Condition which);

/// [abc]: (abc) and condition b1.  False when (abc) fails.
bool collinear(BatchTable& table, const Point& a, const Point& b, const Point& c);

/// Some permutation is collinear.
bool aligned(BatchTable& table, const Point& a, const Point& b, const Point& c);

/// Whether the pair (distance s from `anchor`, bracket [a anchor moving] or
/// [a moving c]) admits no other solution in the monad of the given point.
/// Zero-order validity is checked too: the point itself must satisfy both.
///   extrapolation: anchor = b, point = c, conditions bc = s and [abc]
///   interpolation: anchor = c, point = b, conditions bc = s and [abc]
bool extrapolation_pinned(BatchTable& table, const Point& a, const Point& b, const Point& c, const NilElement& s);
bool interpolation_pinned(BatchTable& table, const Point& a, const Point& b, const Point& c, const NilElement& s);

/// The ray with source b in the direction away from a.
struct Ray {
  Point director;
  Point source;
  Ray(Point a, Point b);
  Point eval(const NilElement& s) const { return extrapolate(director, source, s); }
};

/// a' |>_s b = a |>_s b, assuming [a' a b]; throws UsageError otherwise.
bool extrapolate_source_invariance(BatchTable& table, const Point& a_prime, const Point& a, const Point& b,
                                   const NilElement& s);

struct AssociativityRecord {
  /// [abc], [abd], [acd], [bcd]
  std::array<bool, 4> holds{};
  /// At least two hold, so the closure assertion applies.
  bool triggered = false;
  /// Not triggered, or all four hold.
  bool closed = true;
};

AssociativityRecord collinearity_associativity(BatchTable& table, const Point& a, const Point& b, const Point& c,
                                               const Point& d);

}  // namespace sdg
