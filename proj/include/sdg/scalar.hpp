#pragma once

// Exact constructible reals: rationals closed under field operations and
// square roots of positive elements.
//
// A Scalar is stored in normal form as a multilinear polynomial with
// rational coefficients in a set of radicals r_i, each satisfying
// r_i^2 = radicand_i where the radicand is itself such a polynomial in
// radicals created before r_i.  Square roots of rationals are split into
// square roots of primes, so in the common case the monomials are linearly
// independent over Q and equality is syntactic.  Nested radicals are denested
// when the value is already a square in the field at hand.  Sign decisions
// use a rigorous floating-point interval filter and fall back to an exact
// recursive procedure, so they are correct even for non-canonical forms.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace sdg {

namespace detail {
struct Poly;
}

class Scalar {
 public:
  Scalar();
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(int value) : Scalar(static_cast<long>(value)) {}  // NOLINT
  explicit Scalar(const mpq_class& value);
  Scalar(long num, long den);

  /// Parses a rational literal: "3", "-7", "2/5", "-3/7".
  static Scalar parse(std::string_view text);

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  /// Exact sign in {-1, 0, +1}.
  int sign() const;
  bool is_zero() const { return sign() == 0; }

  /// True when the normal form has no radicals.
  bool is_rational() const;
  std::optional<mpq_class> as_rational() const;

  /// Nested square-root depth of the normal form (0 for rationals).
  int depth() const;

  double approx() const;
  std::string str() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  explicit Scalar(std::shared_ptr<const detail::Poly> rep);
  std::shared_ptr<const detail::Poly> rep_;

  friend Scalar sqrt(const Scalar& a);
  friend Scalar abs(const Scalar& a);
};

/// Positive square root; throws DomainError unless a > 0.
Scalar sqrt(const Scalar& a);
Scalar abs(const Scalar& a);

/// Cap on nested square-root depth (default 8, or SDG_SQRT_DEPTH_CAP).
/// Exceeding it throws ResourceError.
int sqrt_depth_cap();
void set_sqrt_depth_cap(int cap);

}  // namespace sdg
