#pragma once

#include <optional>
#include <string>
#include <utility>

#include "subst/polynomial.hpp"

namespace subst {

enum class Ternary { no, yes, unknown };

// Exact real algebraic number: a square-free primitive defining polynomial
// with positive leading coefficient plus a rational interval [lo, hi]
// isolating exactly one of its real roots. Rational values carry an exact
// fast path. Instances are immutable; refinement returns new values.
class AlgebraicReal {
 public:
  AlgebraicReal() : AlgebraicReal(from_rational(Rational(0))) {}  // exact zero
  static AlgebraicReal from_rational(const Rational& r);
  static AlgebraicReal from_int(long v) { return from_rational(Rational(v)); }

  // p may have repeated factors; it is replaced by its square-free part.
  // [lo, hi] must contain exactly one real root of that part.
  static AlgebraicReal root_in_interval(const IntPoly& p, const Rational& lo, const Rational& hi);

  // Largest real root of p (p must have at least one).
  static AlgebraicReal largest_real_root(const IntPoly& p);

  bool is_rational() const { return exact_.has_value(); }
  const Rational& rational_value() const;
  const IntPoly& defining() const { return defining_; }
  const Rational& lower() const { return lo_; }
  const Rational& upper() const { return hi_; }

  // New value with interval width <= max_width.
  AlgebraicReal refined(const Rational& max_width) const;

  int compare(const AlgebraicReal& other) const;  // -1, 0, +1; always exact
  int compare(const Rational& r) const;
  bool operator==(const AlgebraicReal& o) const { return compare(o) == 0; }
  bool operator<(const AlgebraicReal& o) const { return compare(o) < 0; }
  int sign() const;

  // Value of x^k as an algebraic number (k >= 1); requires x >= 0.
  AlgebraicReal pow(int k) const;
  // Unique non-negative k-th root (k >= 1); requires x >= 0.
  AlgebraicReal nth_root(int k) const;

  double to_double() const;
  // Decimal approximation with at least `significant` correct digits.
  std::string decimal(int significant) const;

 private:
  struct raw_tag {};
  explicit AlgebraicReal(raw_tag) {}
  void settle_rational();

  IntPoly defining_;
  Rational lo_, hi_;
  std::optional<Rational> exact_;
};

int algebraic_compare(const AlgebraicReal& x, const AlgebraicReal& y);

// All real roots of p in ascending order, pairwise-disjoint intervals.
std::vector<AlgebraicReal> isolate_real_roots(const IntPoly& p);

// Perron test: x is an algebraic integer strictly dominating the modulus of
// every other root of its minimal polynomial. Real conjugates are compared
// exactly; complex conjugates through certified inclusion disks (rational
// arithmetic on top of floating approximations). `unknown` is returned when
// the certification budget runs out, never a guess.
Ternary is_perron(const AlgebraicReal& x);

}  // namespace subst
