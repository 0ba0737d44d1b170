#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subst/errors.hpp"
#include "subst/numeric.hpp"

namespace subst {

// Dense univariate polynomial over the integers, coefficients stored
// low degree first. The zero polynomial has an empty coefficient vector.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }
  static IntPoly constant(BigInt v) { return IntPoly({std::move(v)}); }
  // x - r for rational r = num/den, cleared to den*x - num.
  static IntPoly linear_from_root(const Rational& r);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const BigInt& leading() const;
  BigInt coeff(int i) const { return (i >= 0 && i < (int)c_.size()) ? c_[i] : BigInt(0); }
  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator-() const;
  IntPoly scaled(const BigInt& k) const;
  bool operator==(const IntPoly& o) const = default;

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const;
  IntPoly derivative() const;

  BigInt content() const;            // gcd of coefficients, >= 0
  IntPoly primitive_part() const;    // content divided out, sign of leading kept
  IntPoly exact_divide(const IntPoly& divisor) const;  // throws if remainder != 0

  IntPoly reflected() const;      // p(-x)
  IntPoly inflate(int k) const;   // p(x^k)

  // All real roots lie in [-B, B].
  Rational cauchy_root_bound() const;

  std::string to_string() const;  // e.g. "x^2 - x - 1"

 private:
  void normalize();
  std::vector<BigInt> c_;
};

// Primitive gcd with positive leading coefficient (zero if both zero).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// p with repeated factors collapsed: p / gcd(p, p'). Leading sign preserved.
IntPoly square_free_part(const IntPoly& p);

// Rational roots found by the rational root theorem. Divisor enumeration of
// the constant and leading coefficients is capped by `budget` candidate
// tests; nullopt signals the cap was hit and the list may be incomplete.
std::optional<std::vector<Rational>> rational_roots(const IntPoly& p, long budget = 200000);

// Factor search by Kronecker interpolation over divisor tuples. When no
// factor is found, `exhausted` reports whether the whole candidate space was
// enumerated; true means p is certifiably irreducible.
struct FactorSearch {
  std::optional<IntPoly> factor;
  bool exhausted = false;
};
FactorSearch kronecker_factor(const IntPoly& p, long budget = 400000);

// Sturm chain of a square-free polynomial; counts distinct real roots.
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& square_free);
  // Number of roots in (lo, hi].
  int count_roots(const Rational& lo, const Rational& hi) const;
  int variations_at(const Rational& x) const;
  int variations_at_plus_infinity() const;
  int variations_at_minus_infinity() const;
  int count_all_roots() const;

 private:
  std::vector<IntPoly> chain_;
};

}  // namespace subst
