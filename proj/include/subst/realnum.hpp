#pragma once

#include <mpfr.h>

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "subst/algebraic.hpp"
#include "subst/numeric.hpp"

namespace subst {

// Interval with MPFR endpoints and directed rounding: the represented real
// always lies in [lo, hi]. Precision is per-value.
class FloatInterval {
 public:
  explicit FloatInterval(mpfr_prec_t prec = 128);
  FloatInterval(const FloatInterval& o);
  FloatInterval(FloatInterval&& o) noexcept;
  FloatInterval& operator=(FloatInterval o);
  ~FloatInterval();

  static FloatInterval from_rational(const Rational& r, mpfr_prec_t prec);
  static FloatInterval from_long(long v, mpfr_prec_t prec);
  static FloatInterval from_double(double v, mpfr_prec_t prec);
  static FloatInterval hull(const Rational& lo, const Rational& hi, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }

  FloatInterval operator+(const FloatInterval& o) const;
  FloatInterval operator-(const FloatInterval& o) const;
  FloatInterval operator*(const FloatInterval& o) const;
  FloatInterval operator/(const FloatInterval& o) const;  // divisor certainly positive
  FloatInterval scaled_by_long(long k) const;
  FloatInterval log() const;  // requires lo > 0
  FloatInterval exp() const;

  bool certainly_positive() const;
  bool certainly_negative() const;
  // Strictly inside (lo, hi), both given as doubles (exact binary values).
  bool certainly_inside(double lo, double hi) const;
  // Strictly outside [lo, hi].
  bool certainly_outside(double lo, double hi) const;
  // Strictly inside the open rational interval (lo, hi).
  bool certainly_inside_rational(const Rational& lo, const Rational& hi) const;

  double midpoint_double() const;
  double width_double() const;
  std::string str(int digits = 20) const;

  // Continued-fraction convergents (p_k, q_k) of a positive x, stopping at
  // the first term the interval cannot pin down.
  friend std::vector<std::pair<BigInt, BigInt>> continued_fraction_convergents(FloatInterval x,
                                                                               int max_terms);

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;
  friend class CertifiedReal;
};

std::vector<std::pair<BigInt, BigInt>> continued_fraction_convergents(FloatInterval x,
                                                                      int max_terms);

// A real number that can be evaluated to an enclosing interval at any
// requested precision: a rational, a real algebraic number, or the natural
// log of a positive one.
class CertifiedReal {
 public:
  static CertifiedReal from_rational(const Rational& r);
  static CertifiedReal from_algebraic(const AlgebraicReal& x);
  static CertifiedReal log_of(const CertifiedReal& x);  // x > 0 required

  FloatInterval eval(mpfr_prec_t prec) const;
  double approx() const { return eval(128).midpoint_double(); }

  bool is_rational() const;
  const Rational& rational_value() const;
  bool is_algebraic() const;  // plain algebraic (not under a log)
  const AlgebraicReal& algebraic_value() const;
  bool is_log() const;

  int sign() const;

  // Parses "3", "1.25", "root:<c0,c1,...,cn>:<lo>:<hi>" (poly coefficients
  // low to high) or "log:<inner>".
  static CertifiedReal parse(const std::string& text);

 private:
  struct LogOf;
  using Payload = std::variant<Rational, AlgebraicReal, std::shared_ptr<LogOf>>;
  explicit CertifiedReal(Payload p) : payload_(std::move(p)) {}
  Payload payload_;
};

}  // namespace subst
