#include "subst/realnum.hpp"

#include <gmp.h>

#include <algorithm>
#include <sstream>

namespace subst {

namespace {

// Exact conversion Rational -> mpq_t via the decimal string form "num/den".
struct ScopedMpq {
  mpq_t q;
  explicit ScopedMpq(const Rational& r) {
    mpq_init(q);
    std::string text = boost::multiprecision::numerator(r).str() + "/" +
                       boost::multiprecision::denominator(r).str();
    mpq_set_str(q, text.c_str(), 10);
    mpq_canonicalize(q);
  }
  ~ScopedMpq() { mpq_clear(q); }
};

}  // namespace

FloatInterval::FloatInterval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

FloatInterval::FloatInterval(const FloatInterval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

FloatInterval::FloatInterval(FloatInterval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

FloatInterval& FloatInterval::operator=(FloatInterval o) {
  std::swap(prec_, o.prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

FloatInterval::~FloatInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

FloatInterval FloatInterval::from_rational(const Rational& r, mpfr_prec_t prec) {
  FloatInterval out(prec);
  ScopedMpq q(r);
  mpfr_set_q(out.lo_, q.q, MPFR_RNDD);
  mpfr_set_q(out.hi_, q.q, MPFR_RNDU);
  return out;
}

FloatInterval FloatInterval::from_long(long v, mpfr_prec_t prec) {
  FloatInterval out(prec);
  mpfr_set_si(out.lo_, v, MPFR_RNDD);
  mpfr_set_si(out.hi_, v, MPFR_RNDU);
  return out;
}

FloatInterval FloatInterval::from_double(double v, mpfr_prec_t prec) {
  FloatInterval out(prec);
  mpfr_set_d(out.lo_, v, MPFR_RNDD);
  mpfr_set_d(out.hi_, v, MPFR_RNDU);
  return out;
}

FloatInterval FloatInterval::hull(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
  FloatInterval out(prec);
  ScopedMpq ql(lo), qh(hi);
  mpfr_set_q(out.lo_, ql.q, MPFR_RNDD);
  mpfr_set_q(out.hi_, qh.q, MPFR_RNDU);
  return out;
}

FloatInterval FloatInterval::operator+(const FloatInterval& o) const {
  FloatInterval out(std::max(prec_, o.prec_));
  mpfr_add(out.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, hi_, o.hi_, MPFR_RNDU);
  return out;
}

FloatInterval FloatInterval::operator-(const FloatInterval& o) const {
  FloatInterval out(std::max(prec_, o.prec_));
  mpfr_sub(out.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, hi_, o.lo_, MPFR_RNDU);
  return out;
}

FloatInterval FloatInterval::operator*(const FloatInterval& o) const {
  FloatInterval out(std::max(prec_, o.prec_));
  mpfr_t t;
  mpfr_init2(t, out.prec_);
  // Lower bound: min of the four products rounded down.
  bool first = true;
  for (auto a : {&lo_, &hi_})
    for (auto b : {&o.lo_, &o.hi_}) {
      mpfr_mul(t, *a, *b, MPFR_RNDD);
      if (first || mpfr_cmp(t, out.lo_) < 0) mpfr_set(out.lo_, t, MPFR_RNDD);
      first = false;
    }
  first = true;
  for (auto a : {&lo_, &hi_})
    for (auto b : {&o.lo_, &o.hi_}) {
      mpfr_mul(t, *a, *b, MPFR_RNDU);
      if (first || mpfr_cmp(t, out.hi_) > 0) mpfr_set(out.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return out;
}

FloatInterval FloatInterval::operator/(const FloatInterval& o) const {
  if (mpfr_sgn(o.lo_) <= 0) throw domain_error("interval division needs a positive divisor");
  FloatInterval out(std::max(prec_, o.prec_));
  mpfr_t t;
  mpfr_init2(t, out.prec_);
  bool first = true;
  for (auto a : {&lo_, &hi_})
    for (auto b : {&o.lo_, &o.hi_}) {
      mpfr_div(t, *a, *b, MPFR_RNDD);
      if (first || mpfr_cmp(t, out.lo_) < 0) mpfr_set(out.lo_, t, MPFR_RNDD);
      first = false;
    }
  first = true;
  for (auto a : {&lo_, &hi_})
    for (auto b : {&o.lo_, &o.hi_}) {
      mpfr_div(t, *a, *b, MPFR_RNDU);
      if (first || mpfr_cmp(t, out.hi_) > 0) mpfr_set(out.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return out;
}

std::vector<std::pair<BigInt, BigInt>> continued_fraction_convergents(FloatInterval x,
                                                                      int max_terms) {
  std::vector<std::pair<BigInt, BigInt>> convergents;
  mpfr_t t;
  mpfr_init2(t, x.prec_);
  BigInt p0 = 1, q0 = 0, p1 = 0, q1 = 1;  // seeds p_{-1}/q_{-1} and p_0/q_0
  for (int i = 0; i < max_terms; ++i) {
    mpfr_floor(t, x.lo_);
    if (!mpfr_fits_slong_p(t, MPFR_RNDN)) break;
    long flo = mpfr_get_si(t, MPFR_RNDN);
    mpfr_floor(t, x.hi_);
    if (!mpfr_fits_slong_p(t, MPFR_RNDN)) break;
    long fhi = mpfr_get_si(t, MPFR_RNDN);
    if (flo != fhi) break;  // term not determined at this precision
    BigInt term(flo);
    BigInt p2 = term * p0 + p1, q2 = term * q0 + q1;
    p1 = p0;
    q1 = q0;
    p0 = p2;
    q0 = q2;
    if (q0 > 0 && p0 > 0) convergents.push_back({p0, q0});
    // x <- 1 / (x - term), stopping when the fractional part may be zero.
    mpfr_sub_si(x.lo_, x.lo_, flo, MPFR_RNDD);
    mpfr_sub_si(x.hi_, x.hi_, flo, MPFR_RNDU);
    if (mpfr_sgn(x.lo_) <= 0) break;
    mpfr_swap(x.lo_, x.hi_);
    mpfr_si_div(x.lo_, 1, x.lo_, MPFR_RNDD);
    mpfr_si_div(x.hi_, 1, x.hi_, MPFR_RNDU);
  }
  mpfr_clear(t);
  return convergents;
}

FloatInterval FloatInterval::scaled_by_long(long k) const {
  FloatInterval out(prec_);
  if (k >= 0) {
    mpfr_mul_si(out.lo_, lo_, k, MPFR_RNDD);
    mpfr_mul_si(out.hi_, hi_, k, MPFR_RNDU);
  } else {
    mpfr_mul_si(out.lo_, hi_, k, MPFR_RNDD);
    mpfr_mul_si(out.hi_, lo_, k, MPFR_RNDU);
  }
  return out;
}

FloatInterval FloatInterval::log() const {
  if (mpfr_sgn(lo_) <= 0) throw domain_error("interval log needs a positive lower bound");
  FloatInterval out(prec_);
  mpfr_log(out.lo_, lo_, MPFR_RNDD);
  mpfr_log(out.hi_, hi_, MPFR_RNDU);
  return out;
}

FloatInterval FloatInterval::exp() const {
  FloatInterval out(prec_);
  mpfr_exp(out.lo_, lo_, MPFR_RNDD);
  mpfr_exp(out.hi_, hi_, MPFR_RNDU);
  return out;
}

bool FloatInterval::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool FloatInterval::certainly_negative() const { return mpfr_sgn(hi_) < 0; }

bool FloatInterval::certainly_inside(double lo, double hi) const {
  return mpfr_cmp_d(lo_, lo) > 0 && mpfr_cmp_d(hi_, hi) < 0;
}

bool FloatInterval::certainly_outside(double lo, double hi) const {
  return mpfr_cmp_d(hi_, lo) < 0 || mpfr_cmp_d(lo_, hi) > 0;
}

bool FloatInterval::certainly_inside_rational(const Rational& lo, const Rational& hi) const {
  ScopedMpq ql(lo), qh(hi);
  return mpfr_cmp_q(lo_, ql.q) > 0 && mpfr_cmp_q(hi_, qh.q) < 0;
}

double FloatInterval::midpoint_double() const {
  double a = mpfr_get_d(lo_, MPFR_RNDN);
  double b = mpfr_get_d(hi_, MPFR_RNDN);
  return (a + b) / 2;
}

double FloatInterval::width_double() const {
  mpfr_t t;
  mpfr_init2(t, prec_);
  mpfr_sub(t, hi_, lo_, MPFR_RNDU);
  double w = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return w;
}

std::string FloatInterval::str(int digits) const {
  char* lo = nullptr;
  char* hi = nullptr;
  mpfr_asprintf(&lo, "%.*Rg", digits, lo_);
  mpfr_asprintf(&hi, "%.*Rg", digits, hi_);
  std::string out = std::string("[") + lo + ", " + hi + "]";
  mpfr_free_str(lo);
  mpfr_free_str(hi);
  return out;
}

struct CertifiedReal::LogOf {
  CertifiedReal inner;
};

CertifiedReal CertifiedReal::from_rational(const Rational& r) { return CertifiedReal(Payload(r)); }

CertifiedReal CertifiedReal::from_algebraic(const AlgebraicReal& x) {
  if (x.is_rational()) return from_rational(x.rational_value());
  return CertifiedReal(Payload(x));
}

CertifiedReal CertifiedReal::log_of(const CertifiedReal& x) {
  if (x.sign() <= 0) throw domain_error("log needs a positive argument");
  if (x.is_rational() && x.rational_value() == 1) return from_rational(Rational(0));
  return CertifiedReal(Payload(std::make_shared<LogOf>(LogOf{x})));
}

FloatInterval CertifiedReal::eval(mpfr_prec_t prec) const {
  if (std::holds_alternative<Rational>(payload_))
    return FloatInterval::from_rational(std::get<Rational>(payload_), prec);
  if (std::holds_alternative<AlgebraicReal>(payload_)) {
    const AlgebraicReal& x = std::get<AlgebraicReal>(payload_);
    Rational scale = boost::multiprecision::abs(x.upper());
    if (scale < 1) scale = 1;
    Rational width = scale / boost::multiprecision::pow(BigInt(2), unsigned(prec + 4));
    AlgebraicReal r = x.refined(width);
    return FloatInterval::hull(r.lower(), r.upper(), prec);
  }
  const auto& log_of = std::get<std::shared_ptr<LogOf>>(payload_);
  return log_of->inner.eval(prec).log();
}

bool CertifiedReal::is_rational() const { return std::holds_alternative<Rational>(payload_); }

const Rational& CertifiedReal::rational_value() const {
  if (!is_rational()) throw domain_error("not a rational value");
  return std::get<Rational>(payload_);
}

bool CertifiedReal::is_algebraic() const {
  return std::holds_alternative<AlgebraicReal>(payload_);
}

const AlgebraicReal& CertifiedReal::algebraic_value() const {
  if (!is_algebraic()) throw domain_error("not an algebraic value");
  return std::get<AlgebraicReal>(payload_);
}

bool CertifiedReal::is_log() const {
  return std::holds_alternative<std::shared_ptr<LogOf>>(payload_);
}

int CertifiedReal::sign() const {
  if (is_rational()) return sign_of(rational_value());
  if (is_algebraic()) return algebraic_value().sign();
  // log x: sign decided by x vs 1.
  const auto& inner = std::get<std::shared_ptr<LogOf>>(payload_)->inner;
  if (inner.is_rational())
    return inner.rational_value() < 1 ? -1 : (inner.rational_value() > 1 ? 1 : 0);
  return inner.algebraic_value().compare(Rational(1));
}

namespace {

// Integer, fraction ("3/4") or decimal ("1.25", "-0.5") literal.
Rational parse_rational_literal(const std::string& text) {
  if (text.empty()) throw parse_error("empty number literal");
  size_t dot = text.find('.');
  if (dot == std::string::npos) return Rational(text);
  std::string ip = text.substr(0, dot), fp = text.substr(dot + 1);
  if (ip.empty() || ip == "-" || ip == "+") ip += "0";
  BigInt den = 1;
  for (size_t i = 0; i < fp.size(); ++i) den *= 10;
  BigInt whole(ip);
  BigInt frac = fp.empty() ? BigInt(0) : BigInt(fp);
  bool negative = ip[0] == '-';
  return Rational(whole) + (negative ? -Rational(frac, den) : Rational(frac, den));
}

}  // namespace

CertifiedReal CertifiedReal::parse(const std::string& text) {
  if (text.rfind("log:", 0) == 0) return log_of(parse(text.substr(4)));
  if (text.rfind("root:", 0) == 0) {
    // root:<c0,c1,...,cn>:<lo>:<hi>
    std::string body = text.substr(5);
    size_t colon1 = body.find(':');
    size_t colon2 = body.find(':', colon1 + 1);
    if (colon1 == std::string::npos || colon2 == std::string::npos)
      throw parse_error("root:<coeffs>:<lo>:<hi> expected");
    std::vector<BigInt> coeffs;
    std::stringstream cs(body.substr(0, colon1));
    std::string tok;
    while (std::getline(cs, tok, ',')) coeffs.emplace_back(tok);
    Rational lo = parse_rational_literal(body.substr(colon1 + 1, colon2 - colon1 - 1));
    Rational hi = parse_rational_literal(body.substr(colon2 + 1));
    return from_algebraic(AlgebraicReal::root_in_interval(IntPoly(coeffs), lo, hi));
  }
  return from_rational(parse_rational_literal(text));
}

}  // namespace subst
