#include "subst/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "subst/matrix.hpp"
#include "subst/words.hpp"

namespace subst {

namespace {

BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Midpoint candidate that is not a root of p. Tries lo + (hi-lo)/k for
// successive k; p has finitely many roots so this terminates quickly.
Rational nonroot_mid(const IntPoly& p, const Rational& lo, const Rational& hi) {
  for (int k = 2; k < 2 + p.degree() + 3; ++k) {
    Rational m = lo + (hi - lo) / k;
    if (p.sign_at(m) != 0) return m;
  }
  throw domain_error("could not find a non-root midpoint");
}

}  // namespace

void AlgebraicReal::settle_rational() {
  if (exact_) return;
  auto roots = rational_roots(defining_, 4000);
  if (!roots) return;
  for (const Rational& r : *roots)
    if (lo_ <= r && r <= hi_) {
      exact_ = r;
      lo_ = hi_ = r;
      defining_ = IntPoly::linear_from_root(r);
      return;
    }
}

AlgebraicReal AlgebraicReal::from_rational(const Rational& r) {
  AlgebraicReal x{raw_tag{}};
  x.defining_ = IntPoly::linear_from_root(r);
  x.lo_ = x.hi_ = r;
  x.exact_ = r;
  return x;
}

AlgebraicReal AlgebraicReal::root_in_interval(const IntPoly& p, const Rational& lo,
                                              const Rational& hi) {
  if (p.is_zero()) throw domain_error("algebraic number needs a non-zero polynomial");
  IntPoly sf = square_free_part(p);
  if (sf.leading() < 0) sf = -sf;
  if (lo > hi) throw domain_error("algebraic interval reversed");
  if (sf.sign_at(lo) == 0) return from_rational(lo);
  if (sf.sign_at(hi) == 0) return from_rational(hi);
  SturmChain chain(sf);
  if (chain.count_roots(lo, hi) != 1)
    throw domain_error("interval does not isolate exactly one root");
  AlgebraicReal x{raw_tag{}};
  x.defining_ = sf;
  x.lo_ = lo;
  x.hi_ = hi;
  x.settle_rational();
  return x;
}

AlgebraicReal AlgebraicReal::largest_real_root(const IntPoly& p) {
  if (p.is_zero() || p.degree() < 1) throw domain_error("no roots to isolate");
  IntPoly sf = square_free_part(p);
  if (sf.leading() < 0) sf = -sf;
  Rational b = sf.cauchy_root_bound();
  Rational lo = -b, hi = b;
  SturmChain chain(sf);
  if (chain.count_roots(lo, hi) == 0) throw domain_error("polynomial has no real root");
  while (chain.count_roots(lo, hi) > 1) {
    Rational mid = nonroot_mid(sf, lo, hi);
    if (chain.count_roots(mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  // Normalize endpoints so the root is strictly inside and endpoint signs
  // are usable for sign bisection later.
  if (sf.sign_at(hi) == 0) return from_rational(hi);
  while (sf.sign_at(lo) == 0) {
    Rational mid = (lo + hi) / 2;
    int s = sf.sign_at(mid);
    if (s == 0) return from_rational(mid);
    if (chain.count_roots(mid, hi) == 1)
      lo = mid;
    else
      hi = mid;
  }
  AlgebraicReal x{raw_tag{}};
  x.defining_ = sf;
  x.lo_ = lo;
  x.hi_ = hi;
  x.settle_rational();
  return x;
}

const Rational& AlgebraicReal::rational_value() const {
  if (!exact_) throw domain_error("value is not (known to be) rational");
  return *exact_;
}

AlgebraicReal AlgebraicReal::refined(const Rational& max_width) const {
  if (exact_) return *this;
  AlgebraicReal x = *this;
  // Signs at the endpoints are nonzero and opposite by construction.
  int sign_lo = defining_.sign_at(x.lo_);
  while (x.hi_ - x.lo_ > max_width) {
    Rational mid = (x.lo_ + x.hi_) / 2;
    int s = defining_.sign_at(mid);
    if (s == 0) {
      x.exact_ = mid;
      x.lo_ = x.hi_ = mid;
      x.defining_ = IntPoly::linear_from_root(mid);
      return x;
    }
    if (s == sign_lo)
      x.lo_ = mid;
    else
      x.hi_ = mid;
  }
  return x;
}

int AlgebraicReal::sign() const {
  return compare(Rational(0));
}

int AlgebraicReal::compare(const Rational& r) const {
  if (exact_) return *exact_ < r ? -1 : (*exact_ > r ? 1 : 0);
  // The root sits strictly inside (lo, hi) for non-rational values.
  if (r <= lo_) return 1;
  if (r >= hi_) return -1;
  int s = defining_.sign_at(r);
  if (s == 0) return 0;
  return s == defining_.sign_at(lo_) ? 1 : -1;  // same side as lo => root above r
}

int AlgebraicReal::compare(const AlgebraicReal& other) const {
  if (exact_) return -other.compare(*exact_);
  if (other.exact_) return compare(*other.exact_);
  // Equality first: a shared root inside the interval overlap is the only
  // way the two numbers coincide, and it shows up in the gcd.
  Rational a = std::max(lo_, other.lo_), b = std::min(hi_, other.hi_);
  if (a <= b) {
    IntPoly g = poly_gcd(defining_, other.defining_);
    if (g.degree() >= 1) {
      SturmChain chain(g);
      int count = chain.count_roots(a, b) + (g.sign_at(a) == 0 ? 1 : 0);
      if (count >= 1) return 0;
    }
  }
  AlgebraicReal x = *this, y = other;
  while (true) {
    if (x.hi_ <= y.lo_) return -1;
    if (y.hi_ <= x.lo_) return 1;
    Rational wx = x.hi_ - x.lo_, wy = y.hi_ - y.lo_;
    Rational w = std::min(wx, wy) / 2;
    x = x.refined(w);
    y = y.refined(w);
    if (x.exact_ || y.exact_) return x.exact_ ? -y.compare(*x.exact_) : x.compare(*y.exact_);
  }
}

int algebraic_compare(const AlgebraicReal& x, const AlgebraicReal& y) { return x.compare(y); }

AlgebraicReal AlgebraicReal::pow(int k) const {
  if (k < 1) throw domain_error("pow needs k >= 1");
  if (compare(Rational(0)) < 0) throw domain_error("pow defined for x >= 0");
  if (exact_) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= *exact_;
    return from_rational(r);
  }
  if (k == 1) return *this;
  // Monicize: if p has degree n and leading a, then a*x is a root of the
  // monic integer polynomial a^(n-1) p(y/a). Power its companion matrix:
  // (a x)^k is a root of the characteristic polynomial of C^k, and x^k of
  // that polynomial rescaled by a^k.
  const IntPoly& p = defining_;
  const int n = p.degree();
  const BigInt a = p.leading();
  std::vector<BigInt> monic(n + 1);
  BigInt apow = 1;  // a^(n-1-i)
  for (int i = n; i >= 0; --i) {
    monic[i] = p.coeff(i) * (i == n ? BigInt(1) : apow);
    if (i > 0) apow *= a;
  }
  IntMatrix comp(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -monic[i];
  IntPoly g = char_poly(comp.power(k));
  // z = x^k is a root of g(a^k z).
  BigInt ak = 1;
  for (int i = 0; i < k; ++i) ak *= a;
  std::vector<BigInt> scaled(g.degree() + 1);
  BigInt akj = 1;
  for (int j = 0; j <= g.degree(); ++j) {
    scaled[j] = g.coeff(j) * akj;
    akj *= ak;
  }
  IntPoly h = square_free_part(IntPoly(std::move(scaled)).primitive_part());
  if (h.leading() < 0) h = -h;
  // Refine x until [lo^k, hi^k] isolates exactly one root of h.
  AlgebraicReal x = *this;
  SturmChain chain(h);
  while (true) {
    Rational plo = 1, phi = 1;
    for (int i = 0; i < k; ++i) {
      plo *= x.lo_;
      phi *= x.hi_;
    }
    if (h.sign_at(plo) != 0 && h.sign_at(phi) != 0 && chain.count_roots(plo, phi) == 1)
      return root_in_interval(h, plo, phi);
    x = x.refined((x.hi_ - x.lo_) / 2);
    if (x.exact_) return x.pow(k);
  }
}

AlgebraicReal AlgebraicReal::nth_root(int k) const {
  if (k < 1) throw domain_error("nth_root needs k >= 1");
  if (compare(Rational(0)) < 0) throw domain_error("nth_root defined for x >= 0");
  if (k == 1) return *this;
  IntPoly g = square_free_part(defining_.inflate(k));
  if (g.leading() < 0) g = -g;
  auto candidates = isolate_real_roots(g);
  std::vector<AlgebraicReal> live;
  for (auto& c : candidates)
    if (c.compare(Rational(0)) >= 0) live.push_back(c);
  AlgebraicReal x = *this;
  while (live.size() > 1) {
    std::vector<AlgebraicReal> next;
    for (auto& c : live) {
      // Drop candidates whose k-th power interval misses x's interval.
      Rational clo = c.lo_ < 0 ? Rational(0) : c.lo_;
      Rational plo = 1, phi = 1;
      for (int i = 0; i < k; ++i) {
        plo *= clo;
        phi *= c.hi_;
      }
      if (phi < x.lo_ || plo > x.hi_) continue;
      if (c.exact_)
        next.push_back(c);
      else
        next.push_back(c.refined((c.hi_ - c.lo_) / 4));
    }
    if (next.size() == live.size() && !x.exact_) x = x.refined((x.hi_ - x.lo_) / 4);
    live = std::move(next);
  }
  if (live.empty()) throw domain_error("nth_root: lost track of the root");
  return live[0];
}

double AlgebraicReal::to_double() const {
  if (exact_) return exact_->convert_to<double>();
  Rational scale = boost::multiprecision::abs(hi_);
  if (scale < 1) scale = 1;
  AlgebraicReal x = refined(scale / BigInt("1000000000000000000"));
  return ((x.lo_ + x.hi_) / 2).convert_to<double>();
}

std::string AlgebraicReal::decimal(int significant) const {
  if (significant < 1) significant = 1;
  Rational v;
  if (exact_) {
    v = *exact_;
  } else {
    BigInt tiny = 1;
    for (int i = 0; i < significant + 6; ++i) tiny *= 10;
    Rational scale = boost::multiprecision::abs(hi_);
    if (scale < 1) scale = 1;
    AlgebraicReal x = refined(scale / tiny);
    v = (x.lo_ + x.hi_) / 2;
  }
  bool neg = v < 0;
  if (neg) v = -v;
  BigInt ip = num(v) / den(v);
  std::string out = (neg ? "-" : "") + ip.str() + ".";
  Rational frac = v - Rational(ip);
  int digits = significant + 2;
  for (int i = 0; i < digits; ++i) {
    frac *= 10;
    BigInt d = num(frac) / den(frac);
    out += char('0' + d.convert_to<int>());
    frac -= Rational(d);
  }
  return out;
}

std::vector<AlgebraicReal> isolate_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw domain_error("cannot isolate roots of the zero polynomial");
  IntPoly sf = square_free_part(p);
  if (sf.leading() < 0) sf = -sf;
  if (sf.degree() < 1) return {};
  SturmChain chain(sf);
  Rational b = sf.cauchy_root_bound();
  std::vector<std::pair<Rational, Rational>> stack{{-b, b}};
  std::vector<AlgebraicReal> roots;
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int count = chain.count_roots(lo, hi);
    if (count == 0) continue;
    if (count == 1) {
      if (sf.sign_at(hi) == 0) {
        roots.push_back(AlgebraicReal::from_rational(hi));
      } else {
        // Shrink so the root is strictly inside.
        Rational a = lo, c = hi;
        while (sf.sign_at(a) == 0) {
          Rational mid = (a + c) / 2;
          int s = sf.sign_at(mid);
          if (s == 0) {
            a = c = mid;
            break;
          }
          if (chain.count_roots(mid, c) == 1)
            a = mid;
          else
            c = mid;
        }
        if (a == c)
          roots.push_back(AlgebraicReal::from_rational(a));
        else
          roots.push_back(AlgebraicReal::root_in_interval(sf, a, c));
      }
      continue;
    }
    Rational mid = nonroot_mid(sf, lo, hi);
    stack.push_back({lo, mid});
    stack.push_back({mid, hi});
  }
  std::sort(roots.begin(), roots.end(),
            [](const AlgebraicReal& x, const AlgebraicReal& y) { return x.compare(y) < 0; });
  return roots;
}

// ---------------------------------------------------------------------------
// Perron certification

namespace {

struct ComplexRational {
  Rational re, im;
};

ComplexRational eval_complex(const IntPoly& p, const ComplexRational& z) {
  Rational re = 0, im = 0;
  for (int i = p.degree(); i >= 0; --i) {
    Rational nre = re * z.re - im * z.im + Rational(p.coeff(i));
    Rational nim = re * z.im + im * z.re;
    re = nre;
    im = nim;
  }
  return {re, im};
}

// Rational u with u^2 >= s (upper) or u^2 <= s (lower), s >= 0.
Rational sqrt_upper(const Rational& s) {
  if (s == 0) return 0;
  double d = std::sqrt(s.convert_to<double>());
  if (!std::isfinite(d) || d <= 0) return s <= 1 ? Rational(1) : s;
  Rational u(d * (1.0 + 1e-9) + 1e-300);
  while (u * u < s) u *= Rational(1000001, 1000000);
  return u;
}

Rational sqrt_lower(const Rational& s) {
  if (s <= 0) return 0;
  double d = std::sqrt(s.convert_to<double>());
  if (!std::isfinite(d) || d <= 0) return s < 1 ? s : Rational(1);
  Rational u(d * (1.0 - 1e-9));
  if (u < 0) u = 0;
  while (u * u > s) u *= Rational(999999, 1000000);
  return u;
}

struct Disk {
  ComplexRational center;
  Rational radius;
};

// Certified inclusion disks around floating approximations: each disk
// |w - z| <= n |p(z)/p'(z)| contains at least one root; n pairwise disjoint
// disks therefore contain exactly one root each.
std::optional<std::vector<Disk>> certified_disks(const IntPoly& p) {
  const int n = p.degree();
  using C = std::complex<long double>;
  std::vector<C> coeffs(n + 1);
  for (int i = 0; i <= n; ++i) {
    double c = Rational(p.coeff(i)).convert_to<double>();
    if (!std::isfinite(c)) return std::nullopt;
    coeffs[i] = C(c, 0);
  }
  auto eval = [&](C z) {
    C acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * z + coeffs[i];
    return acc;
  };
  auto evald = [&](C z) {
    C acc = 0;
    for (int i = n; i >= 1; --i) acc = acc * z + coeffs[i] * C(i, 0);
    return acc;
  };
  // Durand-Kerner from a spiral of start points.
  std::vector<C> z(n);
  C w(0.4L, 0.9L);
  z[0] = w;
  for (int i = 1; i < n; ++i) z[i] = z[i - 1] * w;
  for (int iter = 0; iter < 400; ++iter) {
    long double moved = 0;
    for (int i = 0; i < n; ++i) {
      C d = coeffs[n];
      for (int j = 0; j < n; ++j)
        if (j != i) d *= (z[i] - z[j]);
      if (d == C(0, 0)) return std::nullopt;
      C step = eval(z[i]) / d;
      z[i] -= step;
      moved += std::abs(step);
    }
    if (moved < 1e-30L) break;
  }
  for (int i = 0; i < n; ++i) {
    for (int it = 0; it < 8; ++it) {
      C d = evald(z[i]);
      if (std::abs(d) == 0) break;
      z[i] -= eval(z[i]) / d;
    }
    if (!std::isfinite((double)z[i].real()) || !std::isfinite((double)z[i].imag()))
      return std::nullopt;
  }
  std::vector<Disk> disks(n);
  for (int i = 0; i < n; ++i) {
    ComplexRational c{Rational((double)z[i].real()), Rational((double)z[i].imag())};
    ComplexRational pv = eval_complex(p, c);
    ComplexRational dv = eval_complex(p.derivative(), c);
    Rational num2 = pv.re * pv.re + pv.im * pv.im;
    Rational den2 = dv.re * dv.re + dv.im * dv.im;
    if (den2 == 0) return std::nullopt;
    Rational radius = Rational(n) * sqrt_upper(num2) / sqrt_lower(den2);
    disks[i] = {c, radius};
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational dre = disks[i].center.re - disks[j].center.re;
      Rational dim = disks[i].center.im - disks[j].center.im;
      Rational rr = disks[i].radius + disks[j].radius;
      if (dre * dre + dim * dim <= rr * rr) return std::nullopt;  // not certifiably disjoint
    }
  return disks;
}

// Decides whether every root of m other than x has modulus strictly below x.
// Exactness: real roots by exact comparison; complex ones by disks.
Ternary dominates_conjugates(const IntPoly& m, const AlgebraicReal& x, bool certified_minimal) {
  auto reals = isolate_real_roots(m);
  for (const auto& r : reals) {
    if (r.compare(x) == 0) continue;
    AlgebraicReal modulus = r;
    if (r.sign() < 0) {
      IntPoly refl = m.reflected();
      if (refl.leading() < 0) refl = -refl;
      modulus = AlgebraicReal::root_in_interval(refl, -r.upper(), -r.lower());
    }
    if (modulus.compare(x) >= 0) return certified_minimal ? Ternary::no : Ternary::unknown;
  }
  const int n_complex = m.degree() - static_cast<int>(reals.size());
  if (n_complex == 0) return Ternary::yes;

  auto disks = certified_disks(m);
  if (!disks) return Ternary::unknown;
  // Locate x's disk: refine x until exactly one disk meets [lo,hi] x {0}.
  AlgebraicReal xa = x.refined(Rational(1, BigInt("1000000000000")));
  std::vector<int> holding;
  for (size_t i = 0; i < disks->size(); ++i) {
    const Disk& d = (*disks)[i];
    // Distance from center to the real segment [lo, hi].
    Rational px = std::clamp(d.center.re, xa.lower(), xa.upper());
    Rational dre = d.center.re - px, dim = d.center.im;
    if (dre * dre + dim * dim <= d.radius * d.radius) holding.push_back((int)i);
  }
  if (holding.size() != 1) return Ternary::unknown;
  Rational xlo = xa.lower(), xhi = xa.upper();
  for (size_t i = 0; i < disks->size(); ++i) {
    if ((int)i == holding[0]) continue;
    const Disk& d = (*disks)[i];
    Rational mod2 = d.center.re * d.center.re + d.center.im * d.center.im;
    Rational upper = sqrt_upper(mod2) + d.radius;
    if (upper < xlo) continue;  // certifiably dominated
    Rational lower = sqrt_lower(mod2) - d.radius;
    if (lower > xhi) return certified_minimal ? Ternary::no : Ternary::unknown;
    return Ternary::unknown;  // straddles the circle at this precision
  }
  return Ternary::yes;
}

}  // namespace

Ternary is_perron(const AlgebraicReal& x) {
  if (x.sign() <= 0) return Ternary::no;
  if (x.is_rational()) {
    const Rational& r = x.rational_value();
    if (den(r) != 1) return Ternary::no;
    return r >= 1 ? Ternary::yes : Ternary::no;
  }

  // Strip rational roots: they are not conjugates of an irrational x.
  IntPoly q = x.defining();
  if (auto roots = rational_roots(q)) {
    for (const Rational& r : *roots) q = q.exact_divide(IntPoly::linear_from_root(r));
  }

  // Split q into irreducible factors as far as the budget allows; keep the
  // factor with x's root. Degree <= 3 without rational roots is irreducible.
  std::vector<IntPoly> pieces;
  std::vector<IntPoly> work{q};
  bool all_certified = true;
  while (!work.empty()) {
    IntPoly f = work.back();
    work.pop_back();
    if (f.degree() <= 3) {
      pieces.push_back(f);  // no rational roots left, so irreducible
      continue;
    }
    auto search = kronecker_factor(f);
    if (search.factor) {
      work.push_back(*search.factor);
      work.push_back(f.exact_divide(*search.factor));
    } else {
      pieces.push_back(f);
      if (!search.exhausted) all_certified = false;  // may still be reducible
    }
  }

  // Exactly one piece holds a root in x's isolating interval.
  const IntPoly* minimal = nullptr;
  for (const auto& f : pieces) {
    SturmChain chain(f);
    if (chain.count_roots(x.lower(), x.upper()) == 1) {
      minimal = &f;
      break;
    }
  }
  if (!minimal) return Ternary::unknown;
  bool certified = all_certified || minimal->degree() <= 3;

  IntPoly m = minimal->primitive_part();
  if (m.leading() < 0) m = -m;
  if (!m.is_monic()) return certified ? Ternary::no : Ternary::unknown;
  Ternary dom = dominates_conjugates(m, x, certified);
  if (dom == Ternary::yes && x.compare(Rational(1)) < 0) return Ternary::no;
  return dom;
}

}  // namespace subst
