#include "subst/density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace subst {

namespace {

BigInt integer_kth_root(const BigInt& v, int k) {
  if (v < 0 || k < 1) throw domain_error("integer root domain");
  if (v <= 1 || k == 1) return v;
  BigInt lo = 1, hi = v;
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) / 2;
    BigInt p = 1;
    bool over = false;
    for (int i = 0; i < k && !over; ++i) {
      p *= mid;
      over = p > v;
    }
    if (over)
      hi = mid - 1;
    else
      lo = mid;
  }
  return lo;
}

// v = base^e with e maximal.
std::pair<BigInt, int> primitive_power_base(const BigInt& v) {
  int max_e = static_cast<int>(boost::multiprecision::msb(v));  // v >= 2
  for (int e = max_e; e >= 2; --e) {
    BigInt r = integer_kth_root(v, e);
    BigInt p = 1;
    for (int i = 0; i < e; ++i) p *= r;
    if (p == v) return {r, e};
  }
  return {v, 1};
}

}  // namespace

IndependenceVerdict mult_independent_integers(const BigInt& p, const BigInt& q) {
  if (p < 2 || q < 2) throw domain_error("independence test needs integers >= 2");
  auto [bp, ep] = primitive_power_base(p);
  auto [bq, eq] = primitive_power_base(q);
  if (bp != bq) return {IndependenceStatus::independent_proven, 0, 0, 0};
  long g = std::gcd((long)ep, (long)eq);
  return {IndependenceStatus::dependent, eq / g, ep / g, 0};
}

IndependenceVerdict mult_independent_bounded(const AlgebraicReal& a, const AlgebraicReal& b,
                                             int bound) {
  if (a.compare(Rational(1)) <= 0 || b.compare(Rational(1)) <= 0)
    throw domain_error("bounded independence test needs values > 1");
  const double la = std::log(a.to_double());
  const double lb = std::log(b.to_double());
  std::vector<AlgebraicReal> apow{a}, bpow{b};
  auto ensure = [](std::vector<AlgebraicReal>& v, const AlgebraicReal& base,
                   int k) -> const AlgebraicReal& {
    while ((int)v.size() < k) v.push_back(base.pow((int)v.size() + 1));
    return v[k - 1];
  };
  for (int total = 2; total <= 2 * bound; ++total)
    for (int k = std::max(1, total - bound); k <= std::min(bound, total - 1); ++k) {
      int l = total - k;
      if (std::abs(k * la - l * lb) > 1e-6) continue;  // cannot be equal
      if (ensure(apow, a, k).compare(ensure(bpow, b, l)) == 0)
        return {IndependenceStatus::dependent, k, l, 0};
    }
  return {IndependenceStatus::no_witness_up_to, 0, 0, bound};
}

namespace {

struct ComboPair {
  long n = 0, m = 0;
  double delta = 0;  // midpoint of n alpha - m beta
};

// Certify n alpha - m beta strictly inside (0, eps); nullopt when the value
// is certainly outside or remains undecidable at the top precision.
std::optional<FloatInterval> certify_combo(const CertifiedReal& alpha, const CertifiedReal& beta,
                                           long n, long m, double eps) {
  for (mpfr_prec_t prec : {192, 384, 768, 1536}) {
    FloatInterval v =
        alpha.eval(prec).scaled_by_long(n) - beta.eval(prec).scaled_by_long(m);
    if (v.certainly_inside(0.0, eps)) return v;
    if (v.certainly_outside(0.0, eps)) return std::nullopt;
  }
  return std::nullopt;
}

// (n, m) with n >= n_min, m >= 1 and n alpha - m beta certified in (0, eps).
std::optional<ComboPair> find_small_combo(const CertifiedReal& alpha, const CertifiedReal& beta,
                                          double eps, long n_min, long budget) {
  // Convergents p/q of alpha/beta: q alpha - p beta alternates sign and
  // shrinks; scaled copies reach n >= n_min.
  for (auto& [p, q] : continued_fraction_convergents(alpha.eval(768) / beta.eval(768), 80)) {
    if (p > BigInt("4611686018427387904") || q > BigInt("4611686018427387904")) break;
    long qn = q.convert_to<long>(), pm = p.convert_to<long>();
    if (pm < 1) continue;
    long t = std::max<long>(1, (n_min + qn - 1) / qn);
    for (long scale : {t, t + 1}) {
      if (qn > budget / scale) break;
      if (auto iv = certify_combo(alpha, beta, qn * scale, pm * scale, eps))
        return ComboPair{qn * scale, pm * scale, iv->midpoint_double()};
    }
  }
  // Bounded brute force: m near n * alpha/beta.
  double ratio = alpha.approx() / beta.approx();
  for (long n = std::max<long>(1, n_min); n <= std::max<long>(1, n_min) + budget; ++n) {
    double m_hat = n * ratio;
    if (m_hat > 4e18) break;
    for (long m : {(long)std::floor(m_hat), (long)std::floor(m_hat) + 1,
                   (long)std::floor(m_hat) - 1}) {
      if (m < 1) continue;
      if (auto iv = certify_combo(alpha, beta, n, m, eps))
        return ComboPair{n, m, iv->midpoint_double()};
    }
  }
  return std::nullopt;
}

}  // namespace

LemmetechWitness lemmetech_search(const CertifiedReal& alpha, const CertifiedReal& beta,
                                  double eps, long n_min, long budget) {
  if (eps <= 0) throw domain_error("lemmetech_search needs eps > 0");
  if (n_min < 0) n_min = 0;
  // Try combos and keep the m >= n constraint from the lemma's framing.
  long lo = std::max<long>(1, n_min);
  for (int attempt = 0; attempt < 4; ++attempt) {
    auto combo = find_small_combo(alpha, beta, eps, lo, budget);
    if (!combo) break;
    if (combo->m >= combo->n) {
      // Re-verify at doubled precision before returning.
      FloatInterval v = alpha.eval(3072).scaled_by_long(combo->n) -
                        beta.eval(3072).scaled_by_long(combo->m);
      if (v.certainly_inside(0.0, eps))
        return LemmetechWitness{combo->n, combo->m, v.midpoint_double()};
    }
    lo = combo->n + 1;
  }
  throw budget_exhausted("lemmetech_search: no certified pair within budget");
}

namespace {

// f(k) = k (n0 alpha - m0 beta) + d log(k n0) - e log(k m0).
FloatInterval eval_walk(const CertifiedReal& alpha, const CertifiedReal& beta,
                        const ComboPair& pair, int d, int e, long k, mpfr_prec_t prec) {
  FloatInterval v = alpha.eval(prec).scaled_by_long(pair.n).scaled_by_long(k) -
                    beta.eval(prec).scaled_by_long(pair.m).scaled_by_long(k);
  if (d != 0) v = v + FloatInterval::from_long(k * pair.n, prec).log().scaled_by_long(d);
  if (e != 0) v = v - FloatInterval::from_long(k * pair.m, prec).log().scaled_by_long(e);
  return v;
}

double eval_walk_mid(const CertifiedReal& alpha, const CertifiedReal& beta,
                     const ComboPair& pair, int d, int e, long k) {
  return eval_walk(alpha, beta, pair, d, e, k, 256).midpoint_double();
}

}  // namespace

DensityWitness denselog_search(const CertifiedReal& alpha, const CertifiedReal& beta, int d,
                               int e, double target, double eps, long budget) {
  if (eps <= 0) throw domain_error("denselog_search needs eps > 0");
  if (alpha.sign() <= 0 || beta.sign() <= 0)
    throw domain_error("denselog_search needs positive alpha, beta");

  auto pos = find_small_combo(alpha, beta, eps / 2, 1, budget);
  auto neg_raw = find_small_combo(beta, alpha, eps / 2, 1, budget);
  std::optional<ComboPair> neg;
  if (neg_raw) neg = ComboPair{neg_raw->m, neg_raw->n, -neg_raw->delta};
  if (!pos && !neg) throw budget_exhausted("denselog_search: no small step pair found");

  const long k0 = std::max<long>(1, (long)std::ceil(4.0 * std::abs(d - e) / eps));

  auto try_pair = [&](const ComboPair& pair) -> std::optional<DensityWitness> {
    // Project the crossing point in doubles, then certify near it.
    double f0 = eval_walk_mid(alpha, beta, pair, d, e, k0);
    double k_proj = k0;
    for (int it = 0; it < 40; ++it) {
      double corr = (d - e) * (std::log(std::max(1.0, k_proj)) - std::log((double)k0));
      double next = k0 + (target - f0 - corr) / pair.delta;
      if (!std::isfinite(next)) return std::nullopt;
      k_proj = std::clamp(next, (double)k0, 4.0e18);
    }
    long center = (long)std::llround(k_proj);
    long window = 256;
    const long k_cap = (long)4e18 / std::max<long>({pair.n, pair.m, 1});
    for (int round = 0; round < 3; ++round) {
      long from = std::max(k0, center - window);
      long to = std::min({center + window, from + budget, k_cap});
      for (long k = from; k <= to; ++k) {
        FloatInterval v = eval_walk(alpha, beta, pair, d, e, k, 384);
        if (v.certainly_inside(target - eps, target + eps)) {
          FloatInterval check = eval_walk(alpha, beta, pair, d, e, k, 768);
          if (!check.certainly_inside(target - eps, target + eps)) continue;
          return DensityWitness{k * pair.n, k * pair.m, check.midpoint_double(), target, eps};
        }
      }
      window *= 8;
    }
    return std::nullopt;
  };

  // Prefer the pair whose walk direction reaches the target.
  std::vector<const ComboPair*> order;
  if (pos && neg) {
    double f0 = eval_walk_mid(alpha, beta, *pos, d, e, k0);
    if (f0 <= target) {
      order = {&*pos, &*neg};
    } else {
      order = {&*neg, &*pos};
    }
  } else if (pos) {
    order = {&*pos};
  } else {
    order = {&*neg};
  }
  for (const ComboPair* pair : order)
    if (auto w = try_pair(*pair)) return *w;

  // Last resort: certified linear walk.
  for (const ComboPair* pair : order) {
    const long k_cap = (long)4e18 / std::max<long>({pair->n, pair->m, 1});
    for (long k = k0; k <= std::min(k0 + budget, k_cap); ++k) {
      FloatInterval v = eval_walk(alpha, beta, *pair, d, e, k, 384);
      if (v.certainly_inside(target - eps, target + eps))
        return DensityWitness{k * pair->n, k * pair->m, v.midpoint_double(), target, eps};
    }
  }
  throw budget_exhausted("denselog_search: target not reached within budget");
}

DensityWitness densite_search(const CertifiedReal& alpha, const CertifiedReal& beta, int d,
                              int e, double target, double eps_rel, long budget) {
  if (target <= 0 || eps_rel <= 0) throw domain_error("densite_search needs target, eps > 0");
  if (alpha.is_rational() && beta.is_rational()) {
    const Rational &ra = alpha.rational_value(), &rb = beta.rational_value();
    if (boost::multiprecision::denominator(ra) == 1 &&
        boost::multiprecision::denominator(rb) == 1) {
      auto verdict = mult_independent_integers(boost::multiprecision::numerator(ra),
                                               boost::multiprecision::numerator(rb));
      if (verdict.status == IndependenceStatus::dependent)
        throw domain_error("densite_search: inputs are multiplicatively dependent (" +
                           ra.str() + "^" + std::to_string(verdict.k) + " = " + rb.str() + "^" +
                           std::to_string(verdict.l) + "); only lattice values are reachable");
    }
  }
  CertifiedReal la = CertifiedReal::log_of(alpha);
  CertifiedReal lb = CertifiedReal::log_of(beta);

  // Exact acceptance window in the ratio domain.
  Rational rt(target), re(eps_rel);
  Rational window_lo = rt * (Rational(1) - re), window_hi = rt * (Rational(1) + re);

  double eps_log = std::log1p(eps_rel) * 0.999;
  for (int attempt = 0; attempt < 3; ++attempt) {
    DensityWitness w = denselog_search(la, lb, d, e, std::log(target), eps_log, budget);
    // Certify the multiplicative statement directly against the exact window.
    for (mpfr_prec_t prec : {384, 768, 1536}) {
      FloatInterval value = la.eval(prec).scaled_by_long(w.n) -
                            lb.eval(prec).scaled_by_long(w.m);
      if (d != 0) value = value + FloatInterval::from_long(w.n, prec).log().scaled_by_long(d);
      if (e != 0) value = value - FloatInterval::from_long(w.m, prec).log().scaled_by_long(e);
      FloatInterval ratio = value.exp();
      if (ratio.certainly_inside_rational(window_lo, window_hi))
        return DensityWitness{w.n, w.m, ratio.midpoint_double(), target, eps_rel};
    }
    eps_log *= 0.7;
  }
  throw budget_exhausted("densite_search: certified witness not found within budget");
}

}  // namespace subst
