#include "subst/growth.hpp"

#include <algorithm>
#include <cmath>

#include "subst/digraph.hpp"

namespace subst {

namespace {

double log_of_bigint(const BigInt& v) {
  if (v <= 0) throw domain_error("log of non-positive integer");
  unsigned bits = boost::multiprecision::msb(v);
  if (bits <= 52) return std::log(v.convert_to<double>());
  BigInt shifted = v >> (bits - 52);
  return std::log(shifted.convert_to<double>()) + (double)(bits - 52) * std::log(2.0);
}

double log_of_algebraic(const AlgebraicReal& x) {
  AlgebraicReal r = x.refined(Rational(1, BigInt("100000000000000000000000000")));
  Rational mid = (r.lower() + r.upper()) / 2;
  return log_of_bigint(boost::multiprecision::numerator(mid)) -
         log_of_bigint(boost::multiprecision::denominator(mid));
}

// Ratio |sigma^n(a)| / (n^d theta^n) in log space; safe for word lengths far
// beyond double range.
double growth_ratio(const BigInt& length, int n, int d, double log_theta) {
  return std::exp(log_of_bigint(length) - d * std::log((double)n) - n * log_theta);
}

// Neville extrapolation to x = 0 through (x_i, y_i).
double neville_at_zero(const std::vector<double>& xs, const std::vector<double>& ys) {
  std::vector<double> t = ys;
  const size_t n = xs.size();
  for (size_t level = 1; level < n; ++level)
    for (size_t i = 0; i + level < n; ++i)
      t[i] = (xs[i + level] * t[i] - xs[i] * t[i + 1]) / (xs[i + level] - xs[i]);
  return t[0];
}

CEstimate estimate_c(const std::vector<std::vector<BigInt>>& lengths, Letter a, int d,
                     double log_theta, int n_max) {
  const int h = std::max(4, n_max / 8);
  std::vector<double> xs, ys;
  for (int k = 3; k >= 0; --k) {
    int n = n_max - k * h;
    xs.push_back(1.0 / n);
    ys.push_back(growth_ratio(lengths[n][a], n, d, log_theta));
  }
  double e2 = neville_at_zero({xs[2], xs[3]}, {ys[2], ys[3]});
  double e3 = neville_at_zero({xs[1], xs[2], xs[3]}, {ys[1], ys[2], ys[3]});
  double e4 = neville_at_zero(xs, ys);
  CEstimate est;
  est.value = e4;
  est.error = 2.0 * std::abs(e4 - e3) + std::abs(e4 - e2) + 1e-11 * (1.0 + std::abs(e4));
  est.horizon = n_max;
  return est;
}

}  // namespace

int growth_order(const GrowthType& g1, const GrowthType& g2) {
  int c = g1.theta.compare(g2.theta);
  if (c != 0) return c;
  return g1.d < g2.d ? -1 : (g1.d > g2.d ? 1 : 0);
}

GrowthReport growth_types(const Morphism& m, int c_horizon) {
  if (m.source() != m.target()) throw domain_error("growth types need an endomorphism");
  const int n = m.source().size();
  auto adj = occurrence_adjacency(m);
  auto scc = tarjan_scc(adj);
  const int k = static_cast<int>(scc.members.size());
  IntMatrix mat = abelianization(m);

  std::vector<AlgebraicReal> radius(k, AlgebraicReal::from_int(0));
  for (int c = 0; c < k; ++c)
    if (!scc.trivial[c]) radius[c] = spectral_radius(mat.submatrix(scc.members[c], scc.members[c]));

  // Components come sinks-first, so successors are already resolved.
  std::vector<AlgebraicReal> max_theta(k, AlgebraicReal::from_int(0));
  std::vector<int> chain(k, 0);
  for (int c = 0; c < k; ++c) {
    max_theta[c] = radius[c];
    for (int s : scc.successors[c])
      if (max_theta[s].compare(max_theta[c]) > 0) max_theta[c] = max_theta[s];
    int best = 0;
    for (int s : scc.successors[c])
      if (max_theta[s].compare(max_theta[c]) == 0) best = std::max(best, chain[s]);
    chain[c] = best + (radius[c].compare(max_theta[c]) == 0 ? 1 : 0);
  }

  GrowthReport report;
  report.letters.resize(n);
  std::vector<Letter> bad;
  for (Letter a = 0; a < n; ++a) {
    int c = scc.comp[a];
    report.letters[a] = GrowthType{chain[c] - 1, max_theta[c]};
    const GrowthType& g = report.letters[a];
    int vs_one = g.theta.compare(Rational(1));
    if (vs_one < 0 || (vs_one == 0 && g.d == 0)) bad.push_back(a);
  }
  if (!bad.empty()) {
    std::string msg = "not a substitution: letters do not grow:";
    for (Letter a : bad) msg += " " + m.source().token(a);
    throw domain_error(msg);
  }

  report.theta = report.letters[0].theta;
  for (Letter a = 1; a < n; ++a)
    if (report.letters[a].theta.compare(report.theta) > 0) report.theta = report.letters[a].theta;
  report.jordan = 0;
  for (Letter a = 0; a < n; ++a)
    if (report.letters[a].theta.compare(report.theta) == 0)
      report.jordan = std::max(report.jordan, report.letters[a].d);
  for (Letter a = 0; a < n; ++a)
    if (report.letters[a].theta.compare(report.theta) == 0 && report.letters[a].d == report.jordan)
      report.a_max.push_back(a);

  Substitution s = Substitution::from_morphism(m);
  auto lengths = iterate_lengths(s, c_horizon);
  report.c_estimates.resize(n);
  for (Letter a = 0; a < n; ++a) {
    double lt = log_of_algebraic(report.letters[a].theta);
    report.c_estimates[a] = estimate_c(lengths, a, report.letters[a].d, lt, c_horizon);
  }
  return report;
}

GrowthReport growth_types(const Substitution& s, int c_horizon) {
  return growth_types(s.morphism(), c_horizon);
}

LambdaResult lambda_sigma(const Substitution& s, const Word& w, double tol) {
  if (tol <= 0) throw domain_error("lambda_sigma needs tol > 0");
  GrowthReport report = growth_types(s);
  std::vector<char> in_max(s.alphabet().size(), 0);
  for (Letter a : report.a_max) in_max[a] = 1;
  std::vector<int> multiplicity(s.alphabet().size(), 0);
  bool any = false;
  for (Letter a : w.letters) {
    if (a < 0 || a >= s.alphabet().size()) throw domain_error("letter outside alphabet");
    if (in_max[a]) {
      ++multiplicity[a];
      any = true;
    }
  }
  if (!any) return LambdaResult{0.0, 0.0, true};

  double lt = log_of_algebraic(report.theta);
  for (int n_max : {64, 128, 256, 512, 1024}) {
    auto lengths = iterate_lengths(s, n_max);
    double value = 0, error = 0;
    for (Letter a = 0; a < s.alphabet().size(); ++a) {
      if (multiplicity[a] == 0) continue;
      CEstimate est = estimate_c(lengths, a, report.jordan, lt, n_max);
      value += multiplicity[a] * est.value;
      error += multiplicity[a] * est.error;
    }
    if (error < tol) return LambdaResult{value, error, false};
  }
  throw budget_exhausted("lambda_sigma: tolerance not reached within horizon budget");
}

}  // namespace subst
