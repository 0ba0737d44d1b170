#include <cmath>

#include "corpus.hpp"
#include "doctest.h"
#include "subst/growth.hpp"

using namespace subst;

namespace {
IntPoly P(std::initializer_list<long> coeffs) {
  std::vector<BigInt> c;
  for (long v : coeffs) c.push_back(v);
  return IntPoly(std::move(c));
}
AlgebraicReal golden() {
  return AlgebraicReal::root_in_interval(P({-1, -1, 1}), Rational(16, 10), Rational(17, 10));
}

// Brute-force observed ratio |sigma^n(a)| / (n^d theta^n) at one n, straight
// from exact lengths.
double observed_ratio(const Substitution& s, Letter a, int d, double theta, int n) {
  auto lengths = iterate_lengths(s, n);
  double logv = 0;
  BigInt v = lengths[n][a];
  // lengths stay comfortably in double range for the n used here
  logv = std::log(v.convert_to<double>());
  return std::exp(logv - d * std::log((double)n) - n * std::log(theta));
}
}  // namespace

TEST_CASE("growth types: tau3 (spec example)") {
  auto r = growth_types(corpus::tau3());
  CHECK(r.letters[0].d == 0);
  CHECK(r.letters[0].theta.compare(Rational(3)) == 0);
  CHECK(r.letters[1].d == 0);
  CHECK(r.letters[1].theta.compare(golden()) == 0);
  CHECK(r.letters[2].d == 0);
  CHECK(r.letters[2].theta.compare(golden()) == 0);
  CHECK(r.theta.compare(Rational(3)) == 0);
  CHECK(r.jordan == 0);
  CHECK(r.a_max == std::vector<Letter>{0});
}

TEST_CASE("growth types: chained radius-2 components (spec example)") {
  auto r = growth_types(corpus::chained2());
  CHECK(r.letters[0].d == 1);
  CHECK(r.letters[0].theta.compare(Rational(2)) == 0);
  CHECK(r.letters[1].d == 0);
  CHECK(r.letters[1].theta.compare(Rational(2)) == 0);
  CHECK(r.jordan == 1);
  CHECK(r.theta.compare(Rational(2)) == 0);
  CHECK(r.a_max == std::vector<Letter>{0});
}

TEST_CASE("growth types: a->ab, b->bb has pure 2^n growth (spec example)") {
  auto r = growth_types(corpus::exp_pair());
  CHECK(r.letters[0].d == 0);
  CHECK(r.letters[0].theta.compare(Rational(2)) == 0);
}

TEST_CASE("growth types: Jordan order 2 chain") {
  auto r = growth_types(corpus::d2chain());
  CHECK(r.letters[0].d == 2);
  CHECK(r.letters[1].d == 1);
  CHECK(r.letters[2].d == 0);
  CHECK(r.jordan == 2);
  CHECK(r.a_max == std::vector<Letter>{0});
}

TEST_CASE("growth_types signals invalid substitutions") {
  Morphism bad = parse_endomorphism("a -> a b\nb -> b\n");
  CHECK_THROWS_AS(growth_types(bad), domain_error);
  Morphism erasing = parse_endomorphism("a -> a a b\nb -> .\n");
  CHECK_THROWS_AS(growth_types(erasing), domain_error);
  // a -> ab with b -> b would not grow; a -> ab, b -> ba does.
  CHECK_NOTHROW(growth_types(corpus::thue_morse().morphism()));
}

TEST_CASE("growth_order spec examples") {
  GrowthType phi0{0, golden()};
  GrowthType three0{0, AlgebraicReal::from_int(3)};
  GrowthType two1{1, AlgebraicReal::from_int(2)};
  GrowthType two0{0, AlgebraicReal::from_int(2)};
  GrowthType two2{2, AlgebraicReal::from_int(2)};
  CHECK(growth_order(phi0, three0) == -1);
  CHECK(growth_order(two1, two0) == 1);
  CHECK(growth_order(two2, three0) == -1);
  CHECK(growth_order(two1, two1) == 0);
}

TEST_CASE("eigenvalue ratio converges to theta") {
  for (auto& [name, s] : corpus::growth_corpus()) {
    CAPTURE(name);
    auto report = growth_types(s);
    auto lengths = iterate_lengths(s, 31);
    for (Letter a = 0; a < s.alphabet().size(); ++a) {
      double theta = report.letters[a].theta.to_double();
      double ratio = (Rational(lengths[31][a]) / Rational(lengths[30][a])).convert_to<double>();
      CHECK(std::abs(ratio - theta) / theta < 0.05);
    }
  }
}

TEST_CASE("growth ratios are Cauchy (Lemma croissance shape)") {
  for (auto& [name, s] : corpus::growth_corpus()) {
    CAPTURE(name);
    auto report = growth_types(s);
    for (Letter a = 0; a < s.alphabet().size(); ++a) {
      double theta = report.letters[a].theta.to_double();
      int d = report.letters[a].d;
      double r25 = observed_ratio(s, a, d, theta, 25);
      double r30 = observed_ratio(s, a, d, theta, 30);
      CHECK(std::abs(r30 - r25) / r30 < 0.02);
    }
  }
}

TEST_CASE("growth_order consistent with limit comparison") {
  for (auto& [name, s] : corpus::growth_corpus()) {
    CAPTURE(name);
    auto report = growth_types(s);
    auto lengths = iterate_lengths(s, 30);
    for (Letter a = 0; a < s.alphabet().size(); ++a)
      for (Letter b = 0; b < s.alphabet().size(); ++b)
        if (growth_order(report.letters[a], report.letters[b]) < 0) {
          double q = (Rational(lengths[30][a]) / Rational(lengths[30][b])).convert_to<double>();
          CHECK(q < 0.1);
        }
  }
}

TEST_CASE("c estimates match closed forms") {
  // |sigma^n(a)| = (n+2) 2^(n-1) for a -> aac, c -> cc: c(a) = 1/2.
  auto r = growth_types(corpus::chained2(), 128);
  CHECK(std::abs(r.c_estimates[0].value - 0.5) <= r.c_estimates[0].error + 1e-12);
  CHECK(r.c_estimates[0].error < 1e-6);
  // Fibonacci: |sigma^n(a)| = F(n+2) ~ (phi^2/sqrt 5) phi^n.
  auto rf = growth_types(corpus::fibonacci(), 128);
  double truth = std::pow((1 + std::sqrt(5.0)) / 2, 2) / std::sqrt(5.0);
  CHECK(std::abs(rf.c_estimates[0].value - truth) <= rf.c_estimates[0].error + 1e-9);
  // Thue-Morse: exactly 2^n.
  auto rt = growth_types(corpus::thue_morse(), 128);
  CHECK(std::abs(rt.c_estimates[0].value - 1.0) <= rt.c_estimates[0].error + 1e-12);
}

TEST_CASE("c estimate error bounds are honest on the corpus") {
  // Cross-check the reported bound against a much longer horizon.
  for (auto& [name, s] : corpus::growth_corpus()) {
    CAPTURE(name);
    auto coarse = growth_types(s, 64);
    auto fine = growth_types(s, 512);
    for (Letter a = 0; a < s.alphabet().size(); ++a) {
      CAPTURE(a);
      double drift = std::abs(coarse.c_estimates[a].value - fine.c_estimates[a].value);
      CHECK(drift <= coarse.c_estimates[a].error + fine.c_estimates[a].error + 1e-10);
    }
  }
}

TEST_CASE("lambda_sigma spec examples") {
  auto s = corpus::chained2();
  Word c_only = read_word(s.alphabet(), "c");
  auto zero = lambda_sigma(s, c_only, 1e-6);
  CHECK(zero.exact_zero);
  CHECK(zero.value == 0.0);

  Word a_only = read_word(s.alphabet(), "a");
  auto half = lambda_sigma(s, a_only, 1e-6);
  CHECK(std::abs(half.value - 0.5) < 1e-6);

  Word ac = read_word(s.alphabet(), "ac");
  auto sum = lambda_sigma(s, ac, 1e-6);
  CHECK(std::abs(sum.value - 0.5) < 1e-6);
}
