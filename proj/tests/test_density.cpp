#include <cmath>

#include "doctest.h"
#include "subst/density.hpp"

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
AlgebraicReal sqrt2() {
  return AlgebraicReal::root_in_interval(P({-2, 0, 1}), Rational(1), Rational(2));
}
}  // namespace

TEST_CASE("integer multiplicative independence (spec examples)") {
  CHECK(mult_independent_integers(2, 3).status == IndependenceStatus::independent_proven);
  auto d = mult_independent_integers(4, 8);
  CHECK(d.status == IndependenceStatus::dependent);
  CHECK(d.k == 3);
  CHECK(d.l == 2);  // 4^3 = 8^2
  CHECK(mult_independent_integers(6, 12).status == IndependenceStatus::independent_proven);
  CHECK(mult_independent_integers(9, 27).status == IndependenceStatus::dependent);
  CHECK(mult_independent_integers(1024, 32).status == IndependenceStatus::dependent);
}

TEST_CASE("exhaustive small-range cross-check of the dependence test") {
  for (long p = 2; p <= 40; ++p)
    for (long q = 2; q <= 40; ++q) {
      bool brute = false;
      for (int k = 1; k <= 64 && !brute; ++k)
        for (int l = 1; l <= 64 && !brute; ++l) {
          // p^k == q^l in exact integers
          BigInt pk = boost::multiprecision::pow(BigInt(p), k);
          BigInt ql = boost::multiprecision::pow(BigInt(q), l);
          brute = pk == ql;
        }
      auto verdict = mult_independent_integers(p, q);
      CHECK(brute == (verdict.status == IndependenceStatus::dependent));
      if (verdict.status == IndependenceStatus::dependent) {
        CHECK(boost::multiprecision::pow(BigInt(p), (int)verdict.k) ==
              boost::multiprecision::pow(BigInt(q), (int)verdict.l));
      }
    }
}

TEST_CASE("bounded algebraic dependence search (spec examples)") {
  auto phi = golden();
  auto phi2 = phi.pow(2);
  auto d = mult_independent_bounded(phi, phi2, 12);
  CHECK(d.status == IndependenceStatus::dependent);
  CHECK(d.k == 2);
  CHECK(d.l == 1);

  auto i23 = mult_independent_bounded(AlgebraicReal::from_int(2), AlgebraicReal::from_int(3), 20);
  CHECK(i23.status == IndependenceStatus::no_witness_up_to);
  CHECK(i23.bound == 20);

  auto iphi2 = mult_independent_bounded(golden(), AlgebraicReal::from_int(2), 12);
  CHECK(iphi2.status == IndependenceStatus::no_witness_up_to);
}

TEST_CASE("lemmetech search (spec + acceptance examples)") {
  // sqrt2 vs 1 with eps 0.1: e.g. 5*sqrt2 - 7 ~ 0.0711.
  auto w = lemmetech_search(CertifiedReal::from_algebraic(sqrt2()),
                            CertifiedReal::from_rational(Rational(1)), 0.1, 1);
  CHECK(w.m >= w.n);
  CHECK(w.n >= 1);
  CHECK(w.value > 0);
  CHECK(w.value < 0.1);
  // Certify once more at very high precision.
  FloatInterval v = CertifiedReal::from_algebraic(sqrt2()).eval(4096).scaled_by_long(w.n) -
                    CertifiedReal::from_rational(Rational(1)).eval(4096).scaled_by_long(w.m);
  CHECK(v.certainly_inside(0.0, 0.1));

  // Loose epsilon: sqrt2 - 1 ~ 0.414 qualifies.
  auto loose = lemmetech_search(CertifiedReal::from_algebraic(sqrt2()),
                                CertifiedReal::from_rational(Rational(1)), 2.0, 1);
  CHECK(loose.value > 0);
  CHECK(loose.value < 2.0);

  // log 3 vs log 2 with eps 0.01.
  auto logs = lemmetech_search(CertifiedReal::log_of(CertifiedReal::from_rational(Rational(3))),
                               CertifiedReal::log_of(CertifiedReal::from_rational(Rational(2))),
                               0.01, 1);
  double val = logs.n * std::log(3.0) - logs.m * std::log(2.0);
  CHECK(val > 0);
  CHECK(val < 0.01);
}

TEST_CASE("lemmetech respects the n >= N constraint") {
  auto w = lemmetech_search(CertifiedReal::from_algebraic(sqrt2()),
                            CertifiedReal::from_rational(Rational(1)), 0.1, 50);
  CHECK(w.n >= 50);
  CHECK(w.value > 0);
  CHECK(w.value < 0.1);
}

TEST_CASE("denselog search (spec examples)") {
  auto log2 = CertifiedReal::log_of(CertifiedReal::from_rational(Rational(2)));
  auto log3 = CertifiedReal::log_of(CertifiedReal::from_rational(Rational(3)));
  auto w = denselog_search(log2, log3, 0, 0, 0.0, 0.02);
  double v = w.n * std::log(2.0) - w.m * std::log(3.0);
  CHECK(std::abs(v) < 0.02);

  // d=1, e=0, alpha=1, beta=sqrt2, target 5.
  auto w2 = denselog_search(CertifiedReal::from_rational(Rational(1)),
                            CertifiedReal::from_algebraic(sqrt2()), 1, 0, 5.0, 0.05);
  double v2 = w2.n + std::log((double)w2.n) - w2.m * std::sqrt(2.0) - 5.0;
  CHECK(std::abs(v2) < 0.05);
}

TEST_CASE("denselog agrees with a brute-force witness when one exists") {
  // Brute force over n, m <= 200 for |n log2 - m log3 - 0.5| < 0.03.
  double best = 1e9;
  for (int n = 1; n <= 200; ++n)
    for (int m = 1; m <= 200; ++m)
      best = std::min(best, std::abs(n * std::log(2.0) - m * std::log(3.0) - 0.5));
  REQUIRE(best < 0.03);  // the brute-force oracle finds something
  auto log2 = CertifiedReal::log_of(CertifiedReal::from_rational(Rational(2)));
  auto log3 = CertifiedReal::log_of(CertifiedReal::from_rational(Rational(3)));
  auto w = denselog_search(log2, log3, 0, 0, 0.5, 0.03);
  CHECK(std::abs(w.n * std::log(2.0) - w.m * std::log(3.0) - 0.5) < 0.03);
}

TEST_CASE("densite search hits 2^19/3^12 or better (acceptance numbers)") {
  auto w = densite_search(CertifiedReal::from_rational(Rational(2)),
                          CertifiedReal::from_rational(Rational(3)), 0, 0, 1.0, 0.05);
  // Exact rational re-verification.
  Rational value(boost::multiprecision::pow(BigInt(2), (unsigned)w.n),
                 boost::multiprecision::pow(BigInt(3), (unsigned)w.m));
  Rational err = value - 1;
  if (err < 0) err = -err;
  Rational reference = Rational(1) - Rational(BigInt("524288"), BigInt("531441"));  // 1 - 2^19/3^12
  CHECK(err <= reference);
  CHECK(err < Rational(5, 100));
}

TEST_CASE("densite matches or beats exhaustive brute force over n, m <= 60") {
  // Brute-force oracle over the small window; densite must achieve the same
  // or better error whenever the oracle finds an in-window witness.
  double best = 1e18;
  for (int n = 1; n <= 60; ++n)
    for (int m = 1; m <= 60; ++m) {
      Rational v(boost::multiprecision::pow(BigInt(2), n), boost::multiprecision::pow(BigInt(3), m));
      double err = std::abs(v.convert_to<double>() - 1.0);
      best = std::min(best, err);
    }
  REQUIRE(best < 0.05);
  auto w = densite_search(CertifiedReal::from_rational(Rational(2)),
                          CertifiedReal::from_rational(Rational(3)), 0, 0, 1.0, 0.05);
  CHECK(std::abs(w.achieved - 1.0) <= best + 1e-12);
}

TEST_CASE("densite refuses multiplicatively dependent integer inputs") {
  CHECK_THROWS_AS(densite_search(CertifiedReal::from_rational(Rational(2)),
                                 CertifiedReal::from_rational(Rational(4)), 0, 0, 1.0, 0.05),
                  domain_error);
}

TEST_CASE("densite with algebraic base (phi vs 2)") {
  auto w = densite_search(CertifiedReal::from_algebraic(golden()),
                          CertifiedReal::from_rational(Rational(2)), 0, 0, 3.0, 0.1);
  double phi = (1 + std::sqrt(5.0)) / 2;
  double value = std::exp(w.n * std::log(phi) - w.m * std::log(2.0));
  CHECK(std::abs(value - 3.0) / 3.0 < 0.1);
}

TEST_CASE("witness monotonicity: tighter eps never yields a worse error") {
  auto log2 = CertifiedReal::log_of(CertifiedReal::from_rational(Rational(2)));
  auto log3 = CertifiedReal::log_of(CertifiedReal::from_rational(Rational(3)));
  auto coarse = denselog_search(log2, log3, 0, 0, 0.0, 0.05);
  auto fine = denselog_search(log2, log3, 0, 0, 0.0, 0.01);
  CHECK(std::abs(fine.achieved) <= 0.01);
  CHECK(std::abs(coarse.achieved) <= 0.05);
}

TEST_CASE("parse CertifiedReal expressions") {
  CHECK(CertifiedReal::parse("3").is_rational());
  CHECK(CertifiedReal::parse("1.25").rational_value() == Rational(5, 4));
  CHECK(CertifiedReal::parse("-0.5").rational_value() == Rational(-1, 2));
  auto root = CertifiedReal::parse("root:-1,-1,1:1.6:1.7");
  CHECK(root.is_algebraic());
  CHECK(std::abs(root.approx() - 1.618033988) < 1e-8);
  auto lg = CertifiedReal::parse("log:2");
  CHECK(lg.is_log());
  CHECK(std::abs(lg.approx() - std::log(2.0)) < 1e-12);
}
