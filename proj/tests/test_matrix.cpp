#include "corpus.hpp"
#include "doctest.h"
#include "subst/matrix.hpp"

using namespace subst;

namespace {
IntPoly P(std::initializer_list<long> coeffs) {
  std::vector<BigInt> c;
  for (long v : coeffs) c.push_back(v);
  return IntPoly(std::move(c));
}
}  // namespace

TEST_CASE("abelianization spec examples") {
  IntMatrix fib = abelianization(corpus::fibonacci());
  CHECK(fib(0, 0) == 1);
  CHECK(fib(0, 1) == 1);
  CHECK(fib(1, 0) == 1);
  CHECK(fib(1, 1) == 0);

  IntMatrix tau = abelianization(corpus::tau3());
  // columns: a:(3,1,0), b:(0,1,1), c:(0,1,0)
  CHECK(tau(0, 0) == 3);
  CHECK(tau(1, 0) == 1);
  CHECK(tau(2, 0) == 0);
  CHECK(tau(0, 1) == 0);
  CHECK(tau(1, 1) == 1);
  CHECK(tau(2, 1) == 1);
  CHECK(tau(0, 2) == 0);
  CHECK(tau(1, 2) == 1);
  CHECK(tau(2, 2) == 0);

  IntMatrix dbl = abelianization(corpus::make("a -> a a\n"));
  CHECK(dbl(0, 0) == 2);
}

TEST_CASE("abelianization is a monoid morphism to matrices") {
  for (auto& [name, s] : corpus::growth_corpus()) {
    CAPTURE(name);
    IntMatrix m = abelianization(s);
    CHECK(abelianization(power(s, 2)) == m * m);
  }
}

TEST_CASE("char poly") {
  IntMatrix fib = abelianization(corpus::fibonacci());
  CHECK(char_poly(fib) == P({-1, -1, 1}));
  IntMatrix one(1, 1);
  one(0, 0) = 2;
  CHECK(char_poly(one) == P({-2, 1}));
  IntMatrix tau = abelianization(corpus::tau3());
  CHECK(char_poly(tau) == P({-3, 1}) * P({-1, -1, 1}));
}

TEST_CASE("spectral radius (paper values)") {
  auto theta_tau = spectral_radius(abelianization(corpus::tau3()));
  CHECK(theta_tau.is_rational());
  CHECK(theta_tau.rational_value() == 3);

  auto theta_fib = spectral_radius(abelianization(corpus::fibonacci()));
  auto phi = AlgebraicReal::root_in_interval(P({-1, -1, 1}), Rational(16, 10), Rational(17, 10));
  CHECK(theta_fib.compare(phi) == 0);

  IntMatrix zero(1, 1);
  CHECK(spectral_radius(zero).compare(Rational(0)) == 0);
}

TEST_CASE("iterate_lengths vs materialized words") {
  std::vector<Substitution> subs{corpus::fibonacci(), corpus::tau3(), corpus::chained2()};
  for (const Substitution& s : subs) {
    auto lengths = iterate_lengths(s, 8);
    for (int n = 0; n <= 8; ++n)
      for (Letter a = 0; a < s.alphabet().size(); ++a)
        CHECK(lengths[n][a] == BigInt(iterate(s, a, n).size()));
  }
}

TEST_CASE("closed-form length check: (n+2) 2^(n-1) for a -> aac") {
  auto s = corpus::chained2();
  auto lengths = iterate_lengths(s, 30);
  for (int n = 1; n <= 30; ++n)
    CHECK(lengths[n][0] == BigInt(n + 2) * boost::multiprecision::pow(BigInt(2), n - 1));
}

TEST_CASE("primitivity index and Wielandt bound") {
  auto fib = BoolMatrix::support_of(abelianization(corpus::fibonacci()));
  CHECK(primitivity_index(fib) == 2);
  auto tm = BoolMatrix::support_of(abelianization(corpus::thue_morse()));
  CHECK(primitivity_index(tm) == 1);
  // Non-primitive: period-2 swap without diagonal.
  IntMatrix m(2, 2);
  m(0, 1) = 1;
  m(1, 0) = 1;
  CHECK(primitivity_index(BoolMatrix::support_of(m)) == 0);
  for (auto& s : corpus::random_primitive(5, 42)) {
    auto b = BoolMatrix::support_of(abelianization(s));
    long idx = primitivity_index(b);
    CHECK(idx >= 1);
    CHECK(idx <= long(b.size() - 1) * (b.size() - 1) + 1);
  }
}
