#pragma once

#include <optional>

#include "subst/realnum.hpp"

namespace subst {

enum class IndependenceStatus { dependent, independent_proven, no_witness_up_to };

struct IndependenceVerdict {
  IndependenceStatus status = IndependenceStatus::no_witness_up_to;
  long k = 0, l = 0;  // witness of p^k = q^l when dependent
  long bound = 0;     // searched bound for the inconclusive case
};

// Exact: p and q (>= 2) are multiplicatively dependent iff they are integer
// powers of a common base; the returned (k, l) is the minimal relation.
IndependenceVerdict mult_independent_integers(const BigInt& p, const BigInt& q);

// Bounded exact search for a^k = b^l, k, l <= bound, by exact algebraic
// powering. NoWitnessUpTo is not a proof of independence.
IndependenceVerdict mult_independent_bounded(const AlgebraicReal& a, const AlgebraicReal& b,
                                             int bound);

struct LemmetechWitness {
  long n = 0, m = 0;
  double value = 0;  // n alpha - m beta, certified inside (0, eps)
};

// m >= n >= n_min with 0 < n alpha - m beta < eps, alpha > beta > 0 and
// alpha/beta irrational (caller-asserted). Continued-fraction convergents of
// alpha/beta first, bounded brute force as fallback; the winning pair is
// certified by interval arithmetic at escalating precision.
LemmetechWitness lemmetech_search(const CertifiedReal& alpha, const CertifiedReal& beta,
                                  double eps, long n_min, long budget = 1000000);

struct DensityWitness {
  long n = 0, m = 0;
  double achieved = 0;
  double target = 0;
  double eps = 0;
};

// |n alpha + d log n - m beta - e log m - target| < eps. alpha, beta
// rationally independent and positive (caller-asserted). Implements the
// step-walk: a small certified step from lemmetech-style pairs, walked until
// the target is bracketed within eps.
DensityWitness denselog_search(const CertifiedReal& alpha, const CertifiedReal& beta, int d,
                               int e, double target, double eps, long budget = 1000000);

// n^d alpha^n / (m^e beta^m) within relative eps_rel of target (> 0);
// reduces to denselog_search on logarithms. Integer inputs are guarded by
// the exact dependence test.
DensityWitness densite_search(const CertifiedReal& alpha, const CertifiedReal& beta, int d,
                              int e, double target, double eps_rel, long budget = 1000000);

}  // namespace subst
