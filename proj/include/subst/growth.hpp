#pragma once

#include <vector>

#include "subst/algebraic.hpp"
#include "subst/matrix.hpp"
#include "subst/morphism.hpp"

namespace subst {

// Per-letter growth data: |sigma^n(a)| ~ c(a) n^d theta^n.
struct GrowthType {
  int d = 0;             // Jordan order
  AlgebraicReal theta;   // dominant eigenvalue of the reachable part
};

// Lexicographic with theta dominant: (d,a) < (e,b) iff a < b, or a = b and
// d < e. Exact.
int growth_order(const GrowthType& g1, const GrowthType& g2);

// Numeric limit estimate with a reported error bound.
struct CEstimate {
  double value = 0;
  double error = 0;
  int horizon = 0;  // largest n entering the extrapolation
};

struct GrowthReport {
  std::vector<GrowthType> letters;
  AlgebraicReal theta;           // Theta = max over letters
  int jordan = 0;                // D = max d(a) among theta(a) = Theta
  std::vector<Letter> a_max;     // letters attaining (D, Theta)
  std::vector<CEstimate> c_estimates;
};

// Growth classification via condensation of the occurrence digraph:
// theta(a) is the max component spectral radius reachable from a, d(a) one
// less than the longest reachable chain of components attaining theta(a).
// Throws domain_error when some letter fails to grow (theta < 1, or
// theta = 1 with d = 0), which doubles as the substitution validity check.
GrowthReport growth_types(const Morphism& m, int c_horizon = 64);
GrowthReport growth_types(const Substitution& s, int c_horizon = 64);

struct LambdaResult {
  double value = 0;
  double error = 0;
  bool exact_zero = false;
};

// lambda_sigma(w) = sum of c(a) over the maximal-growth letters of w,
// estimated within tol. Exact zero when w avoids A_max entirely.
LambdaResult lambda_sigma(const Substitution& s, const Word& w, double tol);

}  // namespace subst
