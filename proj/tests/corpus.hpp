#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subst/morphism.hpp"

namespace corpus {

subst::Substitution make(const std::string& rules);

// The paper's worked examples.
subst::Substitution fibonacci();   // a -> ab, b -> a
subst::Substitution tau3();        // a -> aaab, b -> bc, c -> b
subst::Substitution aa0();         // a -> aa0, 0 -> 01, 1 -> 0
subst::Substitution thue_morse();  // a -> ab, b -> ba

// Assorted small substitutions used across tests.
subst::Substitution chained2();     // a -> aac, c -> cc     (growth type (1,2))
subst::Substitution exp_pair();     // a -> ab, b -> bb      (growth 2^n)
subst::Substitution abb_bb();       // a -> abb, b -> bb     (fixed point a b^omega)
subst::Substitution periodic_ab();  // a -> ab, b -> ab      ((ab)^omega)
subst::Substitution swap_ab();      // a -> ba, b -> ab
subst::Substitution d2chain();      // a -> aab, b -> bbc, c -> cc  (growth type (2,2))

// Named corpus with >= 20 valid members on alphabets <= 8, chosen so the
// n = 25 vs n = 30 growth ratios have converged within the acceptance
// tolerance (slowly converging Jordan-order-2 letters are exercised in unit
// tests instead).
std::vector<std::pair<std::string, subst::Substitution>> growth_corpus();

// Subset with uniformly recurrent (or eventually periodic) fixed points, so
// occurrence gaps stabilize between horizons; every member has a seed.
std::vector<std::pair<std::string, subst::Substitution>> recurrent_corpus();

// Deterministic pseudo-random primitive substitutions.
std::vector<subst::Substitution> random_primitive(int count, unsigned seed);

}  // namespace corpus
