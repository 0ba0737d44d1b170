#pragma once

#include <optional>
#include <vector>

#include "subst/morphism.hpp"

namespace subst {

// All start positions i with prefix[i, i+|u|) = u, ascending.
std::vector<size_t> occurrences(const Word& prefix, const Word& u);

struct ReturnWordSet {
  Word base;                  // u
  std::vector<Word> returns;  // distinct return words, by first appearance
  size_t horizon = 0;
  bool complete = false;      // no new return word in the tail segment
};

// Return words to u along the fixed point from seed, within the horizon
// prefix: w = x[i, j) for consecutive occurrences i < j of u.
ReturnWordSet return_words(const Substitution& s, Letter seed, const Word& u, size_t horizon);

// Largest distance between consecutive occurrences of target in the horizon
// prefix (including the leading offset). This is an observation at the given
// horizon, not a proof of boundedness. Fewer than two occurrences is an
// error: no gap statistic exists.
size_t max_gap(const Substitution& s, Letter seed, const Word& target, size_t horizon);

// sigma^{pn}(u) sigma^{p(n-1)}(v) ... sigma^p(v) v w a is a prefix of the
// fixed point for every n; u contains a maximal-growth letter. gamma is the
// numeric limit of |prefix_n| / ((pn)^D Theta^{pn}).
struct StarlikeDecomposition {
  int p = 1;
  Word u, v, w;
  Letter a = 0;
  double gamma_estimate = 0;
  double gamma_error = 0;
};

// Follows the constructive chain proof; requires `a` to occur infinitely
// often in the fixed point from seed. The prefix property is verified
// internally for n = 0..5 before returning.
StarlikeDecomposition starlike_decomposition(const Substitution& s, Letter seed, Letter a);

enum class PeriodicityKind { periodic, ultimately_periodic, none_found };

struct PeriodicityCertificate {
  PeriodicityKind kind = PeriodicityKind::none_found;
  std::optional<EventuallyPeriodicWord> witness;
  bool verified = false;
};

// Bounded search for u v^omega equal to the fixed point from seed, candidates
// read off the prefix with |v| ascending then |u| ascending. A returned
// witness satisfies the exact fixed-point equation
//   sigma(u) sigma(v)^omega = u v^omega
// via ep_equal, which together with the first letter being the seed makes the
// certificate sound (the fixed point from a seed is unique). none_found does
// NOT prove non-periodicity.
PeriodicityCertificate certify_ultimate_periodicity(const Substitution& s, Letter seed,
                                                    size_t max_pre, size_t max_per);

// Least d >= 1 with v[i] = v[i+d] for all valid i (shift-period convention).
size_t least_period(const Word& v);

}  // namespace subst
