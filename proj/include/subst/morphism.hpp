#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subst/words.hpp"

namespace subst {

// Map source letter -> word over the target alphabet, extended to words by
// concatenation. Images may be empty for general morphisms.
class Morphism {
 public:
  Morphism(Alphabet source, Alphabet target, std::vector<Word> images);

  const Alphabet& source() const { return source_; }
  const Alphabet& target() const { return target_; }
  const Word& image(Letter a) const { return images_.at(static_cast<size_t>(a)); }
  const std::vector<Word>& images() const { return images_; }

  bool letter_to_letter() const;
  bool non_erasing() const;

  bool operator==(const Morphism& other) const = default;

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Word> images_;
};

Word apply(const Morphism& m, const Word& w);
Morphism compose(const Morphism& outer, const Morphism& inner);  // outer(inner(.))

// Morphism with source == target such that |sigma^n(a)| -> infinity for
// every letter a. The growth condition is certified structurally at
// construction (see is_growing_everywhere below).
class Substitution {
 public:
  static Substitution from_morphism(const Morphism& m);

  const Alphabet& alphabet() const { return m_.source(); }
  const Morphism& morphism() const { return m_; }
  const Word& image(Letter a) const { return m_.image(a); }

  bool operator==(const Substitution& other) const { return m_ == other.m_; }

 private:
  explicit Substitution(Morphism m) : m_(std::move(m)) {}
  Morphism m_;
};

Word apply(const Substitution& s, const Word& w);

// sigma^n(a), materialized. Intended for desk-scale n; lengths for large n
// come from matrix powering in the spectral layer instead.
Word iterate(const Substitution& s, Letter a, int n);

// sigma^k as a substitution with materialized images (k >= 1).
Substitution power(const Substitution& s, int k);

// Exact structural test that every letter grows: a letter fails iff, in the
// occurrence digraph restricted to what it reaches, the maximal cycle weight
// is <= 1 and no path meets two distinct cycles. Equivalent to growth type
// (0,1) or erasure to the empty word.
bool is_growing_everywhere(const Morphism& m);
std::vector<Letter> non_growing_letters(const Morphism& m);

// Letters a with sigma(a) = a w, w non-empty. Each seeds the fixed point
// a w sigma(w) sigma^2(w) ...
std::vector<Letter> fixed_point_seeds(const Substitution& s);

// First n letters of the fixed point grown from seed.
Word fixed_point_prefix(const Substitution& s, Letter seed, size_t n);

// Incremental expander for repeated prefix queries. Not internally
// synchronized; confine one instance to one thread or guard externally.
class FixedPointExpander {
 public:
  FixedPointExpander(Substitution s, Letter seed);
  const Word& prefix(size_t n);  // buffer of length >= min(n, available)
  const Substitution& substitution() const { return s_; }
  Letter seed() const { return seed_; }

 private:
  Substitution s_;
  Letter seed_;
  Word buffer_;
  size_t processed_ = 1;
};

// True iff the closure of {seed} under "letters occurring in sigma(.)"
// covers the full alphabet.
bool is_proper_fixed_point(const Substitution& s, Letter seed);

// Closure of {seed} under occurrence in images: exactly the letters of the
// fixed point grown from seed.
std::vector<Letter> reachable_letters(const Substitution& s, Letter seed);

// --- Text format -----------------------------------------------------------
//
// One rule per line:  <token> -> <token> <token> ...
// Tokens are whitespace-free strings; "->" and "." are reserved. A line whose
// first non-blank character is '#' is a comment. An empty right-hand side is
// written as a single period. The alphabet is the set of tokens seen on
// either side, ordered by first appearance on a left-hand side; a right-side
// token never defined on a left side is an error.

Morphism parse_endomorphism(const std::string& text);
Substitution parse_substitution(const std::string& text);
std::string serialize(const Morphism& m);
std::string serialize(const Substitution& s);

// Same rules, same images, letters renamed. new_tokens[i] replaces token i.
Substitution rename_letters(const Substitution& s, const std::vector<std::string>& new_tokens);

}  // namespace subst
