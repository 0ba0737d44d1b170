#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "subst/errors.hpp"

namespace subst {

// Index of a letter within an Alphabet.
using Letter = int;

// Ordered finite set of string tokens. The order is load-bearing: it fixes
// matrix row/column indexing everywhere downstream.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> tokens);

  int size() const { return static_cast<int>(tokens_.size()); }
  const std::string& token(Letter a) const { return tokens_.at(static_cast<size_t>(a)); }
  const std::vector<std::string>& tokens() const { return tokens_; }

  bool contains(std::string_view tok) const { return index_.count(std::string(tok)) > 0; }
  Letter index_of(std::string_view tok) const;

  // True when every token is a single character; controls word rendering.
  bool single_char() const;

  bool operator==(const Alphabet& other) const { return tokens_ == other.tokens_; }
  bool operator!=(const Alphabet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Letter> index_;
};

// Finite sequence of letter indices. Validity against a particular alphabet
// is checked at operation boundaries, not stored.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Letter operator[](size_t i) const { return letters[i]; }

  void append(Letter a) { letters.push_back(a); }
  void append(const Word& w) { letters.insert(letters.end(), w.letters.begin(), w.letters.end()); }

  Word slice(size_t begin, size_t end) const;  // [begin, end)
  Word prefix(size_t n) const { return slice(0, n); }

  bool operator==(const Word& other) const = default;
};

Word concat(const Word& a, const Word& b);

// Least d >= 1 with v[i] == v[i+d] for all valid i (shift period).
size_t least_shift_period(const Word& v);

// Shortest prefix r of v with v = r^k (primitive root).
Word primitive_root(const Word& v);

// u v^omega with exact equality. Canonical form: |v| minimal via
// primitive-root extraction, then any suffix of u equal to the
// corresponding rotation tail of v is absorbed into the period.
struct EventuallyPeriodicWord {
  Word preperiod;  // u
  Word period;     // v, non-empty

  EventuallyPeriodicWord(Word u, Word v);

  Letter at(size_t i) const;
  Word prefix(size_t n) const;

  // Structural equality of the canonical forms.
  bool operator==(const EventuallyPeriodicWord& other) const = default;
};

// Letterwise equality of the two infinite words, decided by comparing
// prefixes of length max(|ux|,|uy|) + lcm(|vx|,|vy|) + max(|vx|,|vy|).
bool ep_equal(const EventuallyPeriodicWord& x, const EventuallyPeriodicWord& y);

// Rendering: tokens concatenated when the alphabet is single-char,
// space-separated otherwise.
std::string render_word(const Alphabet& alphabet, const Word& w);

// Inverse of render_word. Accepts per-character splitting for single-char
// alphabets, whitespace- or comma-separated tokens otherwise.
Word read_word(const Alphabet& alphabet, std::string_view text);

}  // namespace subst
