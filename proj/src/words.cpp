#include "subst/words.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

namespace subst {

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw domain_error("alphabet must be non-empty");
  for (size_t i = 0; i < tokens_.size(); ++i) {
    if (tokens_[i].empty()) throw domain_error("alphabet token must be non-empty");
    auto [it, inserted] = index_.emplace(tokens_[i], static_cast<Letter>(i));
    if (!inserted) throw domain_error("duplicate alphabet token: " + tokens_[i]);
  }
}

Letter Alphabet::index_of(std::string_view tok) const {
  auto it = index_.find(std::string(tok));
  if (it == index_.end()) throw domain_error("unknown letter: " + std::string(tok));
  return it->second;
}

bool Alphabet::single_char() const {
  return std::all_of(tokens_.begin(), tokens_.end(),
                     [](const std::string& t) { return t.size() == 1; });
}

Word Word::slice(size_t begin, size_t end) const {
  if (begin > end || end > letters.size()) throw domain_error("word slice out of range");
  return Word(std::vector<Letter>(letters.begin() + begin, letters.begin() + end));
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.append(b);
  return r;
}

size_t least_shift_period(const Word& v) {
  if (v.empty()) throw domain_error("least period of empty word is undefined");
  const size_t n = v.size();
  // Border array (KMP failure function); least shift period = n - border(n).
  std::vector<size_t> border(n + 1, 0);
  size_t k = 0;
  for (size_t i = 1; i < n; ++i) {
    while (k > 0 && v[i] != v[k]) k = border[k];
    if (v[i] == v[k]) ++k;
    border[i + 1] = k;
  }
  return n - border[n];
}

Word primitive_root(const Word& v) {
  const size_t n = v.size();
  const size_t d = least_shift_period(v);
  if (n % d == 0) return v.prefix(d);
  return v;
}

EventuallyPeriodicWord::EventuallyPeriodicWord(Word u, Word v)
    : preperiod(std::move(u)), period(std::move(v)) {
  if (period.empty()) throw domain_error("period must be non-empty");
  period = primitive_root(period);
  // Absorb: while u ends with the last letter of v, rotate v right.
  while (!preperiod.empty() && preperiod.letters.back() == period.letters.back()) {
    preperiod.letters.pop_back();
    std::rotate(period.letters.begin(), period.letters.end() - 1, period.letters.end());
  }
}

Letter EventuallyPeriodicWord::at(size_t i) const {
  if (i < preperiod.size()) return preperiod[i];
  return period[(i - preperiod.size()) % period.size()];
}

Word EventuallyPeriodicWord::prefix(size_t n) const {
  Word r;
  r.letters.reserve(n);
  for (size_t i = 0; i < n; ++i) r.append(at(i));
  return r;
}

bool ep_equal(const EventuallyPeriodicWord& x, const EventuallyPeriodicWord& y) {
  const size_t pu = std::max(x.preperiod.size(), y.preperiod.size());
  const size_t vx = x.period.size(), vy = y.period.size();
  const size_t bound = pu + std::lcm(vx, vy) + std::max(vx, vy);
  for (size_t i = 0; i < bound; ++i)
    if (x.at(i) != y.at(i)) return false;
  return true;
}

std::string render_word(const Alphabet& alphabet, const Word& w) {
  std::string out;
  const bool tight = alphabet.single_char();
  for (size_t i = 0; i < w.size(); ++i) {
    if (!tight && i > 0) out += ' ';
    out += alphabet.token(w[i]);
  }
  return out;
}

Word read_word(const Alphabet& alphabet, std::string_view text) {
  auto try_tokens = [&](const std::vector<std::string>& toks) -> std::optional<Word> {
    Word w;
    for (const auto& t : toks) {
      if (!alphabet.contains(t)) return std::nullopt;
      w.append(alphabet.index_of(t));
    }
    return w;
  };
  // Whitespace-separated tokens first.
  {
    std::istringstream in{std::string(text)};
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    if (auto w = try_tokens(toks)) return *w;
  }
  // Per-character splitting for single-char alphabets.
  if (alphabet.single_char()) {
    Word w;
    bool ok = true;
    for (char c : text) {
      if (c == ' ' || c == '\t') continue;
      std::string t(1, c);
      if (!alphabet.contains(t)) {
        ok = false;
        break;
      }
      w.append(alphabet.index_of(t));
    }
    if (ok) return w;
  }
  // Comma-separated tokens (tokens themselves may not contain commas then).
  {
    std::vector<std::string> toks;
    std::string cur;
    for (char c : text) {
      if (c == ',') {
        if (!cur.empty()) toks.push_back(cur);
        cur.clear();
      } else if (c != ' ' && c != '\t') {
        cur += c;
      }
    }
    if (!cur.empty()) toks.push_back(cur);
    if (auto w = try_tokens(toks)) return *w;
  }
  throw domain_error("cannot read word over this alphabet: " + std::string(text));
}

}  // namespace subst
