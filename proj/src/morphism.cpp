#include "subst/morphism.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "subst/digraph.hpp"

namespace subst {

namespace {

constexpr size_t kMaterializeLimit = size_t(1) << 26;  // letters

}  // namespace

Morphism::Morphism(Alphabet source, Alphabet target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_.size())
    throw domain_error("morphism needs one image per source letter");
  for (const Word& w : images_)
    for (Letter b : w.letters)
      if (b < 0 || b >= target_.size()) throw domain_error("image letter outside target alphabet");
}

bool Morphism::letter_to_letter() const {
  return std::all_of(images_.begin(), images_.end(), [](const Word& w) { return w.size() == 1; });
}

bool Morphism::non_erasing() const {
  return std::none_of(images_.begin(), images_.end(), [](const Word& w) { return w.empty(); });
}

Word apply(const Morphism& m, const Word& w) {
  Word out;
  size_t total = 0;
  for (Letter a : w.letters) {
    if (a < 0 || a >= m.source().size()) throw domain_error("letter outside source alphabet");
    total += m.image(a).size();
  }
  out.letters.reserve(total);
  for (Letter a : w.letters) out.append(m.image(a));
  return out;
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (inner.target() != outer.source())
    throw domain_error("compose: inner target must equal outer source");
  std::vector<Word> images;
  images.reserve(inner.source().size());
  for (Letter a = 0; a < inner.source().size(); ++a) images.push_back(apply(outer, inner.image(a)));
  return Morphism(inner.source(), outer.target(), std::move(images));
}

Substitution Substitution::from_morphism(const Morphism& m) {
  if (m.source() != m.target()) throw domain_error("substitution needs source == target");
  auto bad = non_growing_letters(m);
  if (!bad.empty()) {
    std::string msg = "not a substitution: letters do not grow:";
    for (Letter a : bad) msg += " " + m.source().token(a);
    throw domain_error(msg);
  }
  return Substitution(m);
}

Word apply(const Substitution& s, const Word& w) { return apply(s.morphism(), w); }

Word iterate(const Substitution& s, Letter a, int n) {
  if (a < 0 || a >= s.alphabet().size()) throw domain_error("letter outside alphabet");
  if (n < 0) throw domain_error("iterate needs n >= 0");
  Word w(std::vector<Letter>{a});
  for (int i = 0; i < n; ++i) {
    w = apply(s, w);
    if (w.size() > kMaterializeLimit) throw domain_error("iterate: materialized word too large");
  }
  return w;
}

Substitution power(const Substitution& s, int k) {
  if (k < 1) throw domain_error("power needs k >= 1");
  std::vector<Word> images;
  images.reserve(s.alphabet().size());
  for (Letter a = 0; a < s.alphabet().size(); ++a) images.push_back(iterate(s, a, k));
  return Substitution::from_morphism(Morphism(s.alphabet(), s.alphabet(), std::move(images)));
}

std::vector<Letter> non_growing_letters(const Morphism& m) {
  if (m.source() != m.target()) throw domain_error("growth check needs source == target");
  const int n = m.source().size();
  auto adj = occurrence_adjacency(m);
  auto scc = tarjan_scc(adj);
  const int k = static_cast<int>(scc.members.size());

  // Cycle weight class per component: 0 trivial, 1 cyclic permutation,
  // 2 means spectral radius > 1 (some in-component column sum exceeds 1,
  // or sums differ; both force radius > 1 for irreducible blocks).
  std::vector<int> weight(k, 0);
  for (int c = 0; c < k; ++c) {
    const auto& mem = scc.members[c];
    if (mem.size() == 1) {
      Letter a = mem[0];
      size_t self = 0;
      for (Letter b : m.image(a).letters)
        if (b == a) ++self;
      weight[c] = self == 0 ? 0 : (self == 1 ? 1 : 2);
      continue;
    }
    bool all_one = true;
    for (Letter a : mem) {
      size_t in_comp = 0;
      for (Letter b : m.image(a).letters)
        if (scc.comp[b] == c) ++in_comp;
      if (in_comp != 1) all_one = false;
    }
    weight[c] = all_one ? 1 : 2;
  }

  // Tarjan emits reverse topological order, so successors are already done.
  std::vector<int> maxw(k, 0), cnt1(k, 0);
  for (int c = 0; c < k; ++c) {
    maxw[c] = weight[c];
    int best = 0;
    for (int s2 : scc.successors[c]) {
      maxw[c] = std::max(maxw[c], maxw[s2]);
      best = std::max(best, cnt1[s2]);
    }
    cnt1[c] = best + (weight[c] == 1 ? 1 : 0);
  }

  std::vector<Letter> bad;
  for (int a = 0; a < n; ++a) {
    int c = scc.comp[a];
    if (maxw[c] <= 1 && cnt1[c] <= 1) bad.push_back(a);
  }
  return bad;
}

bool is_growing_everywhere(const Morphism& m) { return non_growing_letters(m).empty(); }

std::vector<Letter> fixed_point_seeds(const Substitution& s) {
  std::vector<Letter> seeds;
  for (Letter a = 0; a < s.alphabet().size(); ++a) {
    const Word& img = s.image(a);
    if (img.size() >= 2 && img[0] == a) seeds.push_back(a);
  }
  return seeds;
}

FixedPointExpander::FixedPointExpander(Substitution s, Letter seed)
    : s_(std::move(s)), seed_(seed) {
  auto seeds = fixed_point_seeds(s_);
  if (std::find(seeds.begin(), seeds.end(), seed) == seeds.end())
    throw domain_error("letter " + s_.alphabet().token(seed) + " is not a fixed-point seed");
  buffer_ = s_.image(seed_);
}

const Word& FixedPointExpander::prefix(size_t n) {
  // buffer_ always equals sigma(buffer_[0..p)) for some p >= 1, so appending
  // images of already-known letters extends the fixed point in one pass.
  size_t p = processed_;
  while (buffer_.size() < n) {
    if (p >= buffer_.size()) throw domain_error("fixed point expansion stalled");
    const Word& img = s_.image(buffer_[p]);
    buffer_.append(img);
    ++p;
    if (buffer_.size() > kMaterializeLimit) throw domain_error("fixed point prefix too large");
  }
  processed_ = p;
  return buffer_;
}

Word fixed_point_prefix(const Substitution& s, Letter seed, size_t n) {
  FixedPointExpander e(s, seed);
  Word w = e.prefix(n);
  if (w.size() > n) w = w.prefix(n);
  return w;
}

std::vector<Letter> reachable_letters(const Substitution& s, Letter seed) {
  std::vector<char> seen(s.alphabet().size(), 0);
  std::deque<Letter> queue{seed};
  seen[seed] = 1;
  while (!queue.empty()) {
    Letter a = queue.front();
    queue.pop_front();
    for (Letter b : s.image(a).letters)
      if (!seen[b]) {
        seen[b] = 1;
        queue.push_back(b);
      }
  }
  std::vector<Letter> out;
  for (Letter a = 0; a < s.alphabet().size(); ++a)
    if (seen[a]) out.push_back(a);
  return out;
}

bool is_proper_fixed_point(const Substitution& s, Letter seed) {
  auto seeds = fixed_point_seeds(s);
  if (std::find(seeds.begin(), seeds.end(), seed) == seeds.end())
    throw domain_error("letter " + s.alphabet().token(seed) + " is not a fixed-point seed");
  return static_cast<int>(reachable_letters(s, seed).size()) == s.alphabet().size();
}

namespace {

struct RawRule {
  std::string lhs;
  std::vector<std::string> rhs;
};

std::vector<RawRule> tokenize_rules(const std::string& text) {
  std::vector<RawRule> rules;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string lhs, arrow, tok;
    if (!(ls >> lhs >> arrow))
      throw parse_error("line " + std::to_string(lineno) + ": expected '<token> -> ...'");
    if (arrow != "->")
      throw parse_error("line " + std::to_string(lineno) + ": expected '->' after " + lhs);
    if (lhs == "->" || lhs == ".")
      throw parse_error("line " + std::to_string(lineno) + ": reserved token on left side");
    RawRule rule;
    rule.lhs = lhs;
    while (ls >> tok) rule.rhs.push_back(tok);
    if (rule.rhs.empty())
      throw parse_error("line " + std::to_string(lineno) +
                        ": empty right side (write '.' for the empty word)");
    if (rule.rhs.size() == 1 && rule.rhs[0] == ".") rule.rhs.clear();
    for (const auto& t : rule.rhs)
      if (t == "->" || t == ".")
        throw parse_error("line " + std::to_string(lineno) + ": reserved token on right side");
    rules.push_back(std::move(rule));
  }
  return rules;
}

}  // namespace

Morphism parse_endomorphism(const std::string& text) {
  auto rules = tokenize_rules(text);
  if (rules.empty()) throw parse_error("no rules in input");
  std::vector<std::string> tokens;
  for (const auto& r : rules) {
    if (std::find(tokens.begin(), tokens.end(), r.lhs) != tokens.end())
      throw parse_error("duplicate rule for " + r.lhs);
    tokens.push_back(r.lhs);
  }
  Alphabet alphabet(tokens);
  std::vector<Word> images;
  images.reserve(rules.size());
  for (const auto& r : rules) {
    Word w;
    for (const auto& t : r.rhs) {
      if (!alphabet.contains(t)) throw parse_error("token " + t + " never defined on a left side");
      w.append(alphabet.index_of(t));
    }
    images.push_back(std::move(w));
  }
  return Morphism(alphabet, alphabet, std::move(images));
}

Substitution parse_substitution(const std::string& text) {
  return Substitution::from_morphism(parse_endomorphism(text));
}

std::string serialize(const Morphism& m) {
  std::string out;
  for (Letter a = 0; a < m.source().size(); ++a) {
    out += m.source().token(a);
    out += " ->";
    const Word& img = m.image(a);
    if (img.empty()) {
      out += " .";
    } else {
      for (Letter b : img.letters) {
        out += ' ';
        out += m.target().token(b);
      }
    }
    out += '\n';
  }
  return out;
}

std::string serialize(const Substitution& s) { return serialize(s.morphism()); }

Substitution rename_letters(const Substitution& s, const std::vector<std::string>& new_tokens) {
  Alphabet renamed(new_tokens);
  if (renamed.size() != s.alphabet().size())
    throw domain_error("rename needs one token per letter");
  return Substitution::from_morphism(Morphism(renamed, renamed, s.morphism().images()));
}

}  // namespace subst
