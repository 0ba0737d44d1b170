#include "corpus.hpp"

#include <random>

#include "subst/matrix.hpp"

namespace corpus {

using subst::Substitution;

Substitution make(const std::string& rules) { return subst::parse_substitution(rules); }

Substitution fibonacci() { return make("a -> a b\nb -> a\n"); }
Substitution tau3() { return make("a -> a a a b\nb -> b c\nc -> b\n"); }
Substitution aa0() { return make("a -> a a 0\n0 -> 0 1\n1 -> 0\n"); }
Substitution thue_morse() { return make("a -> a b\nb -> b a\n"); }
Substitution chained2() { return make("a -> a a c\nc -> c c\n"); }
Substitution exp_pair() { return make("a -> a b\nb -> b b\n"); }
Substitution abb_bb() { return make("a -> a b b\nb -> b b\n"); }
Substitution periodic_ab() { return make("a -> a b\nb -> a b\n"); }
Substitution swap_ab() { return make("a -> b a\nb -> a b\n"); }
Substitution d2chain() { return make("a -> a a b\nb -> b b c\nc -> c c\n"); }

std::vector<std::pair<std::string, Substitution>> growth_corpus() {
  std::vector<std::pair<std::string, Substitution>> c;
  c.emplace_back("fibonacci", fibonacci());
  c.emplace_back("tau3", tau3());
  c.emplace_back("aa0", aa0());
  c.emplace_back("thue_morse", thue_morse());
  c.emplace_back("tribonacci", make("a -> a b\nb -> a c\nc -> a\n"));
  c.emplace_back("chained2", chained2());
  c.emplace_back("exp_pair", exp_pair());
  c.emplace_back("abb_bb", abb_bb());
  c.emplace_back("periodic_ab", periodic_ab());
  c.emplace_back("swap_ab", swap_ab());
  c.emplace_back("period_doubling", make("a -> a b\nb -> a a\n"));
  c.emplace_back("const3", make("a -> a b c\nb -> b c a\nc -> c a b\n"));
  c.emplace_back("pisa", make("a -> a a a b\nb -> a\n"));
  c.emplace_back("square", make("a -> a a\n"));
  c.emplace_back("cube", make("a -> a a a\n"));
  c.emplace_back("quad", make("a -> a a a b\nb -> b a\n"));
  c.emplace_back("plastic", make("a -> a b\nb -> c\nc -> a\n"));
  c.emplace_back("twofib", make("a -> a a b\nb -> a\n"));
  c.emplace_back("k4", make("a -> a a a a b\nb -> a\n"));
  c.emplace_back("uniform4", make("a -> a a b b\nb -> b a b a\n"));
  c.emplace_back("threeconst", make("a -> a b b\nb -> b b a\n"));
  c.emplace_back("eventual_c", make("a -> a c c\nc -> c c\n"));
  c.emplace_back("mix5", make("a -> b c\nb -> c d\nc -> d e\nd -> e a\ne -> a b\n"));
  c.emplace_back("sturm2", make("a -> a a b\nb -> a b\n"));
  c.emplace_back("fib_on_top", make("t -> t t c\nc -> c d\nd -> c\n"));
  return c;
}

std::vector<std::pair<std::string, Substitution>> recurrent_corpus() {
  std::vector<std::pair<std::string, Substitution>> c;
  for (auto& [name, s] : growth_corpus()) {
    if (name == "tau3" || name == "aa0" || name == "chained2" || name == "fib_on_top" ||
        name == "swap_ab" || name == "mix5")
      continue;  // growing gaps or no fixed-point seed
    c.emplace_back(name, s);
  }
  return c;
}

std::vector<Substitution> random_primitive(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Substitution> out;
  while ((int)out.size() < count) {
    int n = std::uniform_int_distribution<int>(2, 4)(rng);
    std::vector<std::string> tokens;
    for (int i = 0; i < n; ++i) tokens.push_back(std::string(1, char('a' + i)));
    subst::Alphabet alphabet(tokens);
    std::vector<subst::Word> images;
    for (int i = 0; i < n; ++i) {
      int len = std::uniform_int_distribution<int>(1, 3)(rng);
      subst::Word w;
      for (int j = 0; j < len; ++j)
        w.append(std::uniform_int_distribution<int>(0, n - 1)(rng));
      images.push_back(w);
    }
    try {
      Substitution s = Substitution::from_morphism(
          subst::Morphism(alphabet, alphabet, images));
      auto support = subst::BoolMatrix::support_of(subst::abelianization(s));
      if (subst::primitivity_index(support) == 0) continue;
      out.push_back(s);
    } catch (const subst::domain_error&) {
      continue;
    }
  }
  return out;
}

}  // namespace corpus
