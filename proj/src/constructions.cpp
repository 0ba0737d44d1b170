#include "subst/constructions.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "subst/matrix.hpp"

namespace subst {

namespace {

std::string block_token(const Alphabet& alphabet, const Word& members) {
  bool tight = alphabet.single_char();
  std::string out = "(";
  for (size_t k = 0; k < members.size(); ++k) {
    if (!tight && k > 0) out += ',';
    out += alphabet.token(members[k]);
  }
  out += ')';
  return out;
}

}  // namespace

IntertwinedSystem build_periodic_system(const Alphabet& target, const Word& period,
                                        const Substitution& base) {
  if (period.empty()) throw domain_error("period word must be non-empty");
  for (Letter t : period.letters)
    if (t < 0 || t >= target.size()) throw domain_error("period letter outside target alphabet");
  if (primitivity_index(BoolMatrix::support_of(abelianization(base))) == 0)
    throw domain_error("base substitution must be primitive");
  auto seeds = fixed_point_seeds(base);
  if (seeds.empty())
    throw domain_error(
        "base substitution has no fixed-point seed; raise it to its condition-C power first");

  const int p = static_cast<int>(period.size());
  const int nb = base.alphabet().size();

  // D = B x {1..p}, ordered letter-major: (b,1), ..., (b,p).
  std::vector<std::string> d_tokens;
  for (Letter b = 0; b < nb; ++b)
    for (int i = 1; i <= p; ++i)
      d_tokens.push_back("(" + base.alphabet().token(b) + "," + std::to_string(i) + ")");
  Alphabet d_alphabet(d_tokens);
  auto d_index = [&](Letter b, int i) { return b * p + (i - 1); };

  // psi(b) = (b,1)...(b,p).
  std::vector<Word> psi_images;
  for (Letter b = 0; b < nb; ++b) {
    Word w;
    for (int i = 1; i <= p; ++i) w.append(d_index(b, i));
    psi_images.push_back(std::move(w));
  }
  Morphism psi(base.alphabet(), d_alphabet, psi_images);

  // tau((b,i)) = psi(sigma(b)) sliced into p consecutive pieces of length
  // |sigma(b)|.
  std::vector<Word> tau_images(d_tokens.size());
  for (Letter b = 0; b < nb; ++b) {
    Word expanded = apply(psi, base.image(b));
    const size_t len = base.image(b).size();
    for (int i = 1; i <= p; ++i)
      tau_images[d_index(b, i)] = expanded.slice((i - 1) * len, i * len);
  }
  Substitution tau = Substitution::from_morphism(Morphism(d_alphabet, d_alphabet, tau_images));

  // phi((b,i)) = i-th letter of the period.
  std::vector<Word> phi_images(d_tokens.size());
  for (Letter b = 0; b < nb; ++b)
    for (int i = 1; i <= p; ++i)
      phi_images[d_index(b, i)] = Word(std::vector<Letter>{period[i - 1]});
  Morphism phi(d_alphabet, target, phi_images);

  IntertwinedSystem sys{target, period, base,       tau,
                        psi,    phi,    p,          seeds[0],
                        d_index(seeds[0], 1)};
  return sys;
}

IntertwinedSystem rename_letters(const IntertwinedSystem& sys,
                                 const std::vector<std::string>& new_tokens) {
  Alphabet renamed(new_tokens);
  if (renamed.size() != sys.built.alphabet().size())
    throw domain_error("rename needs one token per letter");
  IntertwinedSystem out = sys;
  out.built = rename_letters(sys.built, new_tokens);
  out.psi = Morphism(sys.psi.source(), renamed, sys.psi.images());
  out.phi = Morphism(renamed, sys.phi.target(), sys.phi.images());
  return out;
}

ZetaSystem build_zeta_system(const std::vector<std::string>& preperiod_tokens,
                             const IntertwinedSystem& tail) {
  if (preperiod_tokens.empty()) throw domain_error("preperiod must be non-empty");
  const size_t ulen = preperiod_tokens.size();
  const Alphabet& d_alphabet = tail.built.alphabet();

  // F = E' + D with fresh fixed letters for the preperiod. Reuse the
  // preperiod tokens when they are distinct and free of collisions.
  std::vector<std::string> f_tokens;
  {
    std::vector<std::string> seen;
    bool clean = true;
    for (const auto& t : preperiod_tokens) {
      if (d_alphabet.contains(t) || std::find(seen.begin(), seen.end(), t) != seen.end())
        clean = false;
      seen.push_back(t);
    }
    for (size_t i = 0; i < ulen; ++i)
      f_tokens.push_back(clean ? preperiod_tokens[i]
                               : preperiod_tokens[i] + "#" + std::to_string(i + 1));
  }
  for (const auto& t : d_alphabet.tokens()) f_tokens.push_back(t);
  Alphabet f_alphabet(f_tokens);
  const int offset = static_cast<int>(ulen);

  // tau extended by tau(a_i) = a_i.
  std::vector<Word> ext_images;
  for (size_t i = 0; i < ulen; ++i) ext_images.push_back(Word(std::vector<Letter>{(Letter)i}));
  for (Letter d = 0; d < d_alphabet.size(); ++d) {
    Word w;
    for (Letter b : tail.built.image(d).letters) w.append(offset + b);
    ext_images.push_back(std::move(w));
  }
  Morphism tau_ext(f_alphabet, f_alphabet, ext_images);

  // phi extended: fixed letters map to the preperiod tokens, D letters
  // through the tail's phi. Output alphabet: distinct preperiod tokens first,
  // then the tail target tokens not already present.
  std::vector<std::string> out_tokens;
  for (const auto& t : preperiod_tokens)
    if (std::find(out_tokens.begin(), out_tokens.end(), t) == out_tokens.end())
      out_tokens.push_back(t);
  for (const auto& t : tail.target.tokens())
    if (std::find(out_tokens.begin(), out_tokens.end(), t) == out_tokens.end())
      out_tokens.push_back(t);
  Alphabet out_alphabet(out_tokens);
  std::vector<Word> phi_ext_images;
  for (size_t i = 0; i < ulen; ++i)
    phi_ext_images.push_back(Word({out_alphabet.index_of(preperiod_tokens[i])}));
  for (Letter d = 0; d < d_alphabet.size(); ++d) {
    Letter t = tail.phi.image(d)[0];
    phi_ext_images.push_back(Word({out_alphabet.index_of(tail.target.token(t))}));
  }

  // Blocks of length |u|+1 of t = a_1 ... a_|u| z, discovered to closure.
  Word start;
  for (size_t i = 0; i < ulen; ++i) start.append((Letter)i);
  start.append(offset + tail.built_seed);

  std::map<std::vector<Letter>, int> block_ids;
  std::vector<Word> block_words;
  auto intern = [&](const Word& w) {
    auto [it, inserted] = block_ids.emplace(w.letters, (int)block_words.size());
    if (inserted) block_words.push_back(w);
    return it->second;
  };
  intern(start);

  // zeta((l_0..l_{u-1} a)): s = |u|-suffix of tau(l_0..l_{u-1}), then blocks
  // built from s and tau(a) per the two-case split on |tau(a)| vs |u|.
  auto expand = [&](const Word& block) {
    Word head = block.prefix(ulen);
    Letter a = block[ulen];
    Word s = apply(tau_ext, head);
    s = s.slice(s.size() - ulen, s.size());
    Word ta = tau_ext.image(a);
    std::vector<Word> out;
    if (ta.size() <= ulen) {
      for (size_t k = 0; k < ta.size(); ++k)
        out.push_back(concat(s.slice(k, ulen), ta.prefix(k + 1)));
    } else {
      for (size_t k = 0; k < ulen; ++k)
        out.push_back(concat(s.slice(k, ulen), ta.prefix(k + 1)));
      for (size_t j = 0; j + ulen + 1 <= ta.size(); ++j)
        out.push_back(ta.slice(j, j + ulen + 1));
    }
    return out;
  };

  std::vector<Word> zeta_images;
  for (size_t next = 0; next < block_words.size(); ++next) {
    Word image;
    for (const Word& child : expand(block_words[next])) image.append(intern(child));
    zeta_images.push_back(std::move(image));
    if (block_words.size() > 4096) throw domain_error("block alphabet failed to close");
  }

  std::vector<std::string> g_tokens;
  for (const Word& w : block_words) g_tokens.push_back(block_token(f_alphabet, w));
  Alphabet g_alphabet(g_tokens);

  Substitution zeta =
      Substitution::from_morphism(Morphism(g_alphabet, g_alphabet, zeta_images));

  std::vector<Word> rho_images, phi_images;
  for (const Word& w : block_words) {
    rho_images.push_back(Word({w[0]}));
    phi_images.push_back(phi_ext_images[w[0]]);
  }

  ZetaSystem sys{preperiod_tokens,
                 f_alphabet,
                 tau_ext,
                 zeta,
                 block_words,
                 Morphism(g_alphabet, f_alphabet, rho_images),
                 Morphism(g_alphabet, out_alphabet, phi_images),
                 0};
  return sys;
}

BlockSystem build_block_system(const Substitution& s, Letter seed, int n) {
  if (n < 1) throw domain_error("block length must be >= 1");
  if (!s.morphism().non_erasing()) throw domain_error("block system needs non-erasing images");
  Word prefix = fixed_point_prefix(s, seed, n);

  std::map<std::vector<Letter>, int> block_ids;
  std::vector<Word> block_words;
  auto intern = [&](const Word& w) {
    auto [it, inserted] = block_ids.emplace(w.letters, (int)block_words.size());
    if (inserted) block_words.push_back(w);
    return it->second;
  };
  intern(prefix);

  std::vector<Word> images;
  for (size_t next = 0; next < block_words.size(); ++next) {
    const Word& block = block_words[next];
    Word expanded = apply(s, block);
    const size_t count = s.image(block[0]).size();
    Word image;
    for (size_t j = 0; j < count; ++j) image.append(intern(expanded.slice(j, j + n)));
    images.push_back(std::move(image));
    if (block_words.size() > 65536) throw domain_error("block alphabet failed to close");
  }

  std::vector<std::string> tokens;
  for (const Word& w : block_words) tokens.push_back(block_token(s.alphabet(), w));
  Alphabet block_alphabet(tokens);
  Substitution sigma_n =
      Substitution::from_morphism(Morphism(block_alphabet, block_alphabet, images));

  std::vector<Word> rho_images;
  for (const Word& w : block_words) rho_images.push_back(Word({w[0]}));

  BlockSystem bs{s,
                 seed,
                 n,
                 sigma_n,
                 block_words,
                 Morphism(block_alphabet, s.alphabet(), rho_images),
                 0};
  return bs;
}

Morphism indicator_morphism(const BlockSystem& bs, const Word& u) {
  if ((int)u.size() != bs.n) throw domain_error("indicator word length must equal the block length");
  Alphabet bits({"0", "1"});
  std::vector<Word> images;
  for (const Word& w : bs.block_words) images.push_back(Word({w == u ? 1 : 0}));
  return Morphism(bs.block_subst.alphabet(), bits, images);
}

}  // namespace subst
