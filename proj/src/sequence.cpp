#include "subst/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "subst/decomposition.hpp"
#include "subst/growth.hpp"

namespace subst {

std::vector<size_t> occurrences(const Word& prefix, const Word& u) {
  if (u.empty()) throw domain_error("occurrences of the empty word are undefined");
  std::vector<size_t> out;
  if (u.size() > prefix.size()) return out;
  for (size_t i = 0; i + u.size() <= prefix.size(); ++i) {
    bool match = true;
    for (size_t k = 0; k < u.size() && match; ++k) match = prefix[i + k] == u[k];
    if (match) out.push_back(i);
  }
  return out;
}

ReturnWordSet return_words(const Substitution& s, Letter seed, const Word& u, size_t horizon) {
  Word prefix = fixed_point_prefix(s, seed, horizon);
  auto occ = occurrences(prefix, u);
  if (occ.size() < 2)
    throw domain_error("base word does not occur twice within the horizon");
  ReturnWordSet out;
  out.base = u;
  out.horizon = horizon;
  size_t max_diff = 0;
  std::vector<size_t> first_seen;
  for (size_t k = 0; k + 1 < occ.size(); ++k) {
    max_diff = std::max(max_diff, occ[k + 1] - occ[k]);
    Word w = prefix.slice(occ[k], occ[k + 1]);
    bool known = false;
    for (const Word& r : out.returns) known = known || r == w;
    if (!known) {
      out.returns.push_back(std::move(w));
      first_seen.push_back(occ[k]);
    }
  }
  size_t tail = max_diff + u.size();
  size_t cutoff = horizon > tail ? horizon - tail : 0;
  out.complete = true;
  for (size_t pos : first_seen) out.complete = out.complete && pos <= cutoff;
  return out;
}

size_t max_gap(const Substitution& s, Letter seed, const Word& target, size_t horizon) {
  Word prefix = fixed_point_prefix(s, seed, horizon);
  auto occ = occurrences(prefix, target);
  if (occ.empty()) throw domain_error("target does not occur within the horizon");
  if (occ.size() == 1)
    throw domain_error("target occurs only once within the horizon: no gap statistic");
  size_t best = occ[0];  // leading offset
  for (size_t k = 0; k + 1 < occ.size(); ++k) best = std::max(best, occ[k + 1] - occ[k]);
  return best;
}

namespace {

// Restriction of s to the letters reachable from seed (they are closed under
// images). Returns the restricted substitution plus old->new index map.
std::pair<Substitution, std::vector<int>> restrict_to_reachable(const Substitution& s,
                                                                Letter seed) {
  auto reach = reachable_letters(s, seed);
  std::vector<int> remap(s.alphabet().size(), -1);
  std::vector<std::string> tokens;
  for (size_t i = 0; i < reach.size(); ++i) {
    remap[reach[i]] = static_cast<int>(i);
    tokens.push_back(s.alphabet().token(reach[i]));
  }
  Alphabet alphabet(tokens);
  std::vector<Word> images;
  for (Letter a : reach) {
    Word w;
    for (Letter b : s.image(a).letters) w.append(remap[b]);
    images.push_back(std::move(w));
  }
  return {Substitution::from_morphism(Morphism(alphabet, alphabet, std::move(images))), remap};
}

Word remap_word(const Word& w, const std::vector<int>& remap) {
  Word out;
  for (Letter b : w.letters) {
    if (remap[b] < 0) throw domain_error("letter escapes the reachable sub-alphabet");
    out.append(remap[b]);
  }
  return out;
}

}  // namespace

StarlikeDecomposition starlike_decomposition(const Substitution& s, Letter seed, Letter a) {
  auto inf = letters_infinitely_often(s, seed);
  auto occurs_infinitely = [&](Letter b) {
    return std::find(inf.begin(), inf.end(), b) != inf.end();
  };
  if (!occurs_infinitely(a))
    throw domain_error("letter " + s.alphabet().token(a) +
                       " does not occur infinitely often in the fixed point");

  // Chain a_0 = a, with a_i occurring in sigma(a_{i+1}) and every a_{i+1}
  // occurring infinitely often; stop at the first repeated letter.
  std::vector<Letter> chain{a};
  std::map<Letter, int> position{{a, 0}};
  int i = -1, j = -1;
  while (true) {
    Letter cur = chain.back();
    Letter next = -1;
    for (Letter b : inf) {
      const Word& img = s.image(b);
      if (std::find(img.letters.begin(), img.letters.end(), cur) != img.letters.end()) {
        next = b;
        break;
      }
    }
    if (next == -1) throw domain_error("chain construction failed");  // cannot happen
    auto it = position.find(next);
    if (it != position.end()) {
      i = it->second;
      j = static_cast<int>(chain.size());
      break;
    }
    position.emplace(next, (int)chain.size());
    chain.push_back(next);
  }
  Letter b = chain[i];
  int p = j - i;

  // sigma^i(b) = u1 a u2 (first occurrence), sigma^p(b) = v1 b v2.
  Word bi = iterate(s, b, i);
  size_t a_pos = 0;
  while (bi[a_pos] != a) ++a_pos;
  Word u1 = bi.prefix(a_pos);

  Word bp = iterate(s, b, p);
  size_t b_pos = 0;
  while (bp[b_pos] != b) ++b_pos;
  Word v1 = bp.prefix(b_pos);

  Substitution si = power(s, std::max(i, 1));
  Word v = i == 0 ? v1 : apply(si.morphism(), v1);
  Word w = u1;

  // u' b prefix of x; extend past the degenerate empty case so that u keeps
  // maximal growth.
  FixedPointExpander expander(s, seed);
  size_t need = 64;
  size_t b_first = std::string::npos;
  while (true) {
    const Word& prefix = expander.prefix(need);
    b_first = std::string::npos;
    size_t count = 0;
    for (size_t k = 0; k < prefix.size(); ++k)
      if (prefix[k] == b) {
        ++count;
        bool degenerate_first = (k == 0);
        if (!degenerate_first || count >= 2) {
          b_first = k;
          break;
        }
      }
    if (b_first != std::string::npos) break;
    need *= 2;
    if (need > (size_t(1) << 24)) throw domain_error("could not locate chain letter in prefix");
  }
  Word uprime = expander.prefix(need).prefix(b_first);
  Word u = i == 0 ? uprime : apply(si.morphism(), uprime);

  // Verify the prefix property for n = 0..5 against the actual fixed point.
  Substitution sp = power(s, p);
  {
    std::vector<Word> vpow{v};  // sigma^{pk}(v)
    Word upow = u;
    for (int n = 0; n <= 5; ++n) {
      if (n > 0) {
        upow = apply(sp.morphism(), upow);
        vpow.push_back(apply(sp.morphism(), vpow.back()));
      }
      Word candidate = upow;
      for (int k = n - 1; k >= 0; --k) candidate.append(vpow[k]);
      candidate.append(w);
      candidate.append(a);
      Word prefix = expander.prefix(candidate.size()).prefix(candidate.size());
      if (!(candidate == prefix))
        throw domain_error("starlike decomposition failed prefix verification");
    }
  }

  // Maximal growth of u, checked exactly against A_max of the reachable
  // restriction.
  auto [restricted, remap] = restrict_to_reachable(s, seed);
  GrowthReport report = growth_types(restricted);
  {
    bool maximal = false;
    for (Letter c : u.letters)
      for (Letter m : report.a_max) maximal = maximal || remap[c] == m;
    if (!maximal) throw domain_error("starlike decomposition: u lost maximal growth");
  }

  StarlikeDecomposition out;
  out.p = p;
  out.u = u;
  out.v = v;
  out.w = w;
  out.a = a;
  // gamma = lambda(u) + lambda(v) / (Theta^p - 1).
  double theta = report.theta.to_double();
  double denom = std::pow(theta, p) - 1.0;
  LambdaResult lu = lambda_sigma(restricted, remap_word(u, remap), 1e-9);
  LambdaResult lv = lambda_sigma(restricted, remap_word(v, remap), 1e-9);
  out.gamma_estimate = lu.value + lv.value / denom;
  out.gamma_error = lu.error + lv.error / denom + 1e-12;
  return out;
}

PeriodicityCertificate certify_ultimate_periodicity(const Substitution& s, Letter seed,
                                                    size_t max_pre, size_t max_per) {
  if (max_pre < 1 || max_per < 1) throw domain_error("periodicity bounds must be >= 1");
  const size_t horizon = std::max<size_t>(512, 8 * (max_pre + max_per));
  Word prefix = fixed_point_prefix(s, seed, horizon);

  for (size_t per = 1; per <= max_per; ++per) {
    for (size_t pre = 0; pre <= max_pre; ++pre) {
      if (pre + per > prefix.size()) continue;
      Word u = prefix.prefix(pre);
      Word v = prefix.slice(pre, pre + per);
      EventuallyPeriodicWord candidate(u, v);
      // (i) horizon prefix match
      bool match = true;
      for (size_t k = 0; k < prefix.size() && match; ++k) match = candidate.at(k) == prefix[k];
      if (!match) continue;
      // (ii) exact fixed-point equation sigma(u) sigma(v)^omega = u v^omega
      EventuallyPeriodicWord image(apply(s, u), apply(s, v));
      if (!ep_equal(image, candidate)) continue;
      PeriodicityCertificate cert;
      cert.witness = candidate;
      cert.kind = candidate.preperiod.empty() ? PeriodicityKind::periodic
                                              : PeriodicityKind::ultimately_periodic;
      cert.verified = true;
      return cert;
    }
  }
  return PeriodicityCertificate{};
}

size_t least_period(const Word& v) { return least_shift_period(v); }

}  // namespace subst
