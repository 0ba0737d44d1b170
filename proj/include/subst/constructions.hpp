#pragma once

#include <string>
#include <vector>

#include "subst/morphism.hpp"

namespace subst {

// Periodic construction: given a primitive base substitution sigma on B with
// a fixed point and a period word x = w^omega, builds tau on D = B x {1..p}
// with tau . psi = psi . sigma, plus the letter-to-letter phi with
// phi(fixed point of tau) = x.
struct IntertwinedSystem {
  Alphabet target;     // alphabet of the periodic word
  Word period;         // w, so x = w^omega; p = |w|
  Substitution base;   // sigma on B
  Substitution built;  // tau on D
  Morphism psi;        // B -> D*
  Morphism phi;        // D -> target, letter to letter
  int p = 1;
  Letter base_seed = 0;   // fixed-point seed of sigma
  Letter built_seed = 0;  // (base_seed, 1), fixed-point seed of tau
};

IntertwinedSystem build_periodic_system(const Alphabet& target, const Word& period,
                                        const Substitution& base);

// Same system with the D letters renamed (new_tokens in D order).
IntertwinedSystem rename_letters(const IntertwinedSystem& sys,
                                 const std::vector<std::string>& new_tokens);

// Ultimately periodic construction over (|u|+1)-blocks of t = u z: tau is
// extended by fixed letters for u, G is the block alphabet of t, zeta the
// block substitution fixing the block sequence of t.
struct ZetaSystem {
  std::vector<std::string> preperiod;  // tokens of u
  Alphabet f_alphabet;                 // F = E' (fixed letters) then D
  Morphism tau_ext;                    // F -> F*
  Substitution zeta;                   // on G
  std::vector<Word> block_words;       // G letter -> its |u|+1 letters over F
  Morphism rho;                        // G -> F, first letter
  Morphism phi;                        // G -> (u letters + target), letter to letter
  Letter seed_block = 0;               // (t_0 ... t_{|u|})
};

ZetaSystem build_zeta_system(const std::vector<std::string>& preperiod_tokens,
                             const IntertwinedSystem& tail);

// n-block presentation: A_n = n-blocks of the fixed point x, sigma_n the
// induced substitution with rho . sigma_n = sigma . rho.
struct BlockSystem {
  Substitution base;
  Letter seed = 0;
  int n = 1;
  Substitution block_subst;       // sigma_n on A_n
  std::vector<Word> block_words;  // A_n letter -> its n letters over A
  Morphism rho;                   // A_n -> A, first letter
  Letter seed_block = 0;
};

BlockSystem build_block_system(const Substitution& s, Letter seed, int n);

// f(block) = 1 iff the block spells u (|u| must equal the block length);
// f applied to the block fixed point is the occurrence indicator of u.
Morphism indicator_morphism(const BlockSystem& bs, const Word& u);

}  // namespace subst
