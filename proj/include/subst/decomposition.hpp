#pragma once

#include <optional>
#include <vector>

#include "subst/algebraic.hpp"
#include "subst/matrix.hpp"
#include "subst/morphism.hpp"

namespace subst {

// Primitive-component decomposition: a power M^p of the abelianization,
// an ordered partition (non-principal parts first, principal sink parts
// last), and per-part diagonal blocks that are primitive or zero.
struct ComponentDecomposition {
  int p = 1;                               // power applied
  std::vector<std::vector<Letter>> parts;  // A_1 .. A_l in certificate order
  int q = 0;                               // number of non-principal parts
  std::vector<bool> primitive;             // per-part flag for the diagonal block
  std::vector<bool> zero;                  // per-part flag
  std::vector<Letter> permutation;         // letters concatenated in part order
  IntMatrix power_matrix;                  // M^p
  std::vector<IntMatrix> blocks;           // diagonal blocks M_i of M^p

  int part_of(Letter a) const;
};

// Throws domain_error for erasing input (a zero column in M).
ComponentDecomposition decompose(const Substitution& s);

// Re-permutes M^p by the partition and checks the block-triangular zero
// pattern, the primitive-or-zero diagonal flags, and that every
// non-principal part feeds a later part.
bool check_decomposition_certificate(const ComponentDecomposition& d);

// Least k such that sigma^k satisfies Condition (C): the class partition is
// already block-triangular at power 1, diagonal blocks are zero or positive,
// and every non-zero block has a letter whose (projected) image starts with
// that letter. Searches multiples of the class lcm up to `budget` of them.
int condition_c_exponent(const Substitution& s, int budget = 512);

struct SubSubstitution {
  int part = 0;              // index into the decomposition's parts
  bool main = false;         // principal component
  Substitution restricted;   // tau_i : A_i -> A_i*
  AlgebraicReal eigenvalue;  // dominant eigenvalue of M_i
};

// Restrictions (principal parts) and projections (non-principal parts) of
// sigma^p to parts whose block is neither 0 nor [1].
std::vector<SubSubstitution> sub_substitutions(const Substitution& s);

struct GoodnessVerdict {
  bool good = false;
  std::optional<SubSubstitution> witness;
  AlgebraicReal theta;          // dominant eigenvalue of sigma
  AlgebraicReal witness_theta;  // p-th root of the witness block eigenvalue
  int p = 1;
};

// Good iff some main sub-substitution's dominant eigenvalue matches Theta;
// blocks live at power p, so block eigenvalues are compared as p-th roots.
GoodnessVerdict is_good(const Substitution& s);

// Exact set of letters occurring infinitely often in the fixed point grown
// from seed, via the eventually periodic sequence of image letter-sets.
std::vector<Letter> letters_infinitely_often(const Substitution& s, Letter seed);

}  // namespace subst
