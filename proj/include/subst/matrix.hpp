#pragma once

#include <vector>

#include "subst/algebraic.hpp"
#include "subst/morphism.hpp"
#include "subst/numeric.hpp"
#include "subst/polynomial.hpp"

namespace subst {

// Dense integer matrix. Abelianization matrices are non-negative with
// m(i,j) = number of occurrences of letter i in the image of letter j;
// general integer entries are allowed for auxiliary computations.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, BigInt(0)) {}
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const BigInt& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }
  BigInt& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix power(int k) const;  // k >= 0, square only
  IntMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  IntMatrix permuted(const std::vector<int>& order) const;  // rows and cols reordered

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_positive() const;
  bool non_negative() const;
  BigInt trace() const;

  bool operator==(const IntMatrix& o) const = default;

  std::string to_string() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

// m(i,j) = occurrences of target letter i in image(j); |target| x |source|.
IntMatrix abelianization(const Morphism& m);
IntMatrix abelianization(const Substitution& s);

// det(xI - M) with exact integer coefficients (Faddeev-LeVerrier).
IntPoly char_poly(const IntMatrix& m);

// Dominant eigenvalue of a non-negative matrix: by Perron-Frobenius this is
// the largest real root of the characteristic polynomial, and it is >= 0.
AlgebraicReal spectral_radius(const IntMatrix& m);

// |sigma^n(a)| for n = 0..n_max, all letters, by vector-matrix powering.
std::vector<std::vector<BigInt>> iterate_lengths(const Substitution& s, int n_max);

// Boolean support matrices, used for reachability and primitivity tests.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(int n) : n_(n), a_(size_t(n) * n, 0) {}
  static BoolMatrix support_of(const IntMatrix& m);

  int size() const { return n_; }
  bool operator()(int i, int j) const { return a_[size_t(i) * n_ + j] != 0; }
  void set(int i, int j, bool v) { a_[size_t(i) * n_ + j] = v ? 1 : 0; }

  BoolMatrix operator*(const BoolMatrix& o) const;
  BoolMatrix power(long k) const;
  bool all_true() const;
  bool operator==(const BoolMatrix& o) const = default;

 private:
  int n_ = 0;
  std::vector<char> a_;
};

// Least k >= 1 with support(M)^k all positive, or 0 if none exists up to the
// Wielandt bound (n-1)^2 + 1; the bound is sharp for primitive matrices.
long primitivity_index(const BoolMatrix& m);

}  // namespace subst
