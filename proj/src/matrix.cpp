#include "subst/matrix.hpp"

#include <sstream>

namespace subst {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw domain_error("matrix product dimension mismatch");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const BigInt& v = (*this)(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw domain_error("matrix sum dimension mismatch");
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

IntMatrix IntMatrix::power(int k) const {
  if (!is_square()) throw domain_error("matrix power needs a square matrix");
  if (k < 0) throw domain_error("matrix power needs k >= 0");
  IntMatrix acc = identity(rows_);
  IntMatrix base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

IntMatrix IntMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  IntMatrix r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) r((int)i, (int)j) = (*this)(rows[i], cols[j]);
  return r;
}

IntMatrix IntMatrix::permuted(const std::vector<int>& order) const {
  if (!is_square() || (int)order.size() != rows_) throw domain_error("bad permutation");
  return submatrix(order, order);
}

bool IntMatrix::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

bool IntMatrix::is_positive() const {
  if (a_.empty()) return false;
  for (const auto& v : a_)
    if (v <= 0) return false;
  return true;
}

bool IntMatrix::non_negative() const {
  for (const auto& v : a_)
    if (v < 0) return false;
  return true;
}

BigInt IntMatrix::trace() const {
  if (!is_square()) throw domain_error("trace needs a square matrix");
  BigInt t = 0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < rows_; ++i) {
    out << (i == 0 ? "[" : " ");
    out << "[";
    for (int j = 0; j < cols_; ++j) out << (j ? " " : "") << (*this)(i, j);
    out << "]";
    if (i + 1 < rows_) out << "\n";
  }
  out << "]";
  return out.str();
}

IntMatrix abelianization(const Morphism& m) {
  IntMatrix r(m.target().size(), m.source().size());
  for (Letter j = 0; j < m.source().size(); ++j)
    for (Letter i : m.image(j).letters) r(i, j) += 1;
  return r;
}

IntMatrix abelianization(const Substitution& s) { return abelianization(s.morphism()); }

IntPoly char_poly(const IntMatrix& m) {
  if (!m.is_square()) throw domain_error("characteristic polynomial needs a square matrix");
  const int n = m.rows();
  // Faddeev-LeVerrier: N_1 = M, c_{n-1} = -tr(N_1);
  // N_k = M (N_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(N_k)/k. Divisions exact.
  std::vector<BigInt> c(size_t(n) + 1, BigInt(0));
  c[n] = 1;
  IntMatrix nk = m;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      IntMatrix shifted = nk;
      for (int i = 0; i < n; ++i) shifted(i, i) += c[n - k + 1];
      nk = m * shifted;
    }
    BigInt t = nk.trace();
    if (t % k != 0) throw domain_error("Faddeev-LeVerrier divisibility failure");
    c[n - k] = -t / k;
  }
  return IntPoly(std::move(c));
}

AlgebraicReal spectral_radius(const IntMatrix& m) {
  if (!m.non_negative()) throw domain_error("spectral radius needs a non-negative matrix");
  return AlgebraicReal::largest_real_root(char_poly(m));
}

std::vector<std::vector<BigInt>> iterate_lengths(const Substitution& s, int n_max) {
  const int n = s.alphabet().size();
  IntMatrix m = abelianization(s);
  std::vector<std::vector<BigInt>> lengths;
  std::vector<BigInt> cur(n, BigInt(1));  // |sigma^0(a)| = 1
  lengths.push_back(cur);
  for (int step = 1; step <= n_max; ++step) {
    // |sigma^{k+1}(a)| = sum_b m(b, a) * |sigma^k(b)|: row vector times M.
    std::vector<BigInt> next(n, BigInt(0));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (m(b, a) != 0) next[a] += m(b, a) * cur[b];
    lengths.push_back(next);
    cur = std::move(next);
  }
  return lengths;
}

BoolMatrix BoolMatrix::support_of(const IntMatrix& m) {
  if (!m.is_square()) throw domain_error("support needs a square matrix");
  BoolMatrix r(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.set(i, j, m(i, j) != 0);
  return r;
}

BoolMatrix BoolMatrix::operator*(const BoolMatrix& o) const {
  if (n_ != o.n_) throw domain_error("bool matrix product dimension mismatch");
  BoolMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k)
      if ((*this)(i, k))
        for (int j = 0; j < n_; ++j)
          if (o(k, j)) r.set(i, j, true);
  return r;
}

BoolMatrix BoolMatrix::power(long k) const {
  if (k < 0) throw domain_error("bool matrix power needs k >= 0");
  BoolMatrix acc(n_);
  for (int i = 0; i < n_; ++i) acc.set(i, i, true);
  BoolMatrix base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

bool BoolMatrix::all_true() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (!(*this)(i, j)) return false;
  return n_ > 0;
}

long primitivity_index(const BoolMatrix& m) {
  const long bound = long(m.size() - 1) * (m.size() - 1) + 1;
  BoolMatrix acc = m;
  for (long k = 1; k <= bound; ++k) {
    if (acc.all_true()) return k;
    acc = acc * m;
  }
  return 0;
}

}  // namespace subst
