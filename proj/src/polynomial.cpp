#include "subst/polynomial.hpp"

#include <algorithm>
#include <stdexcept>



namespace subst {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

namespace {

BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Remainder of a by b over the rationals, returned scaled back to a primitive
// integer polynomial with the sign of the true rational remainder's leading
// coefficient. Positive scaling keeps Sturm sign sequences intact.
IntPoly scaled_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<Rational> r(a.coeffs().size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = Rational(a.coeff((int)i));
  const int db = b.degree();
  const Rational lead_b(b.leading());
  int dr = a.degree();
  while (dr >= db) {
    Rational q = r[dr] / lead_b;
    if (q != 0)
      for (int i = 0; i <= db; ++i) r[dr - db + i] -= q * Rational(b.coeff(i));
    r[dr] = 0;
    --dr;
    while (dr >= 0 && r[dr] == 0) --dr;
  }
  if (dr < 0) return IntPoly();
  BigInt common_den = 1;
  for (int i = 0; i <= dr; ++i) common_den = common_den / gcd(common_den, den(r[i])) * den(r[i]);
  std::vector<BigInt> out(dr + 1);
  for (int i = 0; i <= dr; ++i) out[i] = num(r[i]) * (common_den / den(r[i]));
  return IntPoly(std::move(out)).primitive_part();
}

}  // namespace

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::linear_from_root(const Rational& r) {
  return IntPoly({-num(r), den(r)});
}

const BigInt& IntPoly::leading() const {
  if (c_.empty()) throw domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> r = c_;
  for (auto& v : r) v = -v;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const BigInt& k) const {
  std::vector<BigInt> r = c_;
  for (auto& v : r) v *= k;
  return IntPoly(std::move(r));
}

Rational IntPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

int IntPoly::sign_at(const Rational& x) const {
  // p(a/b) has the sign of sum c_i a^i b^(n-i) since b > 0.
  if (is_zero()) return 0;
  const BigInt a = num(x), b = den(x);
  BigInt acc = 0;
  BigInt bp = 1;
  std::vector<BigInt> bpowers(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    bpowers[c_.size() - 1 - i] = bp;
    bp *= b;
  }
  BigInt ap = 1;
  for (size_t i = 0; i < c_.size(); ++i) {
    acc += c_[i] * ap * bpowers[i];
    ap *= a;
  }
  return acc.sign();
}

IntPoly IntPoly::derivative() const {
  if (degree() <= 0) return IntPoly();
  std::vector<BigInt> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * BigInt(i);
  return IntPoly(std::move(r));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& v : c_) g = gcd(g, v);
  return abs(g);
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  BigInt g = content();
  std::vector<BigInt> r = c_;
  for (auto& v : r) v /= g;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::exact_divide(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw domain_error("polynomial division by zero");
  std::vector<Rational> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = Rational(c_[i]);
  const int db = divisor.degree();
  std::vector<Rational> q(std::max(0, degree() - db + 1), Rational(0));
  const Rational lead(divisor.leading());
  for (int dr = degree(); dr >= db; --dr) {
    if (r[dr] == 0) continue;
    Rational f = r[dr] / lead;
    q[dr - db] = f;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= f * Rational(divisor.coeff(i));
  }
  for (const auto& rem : r)
    if (rem != 0) throw domain_error("polynomial division is not exact");
  std::vector<BigInt> out(q.size());
  for (size_t i = 0; i < q.size(); ++i) {
    if (den(q[i]) != 1) throw domain_error("polynomial quotient is not integral");
    out[i] = num(q[i]);
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::reflected() const {
  std::vector<BigInt> r = c_;
  for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::inflate(int k) const {
  if (k < 1) throw domain_error("inflate needs k >= 1");
  if (is_zero()) return IntPoly();
  std::vector<BigInt> r(size_t(degree()) * k + 1, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
  return IntPoly(std::move(r));
}

Rational IntPoly::cauchy_root_bound() const {
  if (degree() < 1) return Rational(1);
  BigInt m = 0;
  for (int i = 0; i < degree(); ++i) {
    BigInt a = abs(c_[i]);
    if (a > m) m = a;
  }
  return Rational(1) + Rational(m, abs(leading()));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& v = c_[i];
    if (v == 0) continue;
    if (!out.empty()) out += v > 0 ? " + " : " - ";
    else if (v < 0) out += "-";
    BigInt a = abs(v);
    std::string mag = a.str();
    if (i == 0) out += mag;
    else {
      if (a != 1) out += mag + "*";
      out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return out;
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive_part(), y = b.is_zero() ? IntPoly() : b.primitive_part();
  if (a.is_zero()) x = IntPoly();
  while (!y.is_zero()) {
    IntPoly r = scaled_remainder(x, y);
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return x.leading() < 0 ? (-x) : x;
}

IntPoly square_free_part(const IntPoly& p) {
  if (p.degree() <= 1) return p.is_zero() ? p : p.primitive_part();
  IntPoly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p.primitive_part();
  return p.primitive_part().exact_divide(g);
}

namespace {

// Divisors of |n|, positive only; nullopt if more than `cap` would be listed
// or trial division exceeds the bound.
std::optional<std::vector<BigInt>> divisors_of(const BigInt& n_in, long cap) {
  BigInt n = abs(n_in);
  if (n == 0) return std::nullopt;
  std::vector<std::pair<BigInt, int>> factors;
  BigInt d = 2;
  long steps = 0;
  while (d * d <= n) {
    if (++steps > cap) return std::nullopt;
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      factors.push_back({d, e});
    }
    ++d;
  }
  if (n > 1) factors.push_back({n, 1});
  std::vector<BigInt> divs{1};
  for (auto& [pr, e] : factors) {
    size_t base = divs.size();
    BigInt pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= pr;
      for (size_t i = 0; i < base; ++i) {
        divs.push_back(divs[i] * pk);
        if ((long)divs.size() > cap) return std::nullopt;
      }
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots(const IntPoly& p, long budget) {
  if (p.is_zero()) return std::nullopt;
  if (p.degree() == 0) return std::vector<Rational>{};
  std::vector<Rational> roots;
  IntPoly q = p.primitive_part();
  // Strip x factors first.
  while (q.coeff(0) == 0) {
    if (std::find(roots.begin(), roots.end(), Rational(0)) == roots.end())
      roots.push_back(Rational(0));
    std::vector<BigInt> shifted(q.coeffs().begin() + 1, q.coeffs().end());
    q = IntPoly(std::move(shifted));
  }
  if (q.degree() == 0) return roots;
  auto nds = divisors_of(q.coeff(0), budget);
  auto dds = divisors_of(q.leading(), budget);
  if (!nds || !dds) return std::nullopt;
  long tested = 0;
  for (const BigInt& dd : *dds)
    for (const BigInt& nd : *nds) {
      if (++tested > budget) return std::nullopt;
      for (int s : {1, -1}) {
        Rational cand(nd * s, dd);
        if (q.sign_at(cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
    }
  std::sort(roots.begin(), roots.end());
  return roots;
}

FactorSearch kronecker_factor(const IntPoly& p, long budget) {
  // Interpolate candidate factors g of degree m from divisor tuples of
  // p(0), p(1), ..., p(m); check by exact division.
  const int n = p.degree();
  if (n < 2) return {std::nullopt, true};
  long ops = 0;
  bool exhausted = true;
  for (int m = 1; m <= n / 2; ++m) {
    std::vector<Rational> pts(m + 1);
    std::vector<std::vector<BigInt>> choices(m + 1);
    bool viable = true;
    for (int i = 0; i <= m; ++i) {
      pts[i] = Rational(i);
      Rational v = p.eval(pts[i]);
      if (v == 0) {
        // Rational root; hand back the linear factor directly.
        return {IntPoly::linear_from_root(pts[i]), exhausted};
      }
      auto divs = divisors_of(num(v), budget / (m + 1) + 2);
      if (!divs) {
        viable = false;
        break;
      }
      choices[i] = *divs;
    }
    if (!viable) {
      exhausted = false;
      continue;
    }
    // Odometer over divisor tuples with both signs.
    std::vector<size_t> idx(m + 1, 0);
    std::vector<int> sgn(m + 1, 1);
    while (true) {
      if (++ops > budget) return {std::nullopt, false};
      // Lagrange interpolation of g with g(i) = sgn[i]*choices[i][idx[i]].
      std::vector<Rational> g(m + 1, Rational(0));
      for (int i = 0; i <= m; ++i) {
        Rational yi = Rational(choices[i][idx[i]]) * sgn[i];
        std::vector<Rational> basis{Rational(1)};
        Rational denom = 1;
        for (int j = 0; j <= m; ++j) {
          if (j == i) continue;
          std::vector<Rational> next(basis.size() + 1, Rational(0));
          for (size_t k = 0; k < basis.size(); ++k) {
            next[k] -= basis[k] * pts[j];
            next[k + 1] += basis[k];
          }
          basis = std::move(next);
          denom *= (pts[i] - pts[j]);
        }
        for (size_t k = 0; k < basis.size(); ++k) g[k] += yi * basis[k] / denom;
      }
      bool integral = true;
      for (const auto& c : g)
        if (den(c) != 1) {
          integral = false;
          break;
        }
      if (integral && !(g.size() >= 1 && g.back() == 0)) {
        std::vector<BigInt> gi(g.size());
        for (size_t k = 0; k < g.size(); ++k) gi[k] = num(g[k]);
        IntPoly cand(std::move(gi));
        if (cand.degree() >= 1 && cand.degree() < n) {
          try {
            p.exact_divide(cand);
            return {cand, exhausted};
          } catch (const domain_error&) {
          }
        }
      }
      // Advance odometer: signs first, then indices.
      int pos = 0;
      while (pos <= m) {
        if (sgn[pos] == 1) {
          sgn[pos] = -1;
          break;
        }
        sgn[pos] = 1;
        if (++idx[pos] < choices[pos].size()) break;
        idx[pos] = 0;
        ++pos;
      }
      if (pos > m) break;
    }
  }
  return {std::nullopt, exhausted};
}

SturmChain::SturmChain(const IntPoly& square_free) {
  if (square_free.is_zero()) throw domain_error("Sturm chain of zero polynomial");
  chain_.push_back(square_free);
  if (square_free.degree() >= 1) {
    chain_.push_back(square_free.derivative());
    while (chain_.back().degree() >= 1) {
      IntPoly r = scaled_remainder(chain_[chain_.size() - 2], chain_.back());
      if (r.is_zero()) break;
      chain_.push_back(-r);
    }
  }
}

int SturmChain::variations_at(const Rational& x) const {
  int var = 0, prev = 0;
  for (const auto& p : chain_) {
    int s = p.sign_at(x);
    if (s != 0) {
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
  }
  return var;
}

int SturmChain::variations_at_plus_infinity() const {
  int var = 0, prev = 0;
  for (const auto& p : chain_) {
    if (p.is_zero()) continue;
    int s = p.leading() > 0 ? 1 : -1;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int SturmChain::variations_at_minus_infinity() const {
  int var = 0, prev = 0;
  for (const auto& p : chain_) {
    if (p.is_zero()) continue;
    int s = p.leading() > 0 ? 1 : -1;
    if (p.degree() % 2 == 1) s = -s;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int SturmChain::count_roots(const Rational& lo, const Rational& hi) const {
  if (lo > hi) throw domain_error("count_roots needs lo <= hi");
  return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_all_roots() const {
  return variations_at_minus_infinity() - variations_at_plus_infinity();
}

}  // namespace subst
