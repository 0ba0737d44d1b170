#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace subst {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const BigInt& x) { return x.sign(); }
inline int sign_of(const Rational& x) { return x.sign(); }

}  // namespace subst
