#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace simplicial {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k); zero when k < 0, n < 0 or k > n.
BigInt binomial(long long n, long long k);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
double to_double(const Rational& r);

} // namespace simplicial
