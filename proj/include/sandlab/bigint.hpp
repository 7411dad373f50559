#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace sandlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Binomial coefficient; zero when k < 0, m < 0 or k > m.
BigInt binomial(std::int64_t m, std::int64_t k);

BigInt factorial(std::int64_t m);

inline std::string to_string(const BigInt& v) { return v.str(); }
std::string to_string(const Rational& v);

}  // namespace sandlab
