#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sslab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt factorial(std::uint64_t n);
BigInt binomial(std::uint64_t n, std::uint64_t k);
/// Exact binomial for a big upper argument; zero when k > n or n < 0.
BigInt binomial(const BigInt& n, std::uint64_t k);

inline std::string to_string(const BigInt& v) { return v.str(); }
inline double to_double(const BigInt& v) { return v.convert_to<double>(); }
inline long double to_long_double(const BigInt& v) {
  return v.convert_to<long double>();
}

}  // namespace sslab
