#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace genuslab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const BigRational& q);

BigInt factorial(unsigned n);

/// Trial-division factorization; fine for the small step factors used here.
std::map<std::uint64_t, unsigned> factorize(std::uint64_t n);

}  // namespace genuslab
