#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sylvester {

// Arbitrary-precision integers and rationals. All exact identities in this
// project are evaluated over these types; doubles only ever appear as final
// read-outs.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// n! as an exact integer.
BigInt factorial(unsigned n);

// Nearest-double conversions. The rational overload rescales by a power of
// two before dividing so that values like 2/(d+1)! with thousand-bit
// numerators or denominators convert without overflow or total precision
// loss (relative error is a few ulps).
double to_double(const BigInt& v);
double to_double(const BigRat& q);

// "p/q" in lowest terms, "p" when q == 1.
std::string to_string(const BigRat& q);

}  // namespace sylvester
