#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ordmatch {

using BigInt = boost::multiprecision::cpp_int;

BigInt big_pow(const BigInt& base, unsigned exp);
BigInt factorial(unsigned n);

// Largest x >= 0 with x^k <= v.  Requires v >= 0, k >= 1.
BigInt iroot(const BigInt& v, unsigned k);

}  // namespace ordmatch
