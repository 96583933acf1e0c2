#include "ordmatch/bigint.hpp"

#include <stdexcept>

namespace ordmatch {

BigInt big_pow(const BigInt& base, unsigned exp) {
  BigInt acc = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1u) acc *= b;
    exp >>= 1u;
    if (exp != 0) b *= b;
  }
  return acc;
}

BigInt factorial(unsigned n) {
  BigInt acc = 1;
  for (unsigned i = 2; i <= n; ++i) acc *= i;
  return acc;
}

BigInt iroot(const BigInt& v, unsigned k) {
  if (v < 0) throw std::invalid_argument("iroot: negative radicand");
  if (k == 0) throw std::invalid_argument("iroot: zero index");
  if (v <= 1 || k == 1) return v;
  BigInt lo = 0;
  BigInt hi = 1;
  while (big_pow(hi, k) <= v) hi <<= 1;
  // invariant: lo^k <= v < hi^k
  lo = hi >> 1;
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (big_pow(mid, k) <= v)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace ordmatch
