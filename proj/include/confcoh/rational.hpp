#ifndef CONFCOH_RATIONAL_HPP
#define CONFCOH_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace confcoh {

/// Exact rational number in lowest terms with positive denominator.
/// GMP keeps mpq_class canonical after every arithmetic operation; values
/// built from raw numerator/denominator pairs go through make_rat().
using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& text);  // "3", "-7/4"
std::string to_string(const Rat& r);

BigInt factorial(unsigned n);
BigInt binomial(long n, long k);  // 0 outside 0 <= k <= n

/// n (n-1) ... (n-k+1); zero when k > n >= 0.
BigInt falling_factorial(long n, unsigned k);

}  // namespace confcoh

#endif
