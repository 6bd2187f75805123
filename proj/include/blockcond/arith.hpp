#ifndef BLOCKCOND_ARITH_HPP_
#define BLOCKCOND_ARITH_HPP_

#include <cstdint>
#include <utility>
#include <vector>

/* Elementary integer arithmetic at desk scale (all moduli < 10^4, all
 * levels fit comfortably in 64 bits). Factorization is trial division,
 * discrete logarithms are exhaustive search; nothing here needs to be
 * clever. */

namespace blockcond {

using int64 = std::int64_t;

namespace arith {

int64 pow_mod(int64 base, int64 exp, int64 mod);
int64 ipow(int64 base, int exp); // throws engine_error on overflow

// exponent of q in n; n >= 1, q >= 2
int valuation(int64 n, int64 q);

bool is_prime(int64 n);
bool is_squarefree(int64 n);

// (prime, exponent) pairs in increasing prime order
std::vector<std::pair<int64, int>> factorize(int64 n);
std::vector<int64> prime_divisors(int64 n);
std::vector<int64> divisors(int64 n); // increasing

int64 euler_phi(int64 n);

// multiplicative order of a modulo m, gcd(a, m) = 1
int64 multiplicative_order(int64 a, int64 m);

// smallest positive primitive root modulo p^k, p an odd prime
int64 smallest_primitive_root(int64 p, int k);

} // namespace arith
} // namespace blockcond

#endif
