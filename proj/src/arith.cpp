#include "blockcond/arith.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>

#include "blockcond/errors.hpp"

namespace blockcond {
namespace arith {

int64 pow_mod(int64 base, int64 exp, int64 mod)
{
    if (mod <= 0)
        throw std::invalid_argument("pow_mod: modulus must be positive");
    base %= mod;
    if (base < 0)
        base += mod;
    if (exp < 0) {
        // inverse exists only for units; callers only use unit bases
        int64 const ord = multiplicative_order(base, mod);
        exp = ((exp % ord) + ord) % ord;
    }
    int64 r = 1 % mod;
    while (exp > 0) {
        if (exp & 1)
            r = (r * base) % mod;
        base = (base * base) % mod;
        exp >>= 1;
    }
    return r;
}

int64 ipow(int64 base, int exp)
{
    if (exp < 0)
        throw std::invalid_argument("ipow: negative exponent");
    int64 r = 1;
    for (int i = 0; i < exp; i++) {
        if (base != 0 && r > INT64_MAX / base)
            throw engine_error("integer overflow in ipow");
        r *= base;
    }
    return r;
}

int valuation(int64 n, int64 q)
{
    if (n < 1 || q < 2)
        throw std::invalid_argument("valuation: need n >= 1, q >= 2");
    int v = 0;
    while (n % q == 0) {
        n /= q;
        v++;
    }
    return v;
}

bool is_prime(int64 n)
{
    if (n < 2)
        return false;
    for (int64 d = 2; d * d <= n; d++)
        if (n % d == 0)
            return false;
    return true;
}

bool is_squarefree(int64 n)
{
    if (n < 1)
        return false;
    for (int64 d = 2; d * d <= n; d++) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0)
                return false;
        }
    }
    return true;
}

std::vector<std::pair<int64, int>> factorize(int64 n)
{
    if (n < 1)
        throw std::invalid_argument("factorize: need n >= 1");
    std::vector<std::pair<int64, int>> out;
    for (int64 d = 2; d * d <= n; d++) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                e++;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::vector<int64> prime_divisors(int64 n)
{
    std::vector<int64> out;
    for (auto const & [p, e] : factorize(n))
        out.push_back(p);
    return out;
}

std::vector<int64> divisors(int64 n)
{
    std::vector<int64> out{1};
    for (auto const & [p, e] : factorize(n)) {
        std::size_t const sz = out.size();
        int64 pe = 1;
        for (int i = 1; i <= e; i++) {
            pe *= p;
            for (std::size_t j = 0; j < sz; j++)
                out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int64 euler_phi(int64 n)
{
    int64 r = 1;
    for (auto const & [p, e] : factorize(n))
        r *= ipow(p, e - 1) * (p - 1);
    return r;
}

int64 multiplicative_order(int64 a, int64 m)
{
    a %= m;
    if (a < 0)
        a += m;
    if (m < 1 || std::gcd(a, m) != 1)
        throw std::invalid_argument("multiplicative_order: not a unit");
    if (m == 1)
        return 1;
    int64 const phi = euler_phi(m);
    int64 ord = phi;
    // strip every prime of phi as far as the order allows
    for (int64 const p : prime_divisors(phi))
        while (ord % p == 0 && pow_mod(a, ord / p, m) == 1)
            ord /= p;
    return ord;
}

int64 smallest_primitive_root(int64 p, int k)
{
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("smallest_primitive_root: need odd prime");
    int64 const m = ipow(p, k);
    int64 const phi = euler_phi(m);
    auto const prime_factors = prime_divisors(phi);
    for (int64 g = 2; g < m; g++) {
        if (g % p == 0)
            continue;
        bool primitive = true;
        for (int64 const q : prime_factors) {
            if (pow_mod(g, phi / q, m) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive)
            return g;
    }
    throw engine_error("no primitive root found"); // unreachable for valid input
}

} // namespace arith
} // namespace blockcond
