#include "blockcond/dirichlet.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "blockcond/arith.hpp"
#include "blockcond/errors.hpp"

namespace blockcond {

using arith::euler_phi;
using arith::ipow;
using arith::is_prime;
using arith::smallest_primitive_root;

/* ---------------- LocalCharacter ---------------- */

void LocalCharacter::check_ranges() const
{
    if (k_ < 1)
        throw validation_error("local character: exponent k must be >= 1");
    if (p_ == 2) {
        if (gen_exp_ != 0)
            throw validation_error("local character: gen_exp invalid for p = 2");
        if (minus_one_exp_ < 0 || minus_one_exp_ > 1)
            throw validation_error("local character: minus_one_exp must be 0 or 1");
        if (k_ == 1 && (minus_one_exp_ != 0 || five_exp_ != 0))
            throw validation_error("local character: (Z/2)^* is trivial");
        if (k_ == 2 && five_exp_ != 0)
            throw validation_error("local character: five_exp invalid for k = 2");
        if (k_ >= 3) {
            int64 const q = ipow(2, k_ - 2);
            if (five_exp_ < 0 || five_exp_ >= q)
                throw validation_error("local character: five_exp out of range");
        }
    } else {
        if (!is_prime(p_))
            throw validation_error("local character: p must be prime");
        if (minus_one_exp_ != 0 || five_exp_ != 0)
            throw validation_error("local character: 2-adic fields invalid for odd p");
        int64 const phi = euler_phi(modulus());
        if (gen_exp_ < 0 || gen_exp_ >= phi)
            throw validation_error("local character: gen_exp out of range");
    }
}

LocalCharacter LocalCharacter::odd_prime(int64 p, int k, int64 gen_exp)
{
    LocalCharacter c;
    c.p_ = p;
    c.k_ = k;
    if (p > 2 && k >= 1) {
        int64 const phi = euler_phi(ipow(p, k));
        gen_exp = ((gen_exp % phi) + phi) % phi;
    }
    c.gen_exp_ = gen_exp;
    c.check_ranges();
    return c;
}

LocalCharacter LocalCharacter::two(int k, int minus_one_exp, int64 five_exp)
{
    LocalCharacter c;
    c.p_ = 2;
    c.k_ = k;
    c.minus_one_exp_ = ((minus_one_exp % 2) + 2) % 2;
    if (k >= 3) {
        int64 const q = ipow(2, k - 2);
        c.five_exp_ = ((five_exp % q) + q) % q;
    } else if (five_exp != 0) {
        throw validation_error("local character: five_exp invalid for k < 3");
    }
    if (k == 1)
        c.minus_one_exp_ = 0;
    c.check_ranges();
    return c;
}

LocalCharacter LocalCharacter::trivial(int64 p, int k)
{
    return p == 2 ? two(k, 0, 0) : odd_prime(p, k, 0);
}

LocalCharacter LocalCharacter::from_generator_values(int64 p, int k, RootOfUnity v)
{
    int64 const phi = euler_phi(ipow(p, k));
    if (phi % v.order() != 0)
        throw validation_error("generator value order does not divide phi(p^k)");
    return odd_prime(p, k, v.numerator() * (phi / v.order()));
}

LocalCharacter LocalCharacter::from_generator_values_two(int k, RootOfUnity at_minus_one,
                                                         RootOfUnity at_five)
{
    if (at_minus_one.order() > 2)
        throw validation_error("chi(-1) must be +-1");
    int const m = at_minus_one.is_one() ? 0 : 1;
    if (k <= 2) {
        if (!at_five.is_one())
            throw validation_error("chi(5) must be trivial for k <= 2");
        return two(k, m, 0);
    }
    int64 const q = ipow(2, k - 2);
    if (q % at_five.order() != 0)
        throw validation_error("chi(5) order does not divide 2^{k-2}");
    return two(k, m, at_five.numerator() * (q / at_five.order()));
}

int64 LocalCharacter::modulus() const
{
    return ipow(p_, k_);
}

int64 LocalCharacter::order() const
{
    if (p_ == 2) {
        int64 ord = minus_one_exp_ ? 2 : 1;
        if (k_ >= 3 && five_exp_ != 0) {
            int64 const q = ipow(2, k_ - 2);
            ord = std::lcm(ord, q / std::gcd(five_exp_, q));
        }
        return ord;
    }
    int64 const phi = euler_phi(modulus());
    return phi / std::gcd(gen_exp_, phi);
}

int LocalCharacter::conductor_exponent() const
{
    if (p_ == 2) {
        if (k_ >= 3 && five_exp_ != 0) {
            int64 const q = ipow(2, k_ - 2);
            int64 const ord5 = q / std::gcd(five_exp_, q); // a power of 2
            return arith::valuation(ord5, 2) + 2;
        }
        return minus_one_exp_ ? 2 : 0;
    }
    int64 const d = order();
    if (d == 1)
        return 0;
    return arith::valuation(d, p_) + 1;
}

std::optional<RootOfUnity> LocalCharacter::evaluate(int64 n) const
{
    if (n < 1)
        throw std::invalid_argument("evaluate: need n >= 1");
    int64 const m = modulus();
    n %= m;
    if (n < 0)
        n += m;
    if (std::gcd(n, p_) != 1)
        return std::nullopt;
    if (p_ == 2) {
        if (k_ == 1)
            return RootOfUnity();
        if (k_ == 2)
            return RootOfUnity::fraction(int64(n == 3) * minus_one_exp_, 2);
        // write n = (-1)^s 5^t mod 2^k, exhaustive in t
        int64 const q = ipow(2, k_ - 2);
        int64 pw = 1 % m;
        for (int64 t = 0; t < q; t++) {
            if (pw == n)
                return RootOfUnity::fraction(t * five_exp_, q);
            if ((m - pw) % m == n)
                return RootOfUnity::fraction(t * five_exp_, q) *
                       RootOfUnity::fraction(minus_one_exp_, 2);
            pw = (pw * 5) % m;
        }
        throw engine_error("2-adic discrete log failed"); // unreachable
    }
    int64 const g = smallest_primitive_root(p_, k_);
    int64 const phi = euler_phi(m);
    int64 pw = 1 % m;
    for (int64 t = 0; t < phi; t++) {
        if (pw == n)
            return RootOfUnity::fraction(t * gen_exp_, phi);
        pw = (pw * g) % m;
    }
    throw engine_error("discrete log failed"); // unreachable
}

LocalCharacter LocalCharacter::primitive() const
{
    int const j = conductor_exponent();
    if (j == k_)
        return *this;
    if (p_ == 2) {
        if (j == 0)
            return two(1, 0, 0);
        // values at the integers -1 and 5 determine the reduced character
        RootOfUnity const at_minus = *evaluate(modulus() - 1);
        RootOfUnity const at_five = j >= 3 ? *evaluate(5) : RootOfUnity();
        return from_generator_values_two(j, at_minus, at_five);
    }
    if (j == 0)
        return odd_prime(p_, 1, 0); // conductor 1: trivial placeholder at level 1
    int64 const gj = smallest_primitive_root(p_, j);
    return from_generator_values(p_, j, *evaluate(gj));
}

LocalCharacter LocalCharacter::induced(int k2) const
{
    if (k2 < k_) {
        if (k2 < conductor_exponent())
            throw validation_error("induced: target level below conductor");
        // shrinking within the conductor is still lawful
        LocalCharacter const prim = primitive();
        return prim.k_ == k2 ? prim : prim.induced(k2);
    }
    if (k2 == k_)
        return *this;
    if (p_ == 2) {
        // chi'(x mod 2^{k2}) = chi(x mod 2^k); read off the generators -1, 5
        return from_generator_values_two(k2, *evaluate(modulus() - 1), *evaluate(5));
    }
    int64 const g2 = smallest_primitive_root(p_, k2);
    return from_generator_values(p_, k2, *evaluate(g2));
}

LocalCharacter operator*(LocalCharacter const & a, LocalCharacter const & b)
{
    if (a.prime() != b.prime())
        throw std::invalid_argument("local product: primes differ");
    int const k = std::max(a.exponent(), b.exponent());
    LocalCharacter const x = a.induced(k);
    LocalCharacter const y = b.induced(k);
    if (a.prime() == 2)
        return LocalCharacter::two(k, x.minus_one_exp() + y.minus_one_exp(),
                                   x.five_exp() + y.five_exp());
    return LocalCharacter::odd_prime(a.prime(), k, x.gen_exp() + y.gen_exp());
}

LocalCharacter LocalCharacter::inverse() const
{
    if (p_ == 2)
        return two(k_, -minus_one_exp_, -five_exp_);
    return odd_prime(p_, k_, -gen_exp_);
}

LocalCharacter LocalCharacter::power(int64 e) const
{
    if (p_ == 2) {
        int64 const em = ((e % 2) + 2) % 2;
        return two(k_, static_cast<int>(em) * minus_one_exp_, e * five_exp_);
    }
    int64 const phi = euler_phi(modulus());
    int64 const er = ((e % phi) + phi) % phi;
    return odd_prime(p_, k_, (gen_exp_ * er) % phi);
}

/* ---------------- DirichletCharacter ---------------- */

DirichletCharacter::DirichletCharacter() = default;

DirichletCharacter DirichletCharacter::from_components(
    std::vector<LocalCharacter> const & comps)
{
    DirichletCharacter chi;
    std::set<int64> seen;
    for (auto const & c : comps) {
        if (!seen.insert(c.prime()).second)
            throw validation_error("duplicate prime in character components");
        LocalCharacter const prim = c.primitive();
        if (prim.conductor_exponent() == 0)
            continue; // trivial locally: drop
        chi.local_.emplace(prim.prime(), prim);
        chi.modulus_ *= prim.modulus();
    }
    return chi;
}

DirichletCharacter DirichletCharacter::kronecker(int64 D)
{
    if (D == 1)
        return trivial();
    if (D == 0)
        throw validation_error("kronecker: discriminant must be nonzero");
    bool const fundamental =
        (((D % 4) + 4) % 4 == 1 && arith::is_squarefree(std::abs(D))) ||
        (D % 4 == 0 && [&] {
            int64 const m = D / 4;
            int64 const r = ((m % 4) + 4) % 4;
            return (r == 2 || r == 3) && arith::is_squarefree(std::abs(m));
        }());
    if (!fundamental)
        throw validation_error("kronecker: not a fundamental discriminant");

    std::vector<LocalCharacter> comps;
    int64 odd_star_product = 1; // product of the odd prime discriminants p*
    for (auto const & [p, e] : arith::factorize(std::abs(D))) {
        if (p == 2)
            continue;
        comps.push_back(
            LocalCharacter::odd_prime(p, 1, euler_phi(p) / 2)); // the quadratic one
        odd_star_product *= (p % 4 == 1) ? p : -p;
    }
    int64 const two_part = D / odd_star_product; // 1, -4, 8 or -8
    switch (two_part) {
        case 1: break;
        case -4: comps.push_back(LocalCharacter::two(2, 1, 0)); break;
        case 8: comps.push_back(LocalCharacter::two(3, 0, 1)); break;
        case -8: comps.push_back(LocalCharacter::two(3, 1, 1)); break;
        default: throw engine_error("kronecker: bad 2-part"); // unreachable
    }
    return from_components(comps);
}

int64 DirichletCharacter::conductor() const
{
    int64 f = 1;
    for (auto const & [p, c] : local_)
        f *= ipow(p, c.conductor_exponent());
    return f;
}

int64 DirichletCharacter::order() const
{
    int64 n = 1;
    for (auto const & [p, c] : local_)
        n = std::lcm(n, c.order());
    return n;
}

std::optional<RootOfUnity> DirichletCharacter::evaluate(int64 n) const
{
    if (n < 1)
        throw std::invalid_argument("evaluate: need n >= 1");
    RootOfUnity v;
    for (auto const & [p, c] : local_) {
        auto const w = c.evaluate(n);
        if (!w)
            return std::nullopt;
        v = v * *w;
    }
    return v;
}

DirichletCharacter DirichletCharacter::primitive() const
{
    std::vector<LocalCharacter> comps;
    comps.reserve(local_.size());
    for (auto const & [p, c] : local_)
        comps.push_back(c);
    return from_components(comps);
}

DirichletCharacter DirichletCharacter::induced(int64 new_modulus) const
{
    if (new_modulus < 1 || new_modulus % conductor() != 0)
        throw validation_error("induced: conductor must divide the new modulus");
    DirichletCharacter chi;
    chi.modulus_ = new_modulus;
    for (auto const & [p, e] : arith::factorize(new_modulus)) {
        auto const it = local_.find(p);
        if (it == local_.end())
            chi.local_.emplace(p, LocalCharacter::trivial(p, e));
        else
            chi.local_.emplace(p, it->second.induced(e));
    }
    return chi;
}

DirichletCharacter operator*(DirichletCharacter const & a, DirichletCharacter const & b)
{
    std::map<int64, LocalCharacter> merged;
    for (auto const & [p, c] : a.local_)
        merged.emplace(p, c);
    for (auto const & [p, c] : b.local_) {
        auto const it = merged.find(p);
        if (it == merged.end())
            merged.emplace(p, c);
        else
            it->second = it->second * c;
    }
    std::vector<LocalCharacter> comps;
    for (auto const & [p, c] : merged)
        comps.push_back(c);
    return DirichletCharacter::from_components(comps);
}

DirichletCharacter DirichletCharacter::inverse() const
{
    std::vector<LocalCharacter> comps;
    for (auto const & [p, c] : local_)
        comps.push_back(c.inverse());
    return from_components(comps);
}

DirichletCharacter DirichletCharacter::power(int64 e) const
{
    std::vector<LocalCharacter> comps;
    for (auto const & [p, c] : local_)
        comps.push_back(c.power(e));
    return from_components(comps);
}

DirichletCharacter DirichletCharacter::primary_component(int64 q) const
{
    auto const it = local_.find(q);
    if (it == local_.end())
        return trivial();
    return from_components({it->second});
}

std::vector<LocalCharacter> DirichletCharacter::components() const
{
    std::vector<LocalCharacter> out;
    out.reserve(local_.size());
    for (auto const & [p, c] : local_)
        out.push_back(c);
    return out;
}

std::vector<int64> DirichletCharacter::encoding_key() const
{
    std::vector<int64> key{conductor()};
    for (auto const & [p, c] : local_) {
        key.push_back(p);
        key.push_back(c.exponent());
        key.push_back(p == 2 ? c.minus_one_exp() : c.gen_exp());
        key.push_back(p == 2 ? c.five_exp() : 0);
    }
    return key;
}

bool operator==(DirichletCharacter const & a, DirichletCharacter const & b)
{
    return a.modulus_ == b.modulus_ && a.local_ == b.local_;
}

bool operator<(DirichletCharacter const & a, DirichletCharacter const & b)
{
    return a.encoding_key() < b.encoding_key();
}

std::string DirichletCharacter::str() const
{
    if (is_trivial() && is_primitive())
        return "1";
    std::ostringstream os;
    os << "chi[" << conductor() << ";ord" << order();
    if (!is_primitive())
        os << ";mod" << modulus_;
    os << "]";
    return os.str();
}

std::ostream & operator<<(std::ostream & os, DirichletCharacter const & chi)
{
    return os << chi.str();
}

/* ---------------- QuadraticCatalogue ---------------- */

DirichletCharacter QuadraticCatalogue::xi()
{
    return DirichletCharacter::from_components({LocalCharacter::two(3, 0, 1)});
}

DirichletCharacter QuadraticCatalogue::psi()
{
    return DirichletCharacter::from_components({LocalCharacter::two(3, 1, 1)});
}

DirichletCharacter QuadraticCatalogue::xi_psi()
{
    return DirichletCharacter::from_components({LocalCharacter::two(2, 1, 0)});
}

std::array<DirichletCharacter, 4> QuadraticCatalogue::all()
{
    return {DirichletCharacter::trivial(), xi_psi(), xi(), psi()};
}

} // namespace blockcond
