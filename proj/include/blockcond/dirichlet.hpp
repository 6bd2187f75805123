#ifndef BLOCKCOND_DIRICHLET_HPP_
#define BLOCKCOND_DIRICHLET_HPP_

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blockcond/root_of_unity.hpp"

namespace blockcond {

/* Characters of (Z/p^k Z)^* are encoded by their values on canonical
 * generators:
 *
 *   - p odd:            the group is cyclic; the generator is the smallest
 *                       positive primitive root g mod p^k, and
 *                       chi(g) = e^{2 pi i * gen_exp / phi(p^k)}.
 *   - p = 2, k = 1:     the group is trivial; nothing is stored.
 *   - p = 2, k = 2:     generated by -1; chi(-1) = (-1)^minus_one_exp.
 *   - p = 2, k >= 3:    generated by -1 and 5;
 *                       chi(-1) = (-1)^minus_one_exp,
 *                       chi(5)  = e^{2 pi i * five_exp / 2^{k-2}}.
 *
 * The encoding round-trips through evaluation at the generators, which the
 * tests exercise. Discrete logs are exhaustive; moduli stay below 10^4.
 */
class LocalCharacter {
  public:
    static LocalCharacter odd_prime(int64 p, int k, int64 gen_exp);
    static LocalCharacter two(int k, int minus_one_exp, int64 five_exp);
    static LocalCharacter trivial(int64 p, int k);
    // inverse of "evaluate at the generator(s)"
    static LocalCharacter from_generator_values(int64 p, int k, RootOfUnity at_gen);
    static LocalCharacter from_generator_values_two(int k, RootOfUnity at_minus_one,
                                                    RootOfUnity at_five);

    int64 prime() const { return p_; }
    int exponent() const { return k_; }
    int64 modulus() const; // p^k
    int64 gen_exp() const { return gen_exp_; }
    int minus_one_exp() const { return minus_one_exp_; }
    int64 five_exp() const { return five_exp_; }

    int64 order() const;
    int conductor_exponent() const;
    bool is_trivial() const { return order() == 1; }
    // stored at the exact level of its conductor (and nontrivial there)
    bool is_primitive() const { return conductor_exponent() == k_ && k_ > 0; }

    // value at n, or nullopt when p | n
    std::optional<RootOfUnity> evaluate(int64 n) const;

    LocalCharacter primitive() const;      // reduce to conductor level
    LocalCharacter induced(int k2) const;  // lift to level k2 >= conductor exponent

    // both arguments induced to a common level first
    friend LocalCharacter operator*(LocalCharacter const &, LocalCharacter const &);
    LocalCharacter inverse() const;
    LocalCharacter power(int64 e) const;

    friend bool operator==(LocalCharacter const &, LocalCharacter const &) = default;

  private:
    LocalCharacter() = default;
    void check_ranges() const;

    int64 p_ = 0;
    int k_ = 0;
    int64 gen_exp_ = 0;     // p odd
    int minus_one_exp_ = 0; // p = 2, k >= 2
    int64 five_exp_ = 0;    // p = 2, k >= 3
};

/* A Dirichlet character chi modulo M = prod p^{k_p}, stored through its
 * local components. Values live in Q/Z (see RootOfUnity); nothing is ever
 * floating point. Characters come out of every constructor and arithmetic
 * operation in primitive form (modulus = conductor); inducing to a larger
 * modulus is the explicit operation induced(). Immutable after
 * construction. */
class DirichletCharacter {
  public:
    DirichletCharacter(); // the trivial character mod 1

    static DirichletCharacter trivial() { return DirichletCharacter(); }
    // primitivizes; components must have pairwise distinct primes
    static DirichletCharacter from_components(std::vector<LocalCharacter> const &);
    // the real primitive quadratic character attached to a fundamental
    // discriminant D (D = 1 gives the trivial character)
    static DirichletCharacter kronecker(int64 D);

    int64 modulus() const { return modulus_; }
    int64 conductor() const;
    int64 order() const;
    bool is_trivial() const { return order() == 1; }
    bool is_primitive() const { return modulus_ == conductor(); }
    bool is_quadratic() const { return order() == 2; }

    // nullopt ("zero") exactly when gcd(n, modulus) > 1; n >= 1
    std::optional<RootOfUnity> evaluate(int64 n) const;

    DirichletCharacter primitive() const;
    DirichletCharacter induced(int64 new_modulus) const; // conductor | new_modulus

    // group laws; results are primitive
    friend DirichletCharacter operator*(DirichletCharacter const &,
                                        DirichletCharacter const &);
    DirichletCharacter inverse() const;
    DirichletCharacter power(int64 e) const;

    // the primitive character attached to the local component at q
    DirichletCharacter primary_component(int64 q) const;

    std::vector<LocalCharacter> components() const; // increasing prime order

    /* Deterministic total order: lexicographic on the encoding
     * (conductor, then per prime p ascending: p, k, exponents). Used for
     * canonical group element order and orbit representatives. */
    std::vector<int64> encoding_key() const;

    friend bool operator==(DirichletCharacter const &, DirichletCharacter const &);
    friend bool operator<(DirichletCharacter const &, DirichletCharacter const &);

    std::string str() const; // short human-readable form

  private:
    int64 modulus_ = 1;
    std::map<int64, LocalCharacter> local_; // keyed by prime
};

std::ostream & operator<<(std::ostream &, DirichletCharacter const &);

/* The four quadratic characters of 2-power conductor: trivial, xi*psi of
 * conductor 4, and xi (even) and psi (odd) of conductor 8. These are the
 * only ones; they form a group isomorphic to Z/2 x Z/2. */
struct QuadraticCatalogue {
    static DirichletCharacter xi();     // conductor 8, chi(-1) = 1
    static DirichletCharacter psi();    // conductor 8, chi(-1) = -1
    static DirichletCharacter xi_psi(); // conductor 4
    static std::array<DirichletCharacter, 4> all();
};

} // namespace blockcond

#endif
