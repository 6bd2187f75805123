#ifndef BLOCKCOND_TWIST_LEVELS_HPP_
#define BLOCKCOND_TWIST_LEVELS_HPP_

#include <string>
#include <vector>

#include "blockcond/inner_twists.hpp"

namespace blockcond {

/* A level exponent v_q(N_chi): either known exactly or bounded inside an
 * interval. Exact(v) is the interval [v, v]. */
struct LevelExponent {
    int64 lo = 0;
    int64 hi = 0;
    static LevelExponent exact(int64 v) { return {v, v}; }
    static LevelExponent interval(int64 lo, int64 hi) { return {lo, hi}; }
    bool is_exact() const { return lo == hi; }
    int64 value() const; // throws engine_error unless exact
    friend bool operator==(LevelExponent const &, LevelExponent const &) = default;
};

/* Which rule produced a level entry.
 *   Override:         user-supplied exact level
 *   UnramifiedTwist:  chi unramified at q, level exponent unchanged
 *   InnerTwistCoset:  chi = chi_s * chi' with chi' unramified at q; the
 *                     twist by chi_s is a Galois conjugate, same level
 *   SquarefreeNebentypus: squarefree level, q | f_eps, chi_q a power of
 *                     eps_q; boundary powers keep the exponent, the middle
 *                     ones force exponent 2
 *   TrivialNebentypus: eps = 1, level exponent unchanged
 *   LevelBound:       generic lcm upper bound, interval [0, hi]
 */
enum class LevelRule {
    Override,
    UnramifiedTwist,
    InnerTwistCoset,
    SquarefreeNebentypus,
    TrivialNebentypus,
    LevelBound,
};

std::string to_string(LevelRule);

struct LevelEntry {
    LevelExponent exponent;
    LevelRule rule = LevelRule::LevelBound;
};

struct LevelOverride {
    DirichletCharacter chi;
    int64 q = 0;
    int64 value = 0;
};

class NewformConfig; // conductor.hpp

/* v_q(N_chi) for one character and one prime, by the first matching rule:
 * override, then the exact rules, then the interval bound. An override
 * conflicting with an exact rule, or exceeding the lcm bound, throws
 * engine_error. */
LevelEntry twist_level_exponent(NewformConfig const & config,
                                DirichletCharacter const & chi, int64 q);

// the generic lcm bound: v_q(lcm(N, f_chi^2, f_chi * f_{eps*chi}))
int64 level_bound_exponent(NewformConfig const & config,
                           DirichletCharacter const & chi, int64 q);

/* The full table over chi in G and primes q | N*f_L, each entry tagged
 * with the rule that produced it. Row order follows the group, column
 * order is increasing q. */
class LevelTable {
  public:
    static LevelTable build(NewformConfig const & config);

    std::vector<int64> const & primes() const { return primes_; }
    LevelEntry const & at(std::size_t chi_index, int64 q) const;

    // sums over the group at one prime
    LevelExponent level_sum(int64 q) const;
    int64 conductor_valuation_sum(int64 q) const;

    std::size_t rows() const { return entries_.size(); }

  private:
    std::vector<int64> primes_;
    std::vector<std::vector<LevelEntry>> entries_; // [chi index][prime index]
    std::vector<int64> conductor_valuation_sums_;
    std::size_t prime_index(int64 q) const;
};

} // namespace blockcond

#endif
