#ifndef BLOCKCOND_CONDUCTOR_HPP_
#define BLOCKCOND_CONDUCTOR_HPP_

#include <optional>
#include <string>
#include <vector>

#include "blockcond/inner_twists.hpp"
#include "blockcond/twist_levels.hpp"

namespace blockcond {

struct Rational {
    int64 num = 1;
    int64 den = 1;
    friend bool operator==(Rational const &, Rational const &) = default;
    std::string str() const;
};

/* Everything the engine needs to know about one newform and its building
 * block: level N, Nebentypus, the coefficient-field dimensions, the Schur
 * index, the inner-twist structure, and optional exact levels of twisted
 * newforms supplied from outside. Validates on construction; immutable
 * afterwards. */
class NewformConfig {
  public:
    NewformConfig(std::string label, int64 level, DirichletCharacter nebentypus,
                  int64 dim_af, int64 deg_f, int64 schur_index,
                  std::vector<GaloisElement> twists,
                  std::vector<LevelOverride> overrides = {});

    std::string const & label() const { return label_; }
    int64 level() const { return level_; }
    DirichletCharacter const & nebentypus() const { return nebentypus_; }
    int64 dim_af() const { return dim_af_; }
    int64 deg_f() const { return deg_f_; }
    int64 schur_index() const { return schur_index_; }
    InnerTwistStructure const & twists() const { return twists_; }
    CharacterGroup const & group() const { return twists_.character_group(); }
    std::vector<LevelOverride> const & overrides() const { return overrides_; }

    int64 dim_b() const { return schur_index_ * deg_f_; }       // t [F:Q]
    int64 degree() const { return group().degree(); }           // [L:Q]
    int64 power_n() const { return dim_af_ / dim_b(); }         // A_f ~ B^n
    int64 field_conductor() const { return group().field_conductor(); }

    // primes dividing N * f_L, increasing
    std::vector<int64> relevant_primes() const;

  private:
    std::string label_;
    int64 level_;
    DirichletCharacter nebentypus_;
    int64 dim_af_, deg_f_, schur_index_;
    InnerTwistStructure twists_;
    std::vector<LevelOverride> overrides_;
};

/* v_q of the norm from L to Q of the conductor ideal of B, from the key
 * local balance: it equals
 *   dim B * sum_chi v_q(N_chi)  -  2 dim B * sum_chi v_q(f_chi).
 * Exact when every level entry at q is exact; interval arithmetic
 * otherwise. A forced-negative value throws engine_error. */
LevelExponent norm_conductor_exponent(NewformConfig const & config,
                                      LevelTable const & table, int64 q);

enum class Integrality { Integral, NonIntegral, Indeterminate };

struct OverrideSuggestion {
    DirichletCharacter chi;
    int64 q = 0;
    LevelExponent bound; // the interval the entry currently has
};

struct IntegralityResult {
    Integrality status = Integrality::Integral;
    std::optional<int64> witness; // first prime failing (or undecidable)
    std::vector<OverrideSuggestion> unresolved;
};

/* The conductor ideal is generated by a rational integer exactly when
 * [L:Q] divides every norm valuation. */
IntegralityResult integrality(NewformConfig const & config, LevelTable const & table);

/* The prime factorization of the conductor ideal. Every prime of L above q
 * carries the same exponent n_q = v_q(norm) / (f*g); the ideal below is
 * generated by q^{n_q/e} when e | n_q and has no rational generator
 * otherwise. Primes with n_q = 0 are omitted. */
struct IdealFactor {
    int64 q = 0;
    SplittingData split;
    int64 prime_exponent = 0;               // n_q
    std::optional<int64> generator_exponent; // n_q/e, or nullopt if e does not divide
};

std::vector<IdealFactor> ideal_factorization(NewformConfig const & config,
                                             LevelTable const & table);

enum class CaseTag {
    OddN_OrdLeq2,
    Squarefree,
    Gamma0_P2le2,
    Gamma0_P2eq4,
    DimAf2_Quadratic,
    Unclassified,
};

std::string to_string(CaseTag);

struct Classification {
    CaseTag tag = CaseTag::Unclassified;
    int64 p2_size = 1;                    // |{chi_2 : chi in G}|
    std::optional<Rational> residual;     // N^dimB / (N_L(B) * f_L^dimB)
    std::optional<bool> closed_form_holds; // residual matches the tag's formula
};

/* Case analysis of the global formulas, the 2-primary census |P_2|, and
 * the residual factor. The residual is reported whenever the conductor is
 * an integer, classified case or not. */
Classification classify(NewformConfig const & config, LevelTable const & table);

/* For squarefree N the bad primes of B are exactly the divisors of N
 * prime to f_eps. Throws validation_error for non-squarefree N. */
struct GoodReductionPartition {
    std::vector<int64> bad;            // q | N, q not dividing f_eps
    std::vector<int64> good_divisors;  // q | N, q | f_eps
};

GoodReductionPartition good_reduction(NewformConfig const & config);

struct PrimeLocalReport {
    int64 q = 0;
    LevelExponent norm_valuation;
    SplittingData split;
};

struct ConductorReport {
    std::string label;
    int64 level = 1;
    int64 dim_b = 1;
    int64 degree = 1;          // [L:Q]
    int64 field_conductor = 1; // f_L
    std::vector<PrimeLocalReport> primes;
    IntegralityResult verdict;
    std::vector<IdealFactor> ideal;    // empty when indeterminate
    std::optional<int64> generator;    // the rational generator, when integral
    Classification classification;
    OrbitDecomposition decomposition;
};

// the full pipeline: levels, norms, splitting, integrality, factorization,
// classification, restriction-of-scalars decomposition
ConductorReport analyze(NewformConfig const & config);

} // namespace blockcond

#endif
