#ifndef BLOCKCOND_INNER_TWISTS_HPP_
#define BLOCKCOND_INNER_TWISTS_HPP_

#include <string>
#include <vector>

#include "blockcond/character_group.hpp"
#include "blockcond/dirichlet.hpp"

namespace blockcond {

/* One element s of Gal(E/F), described by the data that matters here: the
 * twist character chi_s with sf = f (x) chi_s, and the exponent e_s giving
 * the action of s on character values, s(chi) = chi^{e_s}. The exponent is
 * read modulo the lcm of the element orders of the generated character
 * group and must be a unit there. */
struct GaloisElement {
    std::string label;
    DirichletCharacter twist;
    int64 galois_exp = 1;
};

// s . chi = chi_s * chi^{e_s}
DirichletCharacter act(GaloisElement const & s, DirichletCharacter const & chi);

/* The group Gal(E/F) together with its cocycle of twist characters.
 * Composition follows the cocycle rule: (s o t) carries the character
 * chi_s * chi_t^{e_s} and the exponent e_s * e_t. The identity element
 * (trivial character, exponent 1) is synthesized when absent. The
 * character group generated by the twist characters is materialized at
 * construction. */
class InnerTwistStructure {
  public:
    static InnerTwistStructure create(std::vector<GaloisElement> elements);

    std::size_t size() const { return elements_.size(); }
    std::vector<GaloisElement> const & elements() const { return elements_; }
    CharacterGroup const & character_group() const { return group_; }
    // lcm of the element orders of the character group
    int64 value_exponent_modulus() const { return exp_modulus_; }

    GaloisElement compose(GaloisElement const & s, GaloisElement const & t) const;
    // index in elements() of the element equal to (chi, e mod m); -1 if absent
    int find(DirichletCharacter const & chi, int64 galois_exp) const;

  private:
    std::vector<GaloisElement> elements_;
    CharacterGroup group_;
    int64 exp_modulus_ = 1;
};

/* Structure checks: closure under composition (with consistent values on
 * swapped pairs), a unique identity, unit exponents, twist conductors
 * supported on the primes of the level, the expected cardinality
 * dim A_f / [F:Q], injectivity of s -> chi_s, and that the given character
 * group is the one generated by the twists. Returns human-readable
 * diagnostics; empty means valid. */
std::vector<std::string> validate_structure(InnerTwistStructure const & twists,
                                            CharacterGroup const & group, int64 level,
                                            int64 dim_af, int64 deg_f);

/* One isogeny factor of the restriction of scalars: the twisting character
 * representative (lexicographically smallest in its orbit), the orbit
 * size, the dimension of the twisted variety, and the multiplicity (the
 * Schur index). */
struct OrbitFactor {
    DirichletCharacter representative;
    int64 orbit_size = 1;
    int64 dimension = 1;
    int64 multiplicity = 1;
};

struct OrbitDecomposition {
    std::vector<OrbitFactor> factors;
    int64 total_dimension() const; // sum of multiplicity * dimension
};

/* Orbits of the Gal(E/F)-action on the character group. Dimensions come
 * from dim A_{f (x) chi} = [Gal(E/F) : I_chi] * [F:Q]; multiplicities are
 * the Schur index. */
OrbitDecomposition orbit_decomposition(CharacterGroup const & group,
                                       InnerTwistStructure const & twists, int64 deg_f,
                                       int64 schur_index);

} // namespace blockcond

#endif
