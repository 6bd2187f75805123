#ifndef BLOCKCOND_CHARACTER_GROUP_HPP_
#define BLOCKCOND_CHARACTER_GROUP_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "blockcond/dirichlet.hpp"

namespace blockcond {

/* Decomposition data of a rational prime q in the abelian field cut out by
 * a character group: ramification index e, residue degree f, number of
 * primes g, with e*f*g = [L:Q]. */
struct SplittingData {
    int64 e = 1;
    int64 f = 1;
    int64 g = 1;
    friend bool operator==(SplittingData const &, SplittingData const &) = default;
};

/* A finite group of primitive Dirichlet characters, closed under
 * multiplication, canonically identified with the dual of Gal(L/Q) for the
 * abelian field L fixed by the common kernel. |G| = [L:Q]. Elements are
 * kept sorted by encoding key, so iteration order is deterministic.
 * Immutable after generation. */
class CharacterGroup {
  public:
    // closure of the generators under multiplication (full enumeration)
    static CharacterGroup generate(std::vector<DirichletCharacter> const & gens);

    std::size_t size() const { return elements_.size(); }
    int64 degree() const { return static_cast<int64>(elements_.size()); } // [L:Q]
    DirichletCharacter const & at(std::size_t i) const { return elements_[i]; }
    std::vector<DirichletCharacter> const & elements() const { return elements_; }
    std::vector<DirichletCharacter> const & generators() const { return generators_; }
    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    bool contains(DirichletCharacter const & chi) const;
    std::optional<std::size_t> index_of(DirichletCharacter const & chi) const;

    // conductor f_L of the fixed field: lcm of element conductors
    int64 field_conductor() const;
    // |d_{L/Q}| by the conductor-discriminant formula: product of conductors
    int64 discriminant() const;
    // exponent of the group: lcm of element orders
    int64 exponent() const;

    /* Splitting of q in L. Inertia is dual to the q-ramified characters,
     * Frobenius to evaluation at q on the q-unramified subgroup:
     *   e = |G| / #{chi : v_q(f_chi) = 0},
     *   f = lcm of the orders of chi(q) over the q-unramified chi,
     *   g = |G| / (e*f). */
    SplittingData splitting(int64 q) const;

  private:
    std::vector<DirichletCharacter> elements_;
    std::vector<DirichletCharacter> generators_;
};

} // namespace blockcond

#endif
