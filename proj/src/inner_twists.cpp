#include "blockcond/inner_twists.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "blockcond/errors.hpp"

namespace blockcond {

DirichletCharacter act(GaloisElement const & s, DirichletCharacter const & chi)
{
    return s.twist * chi.power(s.galois_exp);
}

InnerTwistStructure InnerTwistStructure::create(std::vector<GaloisElement> elements)
{
    InnerTwistStructure T;

    std::vector<DirichletCharacter> gens;
    for (auto & e : elements) {
        e.twist = e.twist.primitive();
        gens.push_back(e.twist);
    }
    T.group_ = CharacterGroup::generate(gens);
    T.exp_modulus_ = T.group_.exponent();

    for (auto & e : elements)
        e.galois_exp = ((e.galois_exp % T.exp_modulus_) + T.exp_modulus_) %
                       T.exp_modulus_;
    if (T.exp_modulus_ == 1)
        for (auto & e : elements)
            e.galois_exp = 1; // canonical unit representative mod 1

    bool has_identity = false;
    for (auto const & e : elements)
        if (e.twist.is_trivial() && e.galois_exp % T.exp_modulus_ == 1 % T.exp_modulus_)
            has_identity = true;
    if (!has_identity) {
        GaloisElement id;
        id.label = "id";
        id.twist = DirichletCharacter::trivial();
        id.galois_exp = T.exp_modulus_ == 1 ? 1 : 1;
        elements.insert(elements.begin(), id);
    }

    std::sort(elements.begin(), elements.end(),
              [](GaloisElement const & a, GaloisElement const & b) {
                  if (a.twist == b.twist)
                      return a.galois_exp < b.galois_exp;
                  return a.twist < b.twist;
              });
    T.elements_ = std::move(elements);
    return T;
}

GaloisElement InnerTwistStructure::compose(GaloisElement const & s,
                                           GaloisElement const & t) const
{
    GaloisElement r;
    r.label = s.label + "*" + t.label;
    r.twist = s.twist * t.twist.power(s.galois_exp);
    r.galois_exp = (s.galois_exp * t.galois_exp) % exp_modulus_;
    if (exp_modulus_ == 1)
        r.galois_exp = 1;
    return r;
}

int InnerTwistStructure::find(DirichletCharacter const & chi, int64 galois_exp) const
{
    int64 const e = ((galois_exp % exp_modulus_) + exp_modulus_) % exp_modulus_;
    for (std::size_t i = 0; i < elements_.size(); i++) {
        int64 ei = elements_[i].galois_exp % exp_modulus_;
        if (elements_[i].twist == chi && ei == e)
            return static_cast<int>(i);
    }
    return -1;
}

std::vector<std::string> validate_structure(InnerTwistStructure const & twists,
                                            CharacterGroup const & group, int64 level,
                                            int64 dim_af, int64 deg_f)
{
    std::vector<std::string> diags;
    auto fail = [&](std::string msg) { diags.push_back(std::move(msg)); };
    int64 const m = twists.value_exponent_modulus();

    for (auto const & s : twists.elements()) {
        if (std::gcd(((s.galois_exp % m) + m) % m, m) != 1)
            fail("element '" + s.label + "': galois_exp " +
                 std::to_string(s.galois_exp) + " is not a unit modulo " +
                 std::to_string(m));
        // conductor of chi_s divisible only by primes dividing N
        for (auto const & c : s.twist.components())
            if (level % c.prime() != 0)
                fail("element '" + s.label + "': twist conductor " +
                     std::to_string(s.twist.conductor()) +
                     " not supported on the primes of the level " +
                     std::to_string(level));
    }

    // s -> chi_s is injective for genuine newform structures
    for (std::size_t i = 0; i < twists.size(); i++)
        for (std::size_t j = i + 1; j < twists.size(); j++) {
            auto const & a = twists.elements()[i];
            auto const & b = twists.elements()[j];
            if (a.twist == b.twist && a.galois_exp == b.galois_exp)
                fail("duplicate element ('" + a.label + "', '" + b.label + "')");
            else if (a.twist == b.twist)
                fail("elements '" + a.label + "' and '" + b.label +
                     "' share a twist character");
        }

    // closure and cocycle consistency on every ordered pair
    for (auto const & s : twists.elements())
        for (auto const & t : twists.elements()) {
            GaloisElement const st = twists.compose(s, t);
            if (twists.find(st.twist, st.galois_exp) < 0)
                fail("composition of '" + s.label + "' and '" + t.label +
                     "' leaves the structure (cocycle closure fails)");
            GaloisElement const ts = twists.compose(t, s);
            if (!(st.twist == ts.twist) || st.galois_exp != ts.galois_exp)
                fail("pair ('" + s.label + "', '" + t.label +
                     "'): composition is not commutative");
        }

    if (deg_f <= 0 || dim_af % deg_f != 0)
        fail("[F:Q] = " + std::to_string(deg_f) + " does not divide dim A_f = " +
             std::to_string(dim_af));
    else if (static_cast<int64>(twists.size()) != dim_af / deg_f)
        fail("structure has " + std::to_string(twists.size()) +
             " elements, expected dim A_f/[F:Q] = " + std::to_string(dim_af / deg_f));

    CharacterGroup const & generated = twists.character_group();
    if (generated.elements() != group.elements())
        fail("character group is not the one generated by the twist characters");

    return diags;
}

int64 OrbitDecomposition::total_dimension() const
{
    int64 sum = 0;
    for (auto const & f : factors)
        sum += f.multiplicity * f.dimension;
    return sum;
}

OrbitDecomposition orbit_decomposition(CharacterGroup const & group,
                                       InnerTwistStructure const & twists, int64 deg_f,
                                       int64 schur_index)
{
    OrbitDecomposition dec;
    std::vector<bool> visited(group.size(), false);
    for (std::size_t i = 0; i < group.size(); i++) {
        if (visited[i])
            continue;
        // one sweep of the group action covers the whole orbit
        std::vector<std::size_t> orbit;
        for (auto const & s : twists.elements()) {
            DirichletCharacter const image = act(s, group.at(i));
            auto const idx = group.index_of(image);
            if (!idx)
                throw engine_error("group action escapes the character group at " +
                                   group.at(i).str());
            if (!visited[*idx]) {
                visited[*idx] = true;
                orbit.push_back(*idx);
            }
        }
        OrbitFactor f;
        f.representative = group.at(*std::min_element(orbit.begin(), orbit.end()));
        f.orbit_size = static_cast<int64>(orbit.size());
        f.dimension = f.orbit_size * deg_f;
        f.multiplicity = schur_index;
        dec.factors.push_back(std::move(f));
    }
    std::sort(dec.factors.begin(), dec.factors.end(),
              [](OrbitFactor const & a, OrbitFactor const & b) {
                  return a.representative < b.representative;
              });
    return dec;
}

} // namespace blockcond
