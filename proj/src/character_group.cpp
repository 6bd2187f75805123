#include "blockcond/character_group.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "blockcond/arith.hpp"
#include "blockcond/errors.hpp"

namespace blockcond {

CharacterGroup CharacterGroup::generate(std::vector<DirichletCharacter> const & gens)
{
    CharacterGroup G;
    for (auto const & g : gens)
        G.generators_.push_back(g.primitive());

    std::vector<DirichletCharacter> elems{DirichletCharacter::trivial()};
    auto known = [&](DirichletCharacter const & chi) {
        return std::find(elems.begin(), elems.end(), chi) != elems.end();
    };
    std::vector<DirichletCharacter> frontier = G.generators_;
    while (!frontier.empty()) {
        std::vector<DirichletCharacter> next;
        for (auto const & chi : frontier) {
            if (known(chi))
                continue;
            elems.push_back(chi);
            for (auto const & g : G.generators_)
                next.push_back(chi * g);
        }
        frontier = std::move(next);
        if (elems.size() > 100000)
            throw engine_error("character group closure did not terminate");
    }
    std::sort(elems.begin(), elems.end());
    G.elements_ = std::move(elems);
    return G;
}

bool CharacterGroup::contains(DirichletCharacter const & chi) const
{
    return index_of(chi).has_value();
}

std::optional<std::size_t> CharacterGroup::index_of(DirichletCharacter const & chi) const
{
    auto const it = std::lower_bound(elements_.begin(), elements_.end(), chi);
    if (it != elements_.end() && *it == chi)
        return static_cast<std::size_t>(it - elements_.begin());
    return std::nullopt;
}

int64 CharacterGroup::field_conductor() const
{
    int64 f = 1;
    for (auto const & chi : elements_)
        f = std::lcm(f, chi.conductor());
    return f;
}

int64 CharacterGroup::discriminant() const
{
    int64 d = 1;
    for (auto const & chi : elements_) {
        int64 const f = chi.conductor();
        if (d > INT64_MAX / f)
            throw engine_error("discriminant overflows 64 bits");
        d *= f;
    }
    return d;
}

int64 CharacterGroup::exponent() const
{
    int64 m = 1;
    for (auto const & chi : elements_)
        m = std::lcm(m, chi.order());
    return m;
}

SplittingData CharacterGroup::splitting(int64 q) const
{
    if (!arith::is_prime(q))
        throw std::invalid_argument("splitting: q must be prime");
    int64 unramified = 0;
    int64 frob_order = 1;
    for (auto const & chi : elements_) {
        if (chi.conductor() % q == 0)
            continue;
        unramified++;
        auto const v = chi.evaluate(q);
        if (!v)
            throw engine_error("unramified character vanished at q"); // unreachable
        frob_order = std::lcm(frob_order, v->order());
    }
    SplittingData s;
    if (unramified == 0 || degree() % unramified != 0)
        throw engine_error("splitting: unramified characters do not form a subgroup");
    s.e = degree() / unramified;
    s.f = frob_order;
    if (degree() % (s.e * s.f) != 0)
        throw engine_error("splitting: e*f does not divide the degree");
    s.g = degree() / (s.e * s.f);
    return s;
}

} // namespace blockcond
