#include "blockcond/twist_levels.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "blockcond/arith.hpp"
#include "blockcond/conductor.hpp"
#include "blockcond/errors.hpp"

namespace blockcond {

int64 LevelExponent::value() const
{
    if (!is_exact())
        throw engine_error("level exponent is an interval, not an exact value");
    return lo;
}

std::string to_string(LevelRule r)
{
    switch (r) {
        case LevelRule::Override: return "override";
        case LevelRule::UnramifiedTwist: return "unramified-twist";
        case LevelRule::InnerTwistCoset: return "inner-twist-coset";
        case LevelRule::SquarefreeNebentypus: return "squarefree-nebentypus";
        case LevelRule::TrivialNebentypus: return "trivial-nebentypus";
        case LevelRule::LevelBound: return "level-bound";
    }
    return "?";
}

int64 level_bound_exponent(NewformConfig const & config,
                           DirichletCharacter const & chi, int64 q)
{
    int64 const f = chi.conductor();
    int64 const f_eps_chi = (config.nebentypus() * chi).conductor();
    int const v = std::max(
        {arith::valuation(config.level(), q), 2 * arith::valuation(f, q),
         arith::valuation(f, q) + arith::valuation(f_eps_chi, q)});
    return v;
}

namespace {

// the exact-rule part of the chain; nullopt when only the bound applies
std::optional<LevelEntry> exact_rule(NewformConfig const & config,
                                     DirichletCharacter const & chi, int64 q)
{
    int64 const vN = arith::valuation(config.level(), q);

    // unramified twists keep the level exponent
    if (chi.primary_component(q).is_trivial())
        return LevelEntry{LevelExponent::exact(vN), LevelRule::UnramifiedTwist};

    // chi = chi_s * chi' with chi' unramified at q: twisting by chi_s is a
    // Galois conjugate (same level), then an unramified twist
    for (auto const & s : config.twists().elements()) {
        if (s.twist.is_trivial())
            continue;
        DirichletCharacter const cofactor = chi * s.twist.inverse();
        if (cofactor.primary_component(q).is_trivial())
            return LevelEntry{LevelExponent::exact(vN), LevelRule::InnerTwistCoset};
    }

    // squarefree level, q | f_eps: chi_q is a power of eps_q; the boundary
    // powers keep the exponent (f itself and its conjugate), the middle
    // powers land on exponent 2
    if (arith::is_squarefree(config.level()) &&
        config.nebentypus().conductor() % q == 0) {
        DirichletCharacter const eps_q = config.nebentypus().primary_component(q);
        DirichletCharacter const chi_q = chi.primary_component(q);
        int64 const n = eps_q.order();
        DirichletCharacter pw = DirichletCharacter::trivial();
        for (int64 i = 0; i < n; i++) {
            if (chi_q == pw) {
                if (i == 0 || i == n - 1)
                    return LevelEntry{LevelExponent::exact(vN),
                                      LevelRule::SquarefreeNebentypus};
                return LevelEntry{LevelExponent::exact(2),
                                  LevelRule::SquarefreeNebentypus};
            }
            pw = pw * eps_q;
        }
    }

    if (config.nebentypus().is_trivial())
        return LevelEntry{LevelExponent::exact(vN), LevelRule::TrivialNebentypus};

    return std::nullopt;
}

} // namespace

LevelEntry twist_level_exponent(NewformConfig const & config,
                                DirichletCharacter const & chi, int64 q)
{
    std::optional<int64> override_value;
    for (auto const & o : config.overrides())
        if (o.q == q && o.chi == chi)
            override_value = o.value;

    auto const rule = exact_rule(config, chi, q);
    int64 const bound = level_bound_exponent(config, chi, q);

    if (override_value) {
        if (rule && rule->exponent.value() != *override_value) {
            std::ostringstream os;
            os << "level override v_" << q << "(N_chi) = " << *override_value
               << " for chi = " << chi.str() << " conflicts with rule "
               << to_string(rule->rule) << " giving " << rule->exponent.value();
            throw engine_error(os.str());
        }
        if (*override_value < 0 || *override_value > bound) {
            std::ostringstream os;
            os << "level override v_" << q << "(N_chi) = " << *override_value
               << " for chi = " << chi.str() << " violates the lcm bound [0, "
               << bound << "]";
            throw engine_error(os.str());
        }
        return {LevelExponent::exact(*override_value), LevelRule::Override};
    }
    if (rule)
        return *rule;
    return {LevelExponent::interval(0, bound), LevelRule::LevelBound};
}

LevelTable LevelTable::build(NewformConfig const & config)
{
    LevelTable t;
    t.primes_ = config.relevant_primes();
    CharacterGroup const & G = config.group();
    for (std::size_t i = 0; i < G.size(); i++) {
        std::vector<LevelEntry> row;
        row.reserve(t.primes_.size());
        for (int64 const q : t.primes_)
            row.push_back(twist_level_exponent(config, G.at(i), q));
        t.entries_.push_back(std::move(row));
    }
    for (int64 const q : t.primes_) {
        int64 s = 0;
        for (auto const & chi : G)
            s += arith::valuation(chi.conductor(), q);
        t.conductor_valuation_sums_.push_back(s);
    }
    return t;
}

std::size_t LevelTable::prime_index(int64 q) const
{
    auto const it = std::find(primes_.begin(), primes_.end(), q);
    if (it == primes_.end())
        throw std::invalid_argument("prime not in level table: " + std::to_string(q));
    return static_cast<std::size_t>(it - primes_.begin());
}

LevelEntry const & LevelTable::at(std::size_t chi_index, int64 q) const
{
    return entries_.at(chi_index)[prime_index(q)];
}

LevelExponent LevelTable::level_sum(int64 q) const
{
    std::size_t const j = prime_index(q);
    int64 lo = 0, hi = 0;
    for (auto const & row : entries_) {
        lo += row[j].exponent.lo;
        hi += row[j].exponent.hi;
    }
    return LevelExponent::interval(lo, hi);
}

int64 LevelTable::conductor_valuation_sum(int64 q) const
{
    return conductor_valuation_sums_[prime_index(q)];
}

} // namespace blockcond
