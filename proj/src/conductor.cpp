#include "blockcond/conductor.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "blockcond/arith.hpp"
#include "blockcond/errors.hpp"

namespace blockcond {

std::string Rational::str() const
{
    if (den == 1)
        return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

NewformConfig::NewformConfig(std::string label, int64 level,
                             DirichletCharacter nebentypus, int64 dim_af, int64 deg_f,
                             int64 schur_index, std::vector<GaloisElement> twists,
                             std::vector<LevelOverride> overrides)
    : label_(std::move(label))
    , level_(level)
    , nebentypus_(nebentypus.primitive())
    , dim_af_(dim_af)
    , deg_f_(deg_f)
    , schur_index_(schur_index)
    , twists_(InnerTwistStructure::create(std::move(twists)))
    , overrides_(std::move(overrides))
{
    if (level_ < 1)
        throw validation_error("level must be positive", "/level");
    if (dim_af_ < 1)
        throw validation_error("dim_Af must be positive", "/dim_Af");
    if (schur_index_ != 1 && schur_index_ != 2)
        throw validation_error("schur_index must be 1 or 2", "/schur_index");
    if (deg_f_ < 1 || dim_af_ % deg_f_ != 0)
        throw validation_error("deg_F must divide dim_Af", "/deg_F");
    if (dim_af_ % dim_b() != 0)
        throw validation_error("dim B = schur_index * deg_F must divide dim_Af",
                               "/schur_index");
    if (level_ % nebentypus_.conductor() != 0)
        throw validation_error("conductor of the nebentypus must divide the level",
                               "/nebentypus");

    auto const diags =
        validate_structure(twists_, twists_.character_group(), level_, dim_af_, deg_f_);
    if (!diags.empty()) {
        std::ostringstream os;
        os << "invalid inner-twist structure:";
        for (auto const & d : diags)
            os << "\n  - " << d;
        throw validation_error(os.str(), "/inner_twists");
    }

    for (std::size_t i = 0; i < overrides_.size(); i++) {
        auto & o = overrides_[i];
        o.chi = o.chi.primitive();
        std::string const path = "/level_overrides/" + std::to_string(i);
        if (!arith::is_prime(o.q))
            throw validation_error("override prime must be prime", path + "/q");
        if (o.value < 0)
            throw validation_error("override level exponent must be >= 0", path + "/v");
        if (!group().contains(o.chi))
            throw validation_error(
                "override character does not belong to the twist group", path + "/chi");
    }
}

std::vector<int64> NewformConfig::relevant_primes() const
{
    std::set<int64> ps;
    for (int64 const p : arith::prime_divisors(level_))
        ps.insert(p);
    for (int64 const p : arith::prime_divisors(field_conductor()))
        ps.insert(p);
    return {ps.begin(), ps.end()};
}

LevelExponent norm_conductor_exponent(NewformConfig const & config,
                                      LevelTable const & table, int64 q)
{
    LevelExponent const levels = table.level_sum(q);
    int64 const conductors = table.conductor_valuation_sum(q);
    int64 const dim_b = config.dim_b();
    int64 lo = dim_b * levels.lo - 2 * dim_b * conductors;
    int64 hi = dim_b * levels.hi - 2 * dim_b * conductors;
    if (hi < 0 || (levels.is_exact() && lo < 0)) {
        std::ostringstream os;
        os << "inconsistent input: v_" << q
           << " of the conductor norm would be negative (" << lo << ")";
        throw engine_error(os.str());
    }
    lo = std::max<int64>(lo, 0);
    return LevelExponent::interval(lo, hi);
}

namespace {

// does [lo, hi] contain a multiple of d? a non-multiple?
bool contains_multiple(LevelExponent const & e, int64 d)
{
    return (e.lo + d - 1) / d * d <= e.hi;
}

bool contains_non_multiple(LevelExponent const & e, int64 d)
{
    if (d == 1)
        return false;
    for (int64 v = e.lo; v <= e.hi; v++)
        if (v % d != 0)
            return true;
    return false;
}

std::vector<OverrideSuggestion> unresolved_entries(NewformConfig const & config,
                                                   LevelTable const & table, int64 q)
{
    std::vector<OverrideSuggestion> out;
    CharacterGroup const & G = config.group();
    for (std::size_t i = 0; i < G.size(); i++) {
        LevelEntry const & e = table.at(i, q);
        if (!e.exponent.is_exact())
            out.push_back({G.at(i), q, e.exponent});
    }
    return out;
}

} // namespace

IntegralityResult integrality(NewformConfig const & config, LevelTable const & table)
{
    IntegralityResult r;
    int64 const d = config.degree();
    std::optional<int64> ambiguous; // first prime whose interval is undecided
    for (int64 const q : table.primes()) {
        LevelExponent const v = norm_conductor_exponent(config, table, q);
        bool const mult = contains_multiple(v, d);
        bool const nonmult = v.is_exact() ? v.lo % d != 0 : contains_non_multiple(v, d);
        if (!mult || (v.is_exact() && nonmult)) {
            // definitely fails at q, whatever the open entries turn out to be
            r.status = Integrality::NonIntegral;
            r.witness = q;
            r.unresolved.clear();
            return r;
        }
        if (nonmult && !ambiguous)
            ambiguous = q;
    }
    if (ambiguous) {
        r.status = Integrality::Indeterminate;
        r.witness = ambiguous;
        r.unresolved = unresolved_entries(config, table, *ambiguous);
        return r;
    }
    r.status = Integrality::Integral;
    return r;
}

std::vector<IdealFactor> ideal_factorization(NewformConfig const & config,
                                             LevelTable const & table)
{
    std::vector<IdealFactor> out;
    for (int64 const q : table.primes()) {
        LevelExponent const v = norm_conductor_exponent(config, table, q);
        if (!v.is_exact())
            throw engine_error(
                "ideal factorization needs exact norm exponents; v_" +
                std::to_string(q) + " is only bounded in [" + std::to_string(v.lo) +
                ", " + std::to_string(v.hi) + "]");
        if (v.lo == 0)
            continue;
        SplittingData const s = config.group().splitting(q);
        if (v.lo % (s.f * s.g) != 0)
            throw engine_error("inconsistent input: f*g = " +
                               std::to_string(s.f * s.g) + " does not divide v_" +
                               std::to_string(q) + "(norm) = " + std::to_string(v.lo));
        IdealFactor fac;
        fac.q = q;
        fac.split = s;
        fac.prime_exponent = v.lo / (s.f * s.g);
        if (fac.prime_exponent % s.e == 0)
            fac.generator_exponent = fac.prime_exponent / s.e;
        out.push_back(fac);
    }
    return out;
}

std::string to_string(CaseTag tag)
{
    switch (tag) {
        case CaseTag::OddN_OrdLeq2: return "OddN_OrdLeq2";
        case CaseTag::Squarefree: return "Squarefree";
        case CaseTag::Gamma0_P2le2: return "Gamma0_P2le2";
        case CaseTag::Gamma0_P2eq4: return "Gamma0_P2eq4";
        case CaseTag::DimAf2_Quadratic: return "DimAf2_Quadratic";
        case CaseTag::Unclassified: return "Unclassified";
    }
    return "?";
}

namespace {

std::optional<Rational> residual_factor(NewformConfig const & config,
                                        std::vector<IdealFactor> const & ideal,
                                        bool integral)
{
    if (!integral)
        return std::nullopt;
    // N^dimB / (N_L(B) * f_L^dimB), assembled prime by prime
    Rational r;
    std::set<int64> qs;
    for (int64 const q : config.relevant_primes())
        qs.insert(q);
    for (auto const & f : ideal)
        qs.insert(f.q);
    for (int64 const q : qs) {
        int64 gen_exp = 0;
        for (auto const & f : ideal)
            if (f.q == q)
                gen_exp = *f.generator_exponent;
        int64 const e = config.dim_b() * arith::valuation(config.level(), q) -
                        gen_exp -
                        config.dim_b() * arith::valuation(config.field_conductor(), q);
        if (e >= 0)
            r.num *= arith::ipow(q, static_cast<int>(e));
        else
            r.den *= arith::ipow(q, static_cast<int>(-e));
    }
    return r;
}

} // namespace

Classification classify(NewformConfig const & config, LevelTable const & table)
{
    Classification c;

    std::set<std::vector<int64>> two_parts;
    for (auto const & chi : config.group())
        two_parts.insert(chi.primary_component(2).encoding_key());
    c.p2_size = static_cast<int64>(two_parts.size());

    int64 const N = config.level();
    int64 const eps_order = config.nebentypus().order();
    if (N % 2 == 1 && eps_order <= 2)
        c.tag = CaseTag::OddN_OrdLeq2;
    else if (arith::is_squarefree(N))
        c.tag = CaseTag::Squarefree;
    else if (config.nebentypus().is_trivial())
        c.tag = c.p2_size == 4 ? CaseTag::Gamma0_P2eq4 : CaseTag::Gamma0_P2le2;
    else if (config.dim_af() == 2 && eps_order <= 2 && config.degree() == 2)
        c.tag = CaseTag::DimAf2_Quadratic;
    else
        c.tag = CaseTag::Unclassified;

    IntegralityResult const verdict = integrality(config, table);
    if (verdict.status == Integrality::Integral) {
        auto const ideal = ideal_factorization(config, table);
        c.residual = residual_factor(config, ideal, true);
        if (c.tag != CaseTag::Unclassified) {
            Rational const expected{c.tag == CaseTag::Gamma0_P2eq4 ? 2 : 1, 1};
            c.closed_form_holds = (*c.residual == expected);
        }
    }
    return c;
}

GoodReductionPartition good_reduction(NewformConfig const & config)
{
    if (!arith::is_squarefree(config.level()))
        throw validation_error(
            "good-reduction partition applies to squarefree levels only");
    GoodReductionPartition part;
    int64 const f_eps = config.nebentypus().conductor();
    for (int64 const q : arith::prime_divisors(config.level())) {
        if (f_eps % q == 0)
            part.good_divisors.push_back(q);
        else
            part.bad.push_back(q);
    }
    return part;
}

ConductorReport analyze(NewformConfig const & config)
{
    ConductorReport rep;
    rep.label = config.label();
    rep.level = config.level();
    rep.dim_b = config.dim_b();
    rep.degree = config.degree();
    rep.field_conductor = config.field_conductor();

    LevelTable const table = LevelTable::build(config);
    for (int64 const q : table.primes()) {
        PrimeLocalReport pl;
        pl.q = q;
        pl.norm_valuation = norm_conductor_exponent(config, table, q);
        pl.split = config.group().splitting(q);
        rep.primes.push_back(pl);
    }

    rep.verdict = integrality(config, table);
    bool const all_exact =
        std::all_of(rep.primes.begin(), rep.primes.end(),
                    [](PrimeLocalReport const & p) { return p.norm_valuation.is_exact(); });
    if (all_exact) {
        rep.ideal = ideal_factorization(config, table);
        if (rep.verdict.status == Integrality::Integral) {
            int64 gen = 1;
            for (auto const & f : rep.ideal)
                gen *= arith::ipow(f.q, static_cast<int>(*f.generator_exponent));
            rep.generator = gen;
        }
    }
    rep.classification = classify(config, table);
    rep.decomposition = orbit_decomposition(config.group(), config.twists(),
                                            config.deg_f(), config.schur_index());
    return rep;
}

} // namespace blockcond
