#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "blockcond/arith.hpp"
#include "blockcond/conductor.hpp"
#include "blockcond/config_io.hpp"
#include "blockcond/errors.hpp"
#include "blockcond/fixtures.hpp"

using namespace blockcond;

namespace {

NewformConfig fixture_config(std::string const & name)
{
    auto const * f = find_fixture(name);
    REQUIRE(f != nullptr);
    return parse_config(f->config_json);
}

} // namespace

TEST_CASE("ex42: inner-twist characters keep the level exponent everywhere")
{
    auto const config = fixture_config("ex42");
    auto const chi_m3 = DirichletCharacter::kronecker(-3);
    auto const e3 = twist_level_exponent(config, chi_m3, 3);
    CHECK(e3.exponent == LevelExponent::exact(1));
    CHECK(e3.rule == LevelRule::InnerTwistCoset);
    // at q = 2 the character is unramified
    auto const e2 = twist_level_exponent(config, chi_m3, 2);
    CHECK(e2.exponent == LevelExponent::exact(1));
    CHECK(e2.rule == LevelRule::UnramifiedTwist);

    LevelTable const table = LevelTable::build(config);
    for (std::size_t i = 0; i < config.group().size(); i++)
        for (int64 q : {2, 3, 7})
            CHECK(table.at(i, q).exponent ==
                  LevelExponent::exact(arith::valuation(42, q)));
}

TEST_CASE("squarefree rule: middle powers of the local nebentypus force exponent 2")
{
    // synthetic squarefree level with eps of local order 4 at q = 5:
    // eps_5 of order 4 mod 5, another ramified prime 13 to keep N squarefree
    auto const eps5 = DirichletCharacter::from_components(
        {LocalCharacter::odd_prime(5, 1, 1)}); // order 4
    auto const eps = eps5;
    // conjugation twist: chi_c = eps^{-1}, value inversion
    GaloisElement c{"c", eps.inverse(), -1};
    NewformConfig const config("synthetic-sf", 5 * 13, eps, 2, 1, 1, {c});

    // chi_5 = eps_5^2 is a middle power: exponent 2
    auto const mid = twist_level_exponent(config, eps * eps, 5);
    CHECK(mid.rule == LevelRule::SquarefreeNebentypus);
    CHECK(mid.exponent == LevelExponent::exact(2));
    // boundary powers keep v_5(N) = 1
    auto const bd = twist_level_exponent(config, eps.inverse(), 5);
    CHECK(bd.exponent == LevelExponent::exact(1));
    // at the eps-free prime 13 everything is unramified: exponent 1
    for (auto const & chi : config.group())
        CHECK(twist_level_exponent(config, chi, 13).exponent ==
              LevelExponent::exact(1));
}

TEST_CASE("ex98: the eps entry is an interval without the override")
{
    auto const * f = find_fixture("ex98a");
    REQUIRE(f != nullptr);
    auto const with = parse_config(f->config_json);
    auto const eps = with.nebentypus();

    // strip the override: the rules alone leave v_7(N_{f(x)eps}) bounded
    NewformConfig const without("ex98-no-override", with.level(), eps, with.dim_af(),
                                with.deg_f(), with.schur_index(),
                                with.twists().elements());
    auto const open = twist_level_exponent(without, eps, 7);
    CHECK(open.rule == LevelRule::LevelBound);
    CHECK(open.exponent == LevelExponent::interval(0, 2));

    auto const pinned = twist_level_exponent(with, eps, 7);
    CHECK(pinned.rule == LevelRule::Override);
    CHECK(pinned.exponent == LevelExponent::exact(1));
}

TEST_CASE("trivial nebentypus pins every entry")
{
    auto const config = fixture_config("gamma0-512");
    LevelTable const table = LevelTable::build(config);
    for (std::size_t i = 0; i < config.group().size(); i++) {
        auto const & e = table.at(i, 2);
        CHECK(e.exponent == LevelExponent::exact(9));
        CHECK((e.rule == LevelRule::UnramifiedTwist ||
               e.rule == LevelRule::InnerTwistCoset ||
               e.rule == LevelRule::TrivialNebentypus));
    }
}

TEST_CASE("genus2: every entry is the level exponent")
{
    auto const config = fixture_config("genus2");
    LevelTable const table = LevelTable::build(config);
    CHECK(table.level_sum(2) == LevelExponent::exact(32));
    CHECK(table.level_sum(3) == LevelExponent::exact(20));
    CHECK(table.conductor_valuation_sum(2) == 6);
    CHECK(table.conductor_valuation_sum(3) == 2);
}

TEST_CASE("ex64: conjugate orbit carries the level, the other orbit the override")
{
    auto const config = fixture_config("ex64");
    LevelTable const table = LevelTable::build(config);
    auto const & G = config.group();
    REQUIRE(G.size() == 4);
    // sorted by conductor: 1, chi_8 (cond 8), then the two of conductor 16
    CHECK(table.at(0, 2).exponent == LevelExponent::exact(6)); // trivial
    CHECK(table.at(1, 2).exponent == LevelExponent::exact(7)); // chi_8, override
    CHECK(table.at(1, 2).rule == LevelRule::Override);
    // the inner twist character itself keeps the level
    auto const s_chi = DirichletCharacter::from_components(
        {LocalCharacter::two(4, 0, 3)});
    auto const idx = G.index_of(s_chi);
    REQUIRE(idx.has_value());
    CHECK(table.at(*idx, 2).exponent == LevelExponent::exact(6));
    CHECK(table.level_sum(2) == LevelExponent::exact(26));
    CHECK(table.conductor_valuation_sum(2) == 11);
}

TEST_CASE("ex81: override rows and rule rows agree at v_3 = 4")
{
    auto const config = fixture_config("ex81");
    LevelTable const table = LevelTable::build(config);
    CHECK(table.level_sum(3) == LevelExponent::exact(24));
    CHECK(table.conductor_valuation_sum(3) == 9);
    int overrides = 0, cosets = 0;
    for (std::size_t i = 0; i < config.group().size(); i++) {
        CHECK(table.at(i, 3).exponent == LevelExponent::exact(4));
        overrides += table.at(i, 3).rule == LevelRule::Override;
        cosets += table.at(i, 3).rule == LevelRule::InnerTwistCoset;
    }
    CHECK(overrides == 2);
    CHECK(cosets == 3); // the three nontrivial cocycle values
}

TEST_CASE("override conflicting with an exact rule is an error")
{
    auto const * f = find_fixture("ex42");
    REQUIRE(f != nullptr);
    auto const base = parse_config(f->config_json);
    LevelOverride bad;
    bad.chi = DirichletCharacter::kronecker(-3);
    bad.q = 3;
    bad.value = 2; // the coset rule forces 1
    NewformConfig const config("ex42-bad", base.level(), base.nebentypus(),
                               base.dim_af(), base.deg_f(), base.schur_index(),
                               base.twists().elements(), {bad});
    CHECK_THROWS_AS(twist_level_exponent(config, bad.chi, 3), engine_error);
}

TEST_CASE("override beyond the lcm bound is an error")
{
    auto const * f = find_fixture("ex98a");
    REQUIRE(f != nullptr);
    auto const base = parse_config(f->config_json);
    LevelOverride bad;
    bad.chi = base.nebentypus();
    bad.q = 7;
    bad.value = 5; // bound is v_7(lcm(98, 49, 49)) = 2
    NewformConfig const config("ex98-bad", base.level(), base.nebentypus(),
                               base.dim_af(), base.deg_f(), base.schur_index(),
                               base.twists().elements(), {bad});
    CHECK_THROWS_AS(twist_level_exponent(config, bad.chi, 7), engine_error);
}

TEST_CASE("every exact value respects the lcm bound; rule agreement")
{
    for (auto const & fx : bundled_fixtures()) {
        auto const config = parse_config(fx.config_json);
        LevelTable const table = LevelTable::build(config);
        auto const & G = config.group();
        for (std::size_t i = 0; i < G.size(); i++) {
            for (int64 const q : table.primes()) {
                auto const & e = table.at(i, q);
                int64 const bound = level_bound_exponent(config, G.at(i), q);
                CHECK(e.exponent.hi <= bound);
                CHECK(e.exponent.lo >= 0);
                // unramified characters must have fired the unramified rule
                if (G.at(i).primary_component(q).is_trivial())
                    CHECK(e.rule == LevelRule::UnramifiedTwist);
            }
        }
        // cocycle values always carry the exact level exponent
        for (auto const & s : config.twists().elements())
            for (int64 const q : table.primes()) {
                auto const entry = twist_level_exponent(config, s.twist, q);
                CHECK(entry.exponent ==
                      LevelExponent::exact(arith::valuation(config.level(), q)));
            }
    }
}

TEST_CASE("conjugate symmetry of the exact rules")
{
    // entries for chi and for eps^{-1} chi^{-1} (the twist attached to the
    // conjugate newform) agree whenever both come from the exact rules
    for (auto const & fx : bundled_fixtures()) {
        auto const config = parse_config(fx.config_json);
        LevelTable const table = LevelTable::build(config);
        auto const & G = config.group();
        for (std::size_t i = 0; i < G.size(); i++) {
            auto const conj = config.nebentypus().inverse() * G.at(i).inverse();
            auto const j = G.index_of(conj);
            if (!j)
                continue; // eps itself need not lie in G for synthetic data
            for (int64 const q : table.primes()) {
                auto const & a = table.at(i, q);
                auto const & b = table.at(*j, q);
                bool const a_rule = a.rule != LevelRule::Override &&
                                    a.rule != LevelRule::LevelBound;
                bool const b_rule = b.rule != LevelRule::Override &&
                                    b.rule != LevelRule::LevelBound;
                if (a_rule && b_rule)
                    CHECK(a.exponent == b.exponent);
            }
        }
    }
}
