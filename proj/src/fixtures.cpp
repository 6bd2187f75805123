#include "blockcond/fixtures.hpp"

#include <sstream>

#include "blockcond/config_io.hpp"

namespace blockcond {

namespace {

/* Level 42, Nebentypus of order 2 and conductor 21. dim A_f = 4, the block
 * is an elliptic curve over Q(sqrt(-3), sqrt(-7)). All four twist
 * characters are quadratic, so the Galois action on values is trivial. */
char const * ex42_json = R"json({
  "label": "ex42",
  "level": 42,
  "nebentypus": {"local": [{"p": 3, "k": 1, "gen_exp": 1}, {"p": 7, "k": 1, "gen_exp": 3}]},
  "dim_Af": 4,
  "deg_F": 1,
  "schur_index": 1,
  "inner_twists": [
    {"label": "s", "chi": {"local": [{"p": 3, "k": 1, "gen_exp": 1}]}, "galois_exp": 1},
    {"label": "t", "chi": {"local": [{"p": 7, "k": 1, "gen_exp": 3}]}, "galois_exp": 1},
    {"label": "st", "chi": {"local": [{"p": 3, "k": 1, "gen_exp": 1}, {"p": 7, "k": 1, "gen_exp": 3}]}, "galois_exp": 1}
  ],
  "provenance": {
    "attested": ["level", "nebentypus order and conductor", "dim_Af", "N_L(B) = 2", "f_L = 21"],
    "reconstructed": []
  }
})json";

/* Level 64, Nebentypus of order 4 and conductor 16, dim A_f = 2, block an
 * elliptic curve over the real cyclic quartic field of conductor 16. The
 * single nontrivial Galois element is complex conjugation: its twist is
 * the inverse Nebentypus and it inverts character values. The twisted
 * levels at the non-conjugate orbit {chi_8, eps} are not pinned by the
 * level rules; the overrides v_2 = 7 are forced by the published conductor
 * through the local balance, and land exactly on the lcm bound. */
char const * ex64_json = R"json({
  "label": "ex64",
  "level": 64,
  "nebentypus": {"local": [{"p": 2, "k": 4, "minus_one_exp": 0, "five_exp": 1}]},
  "dim_Af": 2,
  "deg_F": 1,
  "schur_index": 1,
  "inner_twists": [
    {"label": "s", "chi": {"local": [{"p": 2, "k": 4, "minus_one_exp": 0, "five_exp": 3}]}, "galois_exp": 3}
  ],
  "level_overrides": [
    {"chi": {"local": [{"p": 2, "k": 3, "minus_one_exp": 0, "five_exp": 1}]}, "q": 2, "v": 7},
    {"chi": {"local": [{"p": 2, "k": 4, "minus_one_exp": 0, "five_exp": 1}]}, "q": 2, "v": 7}
  ],
  "provenance": {
    "attested": ["level", "nebentypus order and conductor", "dim_Af", "N_L(B) = 2", "f_L = 16"],
    "reconstructed": ["galois_exp", "level overrides at q = 2 (solved backwards from N_L(B) = 2)"]
  }
})json";

/* Level 81, Nebentypus of order 3 and conductor 9, dim A_f = 4, block an
 * elliptic curve over Q(zeta_9), [L:Q] = 6. Gal(E/F) is a Klein four
 * group: conjugation (twist theta^2, inverting values), a quadratic twist
 * theta^3, and their product. The two remaining characters theta, theta^4
 * take the override v_3 = 4 forced by the published conductor. */
char const * ex81_json = R"json({
  "label": "ex81",
  "level": 81,
  "nebentypus": {"local": [{"p": 3, "k": 2, "gen_exp": 4}]},
  "dim_Af": 4,
  "deg_F": 1,
  "schur_index": 1,
  "inner_twists": [
    {"label": "s", "chi": {"local": [{"p": 3, "k": 2, "gen_exp": 2}]}, "galois_exp": 5},
    {"label": "t", "chi": {"local": [{"p": 3, "k": 1, "gen_exp": 1}]}, "galois_exp": 1},
    {"label": "st", "chi": {"local": [{"p": 3, "k": 2, "gen_exp": 5}]}, "galois_exp": 5}
  ],
  "level_overrides": [
    {"chi": {"local": [{"p": 3, "k": 2, "gen_exp": 1}]}, "q": 3, "v": 4},
    {"chi": {"local": [{"p": 3, "k": 2, "gen_exp": 4}]}, "q": 3, "v": 4}
  ],
  "provenance": {
    "attested": ["level", "nebentypus order and conductor", "dim_Af", "N_L(B) = 3", "f_L = 9"],
    "reconstructed": ["inner twist characters and galois_exp", "level overrides at q = 3 (solved backwards from N_L(B) = 3)"]
  }
})json";

/* Level 98, Nebentypus of order 3 and conductor 7, dim A_f = 2, block over
 * the cubic field of conductor 7. The twist f (x) eps is an elliptic curve
 * over Q; its level (14 for the first newform, 98 for the second; Cremona
 * labels 14a and 98a) enters as an override at q = 7. */
char const * ex98a_json = R"json({
  "label": "ex98a",
  "level": 98,
  "nebentypus": {"local": [{"p": 7, "k": 1, "gen_exp": 2}]},
  "dim_Af": 2,
  "deg_F": 1,
  "schur_index": 1,
  "inner_twists": [
    {"label": "s", "chi": {"local": [{"p": 7, "k": 1, "gen_exp": 4}]}, "galois_exp": 2}
  ],
  "level_overrides": [
    {"chi": {"local": [{"p": 7, "k": 1, "gen_exp": 2}]}, "q": 7, "v": 1}
  ],
  "provenance": {
    "attested": ["level", "nebentypus order and conductor", "dim_Af", "twisted level 14 (Cremona 14a)", "N_L(B) = p_2 * p_7"],
    "reconstructed": []
  }
})json";

char const * ex98b_json = R"json({
  "label": "ex98b",
  "level": 98,
  "nebentypus": {"local": [{"p": 7, "k": 1, "gen_exp": 2}]},
  "dim_Af": 2,
  "deg_F": 1,
  "schur_index": 1,
  "inner_twists": [
    {"label": "s", "chi": {"local": [{"p": 7, "k": 1, "gen_exp": 4}]}, "galois_exp": 2}
  ],
  "level_overrides": [
    {"chi": {"local": [{"p": 7, "k": 1, "gen_exp": 2}]}, "q": 7, "v": 2}
  ],
  "provenance": {
    "attested": ["level", "nebentypus order and conductor", "dim_Af", "twisted level 98 (Cremona 98a)", "N_L(B) = p_2 * p_7^2"],
    "reconstructed": []
  }
})json";

/* The Jacobian of a genus-2 curve with quaternionic multiplication
 * (Schur index 2) over L = Q(sqrt(2), sqrt(-3)): level 2^8 3^5 = 62208,
 * Nebentypus the even quadratic character of conductor 8, dim A_f = 4,
 * dim B = 2. All twists are quadratic with N_chi = N. */
char const * genus2_json = R"json({
  "label": "genus2",
  "level": 62208,
  "nebentypus": {"local": [{"p": 2, "k": 3, "minus_one_exp": 0, "five_exp": 1}]},
  "dim_Af": 4,
  "deg_F": 1,
  "schur_index": 2,
  "inner_twists": [
    {"label": "s", "chi": {"local": [{"p": 2, "k": 3, "minus_one_exp": 0, "five_exp": 1}]}, "galois_exp": 1},
    {"label": "t", "chi": {"local": [{"p": 3, "k": 1, "gen_exp": 1}]}, "galois_exp": 1},
    {"label": "st", "chi": {"local": [{"p": 2, "k": 3, "minus_one_exp": 0, "five_exp": 1}, {"p": 3, "k": 1, "gen_exp": 1}]}, "galois_exp": 1}
  ],
  "provenance": {
    "attested": ["level", "nebentypus order and conductor", "dim_Af", "schur_index", "N_chi = N for all chi", "N_L(B) = 2^10 3^8"],
    "reconstructed": []
  }
})json";

/* The dimension-4 newform on Gamma_0(512): trivial Nebentypus, inner
 * twists of conductors 8, 8 and 4, hence |P_2| = 4 and the factor-2
 * variant of the global formula. */
char const * gamma0_512_json = R"json({
  "label": "gamma0-512",
  "level": 512,
  "nebentypus": {"local": []},
  "dim_Af": 4,
  "deg_F": 1,
  "schur_index": 1,
  "inner_twists": [
    {"label": "s", "chi": {"local": [{"p": 2, "k": 3, "minus_one_exp": 0, "five_exp": 1}]}, "galois_exp": 1},
    {"label": "t", "chi": {"local": [{"p": 2, "k": 3, "minus_one_exp": 1, "five_exp": 1}]}, "galois_exp": 1},
    {"label": "st", "chi": {"local": [{"p": 2, "k": 2, "minus_one_exp": 1}]}, "galois_exp": 1}
  ],
  "provenance": {
    "attested": ["level", "trivial nebentypus", "dim_Af", "twist conductors 8, 8, 4", "|P_2| = 4"],
    "reconstructed": []
  }
})json";

std::vector<Fixture> build_fixtures()
{
    std::vector<Fixture> out;

    {
        Fixture f;
        f.name = "ex42";
        f.config_json = ex42_json;
        f.expected.group_order = 4;
        f.expected.field_conductor = 21;
        f.expected.status = Integrality::Integral;
        f.expected.generator = 2;
        f.expected.case_tag = "Squarefree";
        f.expected.residual = Rational{1, 1};
        out.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "ex64";
        f.config_json = ex64_json;
        f.expected.group_order = 4;
        f.expected.field_conductor = 16;
        f.expected.status = Integrality::Integral;
        f.expected.generator = 2;
        f.expected.residual = Rational{2, 1};
        f.expected.ideal = {{2, 4, 1, 1, 4, 1}};
        out.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "ex81";
        f.config_json = ex81_json;
        f.expected.group_order = 6;
        f.expected.field_conductor = 9;
        f.expected.status = Integrality::Integral;
        f.expected.generator = 3;
        f.expected.residual = Rational{3, 1};
        out.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "ex98a";
        f.config_json = ex98a_json;
        f.expected.group_order = 3;
        f.expected.field_conductor = 7;
        f.expected.status = Integrality::NonIntegral;
        f.expected.witness = 7;
        f.expected.ideal = {{2, 1, 3, 1, 1, 1}, {7, 3, 1, 1, 1, std::nullopt}};
        f.expected.decomposition = {{2, 2, 1}, {1, 1, 1}};
        out.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "ex98b";
        f.config_json = ex98b_json;
        f.expected.group_order = 3;
        f.expected.field_conductor = 7;
        f.expected.status = Integrality::NonIntegral;
        f.expected.witness = 7;
        f.expected.ideal = {{2, 1, 3, 1, 1, 1}, {7, 3, 1, 1, 2, std::nullopt}};
        out.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "genus2";
        f.config_json = genus2_json;
        f.expected.group_order = 4;
        f.expected.field_conductor = 24;
        f.expected.status = Integrality::Integral;
        f.expected.generator = 6718464; // 2^10 * 3^8
        f.expected.residual = Rational{1, 1};
        f.expected.ideal = {{2, 2, 2, 1, 20, 10}, {3, 2, 2, 1, 16, 8}};
        f.expected.decomposition = {{4, 4, 2}};
        out.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "gamma0-512";
        f.config_json = gamma0_512_json;
        f.expected.group_order = 4;
        f.expected.field_conductor = 8;
        f.expected.status = Integrality::Integral;
        f.expected.generator = 32;
        f.expected.case_tag = "Gamma0_P2eq4";
        f.expected.p2_size = 4;
        f.expected.residual = Rational{2, 1};
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace

std::vector<Fixture> const & bundled_fixtures()
{
    static std::vector<Fixture> const fixtures = build_fixtures();
    return fixtures;
}

Fixture const * find_fixture(std::string const & name)
{
    for (auto const & f : bundled_fixtures())
        if (f.name == name)
            return &f;
    return nullptr;
}

FixtureResult check_fixture(Fixture const & fixture)
{
    FixtureResult res;
    res.name = fixture.name;
    auto diff = [&](std::string const & what, auto expected, auto got) {
        std::ostringstream os;
        os << what << ": expected " << expected << ", got " << got;
        res.diffs.push_back(os.str());
        res.pass = false;
    };

    ConductorReport rep;
    try {
        rep = analyze(parse_config(fixture.config_json));
    } catch (std::exception const & e) {
        res.pass = false;
        res.diffs.push_back(std::string("analysis failed: ") + e.what());
        return res;
    }
    auto const & exp = fixture.expected;

    if (exp.group_order && rep.degree != *exp.group_order)
        diff("group order", *exp.group_order, rep.degree);
    if (exp.field_conductor && rep.field_conductor != *exp.field_conductor)
        diff("field conductor", *exp.field_conductor, rep.field_conductor);
    if (exp.status && rep.verdict.status != *exp.status)
        diff("integrality", static_cast<int>(*exp.status),
             static_cast<int>(rep.verdict.status));
    if (exp.generator) {
        if (!rep.generator)
            diff("generator", *exp.generator, std::string("none"));
        else if (*rep.generator != *exp.generator)
            diff("generator", *exp.generator, *rep.generator);
    }
    if (exp.case_tag && to_string(rep.classification.tag) != *exp.case_tag)
        diff("case", *exp.case_tag, to_string(rep.classification.tag));
    if (exp.residual) {
        if (!rep.classification.residual)
            diff("residual", exp.residual->str(), std::string("none"));
        else if (!(*rep.classification.residual == *exp.residual))
            diff("residual", exp.residual->str(), rep.classification.residual->str());
    }
    if (exp.p2_size && rep.classification.p2_size != *exp.p2_size)
        diff("|P2|", *exp.p2_size, rep.classification.p2_size);
    if (exp.witness) {
        if (!rep.verdict.witness)
            diff("witness", *exp.witness, std::string("none"));
        else if (*rep.verdict.witness != *exp.witness)
            diff("witness", *exp.witness, *rep.verdict.witness);
    }
    if (!exp.ideal.empty()) {
        if (exp.ideal.size() != rep.ideal.size()) {
            diff("ideal factors", exp.ideal.size(), rep.ideal.size());
        } else {
            for (std::size_t i = 0; i < exp.ideal.size(); i++) {
                auto const & a = exp.ideal[i];
                auto const & b = rep.ideal[i];
                if (a.q != b.q || a.e != b.split.e || a.f != b.split.f ||
                    a.g != b.split.g || a.prime_exponent != b.prime_exponent ||
                    a.generator_exponent != b.generator_exponent) {
                    std::ostringstream os;
                    os << "ideal factor at q = " << a.q << " differs: got q=" << b.q
                       << " e=" << b.split.e << " f=" << b.split.f << " g=" << b.split.g
                       << " n=" << b.prime_exponent;
                    res.diffs.push_back(os.str());
                    res.pass = false;
                }
            }
        }
    }
    if (!exp.decomposition.empty()) {
        if (exp.decomposition.size() != rep.decomposition.factors.size()) {
            diff("decomposition factors", exp.decomposition.size(),
                 rep.decomposition.factors.size());
        } else {
            for (std::size_t i = 0; i < exp.decomposition.size(); i++) {
                auto const & a = exp.decomposition[i];
                auto const & b = rep.decomposition.factors[i];
                if (a.orbit_size != b.orbit_size || a.dimension != b.dimension ||
                    a.multiplicity != b.multiplicity) {
                    std::ostringstream os;
                    os << "decomposition factor " << i << " differs: got orbit "
                       << b.orbit_size << ", dim " << b.dimension << ", mult "
                       << b.multiplicity;
                    res.diffs.push_back(os.str());
                    res.pass = false;
                }
            }
        }
    }
    return res;
}

std::vector<FixtureResult> run_all_fixtures()
{
    std::vector<FixtureResult> out;
    for (auto const & f : bundled_fixtures())
        out.push_back(check_fixture(f));
    return out;
}

} // namespace blockcond
