/* Acceptance suite: runs every published worked example at exact
 * tolerance and the three property suites, printing one PASS/FAIL line
 * per criterion. Exit status 0 only when everything passes. */

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include "blockcond/arith.hpp"
#include "blockcond/config_io.hpp"
#include "blockcond/conductor.hpp"
#include "blockcond/fixtures.hpp"
#include "config_generators.hpp"

using namespace blockcond;

namespace {

int criteria_failed = 0;

void criterion(int number, std::string const & description,
               std::function<bool(std::ostream &)> const & body)
{
    std::ostringstream detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (std::exception const & e) {
        detail << "exception: " << e.what();
    }
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << number << ": "
              << description << "\n";
    if (!pass) {
        criteria_failed++;
        std::string const text = detail.str();
        if (!text.empty())
            std::cout << "      " << text << "\n";
    }
}

bool expect(std::ostream & os, bool cond, std::string const & what)
{
    if (!cond)
        os << what << "; ";
    return cond;
}

ConductorReport analyze_fixture(std::string const & name)
{
    auto const * f = find_fixture(name);
    if (!f)
        throw std::runtime_error("missing fixture " + name);
    return analyze(parse_config(f->config_json));
}

/* ---- criterion 7: conductor oracle over all moduli <= 200 ---- */

struct ValueTable {
    // chi(n) for n in [0, M), nullopt on non-units; evaluation done once
    std::vector<std::optional<RootOfUnity>> values;
};

int64 oracle_conductor(ValueTable const & t, int64 M)
{
    for (int64 const d : arith::divisors(M)) {
        std::map<int64, RootOfUnity> cls;
        bool ok = true;
        for (int64 n = 1; n <= M && ok; n++) {
            auto const & v = t.values[static_cast<std::size_t>(n % M)];
            if (!v)
                continue;
            auto const [it, inserted] = cls.emplace(n % d, *v);
            if (!inserted && it->second != *v)
                ok = false;
        }
        if (ok)
            return d;
    }
    return M;
}

bool conductor_oracle_suite(std::ostream & os, int64 max_modulus, int64 & checked)
{
    for (int64 M = 1; M <= max_modulus; M++) {
        // enumerate the full dual group of (Z/M)^* through local exponents
        std::vector<std::vector<LocalCharacter>> locals;
        for (auto const & [p, k] : arith::factorize(M)) {
            std::vector<LocalCharacter> at_p;
            if (p == 2) {
                if (k == 1)
                    at_p.push_back(LocalCharacter::trivial(2, 1));
                else if (k == 2)
                    for (int m = 0; m < 2; m++)
                        at_p.push_back(LocalCharacter::two(2, m, 0));
                else
                    for (int m = 0; m < 2; m++)
                        for (int64 fe = 0; fe < arith::ipow(2, static_cast<int>(k) - 2);
                             fe++)
                            at_p.push_back(LocalCharacter::two(static_cast<int>(k), m,
                                                               fe));
            } else {
                for (int64 e = 0; e < arith::euler_phi(arith::ipow(p, k)); e++)
                    at_p.push_back(LocalCharacter::odd_prime(p, static_cast<int>(k), e));
            }
            locals.push_back(std::move(at_p));
        }
        std::vector<std::size_t> idx(locals.size(), 0);
        while (true) {
            std::vector<LocalCharacter> comps;
            for (std::size_t i = 0; i < idx.size(); i++)
                comps.push_back(locals[i][idx[i]]);
            auto const chi = DirichletCharacter::from_components(comps).induced(M);
            ValueTable t;
            t.values.resize(static_cast<std::size_t>(M));
            for (int64 n = 1; n <= M; n++)
                t.values[static_cast<std::size_t>(n % M)] = chi.evaluate(n);
            int64 const structural = chi.conductor();
            int64 const brute = oracle_conductor(t, M);
            checked++;
            if (structural != brute) {
                os << "modulus " << M << ": structural conductor " << structural
                   << " vs oracle " << brute;
                return false;
            }
            std::size_t i = 0;
            for (; i < idx.size(); i++) {
                if (++idx[i] < locals[i].size())
                    break;
                idx[i] = 0;
            }
            if (i == idx.size())
                break;
        }
    }
    return true;
}

/* ---- criterion 8: closed-form equivalence on random configs ---- */

// the valuation identity for the odd/quadratic, squarefree and Gamma0
// propositions, with the |P_2| = 4 adjustment at q = 2
bool check_valuation_identity(std::ostream & os, NewformConfig const & config,
                              bool gamma0_p2eq4)
{
    LevelTable const table = LevelTable::build(config);
    int64 const d = config.degree() * config.dim_b();
    for (int64 const q : config.relevant_primes()) {
        auto const v = norm_conductor_exponent(config, table, q);
        if (!v.is_exact()) {
            os << config.label() << ": v_" << q << " not exact";
            return false;
        }
        int64 adjust = arith::valuation(config.field_conductor(), q);
        if (gamma0_p2eq4 && q == 2)
            adjust += 1;
        int64 const lhs = v.value() + d * adjust;
        int64 const rhs = d * arith::valuation(config.level(), q);
        if (lhs != rhs) {
            os << config.label() << " (N=" << config.level() << "): at q=" << q
               << " got " << lhs << " != " << rhs;
            return false;
        }
    }
    return true;
}

// the enumerated squarefree cases: dimB*[L:Q] off the nebentypus, 0 on it
bool check_squarefree_cases(std::ostream & os, NewformConfig const & config)
{
    LevelTable const table = LevelTable::build(config);
    for (int64 const q : config.relevant_primes()) {
        auto const v = norm_conductor_exponent(config, table, q);
        if (!v.is_exact()) {
            os << "squarefree config: v_" << q << " not exact";
            return false;
        }
        int64 const expected = config.nebentypus().conductor() % q == 0
                                   ? 0
                                   : config.dim_b() * config.degree();
        if (v.value() != expected) {
            os << config.label() << " (N=" << config.level() << "): v_" << q << " = "
               << v.value() << ", expected " << expected;
            return false;
        }
    }
    return true;
}

/* ---- criterion 9: action laws and dimension bookkeeping ---- */

bool check_action_laws(std::ostream & os, NewformConfig const & config)
{
    auto const & T = config.twists();
    auto const & G = config.group();
    for (auto const & s : T.elements())
        for (auto const & t : T.elements()) {
            auto const st = T.compose(s, t);
            for (auto const & chi : G)
                if (!(act(s, act(t, chi)) == act(st, chi))) {
                    os << config.label() << ": action axiom fails on ('" << s.label
                       << "', '" << t.label << "', " << chi.str() << ")";
                    return false;
                }
        }
    auto const dec = orbit_decomposition(G, T, config.deg_f(), config.schur_index());
    int64 orbit_total = 0;
    for (auto const & f : dec.factors)
        orbit_total += f.orbit_size;
    if (orbit_total != G.degree()) {
        os << config.label() << ": orbits cover " << orbit_total << " of "
           << G.degree();
        return false;
    }
    if (dec.total_dimension() != config.degree() * config.dim_b()) {
        os << config.label() << ": bookkeeping " << dec.total_dimension()
           << " != " << config.degree() * config.dim_b();
        return false;
    }
    return true;
}

} // namespace

int main()
{
    criterion(1, "level 42: N_L(B) = 2, f_L = 21, squarefree case, residual 1",
              [](std::ostream & os) {
                  auto const rep = analyze_fixture("ex42");
                  bool ok = true;
                  ok &= expect(os, rep.verdict.status == Integrality::Integral,
                               "not integral");
                  ok &= expect(os, rep.generator == 2, "generator != 2");
                  ok &= expect(os, rep.field_conductor == 21, "f_L != 21");
                  ok &= expect(os, rep.classification.tag == CaseTag::Squarefree,
                               "case != Squarefree");
                  ok &= expect(os,
                               rep.classification.residual == Rational{1, 1},
                               "residual != 1");
                  return ok;
              });

    criterion(2, "level 64: generator 2, f_L = 16, residual 2",
              [](std::ostream & os) {
                  auto const rep = analyze_fixture("ex64");
                  bool ok = true;
                  ok &= expect(os, rep.verdict.status == Integrality::Integral,
                               "not integral");
                  ok &= expect(os, rep.generator == 2, "generator != 2");
                  ok &= expect(os, rep.field_conductor == 16, "f_L != 16");
                  ok &= expect(os,
                               rep.classification.residual == Rational{2, 1},
                               "residual != 2");
                  ok &= expect(os, rep.degree == 4, "|G| != 4");
                  return ok;
              });

    criterion(3, "level 81: generator 3, f_L = 9, residual 3",
              [](std::ostream & os) {
                  auto const rep = analyze_fixture("ex81");
                  bool ok = true;
                  ok &= expect(os, rep.verdict.status == Integrality::Integral,
                               "not integral");
                  ok &= expect(os, rep.generator == 3, "generator != 3");
                  ok &= expect(os, rep.field_conductor == 9, "f_L != 9");
                  ok &= expect(os,
                               rep.classification.residual == Rational{3, 1},
                               "residual != 3");
                  ok &= expect(os, rep.degree == 6, "|G| != 6");
                  return ok;
              });

    criterion(4, "level 98: non-integral p_2 * p_7^i with f(p_2) = 3; "
                 "indeterminate without the override",
              [](std::ostream & os) {
                  bool ok = true;
                  for (int i = 1; i <= 2; i++) {
                      auto const rep =
                          analyze_fixture(i == 1 ? "ex98a" : "ex98b");
                      ok &= expect(os,
                                   rep.verdict.status == Integrality::NonIntegral,
                                   "not non-integral");
                      ok &= expect(os, rep.ideal.size() == 2, "ideal != 2 factors");
                      if (rep.ideal.size() == 2) {
                          ok &= expect(os,
                                       rep.ideal[0].q == 2 &&
                                           rep.ideal[0].split.f == 3 &&
                                           rep.ideal[0].prime_exponent == 1,
                                       "p_2 wrong");
                          ok &= expect(os,
                                       rep.ideal[1].q == 7 &&
                                           rep.ideal[1].split.e == 3 &&
                                           rep.ideal[1].prime_exponent == i,
                                       "p_7 exponent wrong");
                          ok &= expect(os, !rep.ideal[1].generator_exponent.has_value(),
                                       "p_7 should have no rational generator");
                      }
                  }
                  // strip the override: indeterminate with the named entry
                  auto const base = parse_config(find_fixture("ex98a")->config_json);
                  NewformConfig const open("ex98-open", base.level(),
                                           base.nebentypus(), base.dim_af(),
                                           base.deg_f(), base.schur_index(),
                                           base.twists().elements());
                  auto const rep = analyze(open);
                  ok &= expect(os,
                               rep.verdict.status == Integrality::Indeterminate,
                               "expected indeterminate");
                  bool named = false;
                  for (auto const & p : rep.primes)
                      if (p.q == 7)
                          named = p.norm_valuation == LevelExponent::interval(0, 2);
                  ok &= expect(os, named, "v_7 interval != [0, 2]");
                  ok &= expect(os,
                               rep.verdict.unresolved.size() == 1 &&
                                   rep.verdict.unresolved[0].q == 7 &&
                                   rep.verdict.unresolved[0].chi == base.nebentypus(),
                               "needed override not named");
                  return ok;
              });

    criterion(5, "genus-2 block: N_L(B) = 2^10 3^8 and Res ~ A_f^2",
              [](std::ostream & os) {
                  auto const rep = analyze_fixture("genus2");
                  bool ok = true;
                  ok &= expect(os, rep.verdict.status == Integrality::Integral,
                               "not integral");
                  ok &= expect(os, rep.generator == 6718464, "generator != 2^10 3^8");
                  ok &= expect(os, rep.decomposition.factors.size() == 1,
                               "not a single orbit");
                  if (rep.decomposition.factors.size() == 1) {
                      auto const & f = rep.decomposition.factors[0];
                      ok &= expect(os, f.representative.is_trivial(),
                                   "factor is not A_f");
                      ok &= expect(os, f.multiplicity == 2, "multiplicity != 2");
                      ok &= expect(os, f.dimension == 4, "dim != 4");
                  }
                  return ok;
              });

    criterion(6, "Gamma_0(512): classification Gamma0_P2eq4 with |P_2| = 4",
              [](std::ostream & os) {
                  auto const rep = analyze_fixture("gamma0-512");
                  bool ok = true;
                  ok &= expect(os,
                               rep.classification.tag == CaseTag::Gamma0_P2eq4,
                               "case != Gamma0_P2eq4");
                  ok &= expect(os, rep.classification.p2_size == 4, "|P_2| != 4");
                  ok &= expect(os,
                               rep.classification.residual == Rational{2, 1},
                               "residual != 2");
                  return ok;
              });

    criterion(7, "property suite A: conductor oracle, all characters of modulus <= 200",
              [](std::ostream & os) {
                  int64 checked = 0;
                  bool const ok = conductor_oracle_suite(os, 200, checked);
                  if (ok && checked < 10000) {
                      os << "only " << checked << " characters enumerated";
                      return false;
                  }
                  std::cout << "      (" << checked << " characters checked)\n";
                  return ok;
              });

    criterion(8, "property suite B: closed-form equivalence on 500 configs per case",
              [](std::ostream & os) {
                  testgen::rng_t rng(20260810);
                  for (int i = 0; i < 500; i++) {
                      auto const c = testgen::random_odd_quadratic(rng);
                      if (!check_valuation_identity(os, c, false))
                          return false;
                  }
                  for (int i = 0; i < 500; i++) {
                      auto const c = testgen::random_gamma0(rng, false);
                      if (c.level() % 2 == 0 && !c.nebentypus().is_trivial())
                          return false;
                      if (!check_valuation_identity(os, c, false))
                          return false;
                  }
                  for (int i = 0; i < 500; i++) {
                      auto const c = testgen::random_gamma0(rng, true);
                      LevelTable const table = LevelTable::build(c);
                      auto const cls = classify(c, table);
                      if (cls.p2_size != 4) {
                          os << "generated config has |P_2| = " << cls.p2_size;
                          return false;
                      }
                      if (!check_valuation_identity(os, c, true))
                          return false;
                  }
                  for (int i = 0; i < 500; i++) {
                      auto const c = testgen::random_squarefree(rng);
                      if (!check_squarefree_cases(os, c))
                          return false;
                      if (!check_valuation_identity(os, c, false))
                          return false;
                  }
                  return true;
              });

    criterion(9, "property suite C: action axioms and dimension bookkeeping",
              [](std::ostream & os) {
                  testgen::rng_t rng(987654321);
                  for (auto const & fx : bundled_fixtures()) {
                      auto const config = parse_config(fx.config_json);
                      if (!check_action_laws(os, config))
                          return false;
                  }
                  for (int i = 0; i < 150; i++) {
                      if (!check_action_laws(os, testgen::random_odd_quadratic(rng)))
                          return false;
                      if (!check_action_laws(os, testgen::random_gamma0(rng, i % 2)))
                          return false;
                      if (!check_action_laws(os, testgen::random_squarefree(rng)))
                          return false;
                  }
                  return true;
              });

    // the published fixtures, end to end, as the batch runner sees them
    criterion(10, "fixture batch: every bundled fixture reproduces its published values",
              [](std::ostream & os) {
                  bool ok = true;
                  for (auto const & r : run_all_fixtures()) {
                      if (!r.pass) {
                          ok = false;
                          os << r.name << ": ";
                          for (auto const & d : r.diffs)
                              os << d << "; ";
                      }
                  }
                  return ok;
              });

    if (criteria_failed == 0) {
        std::cout << "all acceptance criteria pass\n";
        return EXIT_SUCCESS;
    }
    std::cout << criteria_failed << " criteria FAILED\n";
    return EXIT_FAILURE;
}
