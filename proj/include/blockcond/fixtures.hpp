#ifndef BLOCKCOND_FIXTURES_HPP_
#define BLOCKCOND_FIXTURES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "blockcond/conductor.hpp"

namespace blockcond {

/* Bundled worked examples: dimension-one and dimension-two building blocks
 * with their published invariants. Each fixture carries the config JSON
 * (which also documents provenance: attested fields versus reconstructed
 * ones) and the values the engine must reproduce. */

struct ExpectedIdealFactor {
    int64 q = 0;
    int64 e = 1, f = 1, g = 1;
    int64 prime_exponent = 0;
    std::optional<int64> generator_exponent;
};

struct ExpectedFactor {
    int64 orbit_size = 1;
    int64 dimension = 1;
    int64 multiplicity = 1;
};

struct FixtureExpectation {
    std::optional<int64> group_order;
    std::optional<int64> field_conductor;
    std::optional<Integrality> status;
    std::optional<int64> generator;
    std::optional<std::string> case_tag;
    std::optional<Rational> residual;
    std::optional<int64> p2_size;
    std::optional<int64> witness;
    std::vector<ExpectedIdealFactor> ideal; // checked when nonempty
    std::vector<ExpectedFactor> decomposition; // checked when nonempty
};

struct Fixture {
    std::string name;
    std::string config_json;
    FixtureExpectation expected;
};

std::vector<Fixture> const & bundled_fixtures();
Fixture const * find_fixture(std::string const & name);

struct FixtureResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> diffs;
};

// compare one analyzed report against the fixture's expected values
FixtureResult check_fixture(Fixture const & fixture);
std::vector<FixtureResult> run_all_fixtures();

} // namespace blockcond

#endif
