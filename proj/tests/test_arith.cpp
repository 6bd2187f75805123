#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "blockcond/arith.hpp"
#include "blockcond/errors.hpp"

using namespace blockcond;
using namespace blockcond::arith;

TEST_CASE("pow_mod and orders")
{
    CHECK(pow_mod(3, 6, 7) == 1);
    CHECK(pow_mod(3, 2, 7) == 2);
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(3, 7) == 6);
    CHECK(multiplicative_order(1, 1) == 1);
    CHECK(multiplicative_order(2, 9) == 6);
}

TEST_CASE("valuation and squarefree")
{
    CHECK(valuation(98, 7) == 2);
    CHECK(valuation(98, 2) == 1);
    CHECK(valuation(98, 3) == 0);
    CHECK(is_squarefree(42));
    CHECK(!is_squarefree(12));
    CHECK(is_squarefree(1));
}

TEST_CASE("factorize and divisors")
{
    auto const f = factorize(62208); // 2^8 * 3^5
    REQUIRE(f.size() == 2);
    CHECK(f[0] == std::pair<int64, int>{2, 8});
    CHECK(f[1] == std::pair<int64, int>{3, 5});
    CHECK(divisors(12) == std::vector<int64>{1, 2, 3, 4, 6, 12});
    CHECK(euler_phi(16) == 8);
    CHECK(euler_phi(9) == 6);
}

TEST_CASE("smallest primitive roots")
{
    CHECK(smallest_primitive_root(3, 1) == 2);
    CHECK(smallest_primitive_root(7, 1) == 3);
    CHECK(smallest_primitive_root(9 / 3, 2) == 2); // mod 9
    CHECK(smallest_primitive_root(5, 1) == 2);
    CHECK(smallest_primitive_root(23, 1) == 5);
    // the value really generates: order check for a couple of cases
    for (auto [p, k] : {std::pair<int64, int>{3, 2}, {7, 1}, {11, 1}, {13, 2}}) {
        int64 const m = ipow(p, k);
        CHECK(multiplicative_order(smallest_primitive_root(p, k), m) == euler_phi(m));
    }
}

TEST_CASE("ipow overflow guard")
{
    CHECK(ipow(2, 10) == 1024);
    CHECK_THROWS_AS(ipow(10, 40), engine_error);
}
