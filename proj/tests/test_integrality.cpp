#include "gmfq/integrality.hpp"

#include "gmfq/density.hpp"
#include "gmfq/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>

using namespace gmfq;

TEST_SUITE_BEGIN("integrality");

TEST_CASE("nonzero-integrality of c(p) from b alone") {
    CHECK(!is_integral_nonzero(1, 7));       // c(p) = 0
    CHECK(is_integral_nonzero(-1, 2));       // c(2) = 1
    CHECK(!is_integral_nonzero(-1, 3));      // c(3) = 2/3
    CHECK(!is_integral_nonzero(0, 5));       // c(5) = 1/5
    CHECK(is_integral_nonzero(1 - 2 * 13, 13)); // c = 2 (hypothetical b)
    CHECK(is_integral_nonzero(1 + 13, 13));     // c = -1
    CHECK(!is_integral_nonzero(2, 5));          // c = -1/5
}

TEST_CASE("candidate bound and primes") {
    CHECK(candidate_bound() == doctest::Approx(5.82842712474619).epsilon(1e-13));
    for (int d = 1; d <= 5; ++d) CHECK(candidate_bound(d) == candidate_bound());
    CHECK_THROWS_AS(candidate_bound(0), std::invalid_argument);
    CHECK_THROWS_AS(candidate_bound(-3), std::invalid_argument);
    CHECK(candidate_primes() == std::vector<long long>{2, 3, 5});
    for (long long p : candidate_primes())
        CHECK(static_cast<double>(p) < candidate_bound());
    CHECK(7.0 > candidate_bound());
}

TEST_CASE("scan results on the fixtures") {
    const auto spec11 = fixtures::curve("11a1");
    const auto t11 = CoefficientTable::build(spec11.curve, 10000, spec11.ap_overrides);
    const auto r11 = scan(t11, 10000);
    CHECK(r11.x == 10000);
    CHECK(r11.nonzero_integral.empty()); // c(2)=3/2, c(3)=2/3, c(5)=0
    CHECK(std::count(r11.zero_set.begin(), r11.zero_set.end(), 5) == 1);
    CHECK(static_cast<long long>(r11.zero_set.size()) == sign_census(t11, 10000).n_zero);
    // The zero set is sparse: well under 1% of all primes at this range.
    CHECK(static_cast<double>(r11.zero_set.size()) <=
          0.01 * static_cast<double>(t11.pi(10000)));

    const auto t32 = CoefficientTable::build(fixtures::curve("32a").curve, 10000);
    const auto r32 = scan(t32, 10000);
    CHECK(r32.nonzero_integral.empty()); // c(3)=1/3, c(5)=3/5; p=2 is bad
    CHECK(r32.zero_set.empty());         // b(p) is even for every good p here
}

TEST_CASE("a curve where all three candidates fire") {
    const auto curve = fixtures::curve("433a").curve;
    const auto table = CoefficientTable::build(curve, 10000);
    const auto r = scan(table, 10000);

    REQUIRE(r.nonzero_integral.size() == 3);
    for (size_t i = 0; i < 3; ++i) {
        CHECK(r.nonzero_integral[i].first == candidate_primes()[i]);
        CHECK(r.nonzero_integral[i].second == 1); // c(2) = c(3) = c(5) = 1
    }
    CHECK(r.zero_set == std::vector<long long>{541, 2029, 4993, 5101});

    // Everything above re-derived by naive point enumeration.
    CHECK(oracle::ap_bruteforce(curve, 2) == -1);  // c(2) = (1+1)/2 = 1
    CHECK(oracle::ap_bruteforce(curve, 3) == -2);  // c(3) = (1+2)/3 = 1
    CHECK(oracle::ap_bruteforce(curve, 5) == -4);  // c(5) = (1+4)/5 = 1
    CHECK(oracle::ap_bruteforce(curve, 541) == 1); // c = 0
    CHECK(oracle::ap_bruteforce(curve, 2029) == 1);
}

TEST_CASE("integer path agrees with the rational path") {
    const auto table = CoefficientTable::build(fixtures::curve("37a1").curve, 2000);
    for (long long p : table.good_primes()) {
        const Rational cp = cp_exact(table.b(p), p);
        const bool rational_says = is_integer(cp) && cp != 0;
        CHECK(is_integral_nonzero(table.b(p), p) == rational_says);
    }
}

TEST_CASE("no shipped curve has integral c(p) at all of 2, 3, 5, 7") {
    // A product with every exponent integral would have integer Fourier
    // coefficients, forcing f constant; each fixture must carry a
    // non-integral witness this early.
    for (const char* name : {"11a1", "37a1", "32a", "36a", "433a"}) {
        INFO("curve ", name);
        const auto spec = fixtures::curve(name);
        const auto t = CoefficientTable::build(spec.curve, 10, spec.ap_overrides);
        bool witness = false;
        for (long long p : {2LL, 3LL, 5LL, 7LL}) witness = witness || !is_integer(t.c(p));
        CHECK(witness);
    }
}

TEST_CASE("a forged table trips the finiteness tripwire") {
    // Real coefficients for the conductor-11 curve below 30, except a_7 is
    // forged to -6 (outside the Hasse window, so no honest count produces
    // it).  Then c(7) = (1+6)/7 = 1, a nonzero integer at p = 7 > 5.
    std::map<long long, long long> forged{{2, -2}, {3, -1}, {5, 1},  {7, -6}, {11, 1},
                                          {13, 4}, {17, -2}, {19, 0}, {23, -1}, {29, 0}};
    const auto table = CoefficientTable::from_ap(forged, {11}, 30);
    CHECK_THROWS_AS(scan(table, 30), VerificationError);
    CHECK_THROWS_WITH_AS(scan(table, 30), doctest::Contains("finiteness"), VerificationError);
    CHECK_THROWS_AS(scan(table, 40), DataError); // beyond-bound guard still first
}

TEST_SUITE_END();
