#include "gmfq/measures.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace gmfq;

TEST_SUITE_BEGIN("measures");

TEST_CASE("interval construction and membership") {
    CHECK_THROWS_AS(Interval::make(1.0, 0.0), std::invalid_argument);
    const Interval half_open = Interval::make(0.0, 1.0, false, true);
    CHECK(!half_open.contains_zero());
    CHECK(!half_open.contains(0.0));
    CHECK(half_open.contains(1.0));
    CHECK(Interval::make(0.0, 1.0).contains_zero());
    CHECK(Interval::make(-1.0, 0.0).contains_zero());
    CHECK(!Interval::make(-1.0, 0.0, true, false).contains_zero());
    CHECK(Interval::make(-2.0, 0.0).inside_unit() == false);
}

TEST_CASE("semicircle closed forms") {
    CHECK(st_mass(Interval::make(-1, 1)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(st_mass(Interval::make(0, 1)) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(st_mass(Interval::make(-1, 0)) == doctest::Approx(0.5).epsilon(1e-14));

    // quarter partition sums to 1 in closed form
    const double total = st_mass(Interval::make(-1, -0.5)) + st_mass(Interval::make(-0.5, 0)) +
                         st_mass(Interval::make(0, 0.5)) + st_mass(Interval::make(0.5, 1));
    CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(st_mass(Interval::make(0.5, 1)) == doctest::Approx(0.19550110947788).epsilon(1e-11));
}

TEST_CASE("arcsine closed forms and the atom") {
    CHECK(cm_mass(Interval::make(0, 1, false, true)) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(cm_mass(Interval::make(-1, 0, true, false)) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(cm_mass(Interval::make(-1, 1)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(cm_mass(Interval::make(-1, 0)) == doctest::Approx(0.75).epsilon(1e-14)); // atom in
    CHECK(cm_continuous_mass(Interval::make(-1, 0)) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(cm_continuous_mass(Interval::make(0.5, 1)) ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(atom_weight(MeasureKind::DeuringCM) == 0.5);
    CHECK(atom_weight(MeasureKind::SatoTate) == 0.0);
}

TEST_CASE("masses reject intervals outside [-1, 1]") {
    CHECK_THROWS_AS(st_mass(Interval::make(-2, 0)), std::invalid_argument);
    CHECK_THROWS_AS(cm_mass(Interval::make(0, 1.5)), std::invalid_argument);
}

TEST_CASE("sign density table and its decomposition") {
    CHECK(theoretical_sign_density(MeasureKind::SatoTate, SignClass::Positive) == 0.5);
    CHECK(theoretical_sign_density(MeasureKind::SatoTate, SignClass::Negative) == 0.5);
    CHECK(theoretical_sign_density(MeasureKind::SatoTate, SignClass::Zero) == 0.0);
    CHECK(theoretical_sign_density(MeasureKind::DeuringCM, SignClass::Positive) == 0.75);
    CHECK(theoretical_sign_density(MeasureKind::DeuringCM, SignClass::Negative) == 0.25);
    CHECK(theoretical_sign_density(MeasureKind::DeuringCM, SignClass::Zero) == 0.0);

    // 3/4 = atom 1/2 (inert primes, c(p) = 1/p > 0) + arcsine mass of (0, 1]
    CHECK(atom_weight(MeasureKind::DeuringCM) + cm_mass(Interval::make(0, 1, false, true)) ==
          doctest::Approx(theoretical_sign_density(MeasureKind::DeuringCM,
                                                   SignClass::Positive)).epsilon(1e-14));
}

TEST_CASE("closed forms match quadrature on random intervals") {
    std::mt19937 rng(20260823);
    std::uniform_real_distribution<double> unit(-0.999, 0.999);
    for (int trial = 0; trial < 100; ++trial) {
        double a = unit(rng), b = unit(rng);
        if (a > b) std::swap(a, b);
        const Interval I = Interval::make(a, b, false, false); // openness: measure-null
        const double st_quad = oracle::integrate(oracle::st_integrand, a, b);
        const double cm_quad = oracle::integrate(oracle::cm_integrand, a, b);
        CHECK(std::abs(st_mass(I) - st_quad) <= 1e-9);
        CHECK(std::abs(cm_continuous_mass(I) - cm_quad) <= 1e-9);
    }
}

TEST_SUITE_END();
