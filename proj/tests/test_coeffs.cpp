#include "gmfq/coeffs.hpp"

#include "gmfq/arith.hpp"
#include "gmfq/errors.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace gmfq;

namespace {

CoefficientTable table11(long long N) {
    const auto spec = fixtures::curve("11a1");
    return CoefficientTable::build(spec.curve, N, spec.ap_overrides);
}

} // namespace

TEST_SUITE_BEGIN("coeffs");

TEST_CASE("extend_b follows the Hecke recursion") {
    const auto spec = fixtures::curve("11a1");
    const CoefficientTable t = table11(200);
    CHECK(t.b(1) == 1);
    CHECK(t.b(2) == -2);
    CHECK(t.b(4) == 2);   // (-2)(-2) - 2
    CHECK(t.b(6) == 2);   // b(2) b(3)
    CHECK(t.b(8) == 0);   // b(2) b(4) - 2 b(2)
    CHECK(t.b(9) == -2);  // b(3)^2 - 3
    CHECK(t.b(11) == 1);  // ingested override
    CHECK(t.b(121) == 1); // bad prime: b(11)^2
    CHECK(t.b(22) == -2); // multiplicative across the bad prime
}

TEST_CASE("extend_b names a missing prime") {
    std::map<long long, long long> entries{{2, -2}};
    CHECK_THROWS_WITH_AS(extend_b(entries, {}, 5), doctest::Contains("prime 3"), DataError);
}

TEST_CASE("c values on the worked 11a1 examples") {
    const CoefficientTable t = table11(50);
    CHECK(t.c(1) == rat(-1));
    CHECK(t.c(2) == rat(3, 2));
    CHECK(t.c(3) == rat(2, 3));
    CHECK(t.c(5) == rat(0));
    CHECK(t.c(6) == rat(-1)); // -(b(6) - b(3) - b(2) + b(1))/6
    CHECK(t.c(7) == rat(3, 7));
}

TEST_CASE("mobius inversion round trip is exact") {
    const CoefficientTable t = table11(200);
    std::vector<Rational> c(201);
    for (long long n = 1; n <= 200; ++n) c[n] = t.c(n);
    for (long long n = 1; n <= 200; ++n) {
        const Rational back = b_from_c(c, n);
        CHECK(is_integer(back));
        CHECK(back == rat(t.b(n)));
    }
}

TEST_CASE("denominator of c(n) divides n") {
    const CoefficientTable t = table11(200);
    for (long long n = 1; n <= 200; ++n) {
        const Rational c = t.c(n);
        CHECK(mpz_class(static_cast<long>(n)) % c.get_den() == 0);
    }
}

TEST_CASE("cp_exact sign logic") {
    CHECK(cp_exact(1, 7) == rat(0));
    CHECK(cp_exact(0, 7) == rat(1, 7));
    CHECK(cp_exact(-2, 7) == rat(3, 7));
    CHECK(cp_exact(3, 2) == rat(-1));
    CHECK(sign_of(cp_exact(5, 3)) == -1);
}

TEST_CASE("normalize_st stays in [-1, 1] and rejects Hasse violations") {
    const CoefficientTable t = table11(2000);
    for (long long p : t.good_primes()) {
        const double b1 = normalize_st(t.b(p), p);
        CHECK(b1 >= -1.0);
        CHECK(b1 <= 1.0);
    }
    CHECK(normalize_st(-2, 2) == doctest::Approx(-1.0 / std::sqrt(2.0)));
    CHECK_THROWS_AS(normalize_st(5, 2), DataError);
    CHECK_THROWS_AS(normalize_st(-7, 11), DataError);
}

TEST_CASE("c1 matches the defining identity against B1") {
    const CoefficientTable t = table11(500);
    for (long long p : t.good_primes()) {
        const double lhs = c1(t.c(p), p);
        const double rhs = 1.0 / (2.0 * std::sqrt(static_cast<double>(p))) -
                           normalize_st(t.b(p), p);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("prime-only tables cover primes and refuse composites") {
    const auto spec = fixtures::curve("11a1");
    const CoefficientTable t = CoefficientTable::build(spec.curve, 100, {});
    CHECK(!t.dense());
    CHECK(t.missing_bad_primes() == std::vector<long long>{11});
    CHECK(t.b(2) == -2);
    CHECK(t.c(7) == rat(3, 7));
    CHECK(!t.has_b(4));
    CHECK(!t.has_b(11));
    CHECK_THROWS_AS(t.b(4), std::logic_error);
    CHECK_THROWS_AS(t.c(12), std::logic_error);
}

TEST_CASE("prime counting inside the table") {
    const CoefficientTable t = table11(100);
    CHECK(t.pi(100) == 25);
    CHECK(t.good_count_upto(100) == 24); // 11 is bad
    CHECK(t.pi(10) == 4);
    CHECK(t.good_count_upto(10) == 4);
    CHECK(t.weight_k() == 1);
}

TEST_CASE("from_ap rejects a gap in the good primes") {
    std::map<long long, long long> entries{{2, -2}, {5, 1}};
    CHECK_THROWS_WITH_AS(CoefficientTable::from_ap(entries, {}, 6),
                         doctest::Contains("good prime 3"), DataError);
}

TEST_SUITE_END();
