#pragma once

#include "gmfq/coeffs.hpp"
#include "gmfq/rational.hpp"

#include <utility>
#include <vector>

namespace gmfq {

// Outcome of an integrality scan over the good primes up to x.
struct IntegralityResult {
    long long x = 0;
    // Good p with c(p) a nonzero integer, paired with the exact value.
    std::vector<std::pair<long long, Rational>> nonzero_integral;
    // Good p with c(p) = 0 (equivalently b(p) = 1).
    std::vector<long long> zero_set;
    // Largest real that can satisfy p <= 2(sqrt p + 1); primes above it
    // can never have c(p) in Z \ {0}.
    double candidate_bound = 0.0;
};

// c(p) = (1 - b_p)/p is a nonzero integer iff p | (1 - b_p) and b_p != 1.
// Pure integer arithmetic, no rational construction.
bool is_integral_nonzero(long long b_p, long long p);

// Threshold from the norm bound |b(p) - 1| <= 2 sqrt(p) + 1: a prime with
// integral nonzero c(p) forces p <= 2 sqrt(p) + 1... solving gives
// p <= (1 + sqrt 2)^2 ~ 5.828.  The inequality is raised to the d-th
// power for degree-d coefficient fields, which leaves the threshold
// unchanged; d is accepted only to expose that fact.  Candidate primes
// are therefore always {2, 3, 5}.
double candidate_bound(int degree_d = 1);

// Primes below candidate_bound(): the only possible members of
// nonzero_integral.
const std::vector<long long>& candidate_primes();

// Exhaustive scan of the good primes <= x.  A nonzero integral c(p) at a
// prime outside {2, 3, 5} contradicts the finiteness theorem and raises
// VerificationError (it signals a computation bug, not bad input).
IntegralityResult scan(const CoefficientTable& table, long long x);

} // namespace gmfq
