#include "gmfq/integrality.hpp"

#include "gmfq/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gmfq {

bool is_integral_nonzero(long long b_p, long long p) {
    const long long num = 1 - b_p;
    return num != 0 && num % p == 0;
}

double candidate_bound(int degree_d) {
    if (degree_d < 1) throw std::invalid_argument("candidate_bound: degree must be >= 1");
    const double r = 1.0 + std::sqrt(2.0);
    return r * r; // independent of the degree: the bound is a d-th power
}

const std::vector<long long>& candidate_primes() {
    static const std::vector<long long> primes{2, 3, 5};
    return primes;
}

IntegralityResult scan(const CoefficientTable& table, long long x) {
    if (x > table.bound())
        throw DataError("integrality scan: requested x = " + std::to_string(x) +
                        " exceeds table bound " + std::to_string(table.bound()));
    IntegralityResult result;
    result.x = x;
    result.candidate_bound = candidate_bound();
    for (long long p : table.good_primes()) {
        if (p > x) break;
        const long long b = table.b(p);
        if (b == 1) {
            result.zero_set.push_back(p);
            continue;
        }
        if (is_integral_nonzero(b, p)) {
            if (p > 5)
                throw VerificationError(
                    "integrality scan: c(" + std::to_string(p) + ") = " +
                    std::to_string((1 - b) / p) +
                    " is a nonzero integer at a prime above the candidate bound "
                    "(finiteness theorem violated; point counts are corrupt)");
            result.nonzero_integral.emplace_back(p, cp_exact(b, p));
        }
    }
    return result;
}

} // namespace gmfq
