#pragma once

#include "gmfq/coeffs.hpp"
#include "gmfq/measures.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace gmfq {

// Sign partition of the good primes up to x by the sign of c(p).
struct SignCensus {
    long long x = 0;
    long long n_pos = 0, n_neg = 0, n_zero = 0;
    long long n_good = 0; // good primes <= x; n_pos + n_neg + n_zero = n_good
    long long n_all = 0;  // pi(x), bad primes included
};

// Which normalized quantity an interval test applies to:
//   B1: b(p) / (2 sqrt p)        (semicircle variable)
//   C1: c(p) sqrt(p) / 2         (= 1/(2 sqrt p) - B1)
enum class Norm { B1, C1 };

// One predicate whose empirical density is tracked across checkpoints.
// id must be CSV-safe (no commas); pred sees a good prime and its b(p).
struct PredicateSpec {
    std::string id;
    double theoretical = 0.0;
    std::function<bool(long long p, long long b_p)> pred;
};

struct DensityRow {
    long long x = 0;
    long long count = 0;  // matching good primes <= x
    long long pi_x = 0;   // denominator: all primes <= x
    double ratio = 0.0;   // count / pi_x (count and pi_x carry the exact value)
    double theoretical = 0.0;
    double deviation = 0.0; // |ratio - theoretical|
};

struct DensityReport {
    std::string predicate_id;
    std::vector<DensityRow> rows; // ascending x
};

// Counts of good p <= x by the sign of c(p) = (1 - b(p))/p, decided by
// integer comparison of b(p) against 1.  x beyond the table bound raises
// DataError.
SignCensus sign_census(const CoefficientTable& table, long long x);

// Good p <= x whose chosen normalization lies in I.  Membership at the
// boundaries 0 and +-1 is decided exactly (integer sign and b^2 vs 4p);
// every other boundary comparison is floating point.  I must sit inside
// [-1, 1].
long long interval_count(const CoefficientTable& table, long long x, const Interval& I,
                         Norm norm);

// interval_count restricted to p = a (mod q); requires gcd(a, q) = 1
// (std::invalid_argument otherwise).  The expected limit density is
// st_mass(I) / euler_phi(q).  The residue constraint uses c_1.
long long ap_filtered_census(const CoefficientTable& table, long long x, long long q,
                             long long a, const Interval& I);

// Empirical ratio count/pi(x) at each checkpoint, against pred.theoretical.
// Checkpoints must ascend and stay within the table bound.
DensityReport convergence_report(const CoefficientTable& table,
                                 const std::vector<long long>& checkpoints,
                                 const PredicateSpec& pred);

// Empirical density of {good p <= x : c_1(p) in I} paired with the arcsine
// mass of I.  I must be a subinterval of [-1, 0] or a closed interval in
// (0, 1]: any other shape traps the atom at 0 (the inert primes have
// c_1(p) = 1/(2 sqrt p) -> 0+), making the comparison ill-posed, and is
// rejected with std::invalid_argument.
std::pair<double, double> cm_interval_density(const CoefficientTable& table, long long x,
                                              const Interval& I);

// Powers of 10 from 10^3 up to bound; bound itself is appended when it is
// not already the last entry.
std::vector<long long> default_checkpoints(long long bound);

// Exact-at-{0,+-1} membership test for u / (2 sqrt p) in I, where u is
// b(p) (Norm::B1) or 1 - b(p) (Norm::C1).  Exposed for the census folds
// and their tests.
bool scaled_in_interval(long long u, long long p, const Interval& I);

} // namespace gmfq
