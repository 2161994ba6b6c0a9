#pragma once

#include "gmfq/curves.hpp"
#include "gmfq/rational.hpp"

#include <map>
#include <vector>

namespace gmfq {

// b(n) for 1 <= n <= N from prime coefficients: b(1) = 1, b multiplicative
// on coprime arguments, prime powers by
//   b(p^{r+1}) = b(p) b(p^r) - p b(p^{r-1})   (good p)
//   b(p^r)     = b(p)^r                       (bad p)
// Every prime <= N, good or bad, must be present in ap_entries; a missing
// prime raises DataError naming it.
std::vector<long long> extend_b(const std::map<long long, long long>& ap_entries,
                                const std::vector<long long>& bad_primes, long long N);

// n c(n) = -sum_{d|n} mu(d) b(n/d); returns c(n) in lowest terms.
// The map must cover every divisor of n (1-indexed dense vector, index 0 unused).
Rational c_from_b(const std::vector<long long>& b, long long n);

// b(n) = -sum_{d|n} d c(d), returned as a rational; integral whenever the
// c-map came from an integral b-map.
Rational b_from_c(const std::vector<Rational>& c, long long n);

// c(p) = (1 - b(p)) / p in lowest terms; its sign classifies p.
Rational cp_exact(long long b_p, long long p);

// B_k(p) = b(p) / (2 p^{k-1/2}), guaranteed in [-1, 1].  The bound
// |b(p)| <= 2 p^{k-1/2} is checked exactly (b^2 <= 4 p^{2k-1} over Z);
// violation raises DataError (corrupt input table).
double normalize_st(long long b_p, long long p, int weight_k = 1);

// c_1(p) = c(p) sqrt(p) / 2; satisfies c_1(p) = 1/(2 sqrt p) - B_1(p).
double c1(const Rational& c_p, long long p);

// Exact coefficient dictionary for one eigenform.  Prime data is always
// present; composite coverage ("dense") needs an a_p value at every bad
// prime <= N and is required by the series operations only.  Immutable
// after construction.
class CoefficientTable {
public:
    // overrides supplies a_p at bad primes (and may override good ones,
    // e.g. when ingesting an external table).
    static CoefficientTable build(const EllipticCurve& curve, long long N,
                                  const std::map<long long, long long>& overrides = {},
                                  int threads = 1);

    // Build straight from prime data, bypassing point counting.
    static CoefficientTable from_ap(const std::map<long long, long long>& ap_entries,
                                    const std::vector<long long>& bad_primes, long long N);

    long long bound() const { return bound_; }
    int weight_k() const { return 1; }
    bool dense() const { return dense_; }

    const std::vector<long long>& good_primes() const { return good_primes_; }
    const std::vector<long long>& bad_primes() const { return bad_primes_; }
    // bad primes <= bound with no supplied a_p (the reason dense() is false)
    const std::vector<long long>& missing_bad_primes() const { return missing_bad_; }

    // b(n): any n in [1, bound] when dense, otherwise good primes only.
    long long b(long long n) const;
    bool has_b(long long n) const;

    // c(n) in lowest terms; dense coverage required for composite n.
    Rational c(long long n) const;

    // pi(x) over all primes <= x, bad ones included.
    long long pi(long long x) const;
    long long good_count_upto(long long x) const;

private:
    CoefficientTable() = default;

    long long bound_ = 0;
    bool dense_ = false;
    std::vector<long long> good_primes_;
    std::vector<long long> bad_primes_;   // bad primes <= bound
    std::vector<long long> missing_bad_;
    std::vector<long long> b_;            // index 0 unused; composites valid iff dense_
    std::vector<bool> b_known_;
};

} // namespace gmfq
