#include "gmfq/coeffs.hpp"

#include "gmfq/arith.hpp"
#include "gmfq/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gmfq {

std::vector<long long> extend_b(const std::map<long long, long long>& ap_entries,
                                const std::vector<long long>& bad_primes, long long N) {
    std::vector<long long> b(static_cast<size_t>(N) + 1, 0);
    if (N >= 1) b[1] = 1;
    if (N < 2) return b;

    const PrimeSet ps = sieve_primes(N);
    auto is_bad = [&](long long p) {
        return std::binary_search(bad_primes.begin(), bad_primes.end(), p);
    };

    // prime powers first
    for (long long p : ps.primes) {
        auto it = ap_entries.find(p);
        if (it == ap_entries.end())
            throw DataError("extend_b: no a_p supplied for prime " + std::to_string(p));
        const long long bp = it->second;
        b[p] = bp;
        if (is_bad(p)) {
            long long acc = bp;
            for (long long q = p * p; q <= N; q *= p) {
                acc *= bp;
                b[q] = acc;
                if (q > N / p) break;
            }
        } else {
            long long prev = 1, cur = bp; // b(p^0), b(p^1)
            for (long long q = p * p; q <= N; q *= p) {
                const long long nxt = bp * cur - p * prev;
                b[q] = nxt;
                prev = cur;
                cur = nxt;
                if (q > N / p) break;
            }
        }
    }

    // composites by multiplicativity, splitting off the smallest prime power
    const auto spf = smallest_prime_factors(N);
    for (long long n = 2; n <= N; ++n) {
        const long long p = spf[n];
        long long q = p, m = n / p;
        while (m % p == 0) { q *= p; m /= p; }
        if (m > 1) b[n] = b[q] * b[m];
    }
    return b;
}

Rational c_from_b(const std::vector<long long>& b, long long n) {
    if (n < 1 || static_cast<size_t>(n) >= b.size())
        throw std::invalid_argument("c_from_b: index out of range");
    mpz_class acc = 0;
    for (long long d : divisors(n)) {
        const int mu = mobius(d);
        if (mu != 0) acc += mpz_class(mu) * static_cast<long>(b[static_cast<size_t>(n / d)]);
    }
    return rat(-acc, mpz_class(static_cast<long>(n)));
}

Rational b_from_c(const std::vector<Rational>& c, long long n) {
    if (n < 1 || static_cast<size_t>(n) >= c.size())
        throw std::invalid_argument("b_from_c: index out of range");
    Rational acc = 0;
    for (long long d : divisors(n))
        acc += mpz_class(static_cast<long>(d)) * c[static_cast<size_t>(d)];
    return -acc;
}

Rational cp_exact(long long b_p, long long p) {
    return rat(1 - b_p, p);
}

double normalize_st(long long b_p, long long p, int weight_k) {
    if (weight_k < 1) throw std::invalid_argument("normalize_st: weight index must be >= 1");
    // |b_p| <= 2 p^{k-1/2}  <=>  b_p^2 <= 4 p^{2k-1}, checked in Z
    mpz_class bound = 4;
    for (int i = 0; i < 2 * weight_k - 1; ++i) bound *= static_cast<long>(p);
    if (mpz_class(static_cast<long>(b_p)) * static_cast<long>(b_p) > bound)
        throw DataError("normalize_st: |b_p| exceeds 2 p^{k-1/2} at p = " +
                        std::to_string(p) + " (corrupt table)");
    return static_cast<double>(b_p) /
           (2.0 * std::pow(static_cast<double>(p), weight_k - 0.5));
}

double c1(const Rational& c_p, long long p) {
    return c_p.get_d() * std::sqrt(static_cast<double>(p)) / 2.0;
}

CoefficientTable CoefficientTable::from_ap(const std::map<long long, long long>& ap_entries,
                                           const std::vector<long long>& bad_primes,
                                           long long N) {
    CoefficientTable t;
    t.bound_ = N;
    const PrimeSet ps = sieve_primes(N);

    for (long long p : ps.primes) {
        if (std::binary_search(bad_primes.begin(), bad_primes.end(), p))
            t.bad_primes_.push_back(p);
        else
            t.good_primes_.push_back(p);
    }

    std::map<long long, long long> full = ap_entries;
    for (long long p : t.good_primes_)
        if (!full.count(p))
            throw DataError("coefficient table: no a_p for good prime " + std::to_string(p));
    for (long long p : t.bad_primes_)
        if (!full.count(p)) t.missing_bad_.push_back(p);

    t.dense_ = t.missing_bad_.empty();
    if (t.dense_) {
        t.b_ = extend_b(full, bad_primes, N);
        t.b_known_.assign(static_cast<size_t>(N) + 1, true);
        if (N >= 1) t.b_known_[0] = false;
    } else {
        t.b_.assign(static_cast<size_t>(N) + 1, 0);
        t.b_known_.assign(static_cast<size_t>(N) + 1, false);
        if (N >= 1) { t.b_[1] = 1; t.b_known_[1] = true; }
        for (long long p : t.good_primes_) {
            t.b_[static_cast<size_t>(p)] = full.at(p);
            t.b_known_[static_cast<size_t>(p)] = true;
        }
        for (long long p : t.bad_primes_) {
            auto it = full.find(p);
            if (it != full.end()) {
                t.b_[static_cast<size_t>(p)] = it->second;
                t.b_known_[static_cast<size_t>(p)] = true;
            }
        }
    }
    return t;
}

CoefficientTable CoefficientTable::build(const EllipticCurve& curve, long long N,
                                         const std::map<long long, long long>& overrides,
                                         int threads) {
    const ApTable apt = ap_table(curve, N, threads);
    std::map<long long, long long> entries;
    for (size_t i = 0; i < apt.primes.size(); ++i)
        entries[apt.primes[i]] = apt.ap[i];
    for (const auto& [p, v] : overrides) entries[p] = v;
    return from_ap(entries, curve.bad_primes(), N);
}

long long CoefficientTable::b(long long n) const {
    if (n < 1 || n > bound_)
        throw std::invalid_argument("CoefficientTable::b: index out of range");
    if (!b_known_[static_cast<size_t>(n)])
        throw std::logic_error("CoefficientTable::b: b(" + std::to_string(n) +
                               ") not covered (prime-only table)");
    return b_[static_cast<size_t>(n)];
}

bool CoefficientTable::has_b(long long n) const {
    return n >= 1 && n <= bound_ && b_known_[static_cast<size_t>(n)];
}

Rational CoefficientTable::c(long long n) const {
    if (n == 1) return rat(-1);
    if (dense_) return c_from_b(b_, n);
    if (has_b(n) && is_prime(n)) return cp_exact(b(n), n);
    throw std::logic_error("CoefficientTable::c: index " + std::to_string(n) +
                           " needs dense coverage");
}

long long CoefficientTable::pi(long long x) const {
    auto upto = [x](const std::vector<long long>& v) {
        return static_cast<long long>(
            std::upper_bound(v.begin(), v.end(), x) - v.begin());
    };
    return upto(good_primes_) + upto(bad_primes_);
}

long long CoefficientTable::good_count_upto(long long x) const {
    return static_cast<long long>(
        std::upper_bound(good_primes_.begin(), good_primes_.end(), x) - good_primes_.begin());
}

} // namespace gmfq
