#include "gmfq/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gmfq {

long long PrimeSet::count_upto(long long x) const {
    auto it = std::upper_bound(primes.begin(), primes.end(), x);
    return static_cast<long long>(it - primes.begin());
}

bool PrimeSet::contains(long long p) const {
    return std::binary_search(primes.begin(), primes.end(), p);
}

PrimeSet sieve_primes(long long x) {
    PrimeSet out;
    out.bound = x;
    if (x < 2) return out;

    // one bit per odd number; even indices never touched
    const size_t n = static_cast<size_t>(x) + 1;
    std::vector<uint64_t> composite((n + 127) / 128, 0);
    auto mark = [&](size_t i) { composite[i >> 7] |= uint64_t(1) << ((i >> 1) & 63); };
    auto is_marked = [&](size_t i) {
        return (composite[i >> 7] >> ((i >> 1) & 63)) & 1;
    };

    for (size_t i = 3; i * i <= n - 1; i += 2) {
        if (is_marked(i)) continue;
        for (size_t j = i * i; j <= n - 1; j += 2 * i) mark(j);
    }

    out.primes.reserve(x > 100 ? static_cast<size_t>(x / (std::log((double)x) - 1.1)) : 32);
    out.primes.push_back(2);
    for (size_t i = 3; i <= static_cast<size_t>(x); i += 2)
        if (!is_marked(i)) out.primes.push_back(static_cast<long long>(i));
    return out;
}

int mobius(long long n) {
    if (n < 1) throw std::invalid_argument("mobius: n must be positive");
    int factors = 0;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++factors;
        }
    }
    if (n > 1) ++factors;
    return (factors % 2 == 0) ? 1 : -1;
}

std::vector<int32_t> smallest_prime_factors(long long bound) {
    std::vector<int32_t> spf(static_cast<size_t>(bound) + 1, 0);
    for (long long i = 2; i <= bound; ++i) {
        if (spf[i] == 0) {
            for (long long j = i; j <= bound; j += i)
                if (spf[j] == 0) spf[j] = static_cast<int32_t>(i);
        }
    }
    return spf;
}

std::vector<signed char> mobius_range(long long bound) {
    auto spf = smallest_prime_factors(bound);
    std::vector<signed char> mu(static_cast<size_t>(bound) + 1, 0);
    if (bound >= 1) mu[1] = 1;
    for (long long n = 2; n <= bound; ++n) {
        long long p = spf[n];
        long long m = n / p;
        mu[n] = (m % p == 0) ? 0 : static_cast<signed char>(-mu[m]);
    }
    return mu;
}

std::vector<long long> divisors(long long n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = static_cast<uint64_t>((unsigned __int128)r * a % m);
        a = static_cast<uint64_t>((unsigned __int128)a * a % m);
        e >>= 1;
    }
    return r;
}

int legendre(long long a, long long p) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("legendre: p must be an odd prime, got " + std::to_string(p));
    long long r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    uint64_t e = powmod(static_cast<uint64_t>(r), static_cast<uint64_t>((p - 1) / 2),
                        static_cast<uint64_t>(p));
    if (e == 1) return 1;
    if (e == static_cast<uint64_t>(p - 1)) return -1;
    // Euler's criterion lands outside {1, p-1} only when p is not an odd prime.
    throw std::invalid_argument("legendre: " + std::to_string(p) + " is not an odd prime");
}

long long euler_phi(long long q) {
    if (q < 1) throw std::invalid_argument("euler_phi: q must be positive");
    long long result = q;
    long long n = q;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

} // namespace gmfq
