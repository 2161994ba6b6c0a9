#pragma once

#include <cstdint>
#include <vector>

namespace gmfq {

// All primes up to a fixed bound, ascending.  Immutable once built and
// safe to share across threads.
struct PrimeSet {
    long long bound = 0;
    std::vector<long long> primes;

    // pi(x) for x <= bound: number of primes <= x.
    long long count_upto(long long x) const;
    bool contains(long long p) const;
};

// Sieve of Eratosthenes on a bit array.  x < 2 yields an empty set.
// Handles x up to 1e7+ in well under a second.
PrimeSet sieve_primes(long long x);

// Moebius function by trial factorization.  n >= 1.
int mobius(long long n);

// mu(n) for all n in [1, bound], via a smallest-prime-factor sieve.
// Index 0 is unused.  Meant for batch inversion runs.
std::vector<signed char> mobius_range(long long bound);

// Smallest prime factor for every n in [2, bound]; spf[0] = spf[1] = 0.
std::vector<int32_t> smallest_prime_factors(long long bound);

// All divisors of n, ascending.
std::vector<long long> divisors(long long n);

// (a^e) mod m with 64-bit-safe 128-bit intermediate products.
uint64_t powmod(uint64_t a, uint64_t e, uint64_t m);

// Legendre symbol (a|p) for odd prime p, by Euler's criterion.
// Throws std::invalid_argument if p is visibly not an odd prime.
int legendre(long long a, long long p);

// Euler totient by trial factorization.  q >= 1.
long long euler_phi(long long q);

// Deterministic trial-division primality for the ingest validators.
bool is_prime(long long n);

} // namespace gmfq
