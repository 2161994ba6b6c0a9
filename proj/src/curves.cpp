#include "gmfq/curves.hpp"

#include "gmfq/arith.hpp"
#include "gmfq/errors.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace gmfq {

namespace {

// Trial-divide |d| up to 1e6; beyond that a remaining cofactor must itself
// be prime (no factor below the bound and cofactor < 1e12) or we give up
// and demand an explicit bad-prime set.  Composite candidates never divide
// because their prime factors were already stripped.
std::vector<long long> prime_support(const mpz_class& d_in) {
    mpz_class d = abs(d_in);
    std::vector<long long> support;
    constexpr long long kTrialBound = 1000000;
    for (long long p = 2; p <= kTrialBound && d > 1; p += (p == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) {
            support.push_back(p);
            while (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p)))
                mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(p));
        }
    }
    if (d > 1) {
        if (d < mpz_class(static_cast<long>(kTrialBound)) * static_cast<long>(kTrialBound)) {
            support.push_back(d.get_si()); // no factor <= 1e6, so prime
        } else {
            throw DataError("cannot factor model discriminant by trial division; "
                            "supply bad_primes explicitly");
        }
    }
    return support;
}

} // namespace

EllipticCurve::EllipticCurve(long long a1, long long a2, long long a3, long long a4,
                             long long a6, std::string label,
                             std::optional<std::vector<long long>> bad_primes,
                             std::optional<long long> cm_discriminant)
    : a1_(a1), a2_(a2), a3_(a3), a4_(a4), a6_(a6),
      label_(std::move(label)), cm_discriminant_(cm_discriminant) {
    const mpz_class z1 = static_cast<long>(a1), z2 = static_cast<long>(a2),
                    z3 = static_cast<long>(a3), z4 = static_cast<long>(a4),
                    z6 = static_cast<long>(a6);
    const mpz_class b2 = z1 * z1 + 4 * z2;
    const mpz_class b4 = 2 * z4 + z1 * z3;
    const mpz_class b6 = z3 * z3 + 4 * z6;
    const mpz_class b8 = z1 * z1 * z6 + 4 * z2 * z6 - z1 * z3 * z4 + z2 * z3 * z3 - z4 * z4;
    disc_ = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
    c4_ = b2 * b2 - 24 * b4;
    c6_ = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
    if (disc_ == 0)
        throw DataError("singular Weierstrass model (discriminant is zero)");
    if (cm_discriminant_ && *cm_discriminant_ >= 0)
        throw DataError("cm_discriminant must be negative");

    if (bad_primes) {
        bad_primes_ = std::move(*bad_primes);
        std::sort(bad_primes_.begin(), bad_primes_.end());
        bad_primes_.erase(std::unique(bad_primes_.begin(), bad_primes_.end()),
                          bad_primes_.end());
        for (long long p : bad_primes_)
            if (!is_prime(p))
                throw DataError("bad_primes entry " + std::to_string(p) + " is not prime");
    } else {
        bad_primes_ = prime_support(disc_);
    }
}

bool EllipticCurve::is_good(long long p) const {
    return !std::binary_search(bad_primes_.begin(), bad_primes_.end(), p);
}

namespace {

// #E(F_p) by running over all (x, y) in F_p^2 on the long equation.
// Only used for p in {2, 3}; the test suites reuse it as an oracle.
long long count_points_naive(const EllipticCurve& e, long long p) {
    auto md = [p](long long v) { long long r = v % p; return r < 0 ? r + p : r; };
    const long long a1 = md(e.a1()), a2 = md(e.a2()), a3 = md(e.a3());
    const long long a4 = md(e.a4()), a6 = md(e.a6());
    long long count = 1; // point at infinity
    for (long long x = 0; x < p; ++x) {
        const long long rhs = md(((x + a2) * x + a4) % p * x % p + a6);
        for (long long y = 0; y < p; ++y)
            if (md(y * y + a1 * x % p * y % p + a3 * y) == rhs) ++count;
    }
    return count;
}

long long ap_small(const EllipticCurve& e, long long p) {
    return p + 1 - count_points_naive(e, p);
}

// p > 3: complete the square and depress the cubic; point counts carry over
// because the substitution only divides by 2 and 3.
long long ap_large(const EllipticCurve& e, long long p, std::vector<int8_t>& chi) {
    const mpz_class a_num = -27 * e.c4(), b_num = -54 * e.c6();
    const long long A = static_cast<long long>(
        mpz_fdiv_ui(a_num.get_mpz_t(), static_cast<unsigned long>(p)));
    const long long B = static_cast<long long>(
        mpz_fdiv_ui(b_num.get_mpz_t(), static_cast<unsigned long>(p)));

    // chi[v] = (v|p) built by marking the nonzero squares; chi[0] stays 0
    chi.assign(static_cast<size_t>(p), -1);
    chi[0] = 0;
    for (long long x = 1; x <= p / 2; ++x)
        chi[static_cast<size_t>((unsigned __int128)x * x % p)] = 1;

    // f(x) = x^3 + Ax + B stepped by finite differences mod p
    const long long six = 6 % p;
    long long f = B % p;
    long long d1 = (1 + A) % p;
    long long d2 = six;
    long long sum = 0;
    for (long long x = 0; x < p; ++x) {
        sum += chi[static_cast<size_t>(f)];
        f += d1;
        if (f >= p) f -= p;
        d1 += d2;
        if (d1 >= p) d1 -= p;
        d2 += six;
        if (d2 >= p) d2 -= p;
    }
    return -sum;
}

} // namespace

long long ap_with_buffer(const EllipticCurve& curve, long long p, std::vector<int8_t>& chi) {
    if (p < 2 || !is_prime(p))
        throw std::invalid_argument("ap: " + std::to_string(p) + " is not prime");
    if (!curve.is_good(p))
        throw std::invalid_argument("ap: p = " + std::to_string(p) +
                                    " is a prime of bad reduction");
    const long long a = (p <= 3) ? ap_small(curve, p) : ap_large(curve, p, chi);
    if ((unsigned __int128)(a < 0 ? -a : a) * (a < 0 ? -a : a) > (unsigned __int128)4 * p)
        throw VerificationError("Hasse bound violated at p = " + std::to_string(p) +
                                " (a_p = " + std::to_string(a) + "); counting bug");
    return a;
}

long long ap(const EllipticCurve& curve, long long p) {
    std::vector<int8_t> chi;
    return ap_with_buffer(curve, p, chi);
}

std::optional<long long> ApTable::lookup(long long p) const {
    auto it = std::lower_bound(primes.begin(), primes.end(), p);
    if (it == primes.end() || *it != p) return std::nullopt;
    return ap[static_cast<size_t>(it - primes.begin())];
}

ApTable ap_table(const EllipticCurve& curve, long long bound, int threads) {
    ApTable table;
    table.bound = bound;
    if (bound < 2) return table;

    const PrimeSet ps = sieve_primes(bound);
    table.primes.reserve(ps.primes.size());
    for (long long p : ps.primes)
        if (curve.is_good(p)) table.primes.push_back(p);
    table.ap.assign(table.primes.size(), 0);

    if (threads <= 1 || table.primes.size() < 64) {
        std::vector<int8_t> chi;
        for (size_t i = 0; i < table.primes.size(); ++i)
            table.ap[i] = ap_with_buffer(curve, table.primes[i], chi);
        return table;
    }

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        std::vector<int8_t> chi;
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= table.primes.size()) break;
            table.ap[i] = ap_with_buffer(curve, table.primes[i], chi);
        }
    };
    std::vector<std::thread> pool;
    const int n = std::min<int>(threads, static_cast<int>(std::thread::hardware_concurrency()));
    for (int t = 0; t < std::max(1, n); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return table;
}

SplitType splitting_type(long long p, long long cm_discriminant) {
    if (cm_discriminant >= 0)
        throw std::invalid_argument("splitting_type: discriminant must be negative");
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("splitting_type: p must be an odd prime");
    if (cm_discriminant % p == 0) return SplitType::Ramified;
    const int sym = legendre(cm_discriminant, p);
    return sym == -1 ? SplitType::Inert : SplitType::Split;
}

bool is_inert(long long p, long long cm_discriminant) {
    const SplitType t = splitting_type(p, cm_discriminant);
    if (t == SplitType::Ramified)
        throw std::invalid_argument("is_inert: p = " + std::to_string(p) +
                                    " ramifies; not in the inert/split dichotomy");
    return t == SplitType::Inert;
}

} // namespace gmfq
