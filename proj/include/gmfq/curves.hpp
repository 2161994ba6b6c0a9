#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gmfq {

// Rational elliptic curve in long Weierstrass form
//   y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6.
// bad_primes is the prime support of the model discriminant unless the
// caller supplies an explicit set (a non-minimal model only over-excludes
// finitely many primes, which cannot shift any density).
class EllipticCurve {
public:
    // Throws DataError on a singular model (discriminant zero) or when the
    // discriminant cannot be factored by trial division and no explicit
    // bad-prime set is given.
    EllipticCurve(long long a1, long long a2, long long a3, long long a4, long long a6,
                  std::string label = {},
                  std::optional<std::vector<long long>> bad_primes = std::nullopt,
                  std::optional<long long> cm_discriminant = std::nullopt);

    long long a1() const { return a1_; }
    long long a2() const { return a2_; }
    long long a3() const { return a3_; }
    long long a4() const { return a4_; }
    long long a6() const { return a6_; }

    const std::string& label() const { return label_; }
    const std::vector<long long>& bad_primes() const { return bad_primes_; }
    std::optional<long long> cm_discriminant() const { return cm_discriminant_; }
    bool is_cm() const { return cm_discriminant_.has_value(); }

    const mpz_class& discriminant() const { return disc_; }
    const mpz_class& c4() const { return c4_; }
    const mpz_class& c6() const { return c6_; }

    bool is_good(long long p) const;

private:
    long long a1_, a2_, a3_, a4_, a6_;
    std::string label_;
    std::vector<long long> bad_primes_;
    std::optional<long long> cm_discriminant_;
    mpz_class disc_, c4_, c6_;
};

// a_p = p + 1 - #E(F_p) for a prime p of good reduction.
//
// p > 3: reduce to a short model y^2 = x^3 + Ax + B over F_p and sum the
// quadratic character of x^3 + Ax + B over all x (chi table built per
// prime, cubic tracked by finite differences, no inner-loop products).
// p in {2,3}: full enumeration of the long equation over F_p^2.
//
// Throws std::invalid_argument for bad p; throws VerificationError if the
// Hasse bound fails (a counting bug, not bad input).
long long ap(const EllipticCurve& curve, long long p);

// Scratch-buffer variant used by the table builder to avoid reallocating
// the chi table for every prime.
long long ap_with_buffer(const EllipticCurve& curve, long long p, std::vector<int8_t>& chi);

// a_p at every good prime p <= bound, ascending.
struct ApTable {
    long long bound = 0;
    std::vector<long long> primes; // good primes <= bound
    std::vector<long long> ap;     // parallel to primes

    std::optional<long long> lookup(long long p) const;
    size_t size() const { return primes.size(); }
};

// Per-prime work is independent; threads > 1 fans the primes out over a
// worker pool with results slotted by index (deterministic output).
ApTable ap_table(const EllipticCurve& curve, long long bound, int threads = 1);

// Splitting behaviour of an odd unramified prime in the imaginary
// quadratic field of discriminant D < 0.
enum class SplitType { Split, Inert, Ramified };

SplitType splitting_type(long long p, long long cm_discriminant);

// True iff p is inert.  Throws std::invalid_argument when p ramifies
// (p divides the discriminant): ramified primes sit outside the
// inert/split dichotomy.
bool is_inert(long long p, long long cm_discriminant);

} // namespace gmfq
