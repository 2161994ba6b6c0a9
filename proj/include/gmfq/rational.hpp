#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace gmfq {

// Exact rational, always in lowest terms with positive denominator.
// GMP's mpq with canonicalization enforced at every construction site.
using Rational = mpq_class;

inline Rational rat(long long num, long long den = 1) {
    Rational q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

inline Rational rat(const mpz_class& num, const mpz_class& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline int sign_of(const Rational& q) { return sgn(q); }

inline std::string num_str(const Rational& q) { return q.get_num().get_str(); }
inline std::string den_str(const Rational& q) { return q.get_den().get_str(); }

} // namespace gmfq
