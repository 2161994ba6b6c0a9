#pragma once

#include "gmfq/coeffs.hpp"
#include "gmfq/rational.hpp"

#include <optional>
#include <vector>

namespace gmfq {

// Formal power series over Q truncated at q^order: a[n] multiplies q^n,
// so the coefficient array always has order + 1 entries.
struct PowerSeries {
    std::vector<Rational> a;

    static PowerSeries zero(long long order);

    long long order() const { return static_cast<long long>(a.size()) - 1; }
};

// g = sum b(n) q^n from a dense b table (index 0 of b unused, as produced
// by extend_b).  The constant term is 0.
PowerSeries series_from_b(const std::vector<long long>& b, long long N);

// f = prod_{n=1..N} (1 - q^n)^{c(n)} truncated at q^N, with a(0) = 1.
// Each factor enters as c(n) log(1 - q^n) = -c(n) sum_m q^{nm}/m; the
// accumulated logarithm is exponentiated once through the ODE recurrence
// k E_k = sum_j (j L_j) E_{k-j} (exp turns the sum of logs back into the
// product, identically in exact rational arithmetic).  The dense c array
// leaves index 0 unused.
PowerSeries product_expand(const std::vector<Rational>& c, long long N);

// Convolution product truncated to the shorter order.
PowerSeries mul(const PowerSeries& f, const PowerSeries& g);

// q f'/f, the weight-normalized logarithmic derivative, via formal
// differentiation and long division.  Requires a(0) != 0 (f must be a
// unit); throws std::invalid_argument otherwise.
PowerSeries log_derivative(const PowerSeries& f);

struct RoundTrip {
    bool ok = false;
    long long first_mismatch = -1; // smallest differing index, -1 when ok
};

// The defining identity: log_derivative(product_expand(c)) must reproduce
// sum b(n) q^n coefficient-for-coefficient.  Needs a dense table (b at
// every n <= N, bad primes included); DataError names the missing primes
// otherwise.
RoundTrip roundtrip_verify(const CoefficientTable& table, long long N);

// Smallest n >= 1 whose coefficient is not an integer, or nullopt when
// all are integral up to the truncation order.  Requires a(0) = 1.
std::optional<long long> integrality_probe(const PowerSeries& f);

} // namespace gmfq
