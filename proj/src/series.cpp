#include "gmfq/series.hpp"

#include "gmfq/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gmfq {

PowerSeries PowerSeries::zero(long long order) {
    if (order < 0) throw std::invalid_argument("power series: order must be >= 0");
    PowerSeries s;
    s.a.assign(static_cast<size_t>(order) + 1, Rational(0));
    return s;
}

PowerSeries series_from_b(const std::vector<long long>& b, long long N) {
    if (static_cast<long long>(b.size()) <= N)
        throw std::invalid_argument("series_from_b: b table shorter than requested order");
    PowerSeries g = PowerSeries::zero(N);
    for (long long n = 1; n <= N; ++n) g.a[n] = rat(b[n]);
    return g;
}

PowerSeries product_expand(const std::vector<Rational>& c, long long N) {
    if (static_cast<long long>(c.size()) <= N)
        throw std::invalid_argument("product_expand: c table shorter than requested order");

    // L = sum_n c(n) log(1 - q^n); the factor n contributes -c(n)/m at q^{nm}.
    PowerSeries L = PowerSeries::zero(N);
    for (long long n = 1; n <= N; ++n) {
        if (c[n] == 0) continue;
        for (long long m = 1; n * m <= N; ++m) L.a[n * m] -= c[n] / rat(m);
    }

    // E = exp(L) from E' = E L': k E_k = sum_{j=1..k} (j L_j) E_{k-j}.
    PowerSeries E = PowerSeries::zero(N);
    E.a[0] = 1;
    std::vector<Rational> jL(static_cast<size_t>(N) + 1);
    for (long long j = 1; j <= N; ++j) jL[j] = rat(j) * L.a[j];
    for (long long k = 1; k <= N; ++k) {
        Rational acc(0);
        for (long long j = 1; j <= k; ++j) acc += jL[j] * E.a[k - j];
        E.a[k] = acc / rat(k);
    }
    return E;
}

PowerSeries mul(const PowerSeries& f, const PowerSeries& g) {
    const long long N = std::min(f.order(), g.order());
    PowerSeries h = PowerSeries::zero(N);
    for (long long i = 0; i <= N; ++i) {
        if (f.a[i] == 0) continue;
        for (long long j = 0; i + j <= N; ++j) h.a[i + j] += f.a[i] * g.a[j];
    }
    return h;
}

PowerSeries log_derivative(const PowerSeries& f) {
    if (f.a.empty() || f.a[0] == 0)
        throw std::invalid_argument(
            "log_derivative: constant term is zero, series is not a unit");
    const long long N = f.order();

    // h = (q f')/f by long division: f * h = D with D_k = k f_k.
    PowerSeries h = PowerSeries::zero(N);
    for (long long k = 1; k <= N; ++k) {
        Rational acc = rat(k) * f.a[k];
        for (long long j = 1; j <= k; ++j) acc -= f.a[j] * h.a[k - j];
        h.a[k] = acc / f.a[0];
    }
    return h;
}

RoundTrip roundtrip_verify(const CoefficientTable& table, long long N) {
    if (N < 1) throw std::invalid_argument("roundtrip_verify: order must be >= 1");
    if (N > table.bound())
        throw DataError("roundtrip_verify: order " + std::to_string(N) +
                        " exceeds table bound " + std::to_string(table.bound()));
    if (!table.dense()) {
        std::ostringstream msg;
        msg << "roundtrip_verify: the series identity needs b(n) at every n <= " << N
            << ", but no a_p was supplied for bad prime";
        const auto& missing = table.missing_bad_primes();
        if (missing.size() > 1) msg << 's';
        for (size_t i = 0; i < missing.size(); ++i) msg << (i ? ", " : " ") << missing[i];
        throw DataError(msg.str());
    }

    std::vector<long long> b(static_cast<size_t>(N) + 1, 0);
    std::vector<Rational> c(static_cast<size_t>(N) + 1);
    for (long long n = 1; n <= N; ++n) {
        b[n] = table.b(n);
        c[n] = table.c(n);
    }

    const PowerSeries lhs = log_derivative(product_expand(c, N));
    const PowerSeries rhs = series_from_b(b, N);
    for (long long n = 0; n <= N; ++n) {
        if (lhs.a[n] != rhs.a[n]) return {false, n};
    }
    return {true, -1};
}

std::optional<long long> integrality_probe(const PowerSeries& f) {
    if (f.a.empty() || f.a[0] != 1)
        throw std::invalid_argument("integrality_probe: series must be normalized to a(0) = 1");
    for (long long n = 1; n <= f.order(); ++n) {
        if (!is_integer(f.a[n])) return n;
    }
    return std::nullopt;
}

} // namespace gmfq
