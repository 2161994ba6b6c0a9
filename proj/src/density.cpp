#include "gmfq/density.hpp"

#include "gmfq/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gmfq {

namespace {

void require_covered(const CoefficientTable& table, long long x, const char* who) {
    if (x > table.bound())
        throw DataError(std::string(who) + ": requested x = " + std::to_string(x) +
                        " exceeds table bound " + std::to_string(table.bound()));
}

// Compare u / (2 sqrt p) against v in {-1, 0, 1} without rounding: the
// sign is the sign of u, and |u/(2 sqrt p)| vs 1 is u^2 vs 4p over Z.
// Returns -1 / 0 / +1.
int cmp_scaled_exact(long long u, long long p, int v) {
    if (v == 0) return (u > 0) - (u < 0);
    if (v > 0) {
        if (u <= 0) return -1;
        const __int128 uu = static_cast<__int128>(u) * u;
        const __int128 fourp = static_cast<__int128>(4) * p;
        return (uu > fourp) - (uu < fourp);
    }
    if (u >= 0) return 1;
    const __int128 uu = static_cast<__int128>(u) * u;
    const __int128 fourp = static_cast<__int128>(4) * p;
    return (uu < fourp) - (uu > fourp);
}

bool boundary_is_exact(double v) { return v == 0.0 || v == 1.0 || v == -1.0; }

// Sign of (u / (2 sqrt p)) - v; exact at the semantic boundaries, float
// elsewhere (where no theorem statement pins the cut).
int cmp_scaled(long long u, long long p, double v) {
    if (boundary_is_exact(v)) return cmp_scaled_exact(u, p, static_cast<int>(v));
    const double t = static_cast<double>(u) / (2.0 * std::sqrt(static_cast<double>(p)));
    return (t > v) - (t < v);
}

} // namespace

bool scaled_in_interval(long long u, long long p, const Interval& I) {
    const int clo = cmp_scaled(u, p, I.lo);
    if (!(clo > 0 || (clo == 0 && I.lo_closed))) return false;
    const int chi = cmp_scaled(u, p, I.hi);
    return chi < 0 || (chi == 0 && I.hi_closed);
}

SignCensus sign_census(const CoefficientTable& table, long long x) {
    require_covered(table, x, "sign_census");
    SignCensus census;
    census.x = x;
    for (long long p : table.good_primes()) {
        if (p > x) break;
        const long long num = 1 - table.b(p); // sign of c(p) = (1-b)/p
        if (num > 0)
            ++census.n_pos;
        else if (num < 0)
            ++census.n_neg;
        else
            ++census.n_zero;
    }
    census.n_good = table.good_count_upto(x);
    census.n_all = table.pi(x);
    return census;
}

long long interval_count(const CoefficientTable& table, long long x, const Interval& I,
                         Norm norm) {
    require_covered(table, x, "interval_count");
    if (!I.inside_unit())
        throw std::invalid_argument("interval_count: interval must lie inside [-1, 1]");
    long long count = 0;
    for (long long p : table.good_primes()) {
        if (p > x) break;
        const long long b = table.b(p);
        const long long u = norm == Norm::B1 ? b : 1 - b;
        if (scaled_in_interval(u, p, I)) ++count;
    }
    return count;
}

long long ap_filtered_census(const CoefficientTable& table, long long x, long long q,
                             long long a, const Interval& I) {
    require_covered(table, x, "ap_filtered_census");
    if (q < 1) throw std::invalid_argument("ap_filtered_census: modulus must be >= 1");
    const long long res = ((a % q) + q) % q;
    if (std::gcd(res, q) != 1)
        throw std::invalid_argument("ap_filtered_census: residue " + std::to_string(a) +
                                    " is not coprime to modulus " + std::to_string(q));
    if (!I.inside_unit())
        throw std::invalid_argument("ap_filtered_census: interval must lie inside [-1, 1]");
    long long count = 0;
    for (long long p : table.good_primes()) {
        if (p > x) break;
        if (p % q != res) continue;
        if (scaled_in_interval(1 - table.b(p), p, I)) ++count;
    }
    return count;
}

DensityReport convergence_report(const CoefficientTable& table,
                                 const std::vector<long long>& checkpoints,
                                 const PredicateSpec& pred) {
    if (checkpoints.empty())
        throw std::invalid_argument("convergence_report: no checkpoints");
    for (size_t i = 0; i < checkpoints.size(); ++i) {
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
            throw std::invalid_argument("convergence_report: checkpoints must ascend");
    }
    require_covered(table, checkpoints.back(), "convergence_report");

    DensityReport report;
    report.predicate_id = pred.id;
    report.rows.reserve(checkpoints.size());

    // Single ascending pass over the good primes, emitting a row whenever a
    // checkpoint is crossed.
    const auto& primes = table.good_primes();
    size_t pi = 0;
    long long running = 0;
    for (long long x : checkpoints) {
        while (pi < primes.size() && primes[pi] <= x) {
            if (pred.pred(primes[pi], table.b(primes[pi]))) ++running;
            ++pi;
        }
        DensityRow row;
        row.x = x;
        row.count = running;
        row.pi_x = table.pi(x);
        row.ratio = row.pi_x > 0 ? static_cast<double>(row.count) / static_cast<double>(row.pi_x)
                                 : 0.0;
        row.theoretical = pred.theoretical;
        row.deviation = std::abs(row.ratio - row.theoretical);
        report.rows.push_back(row);
    }
    return report;
}

std::pair<double, double> cm_interval_density(const CoefficientTable& table, long long x,
                                              const Interval& I) {
    require_covered(table, x, "cm_interval_density");
    if (!I.inside_unit())
        throw std::invalid_argument("cm_interval_density: interval must lie inside [-1, 1]");
    const bool below_zero = I.hi <= 0.0; // subinterval of [-1, 0]
    const bool closed_positive = I.lo > 0.0 && I.lo_closed && I.hi_closed;
    if (!below_zero && !closed_positive)
        throw std::invalid_argument(
            "cm_interval_density: interval must be a subinterval of [-1,0] or a closed "
            "interval in (0,1]; this one traps the weight-1/2 atom at 0 (inert primes "
            "have c_1(p) = 1/(2 sqrt p) -> 0+), so the arcsine-mass comparison is "
            "ill-posed");

    const long long count = interval_count(table, x, I, Norm::C1);
    const long long pix = table.pi(x);
    const double empirical = pix > 0 ? static_cast<double>(count) / static_cast<double>(pix) : 0.0;
    return {empirical, cm_continuous_mass(I)};
}

std::vector<long long> default_checkpoints(long long bound) {
    std::vector<long long> points;
    for (long long x = 1000; x <= bound; x *= 10) points.push_back(x);
    if (points.empty() || points.back() != bound) points.push_back(bound);
    return points;
}

} // namespace gmfq
