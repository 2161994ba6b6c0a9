#pragma once

#include "gmfq/coeffs.hpp"
#include "gmfq/curves.hpp"
#include "gmfq/density.hpp"
#include "gmfq/integrality.hpp"

#include <iosfwd>
#include <map>
#include <string>

namespace gmfq {

// A curve file plus its optional inline a_p overrides (bad primes chiefly;
// good-prime entries are allowed and replace point counts).
struct CurveSpec {
    EllipticCurve curve;
    std::map<long long, long long> ap_overrides;
};

// Strict JSON reader: {"label"?, "a_invariants": [a1,a2,a3,a4,a6],
// "bad_primes"?: [int], "cm_discriminant"?: int, "ap_overrides"?:
// {"p": int}}.  Unknown fields, wrong arity and non-integer entries are
// all DataError with the field named.
CurveSpec load_curve(const std::string& path);

// CSV with header "p,ap" and ascending prime rows.  Validates primality,
// ascending order, duplicates and the Hasse bound per row; every message
// carries the offending line number.  Lines starting with '#' are skipped.
std::map<long long, long long> import_ap_csv(const std::string& path);

void write_ap_csv(std::ostream& os, const ApTable& table);

// Coefficient cache: a versioned header (label, bound, bad primes) over
// dense rows n,b,c_num,c_den for 1 <= n <= bound.  Writing requires a
// dense table; reading rebuilds the table from the prime rows and then
// cross-checks every row against it, so a reloaded cache is trustworthy
// and re-emits byte-identically.
struct CoefficientCacheFile {
    std::string label;
    CoefficientTable table;
};

void write_coeff_cache(std::ostream& os, const CoefficientTable& table,
                       const std::string& label);
CoefficientCacheFile read_coeff_cache(const std::string& path);

// Density report rows: predicate_id,x,count,pi_x,ratio,theoretical,deviation
// with floats at 12 significant digits.  with_timestamp prepends a
// "# generated-at:" comment (suppressed under --reproducible).
void write_density_csv(std::ostream& os, const DensityReport& report, bool with_timestamp);

void write_integrality_json(std::ostream& os, const IntegralityResult& result,
                            const std::string& label, bool with_timestamp);

// Re-emit a density CSV as normalized CSV or as JSON (array of row objects
// keyed by the header).  Conversion output never carries a timestamp.
void convert_report(std::istream& in, std::ostream& out, const std::string& format);

// Shared float formatting: 12 significant digits.
std::string format_double(double v);

} // namespace gmfq
