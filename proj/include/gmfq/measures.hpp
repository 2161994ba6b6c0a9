#pragma once

namespace gmfq {

// Subinterval of [-1, 1] with per-endpoint openness.  Openness only has
// measurable weight at t = 0 (the CM atom); both continuous densities are
// atomless.
struct Interval {
    double lo = -1.0, hi = 1.0;
    bool lo_closed = true, hi_closed = true;

    // Throws std::invalid_argument if lo > hi.
    static Interval make(double lo, double hi, bool lo_closed = true, bool hi_closed = true);

    bool contains_zero() const;
    bool contains(double t) const;
    bool inside_unit() const { return lo >= -1.0 && hi <= 1.0; }
};

enum class MeasureKind {
    SatoTate,  // (2/pi) sqrt(1-t^2) dt on [-1,1]
    DeuringCM, // (1/2pi) (1-t^2)^{-1/2} dt plus a weight-1/2 atom at 0
};

enum class SignClass { Positive, Negative, Zero };

// Semicircle mass of I via the closed antiderivative
// (t sqrt(1-t^2) + asin t) / pi.  I must lie inside [-1, 1].
double st_mass(const Interval& I);

// Arcsine mass (asin hi - asin lo) / 2pi, plus 1/2 when 0 lies in I
// (endpoint closedness at 0 decides).  I must lie inside [-1, 1].
double cm_mass(const Interval& I);

// Arcsine part alone, atom never added; this is the limit the restricted
// CM interval theorem compares against.
double cm_continuous_mass(const Interval& I);

// Limit densities of the sign classes of c(p):
//   SatoTate:  1/2, 1/2, 0     DeuringCM:  3/4, 1/4, 0
double theoretical_sign_density(MeasureKind kind, SignClass sign);

double atom_weight(MeasureKind kind); // 1/2 for DeuringCM, 0 otherwise

} // namespace gmfq
