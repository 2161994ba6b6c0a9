#include "gmfq/measures.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gmfq {

Interval Interval::make(double lo, double hi, bool lo_closed, bool hi_closed) {
    if (!(lo <= hi))
        throw std::invalid_argument("interval: lo must not exceed hi (" +
                                    std::to_string(lo) + " > " + std::to_string(hi) + ")");
    return Interval{lo, hi, lo_closed, hi_closed};
}

bool Interval::contains_zero() const {
    const bool above_lo = lo < 0.0 || (lo == 0.0 && lo_closed);
    const bool below_hi = hi > 0.0 || (hi == 0.0 && hi_closed);
    return above_lo && below_hi;
}

bool Interval::contains(double t) const {
    const bool above = t > lo || (t == lo && lo_closed);
    const bool below = t < hi || (t == hi && hi_closed);
    return above && below;
}

namespace {

void require_unit(const Interval& I, const char* who) {
    if (!I.inside_unit())
        throw std::invalid_argument(std::string(who) + ": interval must lie inside [-1, 1]");
}

} // namespace

double st_mass(const Interval& I) {
    require_unit(I, "st_mass");
    auto F = [](double t) { return (t * std::sqrt(1.0 - t * t) + std::asin(t)) / M_PI; };
    return F(I.hi) - F(I.lo);
}

double cm_mass(const Interval& I) {
    double mass = cm_continuous_mass(I);
    if (I.contains_zero()) mass += 0.5;
    return mass;
}

double cm_continuous_mass(const Interval& I) {
    require_unit(I, "cm_mass");
    return (std::asin(I.hi) - std::asin(I.lo)) / (2.0 * M_PI);
}

double atom_weight(MeasureKind kind) {
    return kind == MeasureKind::DeuringCM ? 0.5 : 0.0;
}

double theoretical_sign_density(MeasureKind kind, SignClass sign) {
    if (sign == SignClass::Zero) return 0.0;
    if (kind == MeasureKind::SatoTate) return 0.5;
    return sign == SignClass::Positive ? 0.75 : 0.25;
}

} // namespace gmfq
