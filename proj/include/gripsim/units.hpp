#pragma once

#include <cmath>

namespace gripsim {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kGravity = 9.81; // m/s^2

constexpr double deg2rad(double deg) { return deg * (kPi / 180.0); }
constexpr double rad2deg(double rad) { return rad * (180.0 / kPi); }

// Degree-argument trig that is exact at multiples of 90 degrees, so identities
// like cos(90 deg) == 0 hold bit-for-bit instead of to ~1e-17.
inline double sin_deg(double deg) {
    double r = std::fmod(deg, 360.0);
    if (r < 0) r += 360.0;
    if (r == 0.0 || r == 180.0) return 0.0;
    if (r == 90.0) return 1.0;
    if (r == 270.0) return -1.0;
    return std::sin(deg2rad(deg));
}

inline double cos_deg(double deg) {
    double r = std::fmod(deg, 360.0);
    if (r < 0) r += 360.0;
    if (r == 90.0 || r == 270.0) return 0.0;
    if (r == 0.0) return 1.0;
    if (r == 180.0) return -1.0;
    return std::cos(deg2rad(deg));
}

// mm <-> m conversions, kept explicit so formula code reads dimensionally.
constexpr double mm_to_m(double mm) { return mm * 1e-3; }
constexpr double m_to_mm(double m) { return m * 1e3; }

} // namespace gripsim
