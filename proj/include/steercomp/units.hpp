#pragma once

#include <cmath>
#include <numbers>

namespace steercomp {

// Front-wheel angle limit shared by the actuator clamp, the vehicle model
// and the command composition.
inline constexpr double kFrontWheelLimitRad = 0.4;

template <typename Scalar>
constexpr Scalar deg_to_rad(Scalar deg) {
    return deg * std::numbers::pi_v<Scalar> / Scalar(180);
}

template <typename Scalar>
constexpr Scalar rad_to_deg(Scalar rad) {
    return rad * Scalar(180) / std::numbers::pi_v<Scalar>;
}

template <typename Scalar>
constexpr Scalar kmh_to_mps(Scalar kmh) {
    return kmh / Scalar(3.6);
}

template <typename Scalar>
constexpr Scalar mps_to_kmh(Scalar mps) {
    return mps * Scalar(3.6);
}

// Wraps an angle to (-pi, pi].
inline double wrap_angle(double rad) {
    double a = std::remainder(rad, 2.0 * std::numbers::pi);
    return a;
}

}  // namespace steercomp
