#pragma once

#include <cstdint>
#include <deque>
#include <random>

namespace steercomp {

// Pose and motion of the kinematic bicycle. Angles in rad, positions in m,
// speeds in m/s. delta_f is the current front-wheel angle, clamped to
// +-kFrontWheelLimitRad at all times.
struct VehicleState {
    double x = 0.0;
    double y = 0.0;
    double psi = 0.0;
    double v = 0.0;
    double gamma = 0.0;    // yaw rate, rad/s
    double delta_f = 0.0;  // front-wheel angle, rad
};

struct PlantConfig {
    double wheelbase = 2.85;         // m
    double steering_ratio = 16.0;    // steering-wheel angle / front-wheel angle
    double actuator_delay = 0.2;     // s, must be a multiple of period
    double disturbance_sigma = 0.0;  // deg, std of additive output noise
    double w1 = 0.713;               // delay-error weight
    double w2 = 0.287;               // disturbance-error weight, w1 + w2 = 1
    double period = 0.05;            // sampling period T, s
    std::uint64_t seed = 1;

    // Number of whole sampling periods in the actuator delay.
    int delay_steps() const;

    // Steering-wheel angle (deg) equivalent of the front-wheel limit.
    double wheel_limit_deg() const;

    // Throws ConfigError when an invariant is violated.
    void validate() const;
};

// Steering actuator: pure transport delay of delay_steps() samples plus
// additive zero-mean Gaussian noise on the measured output. The output is
// clamped so the implied front-wheel angle stays within the limit.
class Actuator {
public:
    explicit Actuator(const PlantConfig& cfg);

    // Pushes the commanded steering-wheel angle (deg) and returns the
    // measured output (deg): the command issued actuator_delay seconds ago
    // plus disturbance. Deterministic for a given seed.
    double step(double command_deg);

    std::size_t buffer_size() const { return buffer_.size(); }

private:
    PlantConfig cfg_;
    std::deque<double> buffer_;
    std::mt19937_64 rng_;
    std::normal_distribution<double> noise_;
};

// Advances the bicycle one sampling period with explicit Euler. The measured
// steering-wheel angle (deg) maps to the front-wheel angle through the
// steering ratio and is clamped to the front-wheel limit. Speed is held
// constant.
VehicleState vehicle_step(const VehicleState& state, double measured_steer_deg,
                          const PlantConfig& cfg);

}  // namespace steercomp
