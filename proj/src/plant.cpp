#include "steercomp/plant.hpp"

#include <algorithm>
#include <cmath>

#include "steercomp/errors.hpp"
#include "steercomp/units.hpp"

namespace steercomp {

int PlantConfig::delay_steps() const {
    const double ratio = actuator_delay / period;
    return static_cast<int>(std::lround(ratio));
}

double PlantConfig::wheel_limit_deg() const {
    return rad_to_deg(kFrontWheelLimitRad * steering_ratio);
}

void PlantConfig::validate() const {
    if (period <= 0.0) throw ConfigError("plant: period must be > 0");
    if (wheelbase <= 0.0) throw ConfigError("plant: wheelbase must be > 0");
    if (steering_ratio <= 0.0) throw ConfigError("plant: steering_ratio must be > 0");
    if (actuator_delay < 0.0) throw ConfigError("plant: actuator_delay must be >= 0");
    const double ratio = actuator_delay / period;
    if (std::abs(ratio - std::lround(ratio)) > 1e-9)
        throw ConfigError("plant: actuator_delay must be a whole multiple of period");
    if (disturbance_sigma < 0.0) throw ConfigError("plant: disturbance_sigma must be >= 0");
    if (w1 < 0.0 || w1 > 1.0 || w2 < 0.0 || w2 > 1.0 || std::abs(w1 + w2 - 1.0) > 1e-9)
        throw ConfigError("plant: w1 and w2 must lie in [0,1] and sum to 1");
}

Actuator::Actuator(const PlantConfig& cfg)
    : cfg_(cfg),
      buffer_(static_cast<std::size_t>(cfg.delay_steps()), 0.0),
      rng_(cfg.seed),
      noise_(0.0, cfg.disturbance_sigma > 0.0 ? cfg.disturbance_sigma : 1.0) {
    cfg_.validate();
}

double Actuator::step(double command_deg) {
    double delayed = command_deg;
    if (!buffer_.empty()) {
        delayed = buffer_.front();
        buffer_.pop_front();
        buffer_.push_back(command_deg);
    }
    double measured = delayed;
    if (cfg_.disturbance_sigma > 0.0) measured += noise_(rng_);
    const double limit = cfg_.wheel_limit_deg();
    return std::clamp(measured, -limit, limit);
}

VehicleState vehicle_step(const VehicleState& state, double measured_steer_deg,
                          const PlantConfig& cfg) {
    const double delta_f = std::clamp(deg_to_rad(measured_steer_deg) / cfg.steering_ratio,
                                      -kFrontWheelLimitRad, kFrontWheelLimitRad);
    VehicleState next = state;
    next.x = state.x + cfg.period * state.v * std::cos(state.psi);
    next.y = state.y + cfg.period * state.v * std::sin(state.psi);
    next.psi = state.psi + cfg.period * state.v * std::tan(delta_f) / cfg.wheelbase;
    next.gamma = state.v * std::tan(delta_f) / cfg.wheelbase;
    next.delta_f = delta_f;
    return next;
}

}  // namespace steercomp
