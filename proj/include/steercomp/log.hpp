#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace steercomp {

// Canonical channel names (with units) shared by the simulation driver,
// the dataset builder and the analysis tools.
namespace channel {
inline constexpr const char* kTime = "t_s";
inline constexpr const char* kX = "x_m";
inline constexpr const char* kY = "y_m";
inline constexpr const char* kPsi = "psi_rad";
inline constexpr const char* kSpeed = "v_mps";
inline constexpr const char* kGammaDesired = "gamma_desired_dps";
inline constexpr const char* kGammaMeasured = "gamma_measured_dps";
inline constexpr const char* kUTrack = "u_track_deg";
inline constexpr const char* kU1 = "u1_deg";
inline constexpr const char* kU = "u_deg";
inline constexpr const char* kTheta = "theta_measured_deg";
inline constexpr const char* kErrorInstant = "e_instant_deg";
inline constexpr const char* kErrorPredicted = "e_hat_deg";
inline constexpr const char* kLateralError = "lateral_error_m";
}  // namespace channel

// Time-indexed table of named channels on a uniform time base.
struct SampleLog {
    std::vector<std::string> channels;
    Eigen::MatrixXd values;  // rows x channels
    double period = 0.05;

    Eigen::Index rows() const { return values.rows(); }
    bool has_channel(const std::string& name) const;
    Eigen::Index channel_index(const std::string& name) const;  // MissingChannelError
    Eigen::VectorXd col(const std::string& name) const;

    // Keeps rows [begin, begin+count).
    SampleLog slice(Eigen::Index begin, Eigen::Index count) const;
};

// Full-precision CSV with a header row naming every channel (units are part
// of the names). Values round-trip exactly.
void write_log_csv(const SampleLog& log, const std::string& file);
SampleLog read_log_csv(const std::string& file);

}  // namespace steercomp
