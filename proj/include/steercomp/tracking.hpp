#pragma once

#include <string>
#include <vector>

#include "steercomp/plant.hpp"

namespace steercomp {

struct PathPoint {
    double s = 0.0;  // arc length from path start, m
    double x = 0.0;
    double y = 0.0;
};

// Polyline reference path parameterized by arc length. Waypoints are sampled
// densely enough (<= 0.25 m) that segment-wise projection error stays below
// a millimeter.
struct ReferencePath {
    std::vector<PathPoint> waypoints;
    double total_length = 0.0;

    void validate() const;  // throws ConfigError on malformed paths
};

// 200 m double lane change: straight lead-in, cosine blend to a 3.5 m
// offset lane, return blend, straight run-out.
ReferencePath double_lane_change_path();

// Weaving path used to enrich curve coverage in data-collection runs:
// alternating +-amplitude offsets joined by cosine blends.
ReferencePath slalom_path(int weaves = 13, double amplitude = 3.0);

ReferencePath path_from_csv(const std::string& file);
void path_to_csv(const ReferencePath& path, const std::string& file);

// Projection of a point onto the path. Points before the start or past the
// end project onto the infinite extension of the terminal segment and are
// flagged extrapolated.
struct PathProjection {
    double s = 0.0;
    double signed_offset = 0.0;  // m, positive left of travel direction
    bool extrapolated = false;
};

PathProjection project_onto_path(const ReferencePath& path, double x, double y);

// Point at arc length s, extrapolating along the terminal segments outside
// [0, total_length].
PathPoint point_at(const ReferencePath& path, double s);

struct TrackerConfig {
    double lookahead = 8.0;  // preview distance, m
    ReferencePath path;
};

struct DesiredMotion {
    double v_d = 0.0;  // m/s
    double w_d = 0.0;  // rad/s
};

// Pure-pursuit preview law: aims at the path point one lookahead ahead of
// the vehicle's closest path point. Throws OffPathError when the vehicle is
// more than 20 m from the path.
DesiredMotion desired_yaw_rate(const VehicleState& state, const TrackerConfig& cfg);

// Inverts the kinematic bicycle relation to a nominal steering-wheel angle
// command (deg). The front-wheel angle is clamped before conversion.
double nominal_steering(double v_d, double w_d, const PlantConfig& cfg);

}  // namespace steercomp
