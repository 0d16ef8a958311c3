#include "steercomp/tracking.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "steercomp/csv.hpp"
#include "steercomp/errors.hpp"
#include "steercomp/units.hpp"

namespace steercomp {

namespace {

// Lateral profile segment: holds at a level or blends between two levels
// with a raised-cosine ramp (continuous value and first derivative).
struct ProfileSegment {
    double length;
    double y_start;
    double y_end;
};

double profile_y(const std::vector<ProfileSegment>& segs, double s) {
    double s0 = 0.0;
    for (const auto& seg : segs) {
        if (s <= s0 + seg.length) {
            const double u = (s - s0) / seg.length;
            return seg.y_start + (seg.y_end - seg.y_start) * 0.5 * (1.0 - std::cos(std::numbers::pi * u));
        }
        s0 += seg.length;
    }
    return segs.back().y_end;
}

double profile_dyds(const std::vector<ProfileSegment>& segs, double s) {
    double s0 = 0.0;
    for (const auto& seg : segs) {
        if (s <= s0 + seg.length) {
            const double u = (s - s0) / seg.length;
            return (seg.y_end - seg.y_start) * 0.5 * std::numbers::pi / seg.length *
                   std::sin(std::numbers::pi * u);
        }
        s0 += seg.length;
    }
    return 0.0;
}

// Builds waypoints with the profile treated as y(s) on true arc length:
// dx/ds = sqrt(1 - (dy/ds)^2), integrated with fine midpoint substeps.
ReferencePath path_from_profile(const std::vector<ProfileSegment>& segs, double spacing) {
    double total = 0.0;
    for (const auto& seg : segs) total += seg.length;

    ReferencePath path;
    path.total_length = total;
    const int n = static_cast<int>(std::ceil(total / spacing));
    path.waypoints.reserve(static_cast<std::size_t>(n) + 1);

    const double substep = 0.01;
    double x = 0.0;
    double s_int = 0.0;
    path.waypoints.push_back({0.0, 0.0, profile_y(segs, 0.0)});
    for (int i = 1; i <= n; ++i) {
        const double s = std::min(total, i * spacing);
        while (s_int < s - 1e-12) {
            const double h = std::min(substep, s - s_int);
            const double dyds = profile_dyds(segs, s_int + 0.5 * h);
            x += h * std::sqrt(std::max(0.0, 1.0 - dyds * dyds));
            s_int += h;
        }
        path.waypoints.push_back({s, x, profile_y(segs, s)});
    }
    return path;
}

constexpr double kWaypointSpacing = 0.25;
constexpr double kOffPathLimit = 20.0;

}  // namespace

void ReferencePath::validate() const {
    if (waypoints.size() < 2) throw ConfigError("path: needs at least 2 waypoints");
    if (std::abs(waypoints.front().s) > 1e-9) throw ConfigError("path: arc length must start at 0");
    for (std::size_t i = 1; i < waypoints.size(); ++i) {
        const double ds = waypoints[i].s - waypoints[i - 1].s;
        if (ds <= 0.0) throw ConfigError("path: arc length must be strictly increasing");
        if (ds > 1.0 + 1e-9) throw ConfigError("path: waypoint spacing must be <= 1 m");
    }
    if (std::abs(waypoints.back().s - total_length) > 1e-6)
        throw ConfigError("path: total_length must match the final waypoint");
}

ReferencePath double_lane_change_path() {
    const std::vector<ProfileSegment> segs = {
        {50.0, 0.0, 0.0}, {30.0, 0.0, 3.5}, {30.0, 3.5, 3.5}, {30.0, 3.5, 0.0}, {60.0, 0.0, 0.0},
    };
    return path_from_profile(segs, kWaypointSpacing);
}

ReferencePath slalom_path(int weaves, double amplitude) {
    if (weaves < 1) throw ConfigError("slalom: weaves must be >= 1");
    std::vector<ProfileSegment> segs;
    segs.push_back({20.0, 0.0, 0.0});
    double level = 0.0;
    for (int i = 0; i < weaves; ++i) {
        const double next = (i % 2 == 0) ? amplitude : -amplitude;
        segs.push_back({30.0, level, next});
        segs.push_back({10.0, next, next});
        level = next;
    }
    segs.push_back({30.0, level, 0.0});
    segs.push_back({20.0, 0.0, 0.0});
    return path_from_profile(segs, kWaypointSpacing);
}

ReferencePath path_from_csv(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("path: cannot open " + file);
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("path: empty file " + file);
    ReferencePath path;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = csv::split_row(line);
        if (fields.size() != 3) throw ConfigError("path: expected 3 columns in " + file);
        path.waypoints.push_back(
            {csv::parse_double(fields[0]), csv::parse_double(fields[1]), csv::parse_double(fields[2])});
    }
    if (path.waypoints.empty()) throw ConfigError("path: no waypoints in " + file);
    path.total_length = path.waypoints.back().s;
    path.validate();
    return path;
}

void path_to_csv(const ReferencePath& path, const std::string& file) {
    std::ofstream out(file);
    if (!out) throw ConfigError("path: cannot write " + file);
    out << "s_m,x_m,y_m\n";
    for (const auto& wp : path.waypoints)
        out << csv::format_double(wp.s) << ',' << csv::format_double(wp.x) << ','
            << csv::format_double(wp.y) << '\n';
}

PathProjection project_onto_path(const ReferencePath& path, double x, double y) {
    const auto& wps = path.waypoints;
    PathProjection best;
    double best_dist2 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < wps.size(); ++i) {
        const double ex = wps[i + 1].x - wps[i].x;
        const double ey = wps[i + 1].y - wps[i].y;
        const double len2 = ex * ex + ey * ey;
        double t = ((x - wps[i].x) * ex + (y - wps[i].y) * ey) / len2;
        bool extrapolated = false;
        if (i == 0 && t < 0.0) {
            extrapolated = true;  // before the start: extend the first segment
        } else if (i + 2 == wps.size() && t > 1.0) {
            extrapolated = true;  // past the end: extend the last segment
        } else {
            t = std::clamp(t, 0.0, 1.0);
        }
        const double px = wps[i].x + t * ex;
        const double py = wps[i].y + t * ey;
        const double dx = x - px;
        const double dy = y - py;
        const double dist2 = dx * dx + dy * dy;
        if (dist2 < best_dist2 - 1e-15) {
            best_dist2 = dist2;
            const double cross = ex * dy - ey * dx;
            best.s = wps[i].s + t * (wps[i + 1].s - wps[i].s);
            best.signed_offset = std::copysign(std::sqrt(dist2), cross);
            best.extrapolated = extrapolated;
        }
    }
    return best;
}

PathPoint point_at(const ReferencePath& path, double s) {
    const auto& wps = path.waypoints;
    if (s <= 0.0) {
        const auto& a = wps[0];
        const auto& b = wps[1];
        const double len = b.s - a.s;
        const double t = s / len;
        return {s, a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
    }
    if (s >= path.total_length) {
        const auto& a = wps[wps.size() - 2];
        const auto& b = wps.back();
        const double len = b.s - a.s;
        const double t = (s - a.s) / len;
        return {s, a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
    }
    auto it = std::lower_bound(wps.begin(), wps.end(), s,
                               [](const PathPoint& p, double val) { return p.s < val; });
    if (it == wps.begin()) ++it;
    const auto& b = *it;
    const auto& a = *(it - 1);
    const double t = (s - a.s) / (b.s - a.s);
    return {s, a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

DesiredMotion desired_yaw_rate(const VehicleState& state, const TrackerConfig& cfg) {
    if (cfg.lookahead <= 0.0) throw ConfigError("tracker: lookahead must be > 0");
    const PathProjection proj = project_onto_path(cfg.path, state.x, state.y);
    if (std::abs(proj.signed_offset) > kOffPathLimit)
        throw OffPathError("vehicle is " + std::to_string(std::abs(proj.signed_offset)) +
                           " m from the reference path");
    const PathPoint target = point_at(cfg.path, proj.s + cfg.lookahead);
    const double bearing = std::atan2(target.y - state.y, target.x - state.x);
    const double alpha = wrap_angle(bearing - state.psi);
    DesiredMotion out;
    out.v_d = state.v;
    out.w_d = 2.0 * state.v * std::sin(alpha) / cfg.lookahead;
    return out;
}

double nominal_steering(double v_d, double w_d, const PlantConfig& cfg) {
    if (v_d <= 0.1) throw SpeedTooLowError("nominal_steering: v_d must exceed 0.1 m/s");
    const double delta_f = std::clamp(std::atan(cfg.wheelbase * w_d / v_d),
                                      -kFrontWheelLimitRad, kFrontWheelLimitRad);
    return rad_to_deg(delta_f * cfg.steering_ratio);
}

}  // namespace steercomp
