#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "swarmex/geometry.hpp"

namespace swarmex {

// Ground-truth world geometry. The ASCII map format is block-based: each
// character covers a 0.5 m x 0.5 m block that expands to 5x5 fine cells of
// 0.1 m, so continuous motion sees sub-block geometry while maps stay
// human-writable.
inline constexpr double kFineCellM = 0.1;
inline constexpr double kBlockM = 0.5;
inline constexpr int kFinePerBlock = 5;
inline constexpr double kSensorRangeM = 1.0;
inline constexpr int kSensorRays = 9;
inline constexpr double kSensorHalfFanDeg = 70.0;

struct Rect {
    double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;
};

class MapParseError : public std::runtime_error {
public:
    MapParseError(const std::string& what, int line, int column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line;
    int column;
};

struct EnvironmentMap {
    double width_m = 0.0;
    double height_m = 0.0;
    int fine_cols = 0;
    int fine_rows = 0;
    std::vector<std::uint8_t> obstacle;  // row-major fine grid, 1 = obstacle
    std::vector<Vec2> charging_stations;
    Rect spawn_region;

    bool in_bounds(double x, double y) const {
        return x >= 0.0 && y >= 0.0 && x < width_m && y < height_m;
    }

    bool fine_in_bounds(int col, int row) const {
        return col >= 0 && row >= 0 && col < fine_cols && row < fine_rows;
    }

    // Out-of-map cells count as obstacle: the border is solid.
    bool obstacle_at_fine(int col, int row) const {
        if (!fine_in_bounds(col, row)) return true;
        return obstacle[static_cast<std::size_t>(row) * fine_cols + col] != 0;
    }

    bool obstacle_at_point(double x, double y) const {
        return obstacle_at_fine(static_cast<int>(std::floor(x / kFineCellM)),
                                static_cast<int>(std::floor(y / kFineCellM)));
    }

    int block_cols() const { return fine_cols / kFinePerBlock; }
    int block_rows() const { return fine_rows / kFinePerBlock; }
};

// One sensor sweep: 9 rays spanning [-70 deg, +70 deg] around the heading,
// 17.5 deg apart. A ray either hits within (0, 1] m or misses.
struct ScanResult {
    struct Ray {
        double bearing_offset = 0.0;          // radians relative to pose.theta
        std::optional<double> hit_distance;   // meters, empty on miss
    };
    std::array<Ray, kSensorRays> rays;
};

inline double ray_bearing_offset(int index) {
    const double step = deg_to_rad(2.0 * kSensorHalfFanDeg / (kSensorRays - 1));
    return -deg_to_rad(kSensorHalfFanDeg) + index * step;
}

// Parses the block-based ASCII world format:
//   '#' obstacle block, '.' free, 'C' charging station, 'S' spawn block.
// Rows must be equal length; at least one 'S' is required.
inline EnvironmentMap load_environment(const std::string& text) {
    std::vector<std::string> rows;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            rows.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) rows.push_back(current);  // trailing newline optional

    if (rows.empty()) throw MapParseError("empty map document, no 'S' spawn cell", 1, 1);

    const std::size_t ncols = rows[0].size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != ncols)
            throw MapParseError("ragged row", static_cast<int>(r + 1),
                                static_cast<int>(rows[r].size() + 1));
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            char ch = rows[r][c];
            if (ch != '#' && ch != '.' && ch != 'C' && ch != 'S')
                throw MapParseError(std::string("unknown character '") + ch + "'",
                                    static_cast<int>(r + 1), static_cast<int>(c + 1));
        }
    }
    if (ncols == 0) throw MapParseError("empty map document, no 'S' spawn cell", 1, 1);

    EnvironmentMap env;
    const int brows = static_cast<int>(rows.size());
    const int bcols = static_cast<int>(ncols);
    env.width_m = bcols * kBlockM;
    env.height_m = brows * kBlockM;
    env.fine_cols = bcols * kFinePerBlock;
    env.fine_rows = brows * kFinePerBlock;
    env.obstacle.assign(static_cast<std::size_t>(env.fine_cols) * env.fine_rows, 0);

    bool any_spawn = false;
    int smin_c = 0, smin_r = 0, smax_c = 0, smax_r = 0;
    for (int br = 0; br < brows; ++br) {
        for (int bc = 0; bc < bcols; ++bc) {
            char ch = rows[br][bc];
            if (ch == '#') {
                for (int fr = br * kFinePerBlock; fr < (br + 1) * kFinePerBlock; ++fr)
                    for (int fc = bc * kFinePerBlock; fc < (bc + 1) * kFinePerBlock; ++fc)
                        env.obstacle[static_cast<std::size_t>(fr) * env.fine_cols + fc] = 1;
            } else if (ch == 'C') {
                env.charging_stations.push_back(
                    {(bc + 0.5) * kBlockM, (br + 0.5) * kBlockM});
            } else if (ch == 'S') {
                if (!any_spawn) {
                    smin_c = smax_c = bc;
                    smin_r = smax_r = br;
                    any_spawn = true;
                } else {
                    smin_c = std::min(smin_c, bc);
                    smax_c = std::max(smax_c, bc);
                    smin_r = std::min(smin_r, br);
                    smax_r = std::max(smax_r, br);
                }
            }
        }
    }
    if (!any_spawn) throw MapParseError("no 'S' spawn cell", 1, 1);
    env.spawn_region = {smin_c * kBlockM, smin_r * kBlockM, (smax_c + 1) * kBlockM,
                        (smax_r + 1) * kBlockM};
    return env;
}

inline EnvironmentMap load_environment_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open environment file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_environment(ss.str());
}

// Distance along the ray to the first obstacle fine-cell boundary, or empty
// if nothing is hit within max_range. The map border is solid. Exact grid
// traversal: steps from boundary to boundary rather than sampling.
inline std::optional<double> raycast(const EnvironmentMap& env, const Pose& origin,
                                     double bearing, double max_range) {
    if (!env.in_bounds(origin.x, origin.y))
        throw std::domain_error("raycast origin out of map bounds");

    const double dx = std::cos(bearing);
    const double dy = std::sin(bearing);
    int col = static_cast<int>(std::floor(origin.x / kFineCellM));
    int row = static_cast<int>(std::floor(origin.y / kFineCellM));
    if (env.obstacle_at_fine(col, row)) return 0.0;  // degenerate start inside an obstacle

    const int step_c = dx > 0.0 ? 1 : (dx < 0.0 ? -1 : 0);
    const int step_r = dy > 0.0 ? 1 : (dy < 0.0 ? -1 : 0);
    const double inf = std::numeric_limits<double>::infinity();
    // t at which the ray crosses the next cell boundary in each axis
    auto axis_tmax = [](double pos, int cell, int step, double d) {
        if (step == 0) return std::numeric_limits<double>::infinity();
        double boundary = (step > 0 ? (cell + 1) : cell) * kFineCellM;
        return (boundary - pos) / d;
    };
    double tmax_c = axis_tmax(origin.x, col, step_c, dx);
    double tmax_r = axis_tmax(origin.y, row, step_r, dy);
    const double tdelta_c = step_c != 0 ? kFineCellM / std::abs(dx) : inf;
    const double tdelta_r = step_r != 0 ? kFineCellM / std::abs(dy) : inf;

    while (true) {
        double t;
        if (tmax_c < tmax_r) {
            t = tmax_c;
            tmax_c += tdelta_c;
            col += step_c;
        } else if (tmax_r < tmax_c) {
            t = tmax_r;
            tmax_r += tdelta_r;
            row += step_r;
        } else {
            if (tmax_c == inf) return std::nullopt;  // zero-direction ray cannot advance
            t = tmax_c;  // exact corner crossing: advance diagonally
            tmax_c += tdelta_c;
            tmax_r += tdelta_r;
            col += step_c;
            row += step_r;
        }
        if (t > max_range) return std::nullopt;
        if (env.obstacle_at_fine(col, row)) return t;
    }
}

// 9 raycasts fanned around pose.theta at the fixed sensor range.
inline ScanResult sense(const EnvironmentMap& env, const Pose& pose) {
    ScanResult scan;
    for (int i = 0; i < kSensorRays; ++i) {
        const double offset = ray_bearing_offset(i);
        scan.rays[i].bearing_offset = offset;
        scan.rays[i].hit_distance = raycast(env, pose, pose.theta + offset, kSensorRangeM);
    }
    return scan;
}

}  // namespace swarmex
