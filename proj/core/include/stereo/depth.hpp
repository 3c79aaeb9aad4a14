#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "stereo/global_matcher.hpp"
#include "stereo/image.hpp"

namespace stereo {

/// Stereo rig constants relating disparity to depth: Z = f * T / d.
/// The units are abstract; f and T are used verbatim.
struct CameraRig {
    double f = 30.0;  // focal length
    double t = 20.0;  // baseline T
};

/// "no depth" marker (d = 0 or ne disparity).
inline constexpr double kNoDepth = std::numeric_limits<double>::quiet_NaN();

inline bool is_no_depth(double v) { return v != v; }

struct DepthMap {
    int width = 0;
    int height = 0;
    std::vector<double> z;  // positive depth, or kNoDepth

    DepthMap() = default;
    DepthMap(int w, int h) : width(w), height(h), z(std::size_t(w) * h, kNoDepth) {}

    double& at(int row, int col) { return z[std::size_t(row) * width + col]; }
    double at(int row, int col) const { return z[std::size_t(row) * width + col]; }
};

struct CloudPoint {
    double x = 0.0, y = 0.0, z = 0.0;
    std::uint8_t r = 0, g = 0, b = 0;
};

/// One point per non-ne depth pixel, colored from the right image.
struct PointCloud {
    std::vector<CloudPoint> points;
};

/// Z(i,j) = f * T / d(i,j). Zero and ne disparities yield kNoDepth, keeping
/// the output finite where it is defined. Throws on an invalid rig.
DepthMap depth_from_disparity(const DisparityMap& d, const CameraRig& rig);

/// World coordinates per pixel: X = ((Z - f) / f) * i, Y = ((Z - f) / f) * j
/// with (i, j) = (row, column). Color is sampled from the right image.
PointCloud project_xyz(const DepthMap& depth, const CameraRig& rig, const ColorImage& colors);

/// Square median filter over disparities. Per pixel, the median of the non-ne
/// values inside the window (shrinking at borders); an all-ne window stays
/// ne. Even counts take the lower middle value so outputs remain valid
/// disparities. Window must be odd and >= 1.
DisparityMap median_filter(const DisparityMap& d, int window = 5);

/// Writes an ASCII PLY with x, y, z, red, green, blue vertex properties.
void export_ply(const PointCloud& cloud, const std::string& path);

/// Depth rendered into a raster for PGM export (ne pixels stay non-finite).
GrayMap depth_raster(const DepthMap& depth);

}  // namespace stereo
