#include "stereo/depth.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "stereo/parallel.hpp"

namespace stereo {

DepthMap depth_from_disparity(const DisparityMap& d, const CameraRig& rig) {
    if (rig.f <= 0.0 || rig.t <= 0.0)
        throw std::invalid_argument("depth_from_disparity: rig needs f > 0 and T > 0");

    DepthMap depth(d.width, d.height);
    const double ft = rig.f * rig.t;
    for (std::size_t idx = 0; idx < d.values.size(); ++idx) {
        const int disp = d.values[idx];
        if (disp > 0) depth.z[idx] = ft / disp;  // d = 0 or ne stays kNoDepth
    }
    return depth;
}

PointCloud project_xyz(const DepthMap& depth, const CameraRig& rig, const ColorImage& colors) {
    if (depth.width != colors.width || depth.height != colors.height)
        throw std::invalid_argument("project_xyz: image dimensions differ");
    if (rig.f <= 0.0) throw std::invalid_argument("project_xyz: rig needs f > 0");

    PointCloud cloud;
    for (int i = 0; i < depth.height; ++i) {
        for (int j = 0; j < depth.width; ++j) {
            const double z = depth.at(i, j);
            if (is_no_depth(z)) continue;
            const double scale = (z - rig.f) / rig.f;
            CloudPoint p;
            p.x = scale * i;
            p.y = scale * j;
            p.z = z;
            p.r = colors.at(i, j, 0);
            p.g = colors.at(i, j, 1);
            p.b = colors.at(i, j, 2);
            cloud.points.push_back(p);
        }
    }
    return cloud;
}

DisparityMap median_filter(const DisparityMap& d, int window) {
    if (window < 1 || window % 2 == 0)
        throw std::invalid_argument("median_filter: window must be odd and >= 1");

    const int radius = window / 2;
    DisparityMap out(d.width, d.height);

    parallel_chunks(d.height, [&](int begin, int end) {
        std::vector<int> values;
        values.reserve(std::size_t(window) * window);
        for (int i = begin; i < end; ++i) {
            for (int j = 0; j < d.width; ++j) {
                values.clear();
                const int r0 = std::max(0, i - radius), r1 = std::min(d.height - 1, i + radius);
                const int c0 = std::max(0, j - radius), c1 = std::min(d.width - 1, j + radius);
                for (int r = r0; r <= r1; ++r)
                    for (int c = c0; c <= c1; ++c)
                        if (d.has(r, c)) values.push_back(d.at(r, c));
                if (values.empty()) continue;  // all-ne window stays ne
                // Lower-middle median keeps outputs in the input value set.
                auto mid = values.begin() + (values.size() - 1) / 2;
                std::nth_element(values.begin(), mid, values.end());
                out.at(i, j) = *mid;
            }
        }
    });
    return out;
}

void export_ply(const PointCloud& cloud, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open file for writing");

    out << "ply\nformat ascii 1.0\n";
    out << "element vertex " << cloud.points.size() << "\n";
    out << "property float x\nproperty float y\nproperty float z\n";
    out << "property uchar red\nproperty uchar green\nproperty uchar blue\n";
    out << "end_header\n";
    out.precision(9);
    for (const CloudPoint& p : cloud.points) {
        out << p.x << " " << p.y << " " << p.z << " " << int(p.r) << " " << int(p.g) << " "
            << int(p.b) << "\n";
    }
    if (!out) throw std::runtime_error(path + ": write failed");
}

GrayMap depth_raster(const DepthMap& depth) {
    GrayMap raster(depth.width, depth.height, std::numeric_limits<double>::quiet_NaN());
    for (std::size_t i = 0; i < depth.z.size(); ++i) raster.data[i] = depth.z[i];
    return raster;
}

}  // namespace stereo
