#include "stereo/line_grower.hpp"

#include <algorithm>
#include <stdexcept>

#include "stereo/parallel.hpp"

namespace stereo {
namespace {

// Matching energy of the 1 x m line window anchored at (i, j), left image
// sampled d columns to the right. Caller guarantees both windows fit.
double line_energy(const ColorImage& left, const ColorImage& right, int i, int j, int d, int m) {
    double sum = 0.0;
    for (int y = j; y < j + m; ++y) {
        for (int k = 0; k < 3; ++k) {
            const double diff = left.sample(i, y + d, k) - right.sample(i, y, k);
            sum += diff * diff;
        }
    }
    return sum / (3.0 * m);
}

}  // namespace

std::size_t PointStatusMap::count(PointStatus s) const {
    return static_cast<std::size_t>(std::count(statuses.begin(), statuses.end(), s));
}

LineGrowResult line_grow_match(const ColorImage& left, const ColorImage& right,
                               const GrowConfig& cfg) {
    if (!left.same_size(right))
        throw std::invalid_argument("line_grow_match: image dimensions differ");
    if (cfg.win.rows != 1) throw std::invalid_argument("line_grow_match: window must be 1 x m");
    if (cfg.win.cols < 1) throw std::invalid_argument("line_grow_match: window must be 1 x m");
    if (cfg.d_max < 0) throw std::invalid_argument("line_grow_match: d_max must be >= 0");
    if (cfg.v_lg < 0.0) throw std::invalid_argument("line_grow_match: v_lg must be >= 0");

    const int width = right.width, height = right.height;
    const int m = cfg.win.cols;
    LineGrowResult result{DisparityMap(width, height), PointStatusMap(width, height)};

    parallel_chunks(height, [&](int row_begin, int row_end) {
        for (int i = row_begin; i < row_end; ++i) {
            int j = 0;
            while (j < width) {
                if (j + m > width) {
                    // No line window fits at any disparity.
                    result.status.at(i, j) = PointStatus::Idle;
                    ++j;
                    continue;
                }

                // Root selection: full disparity sweep at this pixel.
                double best = kInvalidEnergy;
                int best_d = kNoEstimate;
                for (int d = 0; d <= cfg.d_max && j + d + m <= width; ++d) {
                    const double e = line_energy(left, right, i, j, d, m);
                    if (e < best) {
                        best = e;
                        best_d = d;
                    }
                }
                if (!(best <= cfg.v_lg)) {
                    result.status.at(i, j) = PointStatus::Idle;
                    ++j;
                    continue;
                }

                const int region_d = best_d;
                result.status.at(i, j) = PointStatus::Root;
                result.disparity.at(i, j) = region_d;
                ++j;

                // Region growing: only the region disparity is evaluated.
                while (j < width && j + m <= width && j + region_d + m <= width) {
                    if (line_energy(left, right, i, j, region_d, m) > cfg.v_lg) break;
                    result.status.at(i, j) = PointStatus::Region;
                    result.disparity.at(i, j) = region_d;
                    ++j;
                }
            }
        }
    });
    return result;
}

std::vector<int> segment_lengths(const PointStatusMap& status) {
    std::vector<int> lengths;
    for (int i = 0; i < status.height; ++i) {
        int run = 0;
        for (int j = 0; j < status.width; ++j) {
            const PointStatus s = status.at(i, j);
            if (s == PointStatus::Root || s == PointStatus::Region) {
                ++run;
            } else if (run > 0) {
                lengths.push_back(run);
                run = 0;
            }
        }
        if (run > 0) lengths.push_back(run);
    }
    return lengths;
}

}  // namespace stereo
