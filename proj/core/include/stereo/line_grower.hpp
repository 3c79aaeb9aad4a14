#pragma once

#include <cstdint>
#include <vector>

#include "stereo/energy.hpp"
#include "stereo/global_matcher.hpp"
#include "stereo/image.hpp"

namespace stereo {

/// Line-growing pixel statuses, matching the exported status-map encoding.
enum class PointStatus : std::uint8_t {
    NotProcessed = 0,
    Region = 1,  // grown from a root at the region disparity
    Root = 2,    // seed pixel of a grown line
    Idle = 3,    // rejected candidate, no disparity assigned
};

struct PointStatusMap {
    int width = 0;
    int height = 0;
    std::vector<PointStatus> statuses;

    PointStatusMap() = default;
    PointStatusMap(int w, int h)
        : width(w), height(h), statuses(std::size_t(w) * h, PointStatus::NotProcessed) {}

    PointStatus& at(int row, int col) { return statuses[std::size_t(row) * width + col]; }
    PointStatus at(int row, int col) const { return statuses[std::size_t(row) * width + col]; }

    std::size_t count(PointStatus s) const;
};

/// Line-growing configuration. The window is a 1 x m line; v_lg is the
/// growing threshold in the same normalized energy units as e(i,j,d).
struct GrowConfig {
    MatchWindow win{1, 5};
    int d_max = 40;
    double v_lg = 60.0;
};

struct LineGrowResult {
    DisparityMap disparity;
    PointStatusMap status;
};

/// Scanline matcher: per row, root selection picks the disparity with minimum
/// line-window energy and accepts it if that energy is <= v_lg; the accepted
/// region disparity then grows rightward pixel by pixel while the energy at
/// that single disparity stays <= v_lg. A failed grow step re-enters root
/// selection at the failed pixel. Idle pixels receive kNoEstimate. Rows share
/// no state, so row-parallel execution is deterministic.
LineGrowResult line_grow_match(const ColorImage& left, const ColorImage& right,
                               const GrowConfig& cfg);

/// Lengths of all maximal root+region runs, row by row. Diagnostic for how
/// the growing threshold trades line width against idle points.
std::vector<int> segment_lengths(const PointStatusMap& status);

}  // namespace stereo
