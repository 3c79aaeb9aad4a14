#pragma once

#include <vector>

#include "stereo/energy.hpp"
#include "stereo/image.hpp"

namespace stereo {

/// Distinguished "no-estimated" disparity state.
inline constexpr int kNoEstimate = -1;

/// Integer disparity per right-image pixel, or kNoEstimate where no disparity
/// could be assigned (left margin, rejected or filtered pixels).
struct DisparityMap {
    int width = 0;
    int height = 0;
    std::vector<int> values;  // disparity in [0, d_max] or kNoEstimate

    DisparityMap() = default;
    DisparityMap(int w, int h, int fill = kNoEstimate)
        : width(w), height(h), values(std::size_t(w) * h, fill) {}

    int& at(int row, int col) { return values[std::size_t(row) * width + col]; }
    int at(int row, int col) const { return values[std::size_t(row) * width + col]; }
    bool has(int row, int col) const { return at(row, col) != kNoEstimate; }

    std::size_t estimated_count() const;
};

/// Per-pixel winner-take-all: the disparity with minimum finite energy across
/// slices, ties broken toward the smallest d. Pixels with no finite entry in
/// any slice become kNoEstimate.
DisparityMap wta_select(const ErrorEnergyVolume& volume);

struct GlobalMatchResult {
    DisparityMap disparity;
    ErrorEnergyVolume volume;  // smoothed energies the selection ran on
};

/// Full global matcher: builds the energy volume, smooths every slice
/// `iterations` times with the same window, then selects per-pixel minima.
GlobalMatchResult global_match(const ColorImage& left, const ColorImage& right, MatchWindow win,
                               int d_max, int iterations);

}  // namespace stereo
