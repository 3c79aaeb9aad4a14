#pragma once

#include <limits>
#include <vector>

#include "stereo/image.hpp"

namespace stereo {

/// Block-matching window: n rows by m columns, anchored at its top-left pixel.
struct MatchWindow {
    int rows = 1;  // n
    int cols = 1;  // m
};

/// Marks energy entries whose matching window exits either image.
inline constexpr double kInvalidEnergy = std::numeric_limits<double>::infinity();

/// Per-disparity error-energy stack e(i,j,d), d = 0..d_max, registered to the
/// right image. Entries are mean squared RGB differences; kInvalidEnergy where
/// the window does not fit.
struct ErrorEnergyVolume {
    int width = 0;
    int height = 0;
    int d_max = 0;
    std::vector<GrayMap> slices;  // d_max + 1 slices

    const GrayMap& slice(int d) const { return slices[d]; }
    GrayMap& slice(int d) { return slices[d]; }
};

/// Builds the error-energy volume: for every disparity d and right-image
/// anchor (i,j), the mean squared difference over the n x m window between
/// the right image and the left image shifted d columns:
///
///   e(i,j,d) = 1/(3nm) * sum_{x,y,k} (L(x, y+d, k) - R(x, y, k))^2
///
/// Windows that exit the right image, or whose shifted counterpart exits the
/// left image, get kInvalidEnergy. Throws on dimension mismatch or d_max < 0.
ErrorEnergyVolume compute_energy_volume(const ColorImage& left, const ColorImage& right,
                                        MatchWindow win, int d_max);

/// Applies the n x m mean filter `iterations` times. The window is centered
/// (even sizes extend one pixel further toward increasing index) and shrinks
/// at image borders. Invalid entries are excluded from every average and stay
/// invalid in the output; iterations = 0 returns the input unchanged.
GrayMap box_smooth(const GrayMap& slice, MatchWindow win, int iterations);

/// box_smooth over every slice of the volume, in place. Slices are
/// independent, so the result does not depend on scheduling.
void smooth_volume(ErrorEnergyVolume& volume, MatchWindow win, int iterations);

}  // namespace stereo
