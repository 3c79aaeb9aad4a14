#include "stereo/global_matcher.hpp"

#include <algorithm>
#include <stdexcept>

#include "stereo/parallel.hpp"

namespace stereo {

std::size_t DisparityMap::estimated_count() const {
    return static_cast<std::size_t>(
        std::count_if(values.begin(), values.end(), [](int v) { return v != kNoEstimate; }));
}

DisparityMap wta_select(const ErrorEnergyVolume& volume) {
    if (volume.slices.empty()) throw std::invalid_argument("wta_select: empty volume");

    DisparityMap map(volume.width, volume.height);
    parallel_chunks(volume.height, [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            for (int j = 0; j < volume.width; ++j) {
                double best = kInvalidEnergy;
                int best_d = kNoEstimate;
                for (int d = 0; d <= volume.d_max; ++d) {
                    const double e = volume.slices[d].at(i, j);
                    if (e < best) {  // strict: ties keep the smallest d
                        best = e;
                        best_d = d;
                    }
                }
                map.at(i, j) = best_d;
            }
        }
    });
    return map;
}

GlobalMatchResult global_match(const ColorImage& left, const ColorImage& right, MatchWindow win,
                               int d_max, int iterations) {
    ErrorEnergyVolume volume = compute_energy_volume(left, right, win, d_max);
    smooth_volume(volume, win, iterations);
    DisparityMap disparity = wta_select(volume);
    return {std::move(disparity), std::move(volume)};
}

}  // namespace stereo
