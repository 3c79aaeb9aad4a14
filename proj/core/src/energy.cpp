#include "stereo/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "stereo/parallel.hpp"

namespace stereo {
namespace {

void check_window(MatchWindow win) {
    if (win.rows < 1 || win.cols < 1)
        throw std::invalid_argument("match window must be at least 1x1");
}

// One pass of the centered, border-shrinking mean filter.
GrayMap box_smooth_once(const GrayMap& in, MatchWindow win) {
    GrayMap out(in.width, in.height);
    const int row_lo = -((win.rows - 1) / 2), row_hi = win.rows / 2;
    const int col_lo = -((win.cols - 1) / 2), col_hi = win.cols / 2;

    parallel_chunks(in.height, [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            for (int j = 0; j < in.width; ++j) {
                if (in.at(i, j) == kInvalidEnergy) {
                    out.at(i, j) = kInvalidEnergy;
                    continue;
                }
                double sum = 0.0;
                int count = 0;
                const int r0 = std::max(0, i + row_lo), r1 = std::min(in.height - 1, i + row_hi);
                const int c0 = std::max(0, j + col_lo), c1 = std::min(in.width - 1, j + col_hi);
                for (int r = r0; r <= r1; ++r) {
                    for (int c = c0; c <= c1; ++c) {
                        const double v = in.at(r, c);
                        if (v == kInvalidEnergy) continue;
                        sum += v;
                        ++count;
                    }
                }
                out.at(i, j) = count > 0 ? sum / count : kInvalidEnergy;
            }
        }
    });
    return out;
}

}  // namespace

ErrorEnergyVolume compute_energy_volume(const ColorImage& left, const ColorImage& right,
                                        MatchWindow win, int d_max) {
    if (!left.same_size(right))
        throw std::invalid_argument("compute_energy_volume: image dimensions differ");
    check_window(win);
    if (d_max < 0) throw std::invalid_argument("compute_energy_volume: d_max must be >= 0");

    ErrorEnergyVolume volume;
    volume.width = right.width;
    volume.height = right.height;
    volume.d_max = d_max;
    volume.slices.assign(d_max + 1, GrayMap(right.width, right.height, kInvalidEnergy));

    const int n = win.rows, m = win.cols;
    const double denom = 3.0 * n * m;

    parallel_chunks(d_max + 1, [&](int d_begin, int d_end) {
        for (int d = d_begin; d < d_end; ++d) {
            GrayMap& slice = volume.slices[d];
            const int max_i = right.height - n;
            const int max_j = right.width - m - d;  // shifted window must fit the left image
            for (int i = 0; i <= max_i; ++i) {
                for (int j = 0; j <= max_j; ++j) {
                    double sum = 0.0;
                    for (int x = i; x < i + n; ++x) {
                        for (int y = j; y < j + m; ++y) {
                            for (int k = 0; k < 3; ++k) {
                                const double diff = left.sample(x, y + d, k) - right.sample(x, y, k);
                                sum += diff * diff;
                            }
                        }
                    }
                    slice.at(i, j) = sum / denom;
                }
            }
        }
    });
    return volume;
}

GrayMap box_smooth(const GrayMap& slice, MatchWindow win, int iterations) {
    check_window(win);
    if (iterations < 0) throw std::invalid_argument("box_smooth: iterations must be >= 0");
    GrayMap current = slice;
    for (int it = 0; it < iterations; ++it) current = box_smooth_once(current, win);
    return current;
}

void smooth_volume(ErrorEnergyVolume& volume, MatchWindow win, int iterations) {
    check_window(win);
    if (iterations <= 0) return;
    // Rows are already parallelized inside box_smooth; slices stay sequential
    // here to keep peak memory at two buffers.
    for (auto& slice : volume.slices) slice = box_smooth(slice, win, iterations);
}

}  // namespace stereo
