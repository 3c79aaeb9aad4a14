#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace stereo {

/// Rectified 3-channel 8-bit image, row-major RGB interleaved.
/// Samples are promoted to double for all energy arithmetic.
struct ColorImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // width * height * 3

    ColorImage() = default;
    ColorImage(int w, int h) : width(w), height(h), data(std::size_t(w) * h * 3, 0) {}

    std::uint8_t& at(int row, int col, int channel) {
        return data[(std::size_t(row) * width + col) * 3 + channel];
    }
    std::uint8_t at(int row, int col, int channel) const {
        return data[(std::size_t(row) * width + col) * 3 + channel];
    }
    double sample(int row, int col, int channel) const {
        return static_cast<double>(at(row, col, channel));
    }
    bool same_size(const ColorImage& other) const {
        return width == other.width && height == other.height;
    }
};

/// Row-major real-valued raster. Carrier for energy slices, disparity
/// visualizations and depth renderings.
struct GrayMap {
    int width = 0;
    int height = 0;
    std::vector<double> data;  // width * height

    GrayMap() = default;
    GrayMap(int w, int h, double fill = 0.0) : width(w), height(h), data(std::size_t(w) * h, fill) {}

    double& at(int row, int col) { return data[std::size_t(row) * width + col]; }
    double at(int row, int col) const { return data[std::size_t(row) * width + col]; }
};

/// Loads a color image from PPM (P6/P3) or 8-bit truecolor PNG.
/// Throws std::runtime_error on unreadable files or unsupported formats.
ColorImage load_color(const std::string& path);

/// Loads both images of a rectified pair and checks that their
/// dimensions agree. Throws on load failure or dimension mismatch.
std::pair<ColorImage, ColorImage> load_stereo_pair(const std::string& left_path,
                                                   const std::string& right_path);

/// Loads a PGM (P5/P2) raster.
GrayMap load_gray(const std::string& path);

/// Writes a binary PPM (P6). Round-trips bit-exactly through load_color.
void save_color(const ColorImage& image, const std::string& path);

/// Writes a binary PGM (P5). With normalize the finite values are rescaled
/// linearly to [0,255]; without it they are rounded and clamped. Non-finite
/// entries (ne / invalid sentinels) are always written as 0.
void save_gray(const GrayMap& map, const std::string& path, bool normalize);

}  // namespace stereo
