#include "stereo/image.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace stereo {
namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::runtime_error(path + ": " + what);
}

// Reads the next whitespace-delimited PNM header token, skipping '#' comments.
std::string next_token(std::istream& in) {
    std::string tok;
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    while (c != EOF && !std::isspace(c)) {
        tok.push_back(static_cast<char>(c));
        c = in.get();
    }
    return tok;
}

int parse_header_int(std::istream& in, const std::string& path, const char* field) {
    const std::string tok = next_token(in);
    try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        fail(path, std::string("malformed ") + field + " in PNM header");
    }
}

ColorImage load_ppm(std::istream& in, const std::string& path, bool binary) {
    const int width = parse_header_int(in, path, "width");
    const int height = parse_header_int(in, path, "height");
    const int maxval = parse_header_int(in, path, "maxval");
    if (width <= 0 || height <= 0) fail(path, "empty image");
    if (maxval <= 0 || maxval > 255) fail(path, "unsupported maxval (8-bit input only)");

    ColorImage img(width, height);
    if (binary) {
        // next_token consumed the single whitespace after the maxval, so the
        // stream already sits on the first raster byte.
        in.read(reinterpret_cast<char*>(img.data.data()),
                static_cast<std::streamsize>(img.data.size()));
        if (in.gcount() != static_cast<std::streamsize>(img.data.size()))
            fail(path, "truncated P6 raster");
    } else {
        for (auto& sample : img.data) {
            const int v = parse_header_int(in, path, "sample");
            if (v > maxval) fail(path, "sample exceeds maxval");
            sample = static_cast<std::uint8_t>(v);
        }
    }
    return img;
}

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;
    std::FILE* fp = nullptr;
    ~PngReader() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
        if (fp) std::fclose(fp);
    }
};

ColorImage load_png(const std::string& path) {
    PngReader r;
    r.fp = std::fopen(path.c_str(), "rb");
    if (!r.fp) fail(path, "cannot open file");

    r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!r.png) fail(path, "png_create_read_struct failed");
    r.info = png_create_info_struct(r.png);
    if (!r.info) fail(path, "png_create_info_struct failed");
    if (setjmp(png_jmpbuf(r.png))) fail(path, "corrupt PNG stream");

    png_init_io(r.png, r.fp);
    png_read_info(r.png, r.info);

    const png_uint_32 width = png_get_image_width(r.png, r.info);
    const png_uint_32 height = png_get_image_height(r.png, r.info);
    const int bit_depth = png_get_bit_depth(r.png, r.info);
    const int color_type = png_get_color_type(r.png, r.info);
    if (bit_depth != 8 || color_type != PNG_COLOR_TYPE_RGB)
        fail(path, "unsupported PNG variant (need 8-bit truecolor RGB)");
    if (png_get_interlace_type(r.png, r.info) != PNG_INTERLACE_NONE)
        fail(path, "unsupported PNG variant (interlaced)");
    if (width == 0 || height == 0) fail(path, "empty image");

    ColorImage img(static_cast<int>(width), static_cast<int>(height));
    std::vector<png_bytep> rows(height);
    for (png_uint_32 i = 0; i < height; ++i)
        rows[i] = img.data.data() + std::size_t(i) * width * 3;
    png_read_image(r.png, rows.data());
    png_read_end(r.png, nullptr);
    return img;
}

}  // namespace

ColorImage load_color(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open file");
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (in.gcount() != 2) fail(path, "truncated file");

    if (magic[0] == 'P' && (magic[1] == '6' || magic[1] == '3'))
        return load_ppm(in, path, magic[1] == '6');
    if (static_cast<unsigned char>(magic[0]) == 0x89 && magic[1] == 'P') {
        in.close();
        return load_png(path);
    }
    fail(path, "unsupported format (expected PPM P6/P3 or PNG truecolor)");
}

std::pair<ColorImage, ColorImage> load_stereo_pair(const std::string& left_path,
                                                   const std::string& right_path) {
    ColorImage left = load_color(left_path);
    ColorImage right = load_color(right_path);
    if (!left.same_size(right)) {
        std::ostringstream msg;
        msg << "stereo pair dimension mismatch: " << left_path << " is " << left.width << "x"
            << left.height << ", " << right_path << " is " << right.width << "x" << right.height;
        throw std::runtime_error(msg.str());
    }
    return {std::move(left), std::move(right)};
}

GrayMap load_gray(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open file");
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (in.gcount() != 2 || magic[0] != 'P' || (magic[1] != '5' && magic[1] != '2'))
        fail(path, "unsupported format (expected PGM P5/P2)");

    const bool binary = magic[1] == '5';
    const int width = parse_header_int(in, path, "width");
    const int height = parse_header_int(in, path, "height");
    const int maxval = parse_header_int(in, path, "maxval");
    if (width <= 0 || height <= 0) fail(path, "empty image");
    if (maxval <= 0 || maxval > 255) fail(path, "unsupported maxval (8-bit input only)");

    GrayMap map(width, height);
    if (binary) {
        std::vector<std::uint8_t> raw(map.data.size());
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
        if (in.gcount() != static_cast<std::streamsize>(raw.size()))
            fail(path, "truncated P5 raster");
        for (std::size_t i = 0; i < raw.size(); ++i) map.data[i] = raw[i];
    } else {
        for (auto& v : map.data) {
            const int s = parse_header_int(in, path, "sample");
            if (s > maxval) fail(path, "sample exceeds maxval");
            v = s;
        }
    }
    return map;
}

void save_color(const ColorImage& image, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(path, "cannot open file for writing");
    out << "P6\n" << image.width << " " << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.data.data()),
              static_cast<std::streamsize>(image.data.size()));
    if (!out) fail(path, "write failed");
}

void save_gray(const GrayMap& map, const std::string& path, bool normalize) {
    if (map.data.empty()) throw std::invalid_argument("save_gray: empty map");

    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    if (normalize) {
        for (double v : map.data) {
            if (!std::isfinite(v)) continue;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    const double range = hi - lo;

    std::vector<std::uint8_t> raw(map.data.size(), 0);
    for (std::size_t i = 0; i < map.data.size(); ++i) {
        const double v = map.data[i];
        if (!std::isfinite(v)) continue;  // sentinel pixels render as 0
        double scaled = v;
        if (normalize) scaled = range > 0.0 ? (v - lo) / range * 255.0 : 0.0;
        raw[i] = static_cast<std::uint8_t>(std::clamp(std::lround(scaled), 0L, 255L));
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) fail(path, "cannot open file for writing");
    out << "P5\n" << map.width << " " << map.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (!out) fail(path, "write failed");
}

}  // namespace stereo
