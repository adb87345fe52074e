#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace animate {

/// Interleaved 8-bit image, row-major, origin top-left.
struct ImageU8 {
    int width = 0;
    int height = 0;
    int channels = 0;  // 1 = gray, 3 = RGB
    std::vector<std::uint8_t> pixels;

    static ImageU8 black(int w, int h, int c) {
        ImageU8 img;
        img.width = w;
        img.height = h;
        img.channels = c;
        img.pixels.assign(static_cast<std::size_t>(w) * h * c, 0);
        return img;
    }

    std::uint8_t& at(int x, int y, int c) {
        return pixels[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    std::uint8_t at(int x, int y, int c) const {
        return pixels[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
};

ImageU8 read_png(const std::string& path);
void write_png(const std::string& path, const ImageU8& image);

/// Reads PNG or PGM (binary P5 / ascii P2) depending on file magic.
ImageU8 read_image(const std::string& path);

/// Grayscale conversion (luminance mean); identity for 1-channel input.
ImageU8 to_gray(const ImageU8& image);

/// Bilinear resize, channel-wise.
ImageU8 resize_bilinear(const ImageU8& image, int out_width, int out_height);

}  // namespace animate
