#include "animate/image.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>

#include "animate/errors.hpp"

namespace animate {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

ImageU8 read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::string magic;
    in >> magic;
    if (magic != "P5" && magic != "P2") throw ParseError("'" + path + "': not a PGM file");

    auto next_value = [&in, &path]() -> long {
        // skip whitespace and '#' comment lines
        while (true) {
            int c = in.peek();
            if (c == '#') {
                std::string line;
                std::getline(in, line);
            } else if (std::isspace(c)) {
                in.get();
            } else {
                break;
            }
        }
        long v = -1;
        in >> v;
        if (!in) throw ParseError("'" + path + "': truncated PGM header");
        return v;
    };

    const long w = next_value();
    const long h = next_value();
    const long maxval = next_value();
    if (w <= 0 || h <= 0 || maxval <= 0 || maxval > 65535)
        throw ParseError("'" + path + "': bad PGM dimensions");

    ImageU8 img = ImageU8::black(static_cast<int>(w), static_cast<int>(h), 1);
    if (magic == "P5") {
        in.get();  // single whitespace after maxval
        std::vector<char> raw(static_cast<std::size_t>(w) * h * (maxval > 255 ? 2 : 1));
        in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
        if (!in) throw ParseError("'" + path + "': truncated PGM data");
        for (std::size_t i = 0; i < static_cast<std::size_t>(w) * h; ++i) {
            unsigned v = maxval > 255
                             ? (static_cast<unsigned char>(raw[2 * i]) << 8 |
                                static_cast<unsigned char>(raw[2 * i + 1]))
                             : static_cast<unsigned char>(raw[i]);
            img.pixels[i] = static_cast<std::uint8_t>(v * 255 / maxval);
        }
    } else {
        for (std::size_t i = 0; i < static_cast<std::size_t>(w) * h; ++i) {
            long v = next_value();
            img.pixels[i] = static_cast<std::uint8_t>(std::clamp(v * 255 / maxval, 0L, 255L));
        }
    }
    return img;
}

}  // namespace

ImageU8 read_png(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw IoError("cannot open '" + path + "'");

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw IoError("libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw ParseError("'" + path + "': PNG decode failed");
    }

    png_init_io(png, fp.get());
    png_read_info(png, info);

    const png_uint_32 w = png_get_image_width(png, info);
    const png_uint_32 h = png_get_image_height(png, info);
    const png_byte color = png_get_color_type(png, info);
    const png_byte depth = png_get_bit_depth(png, info);

    // Normalize everything to 8-bit RGB or gray.
    if (depth == 16) png_set_strip_16(png);
    if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
    png_read_update_info(png, info);

    const int channels = png_get_channels(png, info);
    ImageU8 img = ImageU8::black(static_cast<int>(w), static_cast<int>(h), channels);
    std::vector<png_bytep> rows(h);
    for (png_uint_32 y = 0; y < h; ++y)
        rows[y] = img.pixels.data() + static_cast<std::size_t>(y) * w * channels;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    if (channels != 1 && channels != 3)
        throw ParseError("'" + path + "': unsupported channel count " + std::to_string(channels));
    return img;
}

void write_png(const std::string& path, const ImageU8& image) {
    if (image.channels != 1 && image.channels != 3)
        throw ParameterError("write_png: channels must be 1 or 3");
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw IoError("cannot open '" + path + "' for writing");

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("'" + path + "': PNG encode failed");
    }

    png_init_io(png, fp.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(image.width),
                 static_cast<png_uint_32>(image.height), 8,
                 image.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    std::vector<png_const_bytep> rows(image.height);
    for (int y = 0; y < image.height; ++y)
        rows[y] = image.pixels.data() + static_cast<std::size_t>(y) * image.width * image.channels;
    png_write_image(png, const_cast<png_bytepp>(const_cast<png_const_bytep*>(rows.data())));
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

ImageU8 read_image(const std::string& path) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) throw IoError("cannot open '" + path + "'");
    char magic[2] = {0, 0};
    probe.read(magic, 2);
    probe.close();
    if (magic[0] == 'P' && (magic[1] == '5' || magic[1] == '2')) return read_pgm(path);
    return read_png(path);
}

ImageU8 to_gray(const ImageU8& image) {
    if (image.channels == 1) return image;
    ImageU8 out = ImageU8::black(image.width, image.height, 1);
    for (int y = 0; y < image.height; ++y) {
        for (int x = 0; x < image.width; ++x) {
            int sum = 0;
            for (int c = 0; c < image.channels; ++c) sum += image.at(x, y, c);
            out.at(x, y, 0) = static_cast<std::uint8_t>(sum / image.channels);
        }
    }
    return out;
}

ImageU8 resize_bilinear(const ImageU8& image, int out_width, int out_height) {
    if (out_width <= 0 || out_height <= 0)
        throw ParameterError("resize_bilinear: output size must be positive");
    ImageU8 out = ImageU8::black(out_width, out_height, image.channels);
    const double sx = static_cast<double>(image.width) / out_width;
    const double sy = static_cast<double>(image.height) / out_height;
    for (int y = 0; y < out_height; ++y) {
        const double fy = std::max(0.0, (y + 0.5) * sy - 0.5);
        const int y0 = std::min(static_cast<int>(fy), image.height - 1);
        const int y1 = std::min(y0 + 1, image.height - 1);
        const double wy = fy - y0;
        for (int x = 0; x < out_width; ++x) {
            const double fx = std::max(0.0, (x + 0.5) * sx - 0.5);
            const int x0 = std::min(static_cast<int>(fx), image.width - 1);
            const int x1 = std::min(x0 + 1, image.width - 1);
            const double wx = fx - x0;
            for (int c = 0; c < image.channels; ++c) {
                const double top = (1.0 - wx) * image.at(x0, y0, c) + wx * image.at(x1, y0, c);
                const double bot = (1.0 - wx) * image.at(x0, y1, c) + wx * image.at(x1, y1, c);
                out.at(x, y, c) = static_cast<std::uint8_t>(
                    std::clamp((1.0 - wy) * top + wy * bot + 0.5, 0.0, 255.0));
            }
        }
    }
    return out;
}

}  // namespace animate
