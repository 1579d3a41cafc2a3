#include "unshred/png_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <memory>
#include <vector>

namespace unshred {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

[[noreturn]] void fail(PngErrorKind kind, const std::string& msg) { throw PngError(kind, msg); }

}  // namespace

GrayImage load_png(const std::filesystem::path& path) {
    FilePtr file(std::fopen(path.c_str(), "rb"));
    if (!file) fail(PngErrorKind::missing_file, "cannot open " + path.string());

    png_byte header[8];
    if (std::fread(header, 1, 8, file.get()) != 8 || png_sig_cmp(header, 0, 8) != 0)
        fail(PngErrorKind::malformed, "not a PNG file: " + path.string());

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(PngErrorKind::malformed, "libpng init failed");
    }

    std::vector<png_bytep> row_ptrs;
    GrayImage out;
    // libpng reports errors through longjmp; everything allocated past this
    // point must be owned outside the jump or freed in the handler.
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(PngErrorKind::malformed, "malformed PNG: " + path.string());
    }

    png_init_io(png, file.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    const png_uint_32 width = png_get_image_width(png, info);
    const png_uint_32 height = png_get_image_height(png, info);
    const int bit_depth = png_get_bit_depth(png, info);
    const int color_type = png_get_color_type(png, info);

    if (bit_depth == 16) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(PngErrorKind::unsupported_depth, "16-bit PNG not supported: " + path.string());
    }

    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
    png_read_update_info(png, info);

    const int channels = png_get_channels(png, info);
    const std::size_t rowbytes = png_get_rowbytes(png, info);
    std::vector<png_byte> raw(rowbytes * height);
    row_ptrs.resize(height);
    for (png_uint_32 r = 0; r < height; ++r) row_ptrs[r] = raw.data() + r * rowbytes;
    png_read_image(png, row_ptrs.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    out.resize(static_cast<Eigen::Index>(height), static_cast<Eigen::Index>(width));
    if (channels == 1) {
        for (png_uint_32 r = 0; r < height; ++r)
            for (png_uint_32 c = 0; c < width; ++c) out(r, c) = raw[r * rowbytes + c];
    } else if (channels == 3) {
        for (png_uint_32 r = 0; r < height; ++r) {
            const png_byte* px = raw.data() + r * rowbytes;
            for (png_uint_32 c = 0; c < width; ++c, px += 3) {
                const double y = 0.299 * px[0] + 0.587 * px[1] + 0.114 * px[2];
                out(r, c) = static_cast<std::uint8_t>(std::lround(y));
            }
        }
    } else {
        fail(PngErrorKind::malformed, "unexpected channel count in " + path.string());
    }
    return out;
}

namespace {

void write_gray8(const GrayImage& img, const std::filesystem::path& path) {
    if (img.size() == 0) throw InvalidInput("save_png: empty image");
    FilePtr file(std::fopen(path.c_str(), "wb"));
    if (!file) fail(PngErrorKind::write_failure, "cannot create " + path.string());

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_write_struct(&png, &info);
        fail(PngErrorKind::write_failure, "libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        fail(PngErrorKind::write_failure, "PNG write failed: " + path.string());
    }

    png_init_io(png, file.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.cols()), static_cast<png_uint_32>(img.rows()), 8,
                 PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<png_bytep> rows(static_cast<std::size_t>(img.rows()));
    for (Eigen::Index r = 0; r < img.rows(); ++r)
        rows[static_cast<std::size_t>(r)] = const_cast<png_bytep>(img.data() + r * img.cols());
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

}  // namespace

void save_png(const GrayImage& img, const std::filesystem::path& path) { write_gray8(img, path); }

void save_png(const BinaryImage& img, const std::filesystem::path& path) { write_gray8(to_gray(img), path); }

}  // namespace unshred
