#pragma once

#include <filesystem>

#include "unshred/raster.hpp"

namespace unshred {

/// Loads an 8-bit grayscale or RGB(A) PNG. RGB is converted by luminance
/// Y = round(0.299 R + 0.587 G + 0.114 B); alpha is dropped. 16-bit files
/// raise PngError{unsupported_depth}.
GrayImage load_png(const std::filesystem::path& path);

void save_png(const GrayImage& img, const std::filesystem::path& path);

/// Binary rasters are written ink-black: 1 -> 0, 0 -> 255.
void save_png(const BinaryImage& img, const std::filesystem::path& path);

}  // namespace unshred
