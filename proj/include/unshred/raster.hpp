#pragma once

#include <Eigen/Core>

#include <cstdint>

#include "unshred/errors.hpp"

namespace unshred {

// Row-major dense images. GrayImage holds intensities in [0,255]; BinaryImage
// holds ink as true/1 and background as false/0.
template <typename Scalar>
using Image = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using GrayImage = Image<std::uint8_t>;
using BinaryImage = Image<bool>;

struct SauvolaParams {
    int window = 33;   // odd, >= 3
    double k = 0.2;    // in (0,1)
    double R = 128.0;  // dynamic range of the standard deviation
};

/// Sauvola adaptive thresholding: T = m * (1 + k * (s/R - 1)) over a
/// window-sized neighbourhood whose out-of-range coordinates are clamped to
/// the nearest edge pixel (replicate-edge statistics). A pixel becomes ink
/// iff its intensity is strictly below T.
BinaryImage binarize_sauvola(const GrayImage& img, const SauvolaParams& params = {});

inline double ink_ratio(const BinaryImage& r) {
    if (r.size() == 0) return 0.0;
    return static_cast<double>(r.count()) / static_cast<double>(r.size());
}

inline bool is_blank(const BinaryImage& r) { return !r.any(); }

/// Renders ink black on white: 1 -> 0, 0 -> 255.
GrayImage to_gray(const BinaryImage& r);

/// Inverse of to_gray for strictly two-level images; 1 iff intensity < 128.
BinaryImage threshold_midpoint(const GrayImage& img);

}  // namespace unshred
