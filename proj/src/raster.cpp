#include "unshred/raster.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace unshred {

namespace {

using SumArray = Eigen::Array<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Pads by replicating edge pixels, then builds 2D inclusive prefix sums so a
// full window sum is four lookups regardless of position.
void integral_images(const GrayImage& img, int pad, SumArray& sum, SumArray& sum_sq) {
    const Eigen::Index h = img.rows(), w = img.cols();
    const Eigen::Index ph = h + 2 * pad, pw = w + 2 * pad;
    sum.resize(ph, pw);
    sum_sq.resize(ph, pw);
    for (Eigen::Index r = 0; r < ph; ++r) {
        const Eigen::Index sr = std::clamp<Eigen::Index>(r - pad, 0, h - 1);
        std::int64_t row_acc = 0, row_acc_sq = 0;
        for (Eigen::Index c = 0; c < pw; ++c) {
            const Eigen::Index sc = std::clamp<Eigen::Index>(c - pad, 0, w - 1);
            const std::int64_t v = img(sr, sc);
            row_acc += v;
            row_acc_sq += v * v;
            sum(r, c) = row_acc + (r > 0 ? sum(r - 1, c) : 0);
            sum_sq(r, c) = row_acc_sq + (r > 0 ? sum_sq(r - 1, c) : 0);
        }
    }
}

inline std::int64_t box(const SumArray& s, Eigen::Index r0, Eigen::Index c0, Eigen::Index r1, Eigen::Index c1) {
    std::int64_t v = s(r1, c1);
    if (r0 > 0) v -= s(r0 - 1, c1);
    if (c0 > 0) v -= s(r1, c0 - 1);
    if (r0 > 0 && c0 > 0) v += s(r0 - 1, c0 - 1);
    return v;
}

}  // namespace

BinaryImage binarize_sauvola(const GrayImage& img, const SauvolaParams& params) {
    if (img.size() == 0) throw InvalidInput("binarize_sauvola: empty image");
    if (params.window < 3 || params.window % 2 == 0)
        throw InvalidInput("binarize_sauvola: window must be odd and >= 3");
    if (!(params.k > 0.0 && params.k < 1.0)) throw InvalidInput("binarize_sauvola: k must be in (0,1)");
    if (!(params.R > 0.0)) throw InvalidInput("binarize_sauvola: R must be positive");

    const int half = params.window / 2;
    SumArray sum, sum_sq;
    integral_images(img, half, sum, sum_sq);

    const double area = static_cast<double>(params.window) * params.window;
    BinaryImage out(img.rows(), img.cols());
    for (Eigen::Index r = 0; r < img.rows(); ++r) {
        for (Eigen::Index c = 0; c < img.cols(); ++c) {
            // Window [r, r+2*half] x [c, c+2*half] in padded coordinates.
            const std::int64_t s1 = box(sum, r, c, r + 2 * half, c + 2 * half);
            const std::int64_t s2 = box(sum_sq, r, c, r + 2 * half, c + 2 * half);
            const double mean = static_cast<double>(s1) / area;
            const double var = std::max(0.0, static_cast<double>(s2) / area - mean * mean);
            const double stddev = std::sqrt(var);
            const double threshold = mean * (1.0 + params.k * (stddev / params.R - 1.0));
            out(r, c) = static_cast<double>(img(r, c)) < threshold;
        }
    }
    return out;
}

GrayImage to_gray(const BinaryImage& r) {
    return r.select(GrayImage::Zero(r.rows(), r.cols()), GrayImage::Constant(r.rows(), r.cols(), 255));
}

BinaryImage threshold_midpoint(const GrayImage& img) { return img < std::uint8_t{128}; }

}  // namespace unshred
