#pragma once

#include <cstdint>

#include "unshred/raster.hpp"

namespace unshred {

struct PageConfig {
    int width = 630;
    int height = 480;
    std::uint64_t rng_seed = 0;
};

/// Renders a synthetic text page: paragraphs of pseudo-words set in a bitmap
/// font at mixed scales, ragged-right, with randomized margins and leading.
/// Fully deterministic in rng_seed. Ink is 1.
BinaryImage render_text_page(const PageConfig& cfg);

}  // namespace unshred
