#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "unshred/raster.hpp"

namespace unshred {

struct Shred {
    std::string id;
    std::string doc_id;
    std::optional<int> gt_index;  // 0-based ground-truth position, when known
    BinaryImage raster;
};

struct ShredInstance {
    std::vector<Shred> shreds;  // storage order, not a solution
    std::set<std::string> doc_ids;

    int n_shreds() const { return static_cast<int>(shreds.size()); }
};

struct ShredderConfig {
    int n_strips = 30;
    int noise_cols = 2;  // per side
    std::uint64_t rng_seed = 0;
};

/// Cuts a document into n_strips equal-width strips of full height,
/// discarding the remainder columns at the right edge. The noise_cols
/// leftmost and rightmost columns of every strip are then overwritten with
/// Bernoulli(0.5) bits seeded by (rng_seed, doc_id, strip index).
std::vector<Shred> simulate_shredding(const BinaryImage& doc, const std::string& doc_id, const ShredderConfig& cfg);

/// Loads a directory of per-shred PNGs named D{doc:4}S{index:3}.png, or
/// described by a manifest.json of {file, doc_id, gt_index} records which
/// overrides filename parsing. Blank shreds are discarded. Order is
/// deterministic by (doc_id, gt_index).
ShredInstance ingest_shreds(const std::filesystem::path& dir, bool binarize);

ShredInstance mix(std::span<const ShredInstance> instances);

/// Writes shreds as PNGs plus a manifest.json preserving doc ids and
/// ground-truth order. doc_number decides the D-field of the filenames.
void write_shreds(const std::filesystem::path& dir, std::span<const Shred> shreds, int doc_number);

}  // namespace unshred
