#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "unshred/shredding.hpp"

namespace unshred {

struct SamplerConfig {
    int sample_h = 32;
    int sample_w = 32;  // even; half taken from each shred
    int stride = 2;
    int max_pos_per_doc = 1000;
    double rho_black = 0.2;  // minimum ink fraction a patch must have
    std::uint64_t rng_seed = 0;
};

enum class SampleLabel : std::uint8_t { negative = 0, positive = 1 };

struct SampleSet {
    int h = 0;
    int w = 0;
    std::vector<BinaryImage> patches;
    std::vector<SampleLabel> labels;
    std::vector<std::string> source_doc;

    std::size_t size() const { return patches.size(); }
};

/// Self-supervised patch extraction around cutting sections. Positives come
/// from adjacent shred pairs in ground-truth order; negatives from the pool
/// of non-adjacent pairs plus swapped adjacent pairs. Pair order is shuffled
/// per document (seeded); patches below rho_black ink are discarded; per
/// document at most max_pos_per_doc positives and exactly as many negatives
/// are kept.
SampleSet extract_samples(const std::map<std::string, std::vector<Shred>>& shreds_by_doc, const SamplerConfig& cfg);

/// Document-level split; both sides are guaranteed at least one document.
std::pair<std::vector<std::string>, std::vector<std::string>> split_train_val(std::vector<std::string> docs,
                                                                              double train_fraction,
                                                                              std::uint64_t rng_seed);

/// Groups an instance's shreds by document for extraction.
std::map<std::string, std::vector<Shred>> group_by_doc(const ShredInstance& inst);

// Persistence: a directory of PNG patches with a samples.csv manifest, and a
// packed binary form (bit-packed patches) for fast training I/O.
void save_samples_dir(const SampleSet& set, const std::filesystem::path& dir);
SampleSet load_samples_dir(const std::filesystem::path& dir);
void save_samples_packed(const SampleSet& set, const std::filesystem::path& file);
SampleSet load_samples_packed(const std::filesystem::path& file);

}  // namespace unshred
