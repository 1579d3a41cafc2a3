#include "unshred/sampling.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

#include "unshred/png_io.hpp"
#include "unshred/random.hpp"

namespace unshred {

namespace {

// Joins the right border of `left` with the left border of `right` over
// sample_h rows starting at `offset`.
BinaryImage cut_patch(const BinaryImage& left, const BinaryImage& right, int offset, int h, int half_w) {
    BinaryImage patch(h, 2 * half_w);
    patch.block(0, 0, h, half_w) = left.block(offset, left.cols() - half_w, h, half_w);
    patch.block(0, half_w, h, half_w) = right.block(offset, 0, h, half_w);
    return patch;
}

struct PairRef {
    int left;
    int right;
};

}  // namespace

SampleSet extract_samples(const std::map<std::string, std::vector<Shred>>& shreds_by_doc, const SamplerConfig& cfg) {
    if (cfg.sample_w % 2 != 0 || cfg.sample_w < 2) throw InvalidInput("extract_samples: sample_w must be even");
    if (cfg.sample_h < 1 || cfg.stride < 1) throw InvalidInput("extract_samples: bad sample geometry");
    if (cfg.rho_black < 0.0 || cfg.rho_black > 1.0) throw InvalidInput("extract_samples: rho_black outside [0,1]");
    const int half_w = cfg.sample_w / 2;

    SampleSet out;
    out.h = cfg.sample_h;
    out.w = cfg.sample_w;

    for (const auto& [doc_id, shreds_in] : shreds_by_doc) {
        if (shreds_in.size() < 2) {
            std::cerr << "extract_samples: skipping document with fewer than 2 shreds: " << doc_id << "\n";
            continue;
        }
        std::vector<const Shred*> shreds;
        shreds.reserve(shreds_in.size());
        for (const auto& s : shreds_in) {
            if (!s.gt_index) throw InvalidInput("extract_samples: shred without ground-truth index in " + doc_id);
            if (s.raster.cols() < half_w) throw InvalidInput("extract_samples: shred narrower than sample_w/2");
            shreds.push_back(&s);
        }
        std::sort(shreds.begin(), shreds.end(),
                  [](const Shred* a, const Shred* b) { return *a->gt_index < *b->gt_index; });
        const int n = static_cast<int>(shreds.size());

        std::vector<PairRef> positives, negatives;
        for (int i = 0; i + 1 < n; ++i) positives.push_back({i, i + 1});
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && j != i + 1) negatives.push_back({i, j});

        auto eng = make_engine(mix_seed({cfg.rng_seed, fnv1a64(doc_id), 0x73616d706cULL}));
        deterministic_shuffle(positives, eng);
        deterministic_shuffle(negatives, eng);

        auto collect = [&](const std::vector<PairRef>& pairs, int cap, std::vector<BinaryImage>& patches) {
            for (const auto& pr : pairs) {
                const BinaryImage& l = shreds[static_cast<std::size_t>(pr.left)]->raster;
                const BinaryImage& r = shreds[static_cast<std::size_t>(pr.right)]->raster;
                const int h = static_cast<int>(std::min(l.rows(), r.rows()));
                for (int off = 0; off + cfg.sample_h <= h; off += cfg.stride) {
                    if (static_cast<int>(patches.size()) >= cap) return;
                    BinaryImage patch = cut_patch(l, r, off, cfg.sample_h, half_w);
                    if (ink_ratio(patch) < cfg.rho_black) continue;
                    patches.push_back(std::move(patch));
                }
                if (static_cast<int>(patches.size()) >= cap) return;
            }
        };

        std::vector<BinaryImage> pos_patches, neg_patches;
        collect(positives, cfg.max_pos_per_doc, pos_patches);
        collect(negatives, static_cast<int>(pos_patches.size()), neg_patches);
        const std::size_t kept = std::min(pos_patches.size(), neg_patches.size());
        pos_patches.resize(kept);
        neg_patches.resize(kept);

        for (auto& p : pos_patches) {
            out.patches.push_back(std::move(p));
            out.labels.push_back(SampleLabel::positive);
            out.source_doc.push_back(doc_id);
        }
        for (auto& p : neg_patches) {
            out.patches.push_back(std::move(p));
            out.labels.push_back(SampleLabel::negative);
            out.source_doc.push_back(doc_id);
        }
    }
    if (out.patches.empty()) throw InvalidInput("extract_samples: no samples survived extraction");
    return out;
}

std::pair<std::vector<std::string>, std::vector<std::string>> split_train_val(std::vector<std::string> docs,
                                                                              double train_fraction,
                                                                              std::uint64_t rng_seed) {
    if (docs.size() < 2) throw InvalidInput("split_train_val: need at least 2 documents");
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw InvalidInput("split_train_val: train_fraction must be in (0,1)");
    std::sort(docs.begin(), docs.end());
    auto eng = make_engine(mix_seed({rng_seed, 0x73706c6974ULL}));
    deterministic_shuffle(docs, eng);

    const auto n = docs.size();
    std::size_t n_train = static_cast<std::size_t>(train_fraction * static_cast<double>(n));
    n_train = std::clamp<std::size_t>(n_train, 1, n - 1);
    std::vector<std::string> train(docs.begin(), docs.begin() + static_cast<std::ptrdiff_t>(n_train));
    std::vector<std::string> val(docs.begin() + static_cast<std::ptrdiff_t>(n_train), docs.end());
    return {std::move(train), std::move(val)};
}

std::map<std::string, std::vector<Shred>> group_by_doc(const ShredInstance& inst) {
    std::map<std::string, std::vector<Shred>> by_doc;
    for (const auto& s : inst.shreds) by_doc[s.doc_id].push_back(s);
    return by_doc;
}

void save_samples_dir(const SampleSet& set, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::ofstream csv(dir / "samples.csv");
    csv << "file,label,doc_id\n";
    for (std::size_t i = 0; i < set.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "s%06zu.png", i);
        save_png(set.patches[i], dir / name);
        csv << name << "," << (set.labels[i] == SampleLabel::positive ? "positive" : "negative") << ","
            << set.source_doc[i] << "\n";
    }
}

SampleSet load_samples_dir(const std::filesystem::path& dir) {
    std::ifstream csv(dir / "samples.csv");
    if (!csv) throw InvalidInput("load_samples_dir: missing samples.csv in " + dir.string());
    SampleSet set;
    std::string line;
    std::getline(csv, line);  // header
    while (std::getline(csv, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string file, label, doc;
        std::getline(ss, file, ',');
        std::getline(ss, label, ',');
        std::getline(ss, doc, ',');
        set.patches.push_back(threshold_midpoint(load_png(dir / file)));
        set.labels.push_back(label == "positive" ? SampleLabel::positive : SampleLabel::negative);
        set.source_doc.push_back(doc);
    }
    if (set.patches.empty()) throw InvalidInput("load_samples_dir: empty sample set");
    set.h = static_cast<int>(set.patches.front().rows());
    set.w = static_cast<int>(set.patches.front().cols());
    return set;
}

namespace {

constexpr char kPackedMagic[4] = {'S', 'M', 'P', 'K'};

template <typename T>
void write_pod(std::ostream& out, T v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

template <typename T>
T read_pod(std::istream& in) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof(v));
    if (!in) throw InvalidInput("packed samples: truncated file");
    return v;
}

}  // namespace

void save_samples_packed(const SampleSet& set, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw InvalidInput("save_samples_packed: cannot create " + file.string());
    out.write(kPackedMagic, 4);
    write_pod<std::uint16_t>(out, 1);  // version
    write_pod<std::uint32_t>(out, static_cast<std::uint32_t>(set.size()));
    write_pod<std::uint16_t>(out, static_cast<std::uint16_t>(set.h));
    write_pod<std::uint16_t>(out, static_cast<std::uint16_t>(set.w));

    std::vector<std::string> docs;
    std::map<std::string, std::uint32_t> doc_index;
    for (const auto& d : set.source_doc)
        if (doc_index.emplace(d, static_cast<std::uint32_t>(docs.size())).second) docs.push_back(d);
    write_pod<std::uint32_t>(out, static_cast<std::uint32_t>(docs.size()));
    for (const auto& d : docs) {
        write_pod<std::uint16_t>(out, static_cast<std::uint16_t>(d.size()));
        out.write(d.data(), static_cast<std::streamsize>(d.size()));
    }

    const std::size_t n_bits = static_cast<std::size_t>(set.h) * static_cast<std::size_t>(set.w);
    std::vector<std::uint8_t> packed((n_bits + 7) / 8);
    for (std::size_t i = 0; i < set.size(); ++i) {
        write_pod<std::uint32_t>(out, doc_index.at(set.source_doc[i]));
        write_pod<std::uint8_t>(out, static_cast<std::uint8_t>(set.labels[i]));
        std::fill(packed.begin(), packed.end(), 0);
        const BinaryImage& p = set.patches[i];
        std::size_t bit = 0;
        for (Eigen::Index r = 0; r < p.rows(); ++r)
            for (Eigen::Index c = 0; c < p.cols(); ++c, ++bit)
                if (p(r, c)) packed[bit >> 3] |= static_cast<std::uint8_t>(0x80u >> (bit & 7));
        out.write(reinterpret_cast<const char*>(packed.data()), static_cast<std::streamsize>(packed.size()));
    }
}

SampleSet load_samples_packed(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw InvalidInput("load_samples_packed: cannot open " + file.string());
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kPackedMagic, 4) != 0)
        throw InvalidInput("load_samples_packed: bad magic in " + file.string());
    if (read_pod<std::uint16_t>(in) != 1) throw InvalidInput("load_samples_packed: unsupported version");

    SampleSet set;
    const auto count = read_pod<std::uint32_t>(in);
    set.h = read_pod<std::uint16_t>(in);
    set.w = read_pod<std::uint16_t>(in);
    const auto n_docs = read_pod<std::uint32_t>(in);
    std::vector<std::string> docs(n_docs);
    for (auto& d : docs) {
        const auto len = read_pod<std::uint16_t>(in);
        d.resize(len);
        in.read(d.data(), len);
        if (!in) throw InvalidInput("packed samples: truncated file");
    }

    const std::size_t n_bits = static_cast<std::size_t>(set.h) * static_cast<std::size_t>(set.w);
    std::vector<std::uint8_t> packed((n_bits + 7) / 8);
    for (std::uint32_t i = 0; i < count; ++i) {
        const auto doc = read_pod<std::uint32_t>(in);
        if (doc >= n_docs) throw InvalidInput("packed samples: bad doc index");
        const auto label = read_pod<std::uint8_t>(in);
        in.read(reinterpret_cast<char*>(packed.data()), static_cast<std::streamsize>(packed.size()));
        if (!in) throw InvalidInput("packed samples: truncated file");
        BinaryImage p(set.h, set.w);
        std::size_t bit = 0;
        for (Eigen::Index r = 0; r < p.rows(); ++r)
            for (Eigen::Index c = 0; c < p.cols(); ++c, ++bit)
                p(r, c) = (packed[bit >> 3] & (0x80u >> (bit & 7))) != 0;
        set.patches.push_back(std::move(p));
        set.labels.push_back(label != 0 ? SampleLabel::positive : SampleLabel::negative);
        set.source_doc.push_back(docs[doc]);
    }
    return set;
}

}  // namespace unshred
