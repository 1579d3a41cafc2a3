#include "unshred/shredding.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>

#include "unshred/png_io.hpp"
#include "unshred/random.hpp"

namespace unshred {

namespace {

constexpr int kMinShredHeight = 32;
constexpr int kMinShredWidth = 16;

std::string shred_name(int doc_number, int index) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "D%04dS%03d", doc_number, index);
    return buf;
}

}  // namespace

std::vector<Shred> simulate_shredding(const BinaryImage& doc, const std::string& doc_id, const ShredderConfig& cfg) {
    if (cfg.n_strips < 2) throw InvalidInput("simulate_shredding: n_strips must be >= 2");
    if (cfg.noise_cols < 0) throw InvalidInput("simulate_shredding: noise_cols must be >= 0");
    const Eigen::Index strip_w = doc.cols() / cfg.n_strips;
    if (strip_w < kMinShredWidth)
        throw InvalidInput("simulate_shredding: document too narrow for " + std::to_string(cfg.n_strips) + " strips");
    if (doc.rows() < kMinShredHeight) throw InvalidInput("simulate_shredding: document shorter than 32 rows");

    const std::uint64_t doc_hash = fnv1a64(doc_id);
    std::vector<Shred> shreds;
    shreds.reserve(static_cast<std::size_t>(cfg.n_strips));
    for (int i = 0; i < cfg.n_strips; ++i) {
        Shred s;
        s.doc_id = doc_id;
        s.gt_index = i;
        s.id = doc_id + "/" + std::to_string(i);
        s.raster = doc.block(0, static_cast<Eigen::Index>(i) * strip_w, doc.rows(), strip_w);

        if (cfg.noise_cols > 0) {
            auto eng = make_engine(mix_seed({cfg.rng_seed, doc_hash, static_cast<std::uint64_t>(i)}));
            const Eigen::Index nc = std::min<Eigen::Index>(cfg.noise_cols, strip_w);
            for (Eigen::Index c = 0; c < nc; ++c)
                for (Eigen::Index r = 0; r < s.raster.rows(); ++r) s.raster(r, c) = bernoulli_bit(eng);
            for (Eigen::Index c = strip_w - nc; c < strip_w; ++c)
                for (Eigen::Index r = 0; r < s.raster.rows(); ++r) s.raster(r, c) = bernoulli_bit(eng);
        }
        shreds.push_back(std::move(s));
    }
    return shreds;
}

namespace {

struct ShredRecord {
    std::string file;
    std::string doc_id;
    std::optional<int> gt_index;
};

std::optional<ShredRecord> parse_shred_filename(const std::string& stem) {
    // D{4 digits}S{3 digits}
    if (stem.size() != 8 || stem[0] != 'D' || stem[4] != 'S') return std::nullopt;
    int doc = 0, idx = 0;
    auto r1 = std::from_chars(stem.data() + 1, stem.data() + 4 + 1, doc);
    auto r2 = std::from_chars(stem.data() + 5, stem.data() + 8, idx);
    if (r1.ec != std::errc{} || r1.ptr != stem.data() + 5) return std::nullopt;
    if (r2.ec != std::errc{} || r2.ptr != stem.data() + 8) return std::nullopt;
    ShredRecord rec;
    rec.file = stem + ".png";
    rec.doc_id = stem.substr(0, 5);
    rec.gt_index = idx;
    return rec;
}

std::vector<ShredRecord> read_manifest(const std::filesystem::path& file) {
    std::ifstream in(file);
    nlohmann::json j;
    in >> j;
    std::vector<ShredRecord> records;
    for (const auto& entry : j.at("shreds")) {
        ShredRecord rec;
        rec.file = entry.at("file").get<std::string>();
        rec.doc_id = entry.at("doc_id").get<std::string>();
        if (entry.contains("gt_index") && !entry["gt_index"].is_null()) rec.gt_index = entry["gt_index"].get<int>();
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace

ShredInstance ingest_shreds(const std::filesystem::path& dir, bool binarize) {
    if (!std::filesystem::is_directory(dir)) throw InvalidInput("ingest_shreds: not a directory: " + dir.string());

    std::vector<ShredRecord> records;
    const auto manifest = dir / "manifest.json";
    if (std::filesystem::exists(manifest)) {
        records = read_manifest(manifest);
    } else {
        for (const auto& entry : std::filesystem::directory_iterator(dir)) {
            if (!entry.is_regular_file() || entry.path().extension() != ".png") continue;
            auto rec = parse_shred_filename(entry.path().stem().string());
            if (!rec)
                throw InvalidInput("ingest_shreds: cannot parse shred filename: " + entry.path().filename().string());
            records.push_back(std::move(*rec));
        }
    }
    if (records.empty()) throw InvalidInput("ingest_shreds: no shreds found in " + dir.string());

    std::sort(records.begin(), records.end(), [](const ShredRecord& a, const ShredRecord& b) {
        return std::tie(a.doc_id, a.gt_index, a.file) < std::tie(b.doc_id, b.gt_index, b.file);
    });

    ShredInstance inst;
    for (const auto& rec : records) {
        const GrayImage gray = load_png(dir / rec.file);
        BinaryImage bits = binarize ? binarize_sauvola(gray) : threshold_midpoint(gray);
        if (is_blank(bits)) continue;
        if (bits.rows() < kMinShredHeight || bits.cols() < kMinShredWidth)
            throw InvalidInput("ingest_shreds: shred below minimum size (32 rows x 16 cols): " + rec.file);
        Shred s;
        s.id = std::filesystem::path(rec.file).stem().string();
        s.doc_id = rec.doc_id;
        s.gt_index = rec.gt_index;
        s.raster = std::move(bits);
        inst.doc_ids.insert(s.doc_id);
        inst.shreds.push_back(std::move(s));
    }
    if (inst.shreds.empty()) throw InvalidInput("ingest_shreds: all shreds blank in " + dir.string());
    return inst;
}

ShredInstance mix(std::span<const ShredInstance> instances) {
    ShredInstance out;
    std::set<std::string> seen;
    for (const auto& inst : instances) {
        for (const auto& s : inst.shreds) {
            if (!seen.insert(s.id).second) throw InvalidInput("mix: duplicate shred id " + s.id);
            out.doc_ids.insert(s.doc_id);
            out.shreds.push_back(s);
        }
    }
    return out;
}

void write_shreds(const std::filesystem::path& dir, std::span<const Shred> shreds, int doc_number) {
    std::filesystem::create_directories(dir);
    nlohmann::json entries = nlohmann::json::array();
    const auto manifest_path = dir / "manifest.json";
    if (std::filesystem::exists(manifest_path)) {
        std::ifstream in(manifest_path);
        nlohmann::json j;
        in >> j;
        entries = j.at("shreds");
    }
    int idx = 0;
    for (const auto& s : shreds) {
        const std::string name = shred_name(doc_number, s.gt_index.value_or(idx)) + ".png";
        save_png(s.raster, dir / name);
        nlohmann::json e{{"file", name}, {"doc_id", s.doc_id}};
        if (s.gt_index)
            e["gt_index"] = *s.gt_index;
        else
            e["gt_index"] = nullptr;
        entries.push_back(std::move(e));
        ++idx;
    }
    std::ofstream out(manifest_path);
    out << nlohmann::json{{"shreds", entries}}.dump(2) << "\n";
}

}  // namespace unshred
