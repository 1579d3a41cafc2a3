#include "unshred/textgen.hpp"

#include <array>
#include <string_view>

#include "unshred/random.hpp"

namespace unshred {

namespace {

// 5x7 bitmap font, '#' = ink. Uppercase letters and digits.
struct Glyph {
    char ch;
    std::array<std::string_view, 7> rows;
};

constexpr Glyph kFont[] = {
    {'A', {".###.", "#...#", "#...#", "#####", "#...#", "#...#", "#...#"}},
    {'B', {"####.", "#...#", "#...#", "####.", "#...#", "#...#", "####."}},
    {'C', {".###.", "#...#", "#....", "#....", "#....", "#...#", ".###."}},
    {'D', {"####.", "#...#", "#...#", "#...#", "#...#", "#...#", "####."}},
    {'E', {"#####", "#....", "#....", "####.", "#....", "#....", "#####"}},
    {'F', {"#####", "#....", "#....", "####.", "#....", "#....", "#...."}},
    {'G', {".###.", "#...#", "#....", "#.###", "#...#", "#...#", ".###."}},
    {'H', {"#...#", "#...#", "#...#", "#####", "#...#", "#...#", "#...#"}},
    {'I', {"#####", "..#..", "..#..", "..#..", "..#..", "..#..", "#####"}},
    {'J', {"..###", "...#.", "...#.", "...#.", "...#.", "#..#.", ".##.."}},
    {'K', {"#...#", "#..#.", "#.#..", "##...", "#.#..", "#..#.", "#...#"}},
    {'L', {"#....", "#....", "#....", "#....", "#....", "#....", "#####"}},
    {'M', {"#...#", "##.##", "#.#.#", "#.#.#", "#...#", "#...#", "#...#"}},
    {'N', {"#...#", "##..#", "#.#.#", "#..##", "#...#", "#...#", "#...#"}},
    {'O', {".###.", "#...#", "#...#", "#...#", "#...#", "#...#", ".###."}},
    {'P', {"####.", "#...#", "#...#", "####.", "#....", "#....", "#...."}},
    {'Q', {".###.", "#...#", "#...#", "#...#", "#.#.#", "#..#.", ".##.#"}},
    {'R', {"####.", "#...#", "#...#", "####.", "#.#..", "#..#.", "#...#"}},
    {'S', {".####", "#....", "#....", ".###.", "....#", "....#", "####."}},
    {'T', {"#####", "..#..", "..#..", "..#..", "..#..", "..#..", "..#.."}},
    {'U', {"#...#", "#...#", "#...#", "#...#", "#...#", "#...#", ".###."}},
    {'V', {"#...#", "#...#", "#...#", "#...#", "#...#", ".#.#.", "..#.."}},
    {'W', {"#...#", "#...#", "#...#", "#.#.#", "#.#.#", "##.##", "#...#"}},
    {'X', {"#...#", "#...#", ".#.#.", "..#..", ".#.#.", "#...#", "#...#"}},
    {'Y', {"#...#", "#...#", ".#.#.", "..#..", "..#..", "..#..", "..#.."}},
    {'Z', {"#####", "....#", "...#.", "..#..", ".#...", "#....", "#####"}},
    {'0', {".###.", "#...#", "#..##", "#.#.#", "##..#", "#...#", ".###."}},
    {'1', {"..#..", ".##..", "..#..", "..#..", "..#..", "..#..", "#####"}},
    {'2', {".###.", "#...#", "....#", "...#.", "..#..", ".#...", "#####"}},
    {'3', {".###.", "#...#", "....#", "..##.", "....#", "#...#", ".###."}},
    {'4', {"...#.", "..##.", ".#.#.", "#..#.", "#####", "...#.", "...#."}},
    {'5', {"#####", "#....", "####.", "....#", "....#", "#...#", ".###."}},
    {'6', {".###.", "#....", "#....", "####.", "#...#", "#...#", ".###."}},
    {'7', {"#####", "....#", "...#.", "..#..", ".#...", ".#...", ".#..."}},
    {'8', {".###.", "#...#", "#...#", ".###.", "#...#", "#...#", ".###."}},
    {'9', {".###.", "#...#", "#...#", ".####", "....#", "....#", ".###."}},
};

constexpr int kGlyphH = 7;
constexpr int kGlyphW = 5;
constexpr int kLetters = 26;
constexpr int kGlyphCount = static_cast<int>(std::size(kFont));

void draw_glyph(BinaryImage& page, const Glyph& g, int top, int left, int scale) {
    for (int r = 0; r < kGlyphH; ++r) {
        for (int c = 0; c < kGlyphW; ++c) {
            if (g.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != '#') continue;
            const int y0 = top + r * scale, x0 = left + c * scale;
            for (int dy = 0; dy < scale; ++dy)
                for (int dx = 0; dx < scale; ++dx)
                    if (y0 + dy < page.rows() && x0 + dx < page.cols()) page(y0 + dy, x0 + dx) = true;
        }
    }
}

}  // namespace

BinaryImage render_text_page(const PageConfig& cfg) {
    if (cfg.width < 64 || cfg.height < 48) throw InvalidInput("render_text_page: page too small");
    BinaryImage page = BinaryImage::Constant(cfg.height, cfg.width, false);
    auto eng = make_engine(mix_seed({cfg.rng_seed, 0x7061676573ULL}));

    const int margin_x = 6 + static_cast<int>(uniform_below(eng, 9));
    const int margin_y = 6 + static_cast<int>(uniform_below(eng, 9));
    const int right_limit = cfg.width - margin_x;

    int y = margin_y;
    bool paragraph_start = true;
    while (true) {
        // Per-paragraph type size; headings are rare and larger.
        const std::uint64_t pick = uniform_below(eng, 10);
        const int scale = pick < 6 ? 2 : (pick < 9 ? 3 : 4);
        const int line_h = kGlyphH * scale;
        const int leading = scale + static_cast<int>(uniform_below(eng, static_cast<std::uint64_t>(scale) + 1));
        const int lines = 2 + static_cast<int>(uniform_below(eng, 4));

        for (int line = 0; line < lines; ++line) {
            if (y + line_h > cfg.height - margin_y) return page;
            int x = margin_x;
            if (paragraph_start && line == 0 && uniform_below(eng, 10) < 4) x += 3 * (kGlyphW + 1) * scale;
            while (true) {
                const int word_len = 2 + static_cast<int>(uniform_below(eng, 7));
                const int word_w = word_len * (kGlyphW + 1) * scale - scale;
                if (x + word_w > right_limit) break;
                for (int i = 0; i < word_len; ++i) {
                    const bool digit_word = uniform_below(eng, 100) < 8;
                    const int gi = digit_word ? kLetters + static_cast<int>(uniform_below(eng, kGlyphCount - kLetters))
                                              : static_cast<int>(uniform_below(eng, kLetters));
                    draw_glyph(page, kFont[gi], y, x, scale);
                    x += (kGlyphW + 1) * scale;
                }
                x += 2 * scale;  // word gap on top of tracking
            }
            y += line_h + leading;
        }
        y += line_h / 2 + static_cast<int>(uniform_below(eng, static_cast<std::uint64_t>(line_h)));
        paragraph_start = true;
    }
}

}  // namespace unshred
