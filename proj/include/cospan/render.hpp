#pragma once

#include <string>
#include <vector>

#include "cospan/slice.hpp"

namespace cospan {

/// Deterministic pure-ASCII wire diagram of a slice form. One column of
/// fixed width per generator layer; strand j of a column sits on text row
/// 2*j; merges and splits are drawn as junctions with diagonal jogs.
inline std::string render_slices(const SliceForm& sf) {
    constexpr int W = 6;  // column width in characters
    sf.output_width();    // validate widths before drawing
    int maxw = sf.input_width;
    {
        int w = sf.input_width;
        for (const auto& s : sf.slices) {
            w = s.out_width();
            if (w > maxw) maxw = w;
        }
    }
    if (maxw == 0) return "(empty diagram)\n";
    int rows = 2 * maxw - 1;
    int cols = W * static_cast<int>(sf.slices.empty() ? 1 : sf.slices.size());
    std::vector<std::string> canvas(rows, std::string(cols, ' '));
    auto put = [&](int r, int c, char ch) { canvas[r][c] = ch; };
    auto hline = [&](int r, int c0, int c1) {
        for (int c = c0; c <= c1; ++c) put(r, c, '-');
    };

    if (sf.slices.empty()) {
        for (int j = 0; j < sf.input_width; ++j) hline(2 * j, 0, cols - 1);
    }
    int w = sf.input_width;
    for (std::size_t k = 0; k < sf.slices.size(); ++k) {
        const Slice& s = sf.slices[k];
        int x = W * static_cast<int>(k);
        int a = s.left;
        switch (s.gen) {
            case SliceGen::Merge:
                for (int j = 0; j < a; ++j) hline(2 * j, x, x + W - 1);
                hline(2 * a, x, x + W - 1);
                put(2 * a, x + 3, '+');
                put(2 * a + 1, x + 2, '/');
                hline(2 * a + 2, x, x + 1);
                for (int j = a + 2; j < w; ++j) {
                    hline(2 * j, x, x + 1);
                    put(2 * j - 1, x + 2, '/');
                    hline(2 * j - 2, x + 3, x + W - 1);
                }
                break;
            case SliceGen::Split:
                for (int j = 0; j < a; ++j) hline(2 * j, x, x + W - 1);
                hline(2 * a, x, x + W - 1);
                put(2 * a, x + 2, '+');
                put(2 * a + 1, x + 3, '\\');
                hline(2 * a + 2, x + 4, x + W - 1);
                for (int j = a + 1; j < w; ++j) {
                    hline(2 * j, x, x + 1);
                    put(2 * j + 1, x + 2, '\\');
                    hline(2 * j + 2, x + 3, x + W - 1);
                }
                break;
            case SliceGen::UnitIns:
                for (int j = 0; j < a; ++j) hline(2 * j, x, x + W - 1);
                put(2 * a, x + 4, '*');
                hline(2 * a, x + 5, x + W - 1);
                for (int j = a; j < w; ++j) {
                    hline(2 * j, x, x + 1);
                    put(2 * j + 1, x + 2, '\\');
                    hline(2 * j + 2, x + 3, x + W - 1);
                }
                break;
            case SliceGen::UnitDel:
                for (int j = 0; j < a; ++j) hline(2 * j, x, x + W - 1);
                put(2 * a, x, '-');
                put(2 * a, x + 1, '*');
                for (int j = a + 1; j < w; ++j) {
                    hline(2 * j, x, x + 2);
                    put(2 * j - 1, x + 3, '/');
                    hline(2 * j - 2, x + 4, x + W - 1);
                }
                break;
        }
        w = s.out_width();
    }

    // trim trailing blanks and empty bottom rows
    while (!canvas.empty()) {
        std::string& last = canvas.back();
        if (last.find_first_not_of(' ') == std::string::npos) canvas.pop_back();
        else break;
    }
    std::string out;
    for (auto& row : canvas) {
        std::size_t end = row.find_last_not_of(' ');
        out += row.substr(0, end == std::string::npos ? 0 : end + 1);
        out += '\n';
    }
    return out;
}

inline std::string render_term(const TermPtr& t) { return render_slices(to_slices(t)); }

}  // namespace cospan
