#pragma once
// Bitmap rendering of rule evolutions: single generations (ON cells black on
// the reachable box) and montages of generations 0..n_max on a shared panel
// size with one-pixel grid separators.  Canonical byte format is plain PBM
// (P1) with an optional integer scale factor.

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "oddrule/catalog.hpp"
#include "oddrule/laurent.hpp"

namespace oddrule {

struct Bitmap {
  std::int64_t width = 0, height = 0;
  std::vector<std::uint8_t> px;  // row-major, 1 = ON = black

  Bitmap() = default;
  Bitmap(std::int64_t w, std::int64_t h)
      : width(w), height(h),
        px(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0) {
    if (w <= 0 || h <= 0) throw std::invalid_argument("Bitmap: empty size");
  }
  std::uint8_t& at(std::int64_t r, std::int64_t c) {
    return px[static_cast<std::size_t>(r * width + c)];
  }
  std::uint8_t at(std::int64_t r, std::int64_t c) const {
    return px[static_cast<std::size_t>(r * width + c)];
  }
  std::int64_t black_count() const {
    std::int64_t n = 0;
    for (std::uint8_t v : px) n += v;
    return n;
  }
};

// Support of F^n drawn on the reachable box [-n, n]^2: side 2n+1, origin at
// the center, row 0 carrying the largest y.
inline Bitmap render_generation(Mask m, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("render_generation: n must be >= 0");
  Bitmap bm(2 * n + 1, 2 * n + 1);
  for (const auto& [i, j] : mask_to_poly(m).pow(static_cast<std::uint64_t>(n))
                                .support())
    bm.at(n - j, i + n) = 1;
  return bm;
}

// Panels for generations 0..n_max, all on the n_max-sized box, laid out
// left-to-right then top-to-bottom, separated by one-pixel black grid lines.
inline Bitmap render_montage(Mask m, std::int64_t n_max, std::int64_t columns) {
  if (n_max < 0 || columns < 1)
    throw std::invalid_argument("render_montage: need n_max >= 0, columns >= 1");
  std::int64_t panels = n_max + 1;
  std::int64_t rows = (panels + columns - 1) / columns;
  std::int64_t side = 2 * n_max + 1;
  Bitmap bm(columns * (side + 1) - 1, rows * (side + 1) - 1);
  for (std::int64_t r = side; r < bm.height; r += side + 1)
    for (std::int64_t c = 0; c < bm.width; ++c) bm.at(r, c) = 1;
  for (std::int64_t c = side; c < bm.width; c += side + 1)
    for (std::int64_t r = 0; r < bm.height; ++r) bm.at(r, c) = 1;
  LaurentPoly F = mask_to_poly(m);
  LaurentPoly cur = LaurentPoly::one();
  for (std::int64_t k = 0; k <= n_max; ++k) {
    if (k > 0) cur = cur * F;
    std::int64_t r0 = (k / columns) * (side + 1);
    std::int64_t c0 = (k % columns) * (side + 1);
    for (const auto& [i, j] : cur.support())
      bm.at(r0 + n_max - j, c0 + i + n_max) = 1;
  }
  return bm;
}

// Plain PBM: "P1\n{w} {h}\n" then one line of '0'/'1' per pixel row; a scale
// factor s repeats every cell s times in both directions.
inline std::string encode_pbm(const Bitmap& bm, std::int64_t scale = 1) {
  if (scale < 1) throw std::invalid_argument("encode_pbm: scale must be >= 1");
  std::string s = "P1\n" + std::to_string(bm.width * scale) + " " +
                  std::to_string(bm.height * scale) + "\n";
  for (std::int64_t r = 0; r < bm.height; ++r) {
    std::string line;
    line.reserve(static_cast<std::size_t>(bm.width * scale) + 1);
    for (std::int64_t c = 0; c < bm.width; ++c)
      line.append(static_cast<std::size_t>(scale), bm.at(r, c) ? '1' : '0');
    line += '\n';
    for (std::int64_t k = 0; k < scale; ++k) s += line;
  }
  return s;
}

inline void write_pbm(const std::string& path, const Bitmap& bm,
                      std::int64_t scale = 1) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << encode_pbm(bm, scale);
  if (!f) throw std::runtime_error("short write to " + path);
}

}  // namespace oddrule
