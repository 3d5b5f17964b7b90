#include "irea/image.hpp"

namespace irea {

const char* pattern_name(BayerPattern p) {
  switch (p) {
    case BayerPattern::RGGB: return "RGGB";
    case BayerPattern::GRBG: return "GRBG";
    case BayerPattern::GBRG: return "GBRG";
    case BayerPattern::BGGR: return "BGGR";
  }
  return "?";
}

int bayer_color_at(BayerPattern p, int y, int x) {
  // Quad colors in reading order (ee, eo, oe, oo).
  static constexpr int quads[4][4] = {
      {0, 1, 1, 2},  // RGGB
      {1, 0, 2, 1},  // GRBG
      {1, 2, 0, 1},  // GBRG
      {2, 1, 1, 0},  // BGGR
  };
  const int idx = ((y & 1) << 1) | (x & 1);
  return quads[static_cast<int>(p)][idx];
}

}  // namespace irea
