#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "irea/errors.hpp"
#include "irea/tensor.hpp"

namespace irea {

/// 2x2 color-filter tiling, named by the top-left quad reading order.
enum class BayerPattern : uint8_t { RGGB = 0, GRBG = 1, GBRG = 2, BGGR = 3 };

const char* pattern_name(BayerPattern p);

/// Color at mosaic site (y, x) for a pattern: 0 = R, 1 = G, 2 = B.
int bayer_color_at(BayerPattern p, int y, int x);

/// Sensor-domain mosaic, values normalized so 1.0 is saturation.
template <typename T>
struct BayerMosaicT {
  Tensor<T> data;  // H_m x W_m
  BayerPattern pattern = BayerPattern::RGGB;

  BayerMosaicT() = default;
  BayerMosaicT(int h, int w, BayerPattern p = BayerPattern::RGGB)
      : data({h, w}), pattern(p) {}

  int height() const { return data.shape.empty() ? 0 : data.dim(0); }
  int width() const { return data.shape.empty() ? 0 : data.dim(1); }

  void validate() const {
    if (data.rank() != 2) throw ShapeError("BayerMosaic: data must be 2-D");
    if (height() % 2 != 0 || width() % 2 != 0)
      throw ShapeError("BayerMosaic: dimensions must be even, got " + data.shape_str());
    for (const T& x : data.v) {
      if (!std::isfinite(static_cast<double>(x)) || x < T(0))
        throw ValidationError("BayerMosaic: values must be finite and >= 0");
    }
  }
};

/// 4-channel half-resolution packing of an RGGB mosaic.
/// Channel order: (R, G1, G2, B) = mosaic sites (ee, eo, oe, oo).
template <typename T>
struct PackedRawT {
  Tensor<T> data;  // 4 x H x W

  PackedRawT() = default;
  PackedRawT(int h, int w) : data({4, h, w}) {}

  int height() const { return data.rank() == 3 ? data.dim(1) : 0; }
  int width() const { return data.rank() == 3 ? data.dim(2) : 0; }

  void validate() const {
    if (data.rank() != 3) throw ShapeError("PackedRaw: data must be 3-D");
    if (data.dim(0) != 4)
      throw ShapeError("PackedRaw: channel count must be 4, got " +
                       std::to_string(data.dim(0)));
  }
};

/// Linear-domain HDR target/output, packed RGGB layout, values >= 0
/// (unbounded above).
template <typename T>
struct HdrImageT {
  Tensor<T> data;  // 4 x H x W

  HdrImageT() = default;
  HdrImageT(int h, int w) : data({4, h, w}) {}

  int height() const { return data.rank() == 3 ? data.dim(1) : 0; }
  int width() const { return data.rank() == 3 ? data.dim(2) : 0; }

  void validate() const {
    if (data.rank() != 3 || data.dim(0) != 4)
      throw ShapeError("HdrImage: data must be 4 x H x W");
    for (const T& x : data.v)
      if (!std::isfinite(static_cast<double>(x)) || x < T(0))
        throw ValidationError("HdrImage: values must be finite and >= 0");
  }
};

/// One multi-exposure capture: N packed frames ordered by exposure,
/// frame 0 (shortest exposure) is the reference.
template <typename T>
struct RawBracketT {
  std::vector<PackedRawT<T>> frames;
  std::vector<double> exposures;  // relative to frame 0; exposures[0] == 1
  int reference_index = 0;
  /// Ground-truth packed-scale flow toward the reference per frame
  /// (dx, dy), present only for synthetic brackets. Transported through
  /// augmentation so the oracle flow estimator stays valid.
  std::vector<std::array<double, 2>> oracle_flow;

  int num_frames() const { return static_cast<int>(frames.size()); }
  int height() const { return frames.empty() ? 0 : frames[0].height(); }
  int width() const { return frames.empty() ? 0 : frames[0].width(); }
  bool has_oracle_flow() const { return oracle_flow.size() == frames.size(); }

  void validate() const {
    if (frames.size() < 2) throw ValidationError("RawBracket: N must be >= 2");
    if (exposures.size() != frames.size())
      throw ValidationError("RawBracket: exposures size must equal N");
    for (const auto& f : frames) {
      f.validate();
      if (f.height() != height() || f.width() != width())
        throw ValidationError("RawBracket: all frames must share (H, W)");
    }
    if (exposures[0] != 1.0)
      throw ValidationError("RawBracket: exposures[0] must be 1");
    for (size_t i = 0; i < exposures.size(); ++i) {
      if (!(exposures[i] > 0.0))
        throw ValidationError("RawBracket: exposures must be strictly positive");
      if (i > 0 && exposures[i] < exposures[i - 1])
        throw ValidationError("RawBracket: exposures must be non-decreasing");
    }
    if (reference_index != 0)
      throw ValidationError("RawBracket: reference_index must be 0 (shortest exposure)");
    if (!oracle_flow.empty() && oracle_flow.size() != frames.size())
      throw ValidationError("RawBracket: oracle_flow must be empty or per-frame");
  }
};

using BayerMosaic = BayerMosaicT<float>;
using PackedRaw = PackedRawT<float>;
using HdrImage = HdrImageT<float>;
using RawBracket = RawBracketT<float>;

/// Subsample an RGGB mosaic into 4 half-resolution channels.
template <typename T>
PackedRawT<T> pack_mosaic(const BayerMosaicT<T>& m) {
  if (m.pattern != BayerPattern::RGGB)
    throw PatternError(std::string("pack_mosaic: pattern must be RGGB, got ") +
                       pattern_name(m.pattern));
  if (m.data.rank() != 2) throw ShapeError("pack_mosaic: mosaic must be 2-D");
  const int hm = m.height(), wm = m.width();
  if (hm % 2 != 0 || wm % 2 != 0 || hm == 0 || wm == 0)
    throw ShapeError("pack_mosaic: mosaic dimensions must be even and > 0, got " +
                     m.data.shape_str());
  PackedRawT<T> out(hm / 2, wm / 2);
  const int h = hm / 2, w = wm / 2;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      out.data.at(0, y, x) = m.data.at(2 * y, 2 * x);
      out.data.at(1, y, x) = m.data.at(2 * y, 2 * x + 1);
      out.data.at(2, y, x) = m.data.at(2 * y + 1, 2 * x);
      out.data.at(3, y, x) = m.data.at(2 * y + 1, 2 * x + 1);
    }
  }
  return out;
}

/// Exact inverse of pack_mosaic; result pattern is RGGB.
template <typename T>
BayerMosaicT<T> unpack_mosaic(const PackedRawT<T>& p) {
  if (p.data.rank() != 3) throw ShapeError("unpack_mosaic: data must be 3-D");
  if (p.data.dim(0) != 4)
    throw ShapeError("unpack_mosaic: channel count must be 4, got " +
                     std::to_string(p.data.dim(0)));
  const int h = p.height(), w = p.width();
  BayerMosaicT<T> out(2 * h, 2 * w, BayerPattern::RGGB);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      out.data.at(2 * y, 2 * x) = p.data.at(0, y, x);
      out.data.at(2 * y, 2 * x + 1) = p.data.at(1, y, x);
      out.data.at(2 * y + 1, 2 * x) = p.data.at(2, y, x);
      out.data.at(2 * y + 1, 2 * x + 1) = p.data.at(3, y, x);
    }
  }
  return out;
}

/// Mosaic where every site holds its color index (R=0, G=1, B=2).
/// The canonical probe for pattern-preservation tests.
template <typename T>
BayerMosaicT<T> color_index_mosaic(int hm, int wm, BayerPattern p = BayerPattern::RGGB) {
  BayerMosaicT<T> m(hm, wm, p);
  for (int y = 0; y < hm; ++y)
    for (int x = 0; x < wm; ++x) m.data.at(y, x) = static_cast<T>(bayer_color_at(p, y, x));
  return m;
}

}  // namespace irea
