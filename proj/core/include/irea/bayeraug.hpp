#pragma once

#include <utility>

#include "irea/image.hpp"
#include "irea/rng.hpp"

namespace irea {

/// One augmentation draw. Applied in a fixed order: rotation, then
/// vertical flip, then horizontal flip. Each step carries the crop that
/// restores the RGGB pattern, so specs compose freely.
struct AugmentSpec {
  int rot90_quarter_turns = 0;  // clockwise, {0,1,2,3}
  bool flip_v = false;
  bool flip_h = false;

  bool is_identity() const { return rot90_quarter_turns == 0 && !flip_v && !flip_h; }
};

AugmentSpec draw_augment_spec(Rng& rng);

/// Plain flips, no crop. These break the pattern (RGGB becomes GBRG /
/// GRBG) and exist for the negative tests and the augment-preview CLI.
template <typename T>
BayerMosaicT<T> flip_v_naive(const BayerMosaicT<T>& m);
template <typename T>
BayerMosaicT<T> flip_h_naive(const BayerMosaicT<T>& m);
template <typename T>
BayerMosaicT<T> rot90_naive(const BayerMosaicT<T>& m, int quarter_turns);

/// Vertical flip followed by dropping the first and last rows, which
/// restores RGGB. Output is (H_m - 2) x W_m.
template <typename T>
BayerMosaicT<T> flip_v_preserving(const BayerMosaicT<T>& m);

/// Horizontal flip followed by dropping the first and last columns.
/// Output is H_m x (W_m - 2).
template <typename T>
BayerMosaicT<T> flip_h_preserving(const BayerMosaicT<T>& m);

/// 90-degree clockwise rotation k times, followed by the minimal crop
/// restoring RGGB: k=1 drops 2 columns, k=3 drops 2 rows, k=2 drops both.
template <typename T>
BayerMosaicT<T> rot90_preserving(const BayerMosaicT<T>& m, int quarter_turns);

/// Applies one spec to every frame and the ground truth by unpacking to
/// the mosaic domain, transforming, and re-packing. Oracle flow vectors,
/// when present, are rotated/flipped alongside.
template <typename T>
std::pair<RawBracketT<T>, HdrImageT<T>> augment_bracket(const RawBracketT<T>& b,
                                                        const HdrImageT<T>& gt,
                                                        const AugmentSpec& spec);

// --- implementation ---

namespace detail {

inline BayerPattern flip_row_parity(BayerPattern p) {
  switch (p) {
    case BayerPattern::RGGB: return BayerPattern::GBRG;
    case BayerPattern::GBRG: return BayerPattern::RGGB;
    case BayerPattern::GRBG: return BayerPattern::BGGR;
    case BayerPattern::BGGR: return BayerPattern::GRBG;
  }
  return p;
}

inline BayerPattern flip_col_parity(BayerPattern p) {
  switch (p) {
    case BayerPattern::RGGB: return BayerPattern::GRBG;
    case BayerPattern::GRBG: return BayerPattern::RGGB;
    case BayerPattern::GBRG: return BayerPattern::BGGR;
    case BayerPattern::BGGR: return BayerPattern::GBRG;
  }
  return p;
}

template <typename T>
BayerMosaicT<T> crop_rows_cols(const BayerMosaicT<T>& m, int row_trim, int col_trim) {
  const int h = m.height() - 2 * row_trim;
  const int w = m.width() - 2 * col_trim;
  BayerMosaicT<T> out(h, w, m.pattern);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) out.data.at(y, x) = m.data.at(y + row_trim, x + col_trim);
  return out;
}

template <typename T>
void require_rggb_even(const BayerMosaicT<T>& m, const char* op) {
  if (m.pattern != BayerPattern::RGGB)
    throw PatternError(std::string(op) + ": input must be RGGB, got " + pattern_name(m.pattern));
  if (m.height() % 2 != 0 || m.width() % 2 != 0)
    throw ShapeError(std::string(op) + ": mosaic dimensions must be even");
}

}  // namespace detail

template <typename T>
BayerMosaicT<T> flip_v_naive(const BayerMosaicT<T>& m) {
  const int h = m.height(), w = m.width();
  BayerMosaicT<T> out(h, w, detail::flip_row_parity(m.pattern));
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) out.data.at(y, x) = m.data.at(h - 1 - y, x);
  return out;
}

template <typename T>
BayerMosaicT<T> flip_h_naive(const BayerMosaicT<T>& m) {
  const int h = m.height(), w = m.width();
  BayerMosaicT<T> out(h, w, detail::flip_col_parity(m.pattern));
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) out.data.at(y, x) = m.data.at(y, w - 1 - x);
  return out;
}

template <typename T>
BayerMosaicT<T> rot90_naive(const BayerMosaicT<T>& m, int quarter_turns) {
  int k = ((quarter_turns % 4) + 4) % 4;
  if (k == 0) return m;
  const int h = m.height(), w = m.width();
  BayerMosaicT<T> out;
  // Patterns after rotation of RGGB: k=1 -> GRBG, k=2 -> BGGR, k=3 -> GBRG.
  // Derived per-site below, so any input pattern is handled.
  if (k == 1) {
    out = BayerMosaicT<T>(w, h, m.pattern);
    for (int y = 0; y < w; ++y)
      for (int x = 0; x < h; ++x) out.data.at(y, x) = m.data.at(h - 1 - x, y);
  } else if (k == 2) {
    out = BayerMosaicT<T>(h, w, m.pattern);
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) out.data.at(y, x) = m.data.at(h - 1 - y, w - 1 - x);
  } else {
    out = BayerMosaicT<T>(w, h, m.pattern);
    for (int y = 0; y < w; ++y)
      for (int x = 0; x < h; ++x) out.data.at(y, x) = m.data.at(x, w - 1 - y);
  }
  // Track the pattern of the rotated mosaic (for RGGB inputs only; the
  // preserving ops re-check before use).
  if (m.pattern == BayerPattern::RGGB) {
    const BayerPattern rot[4] = {BayerPattern::RGGB, BayerPattern::GRBG, BayerPattern::BGGR,
                                 BayerPattern::GBRG};
    out.pattern = rot[k];
  }
  return out;
}

template <typename T>
BayerMosaicT<T> flip_v_preserving(const BayerMosaicT<T>& m) {
  detail::require_rggb_even(m, "flip_v_preserving");
  if (m.height() < 4) throw ShapeError("flip_v_preserving: mosaic height must be >= 4");
  BayerMosaicT<T> flipped = flip_v_naive(m);  // GBRG
  BayerMosaicT<T> out = detail::crop_rows_cols(flipped, 1, 0);
  out.pattern = BayerPattern::RGGB;
  return out;
}

template <typename T>
BayerMosaicT<T> flip_h_preserving(const BayerMosaicT<T>& m) {
  detail::require_rggb_even(m, "flip_h_preserving");
  if (m.width() < 4) throw ShapeError("flip_h_preserving: mosaic width must be >= 4");
  BayerMosaicT<T> flipped = flip_h_naive(m);  // GRBG
  BayerMosaicT<T> out = detail::crop_rows_cols(flipped, 0, 1);
  out.pattern = BayerPattern::RGGB;
  return out;
}

template <typename T>
BayerMosaicT<T> rot90_preserving(const BayerMosaicT<T>& m, int quarter_turns) {
  detail::require_rggb_even(m, "rot90_preserving");
  const int k = ((quarter_turns % 4) + 4) % 4;
  if (k == 0) return m;
  if (k == 1 && m.height() < 4)
    throw ShapeError("rot90_preserving: mosaic height must be >= 4 for k=1");
  if (k == 3 && m.width() < 4)
    throw ShapeError("rot90_preserving: mosaic width must be >= 4 for k=3");
  if (k == 2 && (m.height() < 4 || m.width() < 4))
    throw ShapeError("rot90_preserving: mosaic dimensions must be >= 4 for k=2");
  BayerMosaicT<T> rotated = rot90_naive(m, k);
  BayerMosaicT<T> out;
  if (k == 1) out = detail::crop_rows_cols(rotated, 0, 1);       // GRBG -> RGGB
  else if (k == 2) out = detail::crop_rows_cols(rotated, 1, 1);  // BGGR -> RGGB
  else out = detail::crop_rows_cols(rotated, 1, 0);              // GBRG -> RGGB
  out.pattern = BayerPattern::RGGB;
  return out;
}

namespace detail {

template <typename T>
BayerMosaicT<T> apply_spec_mosaic(const BayerMosaicT<T>& m, const AugmentSpec& spec) {
  BayerMosaicT<T> cur = rot90_preserving(m, spec.rot90_quarter_turns);
  if (spec.flip_v) cur = flip_v_preserving(cur);
  if (spec.flip_h) cur = flip_h_preserving(cur);
  return cur;
}

inline std::array<double, 2> apply_spec_vector(std::array<double, 2> v, const AugmentSpec& spec) {
  for (int i = 0; i < ((spec.rot90_quarter_turns % 4) + 4) % 4; ++i)
    v = {-v[1], v[0]};  // clockwise quarter turn, y-down convention
  if (spec.flip_v) v[1] = -v[1];
  if (spec.flip_h) v[0] = -v[0];
  return v;
}

}  // namespace detail

template <typename T>
std::pair<RawBracketT<T>, HdrImageT<T>> augment_bracket(const RawBracketT<T>& b,
                                                        const HdrImageT<T>& gt,
                                                        const AugmentSpec& spec) {
  b.validate();
  if (gt.height() != b.height() || gt.width() != b.width())
    throw ValidationError("augment_bracket: ground truth dims must match frames");
  if (spec.is_identity()) return {b, gt};

  RawBracketT<T> out;
  out.exposures = b.exposures;
  out.reference_index = b.reference_index;
  out.frames.reserve(b.frames.size());
  for (const auto& f : b.frames)
    out.frames.push_back(pack_mosaic(detail::apply_spec_mosaic(unpack_mosaic(f), spec)));
  for (const auto& v : b.oracle_flow)
    out.oracle_flow.push_back(detail::apply_spec_vector(v, spec));

  HdrImageT<T> gt_out;
  gt_out.data = pack_mosaic(detail::apply_spec_mosaic(unpack_mosaic(PackedRawT<T>{gt.data}), spec)).data;
  return {std::move(out), std::move(gt_out)};
}

}  // namespace irea
