#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "irea/image.hpp"
#include "irea/tensor.hpp"

namespace irea {

/// Per-pixel displacement toward the source: position p in the reference
/// samples p + f(p) in the source. Channel 0 is horizontal (x), channel 1
/// vertical (y), in pixels at packed resolution.
template <typename T>
struct FlowFieldT {
  Tensor<T> data;  // 2 x H x W

  FlowFieldT() = default;
  FlowFieldT(int h, int w) : data({2, h, w}) {}

  int height() const { return data.rank() == 3 ? data.dim(1) : 0; }
  int width() const { return data.rank() == 3 ? data.dim(2) : 0; }

  void validate() const {
    if (data.rank() != 3 || data.dim(0) != 2)
      throw ShapeError("FlowField: data must be 2 x H x W");
    if (!data.all_finite()) throw ValidationError("FlowField: values must be finite");
  }
};

using FlowField = FlowFieldT<float>;

/// Bilinear fetch with clamp-to-edge on the continuous coordinate.
/// Exact at integer sites. Shared by plain warping and the deformable
/// sampler so their border behavior is identical.
template <typename T>
inline T bilinear_sample(const T* img, int h, int w, double cx, double cy) {
  cx = std::clamp(cx, 0.0, static_cast<double>(w - 1));
  cy = std::clamp(cy, 0.0, static_cast<double>(h - 1));
  int x0 = static_cast<int>(std::floor(cx));
  int y0 = static_cast<int>(std::floor(cy));
  if (x0 > w - 2) x0 = std::max(w - 2, 0);
  if (y0 > h - 2) y0 = std::max(h - 2, 0);
  const double fx = cx - x0;
  const double fy = cy - y0;
  const int x1 = std::min(x0 + 1, w - 1);
  const int y1 = std::min(y0 + 1, h - 1);
  const double v00 = static_cast<double>(img[static_cast<size_t>(y0) * w + x0]);
  const double v01 = static_cast<double>(img[static_cast<size_t>(y0) * w + x1]);
  const double v10 = static_cast<double>(img[static_cast<size_t>(y1) * w + x0]);
  const double v11 = static_cast<double>(img[static_cast<size_t>(y1) * w + x1]);
  return static_cast<T>((1.0 - fy) * ((1.0 - fx) * v00 + fx * v01) +
                        fy * ((1.0 - fx) * v10 + fx * v11));
}

/// out(c, p) = x(c, p + f(p)), bilinear, clamp-to-edge.
template <typename T>
Tensor<T> backward_warp(const Tensor<T>& x, const Tensor<T>& flow) {
  if (x.rank() != 3) throw ShapeError("backward_warp: image must be C x H x W");
  if (flow.rank() != 3 || flow.dim(0) != 2)
    throw ShapeError("backward_warp: flow must be 2 x H x W");
  const int c = x.dim(0), h = x.dim(1), w = x.dim(2);
  if (flow.dim(1) != h || flow.dim(2) != w)
    throw ShapeError("backward_warp: spatial dims of image " + x.shape_str() +
                     " and flow " + flow.shape_str() + " must match");
  Tensor<T> out({c, h, w});
  const T* fx = flow.data();
  const T* fy = flow.data() + static_cast<size_t>(h) * w;
  for (int ch = 0; ch < c; ++ch) {
    const T* src = x.data() + static_cast<size_t>(ch) * h * w;
    T* dst = out.data() + static_cast<size_t>(ch) * h * w;
    for (int y = 0; y < h; ++y) {
      for (int xx = 0; xx < w; ++xx) {
        const size_t i = static_cast<size_t>(y) * w + xx;
        dst[i] = bilinear_sample(src, h, w, xx + static_cast<double>(fx[i]),
                                 y + static_cast<double>(fy[i]));
      }
    }
  }
  return out;
}

template <typename T>
PackedRawT<T> backward_warp(const PackedRawT<T>& x, const FlowFieldT<T>& f) {
  PackedRawT<T> out;
  out.data = backward_warp(x.data, f.data);
  return out;
}

/// Equalizes a frame for flow estimation: divide by the exposure ratio,
/// clip to [0, 1], then gamma 1/2.2. Used only on the flow path.
template <typename T>
PackedRawT<T> exposure_normalize(const PackedRawT<T>& x, double ratio) {
  if (!(ratio > 0.0)) throw DomainError("exposure_normalize: ratio must be > 0");
  x.validate();
  PackedRawT<T> out;
  out.data = Tensor<T>(x.data.shape);
  constexpr double kInvGamma = 1.0 / 2.2;
  for (size_t i = 0; i < x.data.size(); ++i) {
    const double v = std::clamp(static_cast<double>(x.data.v[i]) / ratio, 0.0, 1.0);
    out.data.v[i] = static_cast<T>(std::pow(v, kInvGamma));
  }
  return out;
}

/// Mean of the four packed channels; the single-channel proxy the flow
/// estimator runs on.
template <typename T>
Tensor<T> luminance_proxy(const PackedRawT<T>& x) {
  const int h = x.height(), w = x.width();
  Tensor<T> out({h, w});
  for (int y = 0; y < h; ++y)
    for (int xx = 0; xx < w; ++xx)
      out.at(y, xx) = static_cast<T>(
          0.25 * (static_cast<double>(x.data.at(0, y, xx)) + x.data.at(1, y, xx) +
                  x.data.at(2, y, xx) + x.data.at(3, y, xx)));
  return out;
}

class FlowEstimator {
 public:
  virtual ~FlowEstimator() = default;
  virtual std::string name() const = 0;

  /// Pairwise estimate. Both inputs must be exposure-normalized and share dims.
  virtual FlowField estimate(const PackedRaw& src, const PackedRaw& ref) const = 0;

  /// Bracket-aware hook; src/ref are already exposure-normalized frames.
  /// Estimators that need stored metadata (OracleFlow) override this.
  virtual FlowField estimate_for_frame(const RawBracket& bracket, int frame,
                                       const PackedRaw& src_norm,
                                       const PackedRaw& ref_norm) const {
    (void)bracket;
    (void)frame;
    return estimate(src_norm, ref_norm);
  }
};

class ZeroFlow final : public FlowEstimator {
 public:
  std::string name() const override { return "zero"; }
  FlowField estimate(const PackedRaw& src, const PackedRaw& ref) const override;
};

/// Coarse-to-fine local least-squares estimator: 3 pyramid levels, 10
/// fixed-point iterations per level, 5x5 windows. Enough to recover the
/// small global translations of the synthetic data.
class PyramidFlow final : public FlowEstimator {
 public:
  explicit PyramidFlow(int levels = 3, int iters = 10, int window = 5)
      : levels_(levels), iters_(iters), window_(window) {}
  std::string name() const override { return "pyramid"; }
  FlowField estimate(const PackedRaw& src, const PackedRaw& ref) const override;

 private:
  int levels_;
  int iters_;
  int window_;
};

/// Reads the exact synthetic motion stored with the bracket.
class OracleFlow final : public FlowEstimator {
 public:
  std::string name() const override { return "oracle"; }
  FlowField estimate(const PackedRaw& src, const PackedRaw& ref) const override;
  FlowField estimate_for_frame(const RawBracket& bracket, int frame,
                               const PackedRaw& src_norm,
                               const PackedRaw& ref_norm) const override;
};

/// Flows for every frame of a bracket (reference gets zeros). Handles
/// exposure normalization of the estimator inputs.
std::vector<FlowField> estimate_bracket_flows(const FlowEstimator& est, const RawBracket& b);

/// Factory for "zero" | "pyramid" | "oracle".
std::unique_ptr<FlowEstimator> make_flow_estimator(const std::string& name);

}  // namespace irea
