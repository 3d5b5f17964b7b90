#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "irea/errors.hpp"

namespace irea {

/// Dense row-major tensor. Ranks used across the library: 1 (vectors),
/// 2 (mosaics), 3 (C x H x W images and feature maps), 4 (conv weights).
template <typename T>
struct Tensor {
  std::vector<int> shape;
  std::vector<T> v;

  Tensor() = default;
  explicit Tensor(std::vector<int> s) : shape(std::move(s)), v(count_of(shape), T(0)) {}
  Tensor(std::vector<int> s, T fill) : shape(std::move(s)), v(count_of(shape), fill) {}

  static size_t count_of(const std::vector<int>& s) {
    size_t n = 1;
    for (int d : s) {
      if (d < 0) throw ShapeError("negative tensor dimension");
      n *= static_cast<size_t>(d);
    }
    return n;
  }

  size_t size() const { return v.size(); }
  int dim(int i) const { return shape[static_cast<size_t>(i)]; }
  int rank() const { return static_cast<int>(shape.size()); }

  T* data() { return v.data(); }
  const T* data() const { return v.data(); }

  // 2-D access (H x W)
  T& at(int y, int x) { return v[static_cast<size_t>(y) * shape[1] + x]; }
  const T& at(int y, int x) const { return v[static_cast<size_t>(y) * shape[1] + x]; }

  // 3-D access (C x H x W)
  T& at(int c, int y, int x) {
    return v[(static_cast<size_t>(c) * shape[1] + y) * shape[2] + x];
  }
  const T& at(int c, int y, int x) const {
    return v[(static_cast<size_t>(c) * shape[1] + y) * shape[2] + x];
  }

  // 4-D access
  T& at(int a, int b, int c, int d) {
    return v[((static_cast<size_t>(a) * shape[1] + b) * shape[2] + c) * shape[3] + d];
  }
  const T& at(int a, int b, int c, int d) const {
    return v[((static_cast<size_t>(a) * shape[1] + b) * shape[2] + c) * shape[3] + d];
  }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }

  void fill(T x) { std::fill(v.begin(), v.end(), x); }

  bool all_finite() const {
    for (const T& x : v)
      if (!std::isfinite(static_cast<double>(x))) return false;
    return true;
  }

  T min() const { return *std::min_element(v.begin(), v.end()); }
  T max() const { return *std::max_element(v.begin(), v.end()); }

  double sum() const {
    double s = 0.0;
    for (const T& x : v) s += static_cast<double>(x);
    return s;
  }

  template <typename U>
  Tensor<U> cast() const {
    Tensor<U> out(shape);
    for (size_t i = 0; i < v.size(); ++i) out.v[i] = static_cast<U>(v[i]);
    return out;
  }

  std::string shape_str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < shape.size(); ++i) os << (i ? "," : "") << shape[i];
    os << ")";
    return os.str();
  }
};

template <typename T>
void require_shape(const Tensor<T>& t, const std::vector<int>& s, const char* what) {
  if (t.shape != s) {
    Tensor<T> dummy(std::vector<int>{});
    std::ostringstream os;
    os << what << ": expected shape (";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "), got " << t.shape_str();
    throw ShapeError(os.str());
  }
}

template <typename T>
double max_abs_diff(const Tensor<T>& a, const Tensor<T>& b) {
  if (!a.same_shape(b)) throw ShapeError("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (size_t i = 0; i < a.v.size(); ++i)
    m = std::max(m, std::abs(static_cast<double>(a.v[i]) - static_cast<double>(b.v[i])));
  return m;
}

template <typename T>
double mean_abs_diff(const Tensor<T>& a, const Tensor<T>& b) {
  if (!a.same_shape(b)) throw ShapeError("mean_abs_diff: shape mismatch");
  if (a.v.empty()) return 0.0;
  double s = 0.0;
  for (size_t i = 0; i < a.v.size(); ++i)
    s += std::abs(static_cast<double>(a.v[i]) - static_cast<double>(b.v[i]));
  return s / static_cast<double>(a.v.size());
}

}  // namespace irea
