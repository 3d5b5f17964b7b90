#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "irea/image.hpp"
#include "irea/tensor.hpp"

namespace irea {

/// On-disk container, shared by brackets, HDR images, and flow fields:
/// magic "IREA", u32 version, u32 kind, dims, then little-endian float32
/// payload, row-major. Bracket metadata (exposures, oracle flow) lives in
/// a plain-text key=value sidecar at <path>.meta.
inline constexpr uint32_t kContainerVersion = 1;
inline constexpr uint32_t kKindBracket = 1;
inline constexpr uint32_t kKindImage = 2;

void save_tensor_image(const std::string& path, const Tensor<float>& chw);
Tensor<float> load_tensor_image(const std::string& path);

void save_bracket(const std::string& path, const RawBracket& b);
RawBracket load_bracket(const std::string& path);

void save_hdr(const std::string& path, const HdrImage& img);
HdrImage load_hdr(const std::string& path);

/// Grayscale binary PGM (P5, maxval 255); values clamped to [0, 1].
void write_pgm(const std::string& path, const Tensor<float>& gray);

/// RGB binary PPM (P6, maxval 255) from a 3 x H x W tensor in [0, 1].
void write_ppm(const std::string& path, const Tensor<float>& rgb);

struct ManifestEntry {
  std::string id;
  std::string bracket_path;  // relative to the manifest directory
  std::string gt_path;
  std::string split;  // "train" or "val"
  uint64_t seed = 0;
};

/// Line-oriented manifest: id<TAB>bracket<TAB>gt<TAB>split<TAB>seed.
void write_manifest(const std::string& path, const std::vector<ManifestEntry>& entries);
std::vector<ManifestEntry> read_manifest(const std::string& path);

/// Directory of a path, for resolving manifest-relative entries.
std::string parent_dir(const std::string& path);
std::string join_path(const std::string& dir, const std::string& rel);

/// Shortest decimal form that round-trips a double exactly.
std::string format_double(double x);
double parse_double(const std::string& s);

}  // namespace irea
