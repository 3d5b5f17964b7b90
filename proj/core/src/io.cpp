#include "irea/io.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "irea/errors.hpp"

namespace irea {
namespace {

constexpr char kMagic[4] = {'I', 'R', 'E', 'A'};

class Writer {
 public:
  explicit Writer(const std::string& path) : path_(path), f_(std::fopen(path.c_str(), "wb")) {
    if (!f_) throw IoError("cannot open for writing: " + path + " (" + std::strerror(errno) + ")");
  }
  ~Writer() {
    if (f_) std::fclose(f_);
  }
  void u32(uint32_t x) { raw(&x, sizeof x); }
  void f32s(const float* p, size_t n) { raw(p, n * sizeof(float)); }
  void raw(const void* p, size_t n) {
    if (std::fwrite(p, 1, n, f_) != n) throw IoError("short write: " + path_);
  }
  void close() {
    if (f_ && std::fclose(f_) != 0) {
      f_ = nullptr;
      throw IoError("close failed: " + path_);
    }
    f_ = nullptr;
  }

 private:
  std::string path_;
  std::FILE* f_;
};

class Reader {
 public:
  explicit Reader(const std::string& path) : path_(path), f_(std::fopen(path.c_str(), "rb")) {
    if (!f_) throw IoError("cannot open for reading: " + path + " (" + std::strerror(errno) + ")");
  }
  ~Reader() {
    if (f_) std::fclose(f_);
  }
  uint32_t u32() {
    uint32_t x;
    raw(&x, sizeof x);
    return x;
  }
  void f32s(float* p, size_t n) { raw(p, n * sizeof(float)); }
  void raw(void* p, size_t n) {
    if (std::fread(p, 1, n, f_) != n)
      throw FormatError("truncated or unreadable file: " + path_);
  }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::FILE* f_;
};

void check_header(Reader& r, uint32_t expected_kind) {
  char magic[4];
  r.raw(magic, 4);
  if (std::memcmp(magic, kMagic, 4) != 0)
    throw FormatError("bad magic bytes: " + r.path());
  const uint32_t version = r.u32();
  if (version != kContainerVersion)
    throw FormatError("unsupported container version " + std::to_string(version) + ": " + r.path());
  const uint32_t kind = r.u32();
  if (kind != expected_kind)
    throw FormatError("container kind mismatch in " + r.path() + ": expected " +
                      std::to_string(expected_kind) + ", got " + std::to_string(kind));
}

uint32_t checked_dim(uint32_t d, const std::string& path) {
  if (d == 0 || d > (1u << 20))
    throw FormatError("implausible dimension " + std::to_string(d) + " in " + path);
  return d;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(const std::string& s) {
  char* end = nullptr;
  errno = 0;
  const double x = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || errno == ERANGE)
    throw FormatError("cannot parse number: '" + s + "'");
  return x;
}

void save_tensor_image(const std::string& path, const Tensor<float>& chw) {
  if (chw.rank() != 3) throw ShapeError("save_tensor_image: tensor must be C x H x W");
  Writer w(path);
  w.raw(kMagic, 4);
  w.u32(kContainerVersion);
  w.u32(kKindImage);
  w.u32(static_cast<uint32_t>(chw.dim(0)));
  w.u32(static_cast<uint32_t>(chw.dim(1)));
  w.u32(static_cast<uint32_t>(chw.dim(2)));
  w.f32s(chw.data(), chw.size());
  w.close();
}

Tensor<float> load_tensor_image(const std::string& path) {
  Reader r(path);
  check_header(r, kKindImage);
  const int c = static_cast<int>(checked_dim(r.u32(), path));
  const int h = static_cast<int>(checked_dim(r.u32(), path));
  const int w = static_cast<int>(checked_dim(r.u32(), path));
  Tensor<float> out({c, h, w});
  r.f32s(out.data(), out.size());
  return out;
}

void save_bracket(const std::string& path, const RawBracket& b) {
  b.validate();
  Writer w(path);
  w.raw(kMagic, 4);
  w.u32(kContainerVersion);
  w.u32(kKindBracket);
  w.u32(static_cast<uint32_t>(b.num_frames()));
  w.u32(4);
  w.u32(static_cast<uint32_t>(b.height()));
  w.u32(static_cast<uint32_t>(b.width()));
  w.u32(static_cast<uint32_t>(b.reference_index));
  for (const auto& f : b.frames) w.f32s(f.data.data(), f.data.size());
  w.close();

  std::ofstream meta(path + ".meta", std::ios::trunc);
  if (!meta) throw IoError("cannot write sidecar: " + path + ".meta");
  meta << "exposures=";
  for (size_t i = 0; i < b.exposures.size(); ++i)
    meta << (i ? "," : "") << format_double(b.exposures[i]);
  meta << "\n";
  if (b.has_oracle_flow()) {
    for (size_t i = 0; i < b.oracle_flow.size(); ++i)
      meta << "flow_to_ref_" << i << "=" << format_double(b.oracle_flow[i][0]) << ","
           << format_double(b.oracle_flow[i][1]) << "\n";
  }
  meta.flush();
  if (!meta) throw IoError("sidecar write failed: " + path + ".meta");
}

RawBracket load_bracket(const std::string& path) {
  Reader r(path);
  check_header(r, kKindBracket);
  const int n = static_cast<int>(checked_dim(r.u32(), path));
  const uint32_t c = r.u32();
  if (c != 4) throw FormatError("bracket channel count must be 4 in " + path);
  const int h = static_cast<int>(checked_dim(r.u32(), path));
  const int w = static_cast<int>(checked_dim(r.u32(), path));
  const uint32_t ref = r.u32();

  RawBracket b;
  b.reference_index = static_cast<int>(ref);
  b.frames.reserve(n);
  for (int i = 0; i < n; ++i) {
    PackedRaw f(h, w);
    r.f32s(f.data.data(), f.data.size());
    b.frames.push_back(std::move(f));
  }

  std::ifstream meta(path + ".meta");
  if (!meta) throw FormatError("missing sidecar: " + path + ".meta");
  std::string line;
  std::vector<std::array<double, 2>> flows;
  while (std::getline(meta, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw FormatError("bad sidecar line: '" + line + "'");
    const std::string key = line.substr(0, eq);
    const std::string val = line.substr(eq + 1);
    if (key == "exposures") {
      for (const auto& tok : split(val, ',')) b.exposures.push_back(parse_double(tok));
    } else if (key.rfind("flow_to_ref_", 0) == 0) {
      const size_t idx = std::stoul(key.substr(12));
      const auto parts = split(val, ',');
      if (parts.size() != 2) throw FormatError("bad flow entry: '" + line + "'");
      if (flows.size() <= idx) flows.resize(idx + 1, {0.0, 0.0});
      flows[idx] = {parse_double(parts[0]), parse_double(parts[1])};
    } else {
      throw FormatError("unknown sidecar key: '" + key + "'");
    }
  }
  if (!flows.empty()) {
    if (flows.size() != static_cast<size_t>(n))
      throw FormatError("sidecar flow count mismatch: " + path + ".meta");
    b.oracle_flow = std::move(flows);
  }
  b.validate();
  return b;
}

void save_hdr(const std::string& path, const HdrImage& img) {
  img.validate();
  save_tensor_image(path, img.data);
}

HdrImage load_hdr(const std::string& path) {
  HdrImage img;
  img.data = load_tensor_image(path);
  img.validate();
  return img;
}

void write_pgm(const std::string& path, const Tensor<float>& gray) {
  if (gray.rank() != 2) throw ShapeError("write_pgm: tensor must be H x W");
  const int h = gray.dim(0), w = gray.dim(1);
  Writer out(path);
  std::ostringstream head;
  head << "P5\n" << w << " " << h << "\n255\n";
  const std::string hs = head.str();
  out.raw(hs.data(), hs.size());
  std::vector<uint8_t> row(static_cast<size_t>(w));
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const float v = std::clamp(gray.at(y, x), 0.0f, 1.0f);
      row[static_cast<size_t>(x)] = static_cast<uint8_t>(std::lround(v * 255.0f));
    }
    out.raw(row.data(), row.size());
  }
  out.close();
}

void write_ppm(const std::string& path, const Tensor<float>& rgb) {
  if (rgb.rank() != 3 || rgb.dim(0) != 3) throw ShapeError("write_ppm: tensor must be 3 x H x W");
  const int h = rgb.dim(1), w = rgb.dim(2);
  Writer out(path);
  std::ostringstream head;
  head << "P6\n" << w << " " << h << "\n255\n";
  const std::string hs = head.str();
  out.raw(hs.data(), hs.size());
  std::vector<uint8_t> row(static_cast<size_t>(w) * 3);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < 3; ++c) {
        const float v = std::clamp(rgb.at(c, y, x), 0.0f, 1.0f);
        row[static_cast<size_t>(x) * 3 + c] = static_cast<uint8_t>(std::lround(v * 255.0f));
      }
    }
    out.raw(row.data(), row.size());
  }
  out.close();
}

void write_manifest(const std::string& path, const std::vector<ManifestEntry>& entries) {
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw IoError("cannot write manifest: " + path);
  for (const auto& e : entries)
    f << e.id << "\t" << e.bracket_path << "\t" << e.gt_path << "\t" << e.split << "\t"
      << e.seed << "\n";
  f.flush();
  if (!f) throw IoError("manifest write failed: " + path);
}

std::vector<ManifestEntry> read_manifest(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot read manifest: " + path);
  std::vector<ManifestEntry> out;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    const auto parts = split(line, '\t');
    if (parts.size() != 5) throw FormatError("bad manifest row: '" + line + "'");
    ManifestEntry e;
    e.id = parts[0];
    e.bracket_path = parts[1];
    e.gt_path = parts[2];
    e.split = parts[3];
    e.seed = std::stoull(parts[4]);
    out.push_back(std::move(e));
  }
  return out;
}

std::string parent_dir(const std::string& path) {
  const auto p = std::filesystem::path(path).parent_path();
  return p.empty() ? std::string(".") : p.string();
}

std::string join_path(const std::string& dir, const std::string& rel) {
  if (!rel.empty() && rel[0] == '/') return rel;
  return (std::filesystem::path(dir) / rel).string();
}

}  // namespace irea
