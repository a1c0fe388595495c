#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

namespace fssinv {

/// Writes a file atomically: content goes to `<path>.tmp` which is renamed
/// over the target only after a successful flush, so failed commands never
/// leave partial output behind.
class AtomicFileWriter {
 public:
  explicit AtomicFileWriter(const std::string& path)
      : path_(path), tmp_path_(path + ".tmp"), out_(tmp_path_, std::ios::binary) {
    if (!out_) throw std::runtime_error("cannot open for writing: " + tmp_path_);
  }

  ~AtomicFileWriter() {
    if (!committed_) {
      out_.close();
      std::error_code ec;
      std::filesystem::remove(tmp_path_, ec);
    }
  }

  std::ostream& stream() { return out_; }

  void commit() {
    out_.flush();
    if (!out_) throw std::runtime_error("write failed: " + tmp_path_);
    out_.close();
    std::filesystem::rename(tmp_path_, path_);
    committed_ = true;
  }

  AtomicFileWriter(const AtomicFileWriter&) = delete;
  AtomicFileWriter& operator=(const AtomicFileWriter&) = delete;

 private:
  std::string path_;
  std::string tmp_path_;
  std::ofstream out_;
  bool committed_ = false;
};

namespace detail {

/// Fixed-point formatting used by the persistence layer; snprintf keeps the
/// output locale-independent and byte-stable.
inline std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

/// Shortest round-trip-exact representation (17 significant digits).
inline std::string format_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

}  // namespace fssinv
