// io.hpp
// Binary field dumps (HWF1), CSV emission with stable formatting, and
// trajectory export manifests.
//
// HWF1 layout, little-endian:
//   bytes 0..3   magic "HWF1"
//   u32 nx, u32 ny
//   f64 lx, f64 ly
//   nx*ny interleaved (re, im) f64 pairs, row-major (y contiguous),
//   physical representation only.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hwlab/grid.hpp"

namespace hwlab {

void write_field(const std::filesystem::path& path, const Field& f);
Field read_field(const std::filesystem::path& path);

// Fixed-format floating point for byte-stable CSV output (shortest round-trip).
std::string fmt_double(double v);

class CsvWriter {
  public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);
    void row(const std::vector<double>& values);
    void row_mixed(const std::vector<std::string>& cells);
    ~CsvWriter();

  private:
    std::string buf_;
    std::filesystem::path path_;
    std::size_t ncols_;
};

}  // namespace hwlab
