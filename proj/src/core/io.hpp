#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "core/image.hpp"

namespace spsim {

// 16-bit binary PGM (P5, maxval 65535, big-endian samples). An optional
// comment line carries the run-config hash.
void write_pgm16(const std::filesystem::path& path, int width, int height,
                 std::span<const uint16_t> values, const std::string& comment = "");

// Reads P5 at maxval 255 or 65535; values scaled to [0,1].
ScalarImage read_pgm(const std::filesystem::path& path);

// Lossless shortest-round-trip decimal formatting; keeps CSV output
// byte-stable across reruns.
std::string format_double(double v);

class CsvWriter {
public:
  CsvWriter(const std::filesystem::path& path, uint64_t config_hash, const std::string& version);
  void header(std::span<const std::string> columns);
  void row(std::span<const std::string> cells);
  void cell(std::string text);
  void cell(double v) { cell(format_double(v)); }
  void cell(int64_t v) { cell(std::to_string(v)); }
  void end_row();

private:
  std::ofstream out_;
  bool row_open_ = false;
};

// Raw binary container shared by measurement and reconstruction matrices.
// Layout (little-endian):
//   magic "SPSMMAT1", u32 kind, u32 img_w, u32 img_h, u64 rows, u64 cols,
//   f64 mu, f64 svd_rel_cutoff, u64 config_hash, then rows*cols f64 row-major.
enum class MatrixKind : uint32_t { measurement = 0, reconstruction = 1 };

struct MatrixFileHeader {
  MatrixKind kind = MatrixKind::measurement;
  uint32_t img_width = 0;
  uint32_t img_height = 0;
  uint64_t rows = 0;
  uint64_t cols = 0;
  double mu = 0.0;
  double svd_rel_cutoff = 0.0;
  uint64_t config_hash = 0;
};

void write_matrix_file(const std::filesystem::path& path, const MatrixFileHeader& header,
                       std::span<const double> row_major);
MatrixFileHeader read_matrix_file(const std::filesystem::path& path, std::vector<double>& row_major);

} // namespace spsim
