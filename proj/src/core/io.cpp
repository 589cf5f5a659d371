#include "core/io.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cstring>

#include "core/error.hpp"

static_assert(std::endian::native == std::endian::little,
              "file formats are defined little-endian; big-endian hosts are unsupported");

namespace spsim {

void write_pgm16(const std::filesystem::path& path, int width, int height,
                 std::span<const uint16_t> values, const std::string& comment) {
  require(width > 0 && height > 0, ErrorCode::invalid_argument, "bad PGM dims");
  require(values.size() == static_cast<size_t>(width) * height, ErrorCode::dim_mismatch,
          "PGM value count does not match dims");
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorCode::io, "cannot open for writing: " + path.string());
  out << "P5\n";
  if (!comment.empty()) out << "# " << comment << "\n";
  out << width << " " << height << "\n65535\n";
  std::vector<unsigned char> buf(values.size() * 2);
  for (size_t i = 0; i < values.size(); ++i) {
    buf[2 * i] = static_cast<unsigned char>(values[i] >> 8); // MSB first per PGM
    buf[2 * i + 1] = static_cast<unsigned char>(values[i] & 0xFF);
  }
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  require(out.good(), ErrorCode::io, "write failed: " + path.string());
}

namespace {

int next_pgm_token(std::istream& in) {
  // skips whitespace and '#' comment lines, returns a nonnegative integer
  for (;;) {
    int c = in.peek();
    if (c == EOF) throw Error(ErrorCode::io, "truncated PGM header");
    if (std::isspace(c)) {
      in.get();
      continue;
    }
    if (c == '#') {
      std::string line;
      std::getline(in, line);
      continue;
    }
    break;
  }
  int v = 0;
  in >> v;
  require(in.good() && v >= 0, ErrorCode::io, "malformed PGM header");
  return v;
}

} // namespace

ScalarImage read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorCode::io, "cannot open: " + path.string());
  char m0 = 0, m1 = 0;
  in.get(m0);
  in.get(m1);
  require(m0 == 'P' && m1 == '5', ErrorCode::io, "not a binary PGM (P5): " + path.string());
  const int width = next_pgm_token(in);
  const int height = next_pgm_token(in);
  const int maxval = next_pgm_token(in);
  require(width > 0 && height > 0, ErrorCode::io, "bad PGM dims");
  require(maxval == 255 || maxval == 65535, ErrorCode::io, "unsupported PGM maxval");
  in.get(); // single whitespace after maxval
  ScalarImage img(width, height);
  const size_t n = img.size();
  if (maxval == 255) {
    std::vector<unsigned char> buf(n);
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(n));
    require(in.gcount() == static_cast<std::streamsize>(n), ErrorCode::io, "truncated PGM data");
    for (size_t i = 0; i < n; ++i) img.values[i] = buf[i] / 255.0;
  } else {
    std::vector<unsigned char> buf(n * 2);
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    require(in.gcount() == static_cast<std::streamsize>(buf.size()), ErrorCode::io,
            "truncated PGM data");
    for (size_t i = 0; i < n; ++i) {
      const unsigned v = (static_cast<unsigned>(buf[2 * i]) << 8) | buf[2 * i + 1];
      img.values[i] = v / 65535.0;
    }
  }
  return img;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  require(ec == std::errc(), ErrorCode::invalid_argument, "to_chars failed");
  return std::string(buf, ptr);
}

CsvWriter::CsvWriter(const std::filesystem::path& path, uint64_t config_hash,
                     const std::string& version) {
  out_.open(path);
  require(out_.good(), ErrorCode::io, "cannot open for writing: " + path.string());
  char hash_hex[32];
  std::snprintf(hash_hex, sizeof(hash_hex), "%016llx",
                static_cast<unsigned long long>(config_hash));
  out_ << "# config_hash=" << hash_hex << " version=" << version << "\n";
}

void CsvWriter::header(std::span<const std::string> columns) { row(columns); }

void CsvWriter::row(std::span<const std::string> cells) {
  for (const auto& c : cells) cell(c);
  end_row();
}

void CsvWriter::cell(std::string text) {
  if (row_open_) out_ << ",";
  out_ << text;
  row_open_ = true;
}

void CsvWriter::end_row() {
  out_ << "\n";
  row_open_ = false;
}

namespace {

constexpr char kMatrixMagic[8] = {'S', 'P', 'S', 'M', 'M', 'A', 'T', '1'};

template <typename T>
void put(std::ofstream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
void get(std::ifstream& in, T& v) {
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
}

} // namespace

void write_matrix_file(const std::filesystem::path& path, const MatrixFileHeader& h,
                       std::span<const double> row_major) {
  require(row_major.size() == h.rows * h.cols, ErrorCode::dim_mismatch,
          "matrix payload size does not match header");
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorCode::io, "cannot open for writing: " + path.string());
  out.write(kMatrixMagic, sizeof(kMatrixMagic));
  put(out, static_cast<uint32_t>(h.kind));
  put(out, h.img_width);
  put(out, h.img_height);
  put(out, h.rows);
  put(out, h.cols);
  put(out, h.mu);
  put(out, h.svd_rel_cutoff);
  put(out, h.config_hash);
  out.write(reinterpret_cast<const char*>(row_major.data()),
            static_cast<std::streamsize>(row_major.size() * sizeof(double)));
  require(out.good(), ErrorCode::io, "write failed: " + path.string());
}

MatrixFileHeader read_matrix_file(const std::filesystem::path& path,
                                  std::vector<double>& row_major) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorCode::io, "cannot open: " + path.string());
  char magic[8];
  in.read(magic, sizeof(magic));
  require(in.good() && std::memcmp(magic, kMatrixMagic, 8) == 0, ErrorCode::io,
          "not a matrix container: " + path.string());
  MatrixFileHeader h;
  uint32_t kind = 0;
  get(in, kind);
  require(kind <= 1, ErrorCode::io, "unknown matrix kind");
  h.kind = static_cast<MatrixKind>(kind);
  get(in, h.img_width);
  get(in, h.img_height);
  get(in, h.rows);
  get(in, h.cols);
  get(in, h.mu);
  get(in, h.svd_rel_cutoff);
  get(in, h.config_hash);
  require(in.good(), ErrorCode::io, "truncated matrix header");
  require(h.rows > 0 && h.cols > 0 && h.rows * h.cols < (1ULL << 32), ErrorCode::io,
          "implausible matrix dims");
  row_major.resize(h.rows * h.cols);
  in.read(reinterpret_cast<char*>(row_major.data()),
          static_cast<std::streamsize>(row_major.size() * sizeof(double)));
  require(in.gcount() == static_cast<std::streamsize>(row_major.size() * sizeof(double)),
          ErrorCode::io, "truncated matrix payload");
  return h;
}

} // namespace spsim
