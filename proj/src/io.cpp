#include "vrel/io.hpp"

#include <bit>
#include <cstring>
#include <sstream>

namespace vrel {

namespace {

template <typename T>
T to_little(T v) {
  if constexpr (std::endian::native == std::endian::little) {
    return v;
  } else {
    auto* p = reinterpret_cast<unsigned char*>(&v);
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(p[i], p[sizeof(T) - 1 - i]);
    return v;
  }
}

}  // namespace

BinaryWriter::BinaryWriter(const std::filesystem::path& path)
    : out_(path, std::ios::binary | std::ios::trunc), path_(path) {
  if (!out_) throw DataError("cannot open for writing: " + path.string());
}

void BinaryWriter::u8(std::uint8_t v) { bytes(&v, 1); }

void BinaryWriter::u32(std::uint32_t v) {
  v = to_little(v);
  bytes(&v, 4);
}

void BinaryWriter::u64(std::uint64_t v) {
  v = to_little(v);
  bytes(&v, 8);
}

void BinaryWriter::f32(float v) {
  std::uint32_t bits;
  std::memcpy(&bits, &v, 4);
  u32(bits);
}

void BinaryWriter::f64(double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  u64(bits);
}

void BinaryWriter::bytes(const void* data, std::size_t n) {
  out_.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
  if (!out_) throw DataError("write failed: " + path_.string());
}

void BinaryWriter::str(const std::string& s) {
  u32(static_cast<std::uint32_t>(s.size()));
  bytes(s.data(), s.size());
}

void BinaryWriter::f64_block(const double* data, std::size_t n) {
  if constexpr (std::endian::native == std::endian::little) {
    bytes(data, n * 8);
  } else {
    for (std::size_t i = 0; i < n; ++i) f64(data[i]);
  }
}

void BinaryWriter::f32_block(const float* data, std::size_t n) {
  if constexpr (std::endian::native == std::endian::little) {
    bytes(data, n * 4);
  } else {
    for (std::size_t i = 0; i < n; ++i) f32(data[i]);
  }
}

void BinaryWriter::close() {
  out_.close();
  if (!out_) throw DataError("close failed: " + path_.string());
}

BinaryReader::BinaryReader(const std::filesystem::path& path) : path_(path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open: " + path.string());
  in.seekg(0, std::ios::end);
  size_ = static_cast<std::size_t>(in.tellg());
  in.seekg(0);
  buf_.resize(size_);
  in.read(reinterpret_cast<char*>(buf_.data()), static_cast<std::streamsize>(size_));
  if (!in) throw DataError("read failed: " + path.string());
}

void BinaryReader::need(std::size_t n) {
  if (offset_ + n > size_) {
    throw DataError("truncated file " + path_.string() + " at byte offset " +
                    std::to_string(offset_));
  }
}

std::uint8_t BinaryReader::u8() {
  need(1);
  return buf_[offset_++];
}

std::uint32_t BinaryReader::u32() {
  need(4);
  std::uint32_t v;
  std::memcpy(&v, buf_.data() + offset_, 4);
  offset_ += 4;
  return to_little(v);
}

std::uint64_t BinaryReader::u64() {
  need(8);
  std::uint64_t v;
  std::memcpy(&v, buf_.data() + offset_, 8);
  offset_ += 8;
  return to_little(v);
}

float BinaryReader::f32() {
  const std::uint32_t bits = u32();
  float v;
  std::memcpy(&v, &bits, 4);
  return v;
}

double BinaryReader::f64() {
  const std::uint64_t bits = u64();
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

std::string BinaryReader::str() {
  const std::uint32_t n = u32();
  need(n);
  std::string s(reinterpret_cast<const char*>(buf_.data() + offset_), n);
  offset_ += n;
  return s;
}

void BinaryReader::f64_block(double* data, std::size_t n) {
  if constexpr (std::endian::native == std::endian::little) {
    need(n * 8);
    std::memcpy(data, buf_.data() + offset_, n * 8);
    offset_ += n * 8;
  } else {
    for (std::size_t i = 0; i < n; ++i) data[i] = f64();
  }
}

void BinaryReader::f32_block(float* data, std::size_t n) {
  if constexpr (std::endian::native == std::endian::little) {
    need(n * 4);
    std::memcpy(data, buf_.data() + offset_, n * 4);
    offset_ += n * 4;
  } else {
    for (std::size_t i = 0; i < n; ++i) data[i] = f32();
  }
}

void write_f32_matrix(const std::filesystem::path& path, const Matrix& m) {
  BinaryWriter w(path);
  std::vector<float> row(static_cast<std::size_t>(m.cols()));
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) row[static_cast<std::size_t>(j)] = static_cast<float>(m(i, j));
    w.f32_block(row.data(), row.size());
  }
  w.close();
}

Matrix read_f32_matrix(const std::filesystem::path& path, Index rows, Index cols) {
  BinaryReader r(path);
  const std::size_t expected = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) * 4;
  if (r.size() != expected) {
    throw DataError(path.string() + ": size mismatch: expected " + std::to_string(expected) +
                    " bytes, got " + std::to_string(r.size()));
  }
  Matrix m(rows, cols);
  std::vector<float> row(static_cast<std::size_t>(cols));
  for (Index i = 0; i < rows; ++i) {
    r.f32_block(row.data(), row.size());
    for (Index j = 0; j < cols; ++j) m(i, j) = static_cast<double>(row[static_cast<std::size_t>(j)]);
  }
  return m;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open for writing: " + path.string());
  out << text;
  if (!out) throw DataError("write failed: " + path.string());
}

}  // namespace vrel
