#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "vrel/common.hpp"

namespace vrel {

// Little-endian binary writers/readers used by feature blobs and model files.
// Readers throw DataError on truncation.

class BinaryWriter {
public:
  explicit BinaryWriter(const std::filesystem::path& path);
  void u8(std::uint8_t v);
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void f32(float v);
  void f64(double v);
  void bytes(const void* data, std::size_t n);
  void str(const std::string& s);  // u32 length + raw bytes
  void f64_block(const double* data, std::size_t n);
  void f32_block(const float* data, std::size_t n);
  void close();

private:
  std::ofstream out_;
  std::filesystem::path path_;
};

class BinaryReader {
public:
  explicit BinaryReader(const std::filesystem::path& path);
  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  float f32();
  double f64();
  std::string str();
  void f64_block(double* data, std::size_t n);
  void f32_block(float* data, std::size_t n);
  std::size_t offset() const { return offset_; }
  std::size_t size() const { return size_; }
  bool exhausted() const { return offset_ == size_; }

private:
  void need(std::size_t n);
  std::vector<unsigned char> buf_;
  std::size_t offset_ = 0;
  std::size_t size_ = 0;
  std::filesystem::path path_;
};

// Packed f32 matrix helpers (row-major blobs).
void write_f32_matrix(const std::filesystem::path& path, const Matrix& m);
Matrix read_f32_matrix(const std::filesystem::path& path, Index rows, Index cols);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace vrel
