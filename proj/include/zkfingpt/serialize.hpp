#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "zkfingpt/field.hpp"
#include "zkfingpt/sha256.hpp"

namespace zkfingpt {

/// Appends big-endian integers, raw bytes, and field elements (fixed-width
/// little-endian residues) to a growing buffer.
class ByteWriter {
 public:
  void u8(uint8_t v) { buf_.push_back(v); }
  void u32be(uint32_t v);
  void u64be(uint64_t v);
  void bytes(std::span<const uint8_t> data) { buf_.insert(buf_.end(), data.begin(), data.end()); }
  void field(const FieldElement& e);
  void digest(const Digest& d) { bytes(std::span<const uint8_t>(d.data(), d.size())); }
  void magic(const char* m6);
  void field_params(const FieldParams& p);

  const std::vector<uint8_t>& data() const { return buf_; }
  std::vector<uint8_t> take() { return std::move(buf_); }

 private:
  std::vector<uint8_t> buf_;
};

/// Reads the same encodings back; throws std::runtime_error on truncation or
/// malformed content.
class ByteReader {
 public:
  explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

  uint8_t u8();
  uint32_t u32be();
  uint64_t u64be();
  std::vector<uint8_t> bytes(size_t n);
  FieldElement field(const FieldParamsPtr& params);
  Digest digest();
  void expect_magic(const char* m6);
  FieldParamsPtr field_params();

  bool at_end() const { return pos_ == data_.size(); }
  size_t remaining() const { return data_.size() - pos_; }

 private:
  void need(size_t n) const;
  std::span<const uint8_t> data_;
  size_t pos_ = 0;
};

std::vector<uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const uint8_t> data);

}  // namespace zkfingpt
