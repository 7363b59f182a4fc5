#include "zkfingpt/serialize.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

namespace zkfingpt {

void ByteWriter::u32be(uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) buf_.push_back(static_cast<uint8_t>(v >> shift));
}

void ByteWriter::u64be(uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) buf_.push_back(static_cast<uint8_t>(v >> shift));
}

void ByteWriter::field(const FieldElement& e) { bytes(e.to_bytes()); }

void ByteWriter::magic(const char* m6) {
  bytes(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(m6), 6));
}

void ByteWriter::field_params(const FieldParams& p) {
  u8(p.profile_id());
  u32be(static_cast<uint32_t>(p.byte_width()));
  if (p.profile_id() == FieldParams::kProfileCustom) {
    std::vector<uint8_t> mod(p.byte_width(), 0);
    size_t count = 0;
    mpz_export(mod.data(), &count, -1, 1, 0, 0, p.modulus().get_mpz_t());
    bytes(mod);
    u32be(p.lambda());
    u8(p.insecure() ? 1 : 0);
  }
}

void ByteReader::need(size_t n) const {
  if (pos_ + n > data_.size()) throw std::runtime_error("decode: truncated input");
}

uint8_t ByteReader::u8() {
  need(1);
  return data_[pos_++];
}

uint32_t ByteReader::u32be() {
  need(4);
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v = (v << 8) | data_[pos_++];
  return v;
}

uint64_t ByteReader::u64be() {
  need(8);
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | data_[pos_++];
  return v;
}

std::vector<uint8_t> ByteReader::bytes(size_t n) {
  need(n);
  std::vector<uint8_t> out(data_.begin() + pos_, data_.begin() + pos_ + n);
  pos_ += n;
  return out;
}

FieldElement ByteReader::field(const FieldParamsPtr& params) {
  return FieldElement::from_bytes(bytes(params->byte_width()), params);
}

Digest ByteReader::digest() {
  Digest d{};
  auto b = bytes(d.size());
  std::memcpy(d.data(), b.data(), d.size());
  return d;
}

void ByteReader::expect_magic(const char* m6) {
  auto b = bytes(6);
  if (std::memcmp(b.data(), m6, 6) != 0) throw std::runtime_error("decode: bad magic");
}

FieldParamsPtr ByteReader::field_params() {
  const uint8_t profile = u8();
  const uint32_t width = u32be();
  if (profile == FieldParams::kProfileCustom) {
    auto mod_bytes = bytes(width);
    mpz_class modulus;
    mpz_import(modulus.get_mpz_t(), mod_bytes.size(), -1, 1, 0, 0, mod_bytes.data());
    u32be();  // lambda, informational for custom profiles
    u8();     // insecure flag, implied for custom profiles
    return FieldParams::from_profile(profile, &modulus);
  }
  auto params = FieldParams::from_profile(profile);
  if (params->byte_width() != width) throw std::runtime_error("decode: field width mismatch");
  return params;
}

std::vector<uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("io: cannot open " + path.string());
  std::vector<uint8_t> data((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
  return data;
}

void write_file(const std::filesystem::path& path, std::span<const uint8_t> data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("io: cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("io: short write to " + path.string());
}

}  // namespace zkfingpt
