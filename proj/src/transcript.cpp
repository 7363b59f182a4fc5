#include "zkfingpt/transcript.hpp"

namespace zkfingpt {

namespace {

constexpr uint8_t kTagInit = 0x00;
constexpr uint8_t kTagAbsorb = 0x01;
constexpr uint8_t kTagChallenge = 0x02;
constexpr uint8_t kTagRatchet = 0x03;

void put_u32be(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(static_cast<uint8_t>(v >> 24));
  out.push_back(static_cast<uint8_t>(v >> 16));
  out.push_back(static_cast<uint8_t>(v >> 8));
  out.push_back(static_cast<uint8_t>(v));
}

void put_u64be(std::vector<uint8_t>& out, uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) {
    out.push_back(static_cast<uint8_t>(v >> shift));
  }
}

void put_label(std::vector<uint8_t>& out, std::string_view label) {
  put_u32be(out, static_cast<uint32_t>(label.size()));
  out.insert(out.end(), label.begin(), label.end());
}

}  // namespace

Transcript::Transcript(std::string_view domain_label) {
  std::vector<uint8_t> buf;
  buf.push_back(kTagInit);
  put_label(buf, domain_label);
  state_ = sha256(buf);
}

void Transcript::absorb(std::string_view label, std::span<const uint8_t> data) {
  std::vector<uint8_t> buf;
  buf.reserve(32 + 13 + label.size() + data.size());
  buf.insert(buf.end(), state_.begin(), state_.end());
  buf.push_back(kTagAbsorb);
  put_label(buf, label);
  put_u64be(buf, data.size());
  buf.insert(buf.end(), data.begin(), data.end());
  state_ = sha256(buf);
}

void Transcript::absorb_field(std::string_view label, const FieldElement& e) {
  absorb(label, e.to_bytes());
}

void Transcript::absorb_byte(std::string_view label, uint8_t b) {
  absorb(label, std::span<const uint8_t>(&b, 1));
}

FieldElement Transcript::challenge_field(std::string_view label, const FieldParamsPtr& params) {
  std::vector<uint8_t> buf;
  buf.insert(buf.end(), state_.begin(), state_.end());
  buf.push_back(kTagChallenge);
  put_label(buf, label);
  const Digest squeezed_from = sha256(buf);

  const size_t need = (2 * params->bit_length() + 7) / 8;
  std::vector<uint8_t> stream;
  stream.reserve(((need + 31) / 32) * 32);
  for (uint32_t counter = 0; stream.size() < need; ++counter) {
    std::vector<uint8_t> block;
    block.insert(block.end(), squeezed_from.begin(), squeezed_from.end());
    put_u32be(block, counter);
    const Digest d = sha256(block);
    stream.insert(stream.end(), d.begin(), d.end());
  }
  stream.resize(need);

  std::vector<uint8_t> ratchet;
  ratchet.insert(ratchet.end(), squeezed_from.begin(), squeezed_from.end());
  ratchet.push_back(kTagRatchet);
  state_ = sha256(ratchet);
  ++draws_;

  return field_from_wide_bytes(stream, params);
}

}  // namespace zkfingpt
