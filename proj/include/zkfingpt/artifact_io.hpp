#pragma once

#include <filesystem>

#include "zkfingpt/kzg.hpp"
#include "zkfingpt/scheme.hpp"
#include "zkfingpt/serialize.hpp"

namespace zkfingpt::io {

/// Quantized matrix file "ZKFGQM": field params, fractional bits, dims,
/// row-major fixed-width elements.
std::vector<uint8_t> encode_quantized_matrix(const FieldMatrix& m, unsigned bits);
std::pair<FieldMatrix, unsigned> decode_quantized_matrix(std::span<const uint8_t> data);

/// Model file "ZKFGMD": field params, bits, name, ordered layers.
std::vector<uint8_t> encode_model(const scheme::ModelWeights& model);
scheme::ModelWeights decode_model(std::span<const uint8_t> data);

inline uint8_t peek_backend_id(std::span<const uint8_t> key_file) {
  ByteReader r(key_file);
  r.bytes(6);  // magic
  r.u8();      // version
  return r.u8();
}

template <class Group>
std::vector<uint8_t> encode_pk(const Group& g, const kzg::KzgKeys<Group>& keys) {
  ByteWriter w;
  w.magic("ZKFGPK");
  w.u8(1);
  w.u8(g.backend_id());
  w.field_params(*g.scalar_params());
  w.u32be(static_cast<uint32_t>(keys.pk.size()));
  for (const auto& p : keys.pk) w.bytes(g.g1_to_bytes(p));
  return w.take();
}

template <class Group>
std::vector<uint8_t> encode_vk(const Group& g, const kzg::KzgKeys<Group>& keys) {
  ByteWriter w;
  w.magic("ZKFGVK");
  w.u8(1);
  w.u8(g.backend_id());
  w.field_params(*g.scalar_params());
  w.u32be(static_cast<uint32_t>(keys.vk.size()));
  for (const auto& p : keys.vk) w.bytes(g.g2_to_bytes(p));
  return w.take();
}

template <class Group>
std::vector<typename Group::G1> decode_pk(const Group& g, std::span<const uint8_t> data) {
  ByteReader r(data);
  r.expect_magic("ZKFGPK");
  if (r.u8() != 1) throw std::runtime_error("pk file: unsupported version");
  if (r.u8() != g.backend_id()) throw std::runtime_error("pk file: backend mismatch");
  auto params = r.field_params();
  if (!params->same(*g.scalar_params())) throw std::runtime_error("pk file: field mismatch");
  const uint32_t count = r.u32be();
  std::vector<typename Group::G1> pk;
  pk.reserve(count);
  for (uint32_t i = 0; i < count; ++i) pk.push_back(g.g1_from_bytes(r.bytes(g.g1_byte_size())));
  if (!r.at_end()) throw std::runtime_error("pk file: trailing bytes");
  return pk;
}

template <class Group>
std::vector<typename Group::G2> decode_vk(const Group& g, std::span<const uint8_t> data) {
  ByteReader r(data);
  r.expect_magic("ZKFGVK");
  if (r.u8() != 1) throw std::runtime_error("vk file: unsupported version");
  if (r.u8() != g.backend_id()) throw std::runtime_error("vk file: backend mismatch");
  auto params = r.field_params();
  if (!params->same(*g.scalar_params())) throw std::runtime_error("vk file: field mismatch");
  const uint32_t count = r.u32be();
  std::vector<typename Group::G2> vk;
  vk.reserve(count);
  for (uint32_t i = 0; i < count; ++i) vk.push_back(g.g2_from_bytes(r.bytes(g.g2_byte_size())));
  if (!r.at_end()) throw std::runtime_error("vk file: trailing bytes");
  return vk;
}

}  // namespace zkfingpt::io
