#include "zkfingpt/artifact_io.hpp"

namespace zkfingpt::io {

namespace {

void encode_matrix_body(ByteWriter& w, const FieldMatrix& m) {
  w.u32be(static_cast<uint32_t>(m.rows()));
  w.u32be(static_cast<uint32_t>(m.cols()));
  for (const auto& e : m.entries()) w.field(e);
}

FieldMatrix decode_matrix_body(ByteReader& r, const FieldParamsPtr& params) {
  const uint32_t rows = r.u32be();
  const uint32_t cols = r.u32be();
  if (rows == 0 || cols == 0 || uint64_t{rows} * cols > (uint64_t{1} << 30)) {
    throw std::runtime_error("decode: implausible matrix dims");
  }
  std::vector<FieldElement> entries;
  entries.reserve(size_t{rows} * cols);
  for (size_t i = 0; i < size_t{rows} * cols; ++i) entries.push_back(r.field(params));
  return {rows, cols, std::move(entries)};
}

}  // namespace

std::vector<uint8_t> encode_quantized_matrix(const FieldMatrix& m, unsigned bits) {
  ByteWriter w;
  w.magic("ZKFGQM");
  w.u8(1);
  w.field_params(*m.params());
  w.u32be(bits);
  encode_matrix_body(w, m);
  return w.take();
}

std::pair<FieldMatrix, unsigned> decode_quantized_matrix(std::span<const uint8_t> data) {
  ByteReader r(data);
  r.expect_magic("ZKFGQM");
  if (r.u8() != 1) throw std::runtime_error("matrix file: unsupported version");
  auto params = r.field_params();
  const uint32_t bits = r.u32be();
  FieldMatrix m = decode_matrix_body(r, params);
  if (!r.at_end()) throw std::runtime_error("matrix file: trailing bytes");
  return {std::move(m), bits};
}

std::vector<uint8_t> encode_model(const scheme::ModelWeights& model) {
  model.validate();
  ByteWriter w;
  w.magic("ZKFGMD");
  w.u8(1);
  w.field_params(*model.params());
  w.u32be(model.quant_bits);
  w.u32be(static_cast<uint32_t>(model.name.size()));
  w.bytes(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(model.name.data()),
                                   model.name.size()));
  w.u32be(static_cast<uint32_t>(model.layers.size()));
  for (const auto& layer : model.layers) encode_matrix_body(w, layer);
  return w.take();
}

scheme::ModelWeights decode_model(std::span<const uint8_t> data) {
  ByteReader r(data);
  r.expect_magic("ZKFGMD");
  if (r.u8() != 1) throw std::runtime_error("model file: unsupported version");
  auto params = r.field_params();
  scheme::ModelWeights model;
  model.quant_bits = r.u32be();
  const uint32_t name_len = r.u32be();
  if (name_len > 4096) throw std::runtime_error("model file: implausible name length");
  const auto name_bytes = r.bytes(name_len);
  model.name.assign(name_bytes.begin(), name_bytes.end());
  const uint32_t layer_count = r.u32be();
  if (layer_count == 0 || layer_count > 4096) {
    throw std::runtime_error("model file: implausible layer count");
  }
  model.layers.reserve(layer_count);
  for (uint32_t l = 0; l < layer_count; ++l) {
    model.layers.push_back(decode_matrix_body(r, params));
  }
  if (!r.at_end()) throw std::runtime_error("model file: trailing bytes");
  model.validate();
  return model;
}

}  // namespace zkfingpt::io
