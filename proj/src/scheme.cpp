#include "zkfingpt/scheme.hpp"

#include <stdexcept>

namespace zkfingpt::scheme {

void ModelWeights::validate() const {
  if (layers.empty()) throw std::invalid_argument("model: no layers");
  for (size_t l = 0; l + 1 < layers.size(); ++l) {
    if (layers[l + 1].cols() != layers[l].rows()) {
      throw std::invalid_argument("model: layer " + std::to_string(l + 1) +
                                  " does not compose with layer " + std::to_string(l));
    }
    if (!layers[l + 1].params()->same(*layers[l].params())) {
      throw std::invalid_argument("model: mixed field parameters across layers");
    }
  }
}

size_t ModelWeights::total_params() const {
  size_t n = 0;
  for (const auto& layer : layers) n += layer.rows() * layer.cols();
  return n;
}

void seed_transcript(Transcript& t, const FieldParams& params, uint8_t backend_id,
                     const std::vector<std::pair<uint32_t, uint32_t>>& layer_dims,
                     std::pair<uint32_t, uint32_t> x_dims,
                     const std::vector<std::vector<uint8_t>>& comm_points,
                     const Digest& x_digest) {
  ByteWriter fp;
  fp.field_params(params);
  t.absorb("field", fp.data());
  t.absorb_byte("backend", backend_id);

  ByteWriter dims;
  dims.u32be(static_cast<uint32_t>(layer_dims.size()));
  for (const auto& [rows, cols] : layer_dims) {
    dims.u32be(rows);
    dims.u32be(cols);
  }
  dims.u32be(x_dims.first);
  dims.u32be(x_dims.second);
  t.absorb("dims", dims.data());

  for (const auto& point : comm_points) t.absorb("comm", point);
  t.absorb("x-digest", x_digest);
}

std::vector<uint8_t> CommitmentSet::to_bytes() const {
  ByteWriter w;
  w.magic("ZKFGCM");
  w.u8(1);  // version
  w.u8(backend_id);
  w.field_params(*params);
  w.u32be(static_cast<uint32_t>(points.size()));
  for (const auto& p : points) {
    w.u32be(static_cast<uint32_t>(p.size()));
    w.bytes(p);
  }
  return w.take();
}

CommitmentSet CommitmentSet::from_bytes(std::span<const uint8_t> data) {
  ByteReader r(data);
  r.expect_magic("ZKFGCM");
  if (r.u8() != 1) throw std::runtime_error("commitment file: unsupported version");
  CommitmentSet set;
  set.backend_id = r.u8();
  set.params = r.field_params();
  const uint32_t count = r.u32be();
  set.points.reserve(count);
  for (uint32_t i = 0; i < count; ++i) {
    const uint32_t len = r.u32be();
    set.points.push_back(r.bytes(len));
  }
  if (!r.at_end()) throw std::runtime_error("commitment file: trailing bytes");
  return set;
}

namespace {

void encode_matrix(ByteWriter& w, const FieldMatrix& m) {
  w.u32be(static_cast<uint32_t>(m.rows()));
  w.u32be(static_cast<uint32_t>(m.cols()));
  for (const auto& e : m.entries()) w.field(e);
}

FieldMatrix decode_matrix(ByteReader& r, const FieldParamsPtr& params) {
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

std::vector<uint8_t> ProofBundle::to_bytes() const {
  ByteWriter w;
  w.magic("ZKFGPI");
  w.u8(version);
  w.u8(backend_id);
  w.u8(schedule_id);
  w.field_params(*params);
  w.u32be(static_cast<uint32_t>(records.size()));
  for (const auto& d : comm_digests) w.digest(d);
  for (const auto& rec : records) {
    w.u32be(rec.index);
    sumcheck::encode_proof(w, rec.proof);
    w.field(rec.u);
    w.field(rec.v);
    w.u32be(static_cast<uint32_t>(rec.opening_point.size()));
    w.bytes(rec.opening_point);
    w.digest(rec.y_digest);
  }
  w.u32be(static_cast<uint32_t>(aux_activations.size()));
  for (const auto& m : aux_activations) encode_matrix(w, m);
  return w.take();
}

ProofBundle ProofBundle::from_bytes(std::span<const uint8_t> data) {
  ByteReader r(data);
  r.expect_magic("ZKFGPI");
  ProofBundle bundle;
  bundle.version = r.u8();
  if (bundle.version != kBundleVersion) throw std::runtime_error("bundle: unsupported version");
  bundle.backend_id = r.u8();
  bundle.schedule_id = r.u8();
  bundle.params = r.field_params();
  const uint32_t layer_count = r.u32be();
  if (layer_count > 4096) throw std::runtime_error("bundle: implausible layer count");
  bundle.comm_digests.reserve(layer_count);
  for (uint32_t l = 0; l < layer_count; ++l) bundle.comm_digests.push_back(r.digest());
  bundle.records.reserve(layer_count);
  for (uint32_t l = 0; l < layer_count; ++l) {
    LayerRecord rec{l,
                    sumcheck::SumcheckProof{std::nullopt, {}, FieldElement::zero(bundle.params)},
                    FieldElement::zero(bundle.params),
                    FieldElement::zero(bundle.params),
                    {},
                    {}};
    rec.index = r.u32be();
    rec.proof = sumcheck::decode_proof(r, bundle.params);
    rec.u = r.field(bundle.params);
    rec.v = r.field(bundle.params);
    const uint32_t opening_len = r.u32be();
    if (opening_len > 4096) throw std::runtime_error("bundle: implausible opening length");
    rec.opening_point = r.bytes(opening_len);
    rec.y_digest = r.digest();
    bundle.records.push_back(std::move(rec));
  }
  const uint32_t aux_count = r.u32be();
  if (aux_count + 1 != layer_count && !(layer_count == 0 && aux_count == 0)) {
    throw std::runtime_error("bundle: aux section count mismatch");
  }
  bundle.aux_activations.reserve(aux_count);
  for (uint32_t i = 0; i < aux_count; ++i) {
    bundle.aux_activations.push_back(decode_matrix(r, bundle.params));
  }
  if (!r.at_end()) throw std::runtime_error("bundle: trailing bytes");
  return bundle;
}

}  // namespace zkfingpt::scheme
