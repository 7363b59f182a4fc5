#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zkfingpt/kzg.hpp"
#include "zkfingpt/matrix.hpp"
#include "zkfingpt/sumcheck.hpp"

namespace zkfingpt::scheme {

constexpr uint8_t kBundleVersion = 1;
constexpr uint8_t kLabelScheduleId = 1;

struct ModelWeights {
  std::vector<FieldMatrix> layers;
  std::string name;
  unsigned quant_bits = 16;

  /// Adjacent layers must compose: layer l+1 consumes layer l's output.
  void validate() const;
  size_t total_params() const;
  const FieldParamsPtr& params() const { return layers.front().params(); }
};

/// One entry per layer, points serialized in the backend's encoding.
struct CommitmentSet {
  uint8_t backend_id = 0;
  FieldParamsPtr params;
  std::vector<std::vector<uint8_t>> points;

  std::vector<uint8_t> to_bytes() const;
  static CommitmentSet from_bytes(std::span<const uint8_t> data);
};

struct LayerRecord {
  uint32_t index = 0;
  sumcheck::SumcheckProof proof;
  FieldElement u;
  FieldElement v;
  std::vector<uint8_t> opening_point;
  Digest y_digest{};
};

/// The published proof artifact (pi). Inner activations are public auxiliary
/// data carried in a trailing section; the transcript-bound records hold
/// their digests only.
struct ProofBundle {
  uint8_t version = kBundleVersion;
  uint8_t backend_id = 0;
  uint8_t schedule_id = kLabelScheduleId;
  FieldParamsPtr params;
  std::vector<Digest> comm_digests;
  std::vector<LayerRecord> records;
  std::vector<FieldMatrix> aux_activations;

  std::vector<uint8_t> to_bytes() const;
  static ProofBundle from_bytes(std::span<const uint8_t> data);
};

struct VerifyResult {
  bool yes = false;
  std::string diagnostic;
};

template <class Group>
struct ProveResult {
  FieldMatrix output;
  ProofBundle bundle;
};

/// Transcript schedule shared by prover and verifier. Layer dims are
/// derived from public matrices on the verify side; the weights give the
/// identical values on the prove side.
void seed_transcript(Transcript& t, const FieldParams& params, uint8_t backend_id,
                     const std::vector<std::pair<uint32_t, uint32_t>>& layer_dims,
                     std::pair<uint32_t, uint32_t> x_dims,
                     const std::vector<std::vector<uint8_t>>& comm_points,
                     const Digest& x_digest);

inline std::vector<FieldElement> flatten_row_major(const FieldMatrix& m) {
  return m.entries();
}

template <class Group>
std::vector<kzg::Commitment<Group>> commit_layers(const Group& g,
                                                  const kzg::KzgKeys<Group>& keys,
                                                  const ModelWeights& weights) {
  if (weights.layers.empty()) throw std::invalid_argument("scheme: empty model");
  weights.validate();
  std::vector<kzg::Commitment<Group>> out;
  out.reserve(weights.layers.size());
  for (const auto& layer : weights.layers) {
    const auto coeffs = flatten_row_major(layer);
    if (coeffs.size() > keys.pk.size()) {
      throw std::invalid_argument("scheme: layer exceeds key degree bound");
    }
    out.push_back(kzg::commit(g, std::span<const typename Group::G1>(keys.pk),
                              std::span<const FieldElement>(coeffs)));
  }
  return out;
}

template <class Group>
CommitmentSet commit_model(const Group& g, const kzg::KzgKeys<Group>& keys,
                           const ModelWeights& weights) {
  if (weights.layers.empty()) throw std::invalid_argument("scheme: empty model");
  CommitmentSet set;
  set.backend_id = g.backend_id();
  set.params = weights.params();
  for (const auto& c : commit_layers(g, keys, weights)) {
    set.points.push_back(g.g1_to_bytes(c.point));
  }
  return set;
}

template <class Group>
ProveResult<Group> prove(const Group& g, const kzg::KzgKeys<Group>& keys,
                         const ModelWeights& weights, const FieldMatrix& x) {
  if (weights.layers.empty()) throw std::invalid_argument("scheme: empty model");
  weights.validate();
  if (weights.layers.front().cols() != x.rows()) {
    throw std::invalid_argument("scheme: input rows do not match layer 0");
  }
  if (!weights.params()->same(*x.params())) {
    throw std::invalid_argument("scheme: field parameter mismatch");
  }

  // Forward pass: Y_l = W_l * A_l with A_0 = X.
  std::vector<FieldMatrix> activations{x};
  for (const auto& layer : weights.layers) {
    activations.push_back(matmul(layer, activations.back()));
  }

  const CommitmentSet comms = commit_model(g, keys, weights);

  std::vector<std::pair<uint32_t, uint32_t>> layer_dims;
  for (const auto& layer : weights.layers) {
    layer_dims.emplace_back(static_cast<uint32_t>(layer.rows()),
                            static_cast<uint32_t>(layer.cols()));
  }

  Transcript t("zkfingpt/v1");
  seed_transcript(t, *weights.params(), g.backend_id(), layer_dims,
                  {static_cast<uint32_t>(x.rows()), static_cast<uint32_t>(x.cols())},
                  comms.points, x.digest());

  ProofBundle bundle;
  bundle.backend_id = g.backend_id();
  bundle.params = weights.params();
  for (const auto& p : comms.points) bundle.comm_digests.push_back(sha256(p));

  for (size_t l = 0; l < weights.layers.size(); ++l) {
    const FieldMatrix& w = weights.layers[l];
    const FieldMatrix& a = activations[l];
    const FieldMatrix& y = activations[l + 1];
    const Digest y_digest = y.digest();
    t.absorb("y-digest", y_digest);

    auto st = sumcheck::MatmulStatement::make(sumcheck::Mode::SoundRandomPoint, w, a, y);
    auto prove_out = sumcheck::prove(st, t);
    t.absorb_field("final-eval", prove_out.proof.final_eval);

    const FieldElement u = t.challenge_field("kzg-u", weights.params());
    const auto coeffs = flatten_row_major(w);
    const auto opening = kzg::open(g, std::span<const typename Group::G1>(keys.pk),
                                   std::span<const FieldElement>(coeffs), u);
    t.absorb_field("kzg-v", opening.v);
    const auto opening_bytes = g.g1_to_bytes(opening.point);
    t.absorb("kzg-open", opening_bytes);

    bundle.records.push_back(LayerRecord{static_cast<uint32_t>(l), std::move(prove_out.proof),
                                         u, opening.v, opening_bytes, y_digest});
  }

  for (size_t l = 0; l + 1 < weights.layers.size(); ++l) {
    bundle.aux_activations.push_back(activations[l + 1]);
  }
  return {activations.back(), std::move(bundle)};
}

template <class Group>
VerifyResult verify(const Group& g, std::span<const typename Group::G2> vk,
                    const CommitmentSet& comms, const ProofBundle& bundle, const FieldMatrix& x,
                    const FieldMatrix& y) {
  const size_t layers = bundle.records.size();
  if (layers == 0) return {false, "bundle has no layer records"};
  if (bundle.backend_id != g.backend_id() || comms.backend_id != g.backend_id()) {
    return {false, "backend id mismatch"};
  }
  if (bundle.schedule_id != kLabelScheduleId) return {false, "unknown label schedule"};
  if (comms.points.size() != layers) return {false, "commitment count mismatch"};
  if (bundle.comm_digests.size() != layers) return {false, "commitment digest count mismatch"};
  if (bundle.aux_activations.size() + 1 != layers) return {false, "aux activation count mismatch"};
  const FieldParamsPtr params = bundle.params;
  if (!params->same(*x.params()) || !params->same(*y.params()) ||
      !params->same(*comms.params)) {
    return {false, "field parameter mismatch"};
  }
  for (size_t l = 0; l < layers; ++l) {
    if (sha256(comms.points[l]) != bundle.comm_digests[l]) {
      return {false, "commitment digest mismatch"};
    }
  }

  // Public per-layer data: A_0 = X, then each aux activation, final output y.
  std::vector<const FieldMatrix*> outputs;
  for (const auto& m : bundle.aux_activations) outputs.push_back(&m);
  outputs.push_back(&y);
  std::vector<const FieldMatrix*> inputs{&x};
  for (size_t l = 0; l + 1 < layers; ++l) inputs.push_back(outputs[l]);

  std::vector<std::pair<uint32_t, uint32_t>> layer_dims;
  for (size_t l = 0; l < layers; ++l) {
    if (outputs[l]->cols() != inputs[l]->cols()) return {false, "layer dims do not compose"};
    if (!params->same(*outputs[l]->params())) return {false, "field parameter mismatch"};
    layer_dims.emplace_back(static_cast<uint32_t>(outputs[l]->rows()),
                            static_cast<uint32_t>(inputs[l]->rows()));
  }

  Transcript t("zkfingpt/v1");
  seed_transcript(t, *params, g.backend_id(), layer_dims,
                  {static_cast<uint32_t>(x.rows()), static_cast<uint32_t>(x.cols())},
                  comms.points, x.digest());

  for (size_t l = 0; l < layers; ++l) {
    const LayerRecord& record = bundle.records[l];
    if (record.index != l) return {false, "layer record index out of order"};
    const Digest y_digest = outputs[l]->digest();
    t.absorb("y-digest", y_digest);

    auto st = sumcheck::PublicMatmulStatement::make(sumcheck::Mode::SoundRandomPoint,
                                                    *inputs[l], *outputs[l]);
    auto vout = sumcheck::verify_public(st, record.proof, t);
    if (!vout.ok) {
      return {false, "layer " + std::to_string(l) + " sumcheck: " + vout.reason};
    }
    t.absorb_field("final-eval", record.proof.final_eval);

    const FieldElement u = t.challenge_field("kzg-u", params);
    if (record.u != u) return {false, "layer " + std::to_string(l) + " opening point mismatch"};
    t.absorb_field("kzg-v", record.v);
    t.absorb("kzg-open", record.opening_point);

    typename Group::G1 comm_point = g.g1_identity();
    typename Group::G1 opening_point = g.g1_identity();
    try {
      comm_point = g.g1_from_bytes(comms.points[l]);
      opening_point = g.g1_from_bytes(record.opening_point);
    } catch (const std::exception&) {
      return {false, "layer " + std::to_string(l) + " malformed group element"};
    }
    if (!kzg::verify_opening(g, vk, kzg::Commitment<Group>{comm_point}, opening_point, u,
                             record.v)) {
      return {false, "layer " + std::to_string(l) + " kzg opening rejected"};
    }
    if (record.y_digest != y_digest) {
      return {false, "layer " + std::to_string(l) + " output digest mismatch"};
    }
  }
  return {true, "ok"};
}

}  // namespace zkfingpt::scheme
