#include "zkfingpt/sumcheck.hpp"

#include <stdexcept>

namespace zkfingpt::sumcheck {

namespace {

constexpr std::string_view kLabelClaimedSum = "claimed-sum";
constexpr std::string_view kLabelRij = "rij";
constexpr std::string_view kLabelRoundPoly = "round-poly";
constexpr std::string_view kLabelRoundChallenge = "round-chal";

/// Draws from the transcript, optionally substituting a forced sequence.
/// The transcript state advances identically either way, so prover and
/// verifier replay stays in lockstep during golden-vector runs.
class ChallengeStream {
 public:
  ChallengeStream(Transcript& t, const std::vector<FieldElement>* forced)
      : transcript_(t), forced_(forced) {}

  FieldElement draw(std::string_view label, const FieldParamsPtr& params) {
    FieldElement c = transcript_.challenge_field(label, params);
    if (forced_ != nullptr && next_ < forced_->size()) {
      return (*forced_)[next_++];
    }
    return c;
  }

 private:
  Transcript& transcript_;
  const std::vector<FieldElement>* forced_;
  size_t next_ = 0;
};

std::vector<uint8_t> round_poly_bytes(const RoundPolynomial& poly) {
  ByteWriter w;
  w.u8(static_cast<uint8_t>(poly.degree()));
  for (const auto& c : poly.coeffs) w.field(c);
  return w.take();
}

size_t round_degree_bound(Mode mode) { return mode == Mode::ExampleTotalSum ? 1 : 2; }

std::vector<FieldElement> concat(std::span<const FieldElement> a,
                                 std::span<const FieldElement> b) {
  std::vector<FieldElement> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

/// Splits the flat total-sum challenge vector back into (r_i, r_k, r_j).
ChallengeLog split_total_sum_challenges(const MatmulStatement& st,
                                        const std::vector<FieldElement>& flat) {
  ChallengeLog log;
  size_t pos = 0;
  for (size_t n = 0; n < st.i_bits(); ++n) log.r_i.push_back(flat[pos++]);
  for (size_t n = 0; n < st.k_bits(); ++n) log.r_k.push_back(flat[pos++]);
  for (size_t n = 0; n < st.j_bits(); ++n) log.r_j.push_back(flat[pos++]);
  return log;
}

}  // namespace

FieldElement RoundPolynomial::evaluate(const FieldElement& x) const {
  FieldElement acc = FieldElement::zero(x.params());
  for (size_t i = coeffs.size(); i > 0; --i) acc = acc * x + coeffs[i - 1];
  return acc;
}

FieldElement RoundPolynomial::sum_over_binary() const {
  FieldElement at_one = FieldElement::zero(coeffs.front().params());
  for (const auto& c : coeffs) at_one = at_one + c;
  return coeffs.front() + at_one;
}

RoundPolynomial make_round_poly(std::vector<FieldElement> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("sumcheck: empty round polynomial");
  while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
  return {std::move(coeffs)};
}

MatmulStatement MatmulStatement::make(Mode mode, const FieldMatrix& W, const FieldMatrix& X,
                                      const FieldMatrix& Y) {
  if (W.cols() != X.rows() || Y.rows() != W.rows() || Y.cols() != X.cols()) {
    throw std::invalid_argument("sumcheck: statement dimensions do not compose");
  }
  return {mode,         W.rows(),
          W.cols(),     X.cols(),
          MlePoly::from_matrix(W), MlePoly::from_matrix(X), MlePoly::from_matrix(Y)};
}

size_t MatmulStatement::num_rounds() const {
  return mode == Mode::ExampleTotalSum ? i_bits() + k_bits() + j_bits() : k_bits();
}

std::vector<FieldElement> MatmulStatement::total_sum_table() const {
  const auto& p = params();
  const size_t ib = i_bits(), kb = k_bits(), jb = j_bits();
  // inv(2^kb): each (i, j) pair contributes the Y term once per padded k slot.
  const FieldElement inv_k =
      FieldElement::from_unsigned(uint64_t{1} << kb, p).inv();
  std::vector<FieldElement> table;
  table.reserve(size_t{1} << (ib + kb + jb));
  const FieldElement zero = FieldElement::zero(p);
  for (size_t i = 0; i < (size_t{1} << ib); ++i) {
    for (size_t k = 0; k < (size_t{1} << kb); ++k) {
      for (size_t j = 0; j < (size_t{1} << jb); ++j) {
        const FieldElement y_term =
            (i < d1 && j < d3) ? inv_k * y.evals()[(i << jb) | j] : zero;
        const FieldElement wx_term =
            (i < d1 && k < d2 && j < d3)
                ? w.evals()[(i << kb) | k] * x.evals()[(k << jb) | j]
                : zero;
        table.push_back(y_term - wx_term);
      }
    }
  }
  return table;
}

PublicMatmulStatement PublicMatmulStatement::make(Mode mode, const FieldMatrix& X,
                                                  const FieldMatrix& Y) {
  if (Y.cols() != X.cols()) throw std::invalid_argument("sumcheck: output width mismatch");
  return {mode, Y.rows(), X.rows(), X.cols(), MlePoly::from_matrix(X), MlePoly::from_matrix(Y)};
}

RoundProver::RoundProver(const MatmulStatement& st, std::span<const FieldElement> r_i,
                         std::span<const FieldElement> r_j)
    : mode_(st.mode),
      rounds_total_(st.num_rounds()),
      inv2_(FieldElement::from_unsigned(2, st.params()).inv()),
      two_(FieldElement::from_unsigned(2, st.params())) {
  if (mode_ == Mode::ExampleTotalSum) {
    table_ = st.total_sum_table();
    return;
  }
  if (r_i.size() != st.i_bits() || r_j.size() != st.j_bits()) {
    throw std::invalid_argument("sumcheck: restriction point arity mismatch");
  }
  wk_ = st.w.evals();
  for (const auto& r : r_i) fold_first_var(wk_, r);
  ak_ = st.x.swap_var_blocks(st.k_bits()).evals();
  for (const auto& r : r_j) fold_first_var(ak_, r);
}

RoundPolynomial RoundProver::prover_round(size_t round_index) {
  if (awaiting_challenge_ || round_index != next_round_ || round_index >= rounds_total_) {
    throw std::invalid_argument("sumcheck: round index out of order");
  }
  awaiting_challenge_ = true;
  const auto& params = inv2_.params();
  if (mode_ == Mode::ExampleTotalSum) {
    const size_t half = table_.size() / 2;
    FieldElement p0 = FieldElement::zero(params);
    FieldElement p1 = FieldElement::zero(params);
    for (size_t t = 0; t < half; ++t) {
      p0 = p0 + table_[t];
      p1 = p1 + table_[half + t];
    }
    return make_round_poly({p0, p1 - p0});
  }
  const size_t half = wk_.size() / 2;
  FieldElement p0 = FieldElement::zero(params);
  FieldElement p1 = FieldElement::zero(params);
  FieldElement p2 = FieldElement::zero(params);
  for (size_t t = 0; t < half; ++t) {
    p0 = p0 + wk_[t] * ak_[t];
    p1 = p1 + wk_[half + t] * ak_[half + t];
    p2 = p2 + (two_ * wk_[half + t] - wk_[t]) * (two_ * ak_[half + t] - ak_[t]);
  }
  const FieldElement c2 = (p2 - two_ * p1 + p0) * inv2_;
  const FieldElement c1 = p1 - p0 - c2;
  return make_round_poly({p0, c1, c2});
}

void RoundProver::bind_challenge(const FieldElement& r) {
  if (!awaiting_challenge_) {
    throw std::invalid_argument("sumcheck: no round polynomial pending");
  }
  if (mode_ == Mode::ExampleTotalSum) {
    fold_first_var(table_, r);
  } else {
    fold_first_var(wk_, r);
    fold_first_var(ak_, r);
  }
  awaiting_challenge_ = false;
  ++next_round_;
}

FieldElement RoundProver::final_value() const {
  if (next_round_ != rounds_total_ || awaiting_challenge_) {
    throw std::invalid_argument("sumcheck: rounds still pending");
  }
  if (mode_ == Mode::ExampleTotalSum) return table_.front();
  return wk_.front() * ak_.front();
}

FieldElement RoundProver::initial_claim() const {
  const auto& params = inv2_.params();
  FieldElement acc = FieldElement::zero(params);
  if (mode_ == Mode::ExampleTotalSum) {
    for (const auto& v : table_) acc = acc + v;
    return acc;
  }
  for (size_t t = 0; t < wk_.size(); ++t) acc = acc + wk_[t] * ak_[t];
  return acc;
}

bool verifier_round(const FieldElement& prev_value, const RoundPolynomial& poly,
                    size_t degree_bound) {
  if (poly.coeffs.empty() || poly.degree() > degree_bound) return false;
  return poly.sum_over_binary() == prev_value;
}

FieldElement evaluate_statement(const MatmulStatement& st, std::span<const FieldElement> r_i,
                                std::span<const FieldElement> r_k,
                                std::span<const FieldElement> r_j) {
  if (r_i.size() != st.i_bits() || r_k.size() != st.k_bits() || r_j.size() != st.j_bits()) {
    throw std::invalid_argument("sumcheck: challenge arity mismatch");
  }
  if (st.mode == Mode::ExampleTotalSum) {
    MlePoly g(st.i_bits() + st.k_bits() + st.j_bits(), st.total_sum_table());
    return g.evaluate(concat(concat(r_i, r_k), r_j));
  }
  const FieldElement w_part = st.w.evaluate(concat(r_i, r_k));
  const FieldElement x_part = st.x.evaluate(concat(r_k, r_j));
  return w_part * x_part;
}

bool final_check(const MatmulStatement& st, const ChallengeLog& challenges,
                 const FieldElement& final_value) {
  return evaluate_statement(st, challenges.r_i, challenges.r_k, challenges.r_j) == final_value;
}

ProveOutput prove(const MatmulStatement& st, Transcript& transcript,
                  const std::vector<FieldElement>* forced_challenges) {
  const auto& params = st.params();
  ChallengeStream stream(transcript, forced_challenges);
  ChallengeLog log;
  SumcheckProof proof{std::nullopt, {}, FieldElement::zero(params)};

  if (st.mode == Mode::ExampleTotalSum) {
    RoundProver rp(st);
    proof.claimed_sum = rp.initial_claim();
    transcript.absorb_field(kLabelClaimedSum, *proof.claimed_sum);

    std::vector<FieldElement> flat;
    for (size_t round = 0; round < rp.rounds_total(); ++round) {
      RoundPolynomial poly = rp.prover_round(round);
      transcript.absorb(kLabelRoundPoly, round_poly_bytes(poly));
      const FieldElement r = stream.draw(kLabelRoundChallenge, params);
      rp.bind_challenge(r);
      proof.rounds.push_back(std::move(poly));
      flat.push_back(r);
    }
    proof.final_eval = rp.final_value();
    log = split_total_sum_challenges(st, flat);
    return {std::move(proof), std::move(log)};
  }

  // SoundRandomPoint
  for (size_t n = 0; n < st.i_bits(); ++n) log.r_i.push_back(stream.draw(kLabelRij, params));
  for (size_t n = 0; n < st.j_bits(); ++n) log.r_j.push_back(stream.draw(kLabelRij, params));
  proof.claimed_sum = st.y.evaluate(concat(log.r_i, log.r_j));

  RoundProver rp(st, log.r_i, log.r_j);
  for (size_t round = 0; round < rp.rounds_total(); ++round) {
    RoundPolynomial poly = rp.prover_round(round);
    transcript.absorb(kLabelRoundPoly, round_poly_bytes(poly));
    const FieldElement r = stream.draw(kLabelRoundChallenge, params);
    rp.bind_challenge(r);
    proof.rounds.push_back(std::move(poly));
    log.r_k.push_back(r);
  }
  proof.final_eval = rp.final_value();
  return {std::move(proof), std::move(log)};
}

namespace {

/// Shared round-chain replay. Returns false through `out.reason` on reject;
/// on success `running` holds g_m(r_m).
bool replay_rounds(const SumcheckProof& proof, size_t expected_rounds, size_t degree_bound,
                   const FieldParamsPtr& params, Transcript& transcript, ChallengeStream& stream,
                   FieldElement& running, std::vector<FieldElement>& flat, std::string& reason) {
  if (proof.rounds.size() != expected_rounds) {
    reason = "round count mismatch";
    return false;
  }
  for (size_t round = 0; round < proof.rounds.size(); ++round) {
    const RoundPolynomial& poly = proof.rounds[round];
    if (poly.coeffs.empty() || poly.degree() > degree_bound) {
      reason = "round polynomial degree bound violated";
      return false;
    }
    if (poly.sum_over_binary() != running) {
      reason = "round sum check failed at round " + std::to_string(round + 1);
      return false;
    }
    transcript.absorb(kLabelRoundPoly, round_poly_bytes(poly));
    const FieldElement r = stream.draw(kLabelRoundChallenge, params);
    running = poly.evaluate(r);
    flat.push_back(r);
  }
  return true;
}

}  // namespace

VerifyOutput verify(const MatmulStatement& st, const SumcheckProof& proof, Transcript& transcript,
                    const std::vector<FieldElement>* forced_challenges) {
  const auto& params = st.params();
  ChallengeStream stream(transcript, forced_challenges);
  VerifyOutput out;

  if (st.mode == Mode::ExampleTotalSum) {
    if (!proof.claimed_sum.has_value()) {
      out.reason = "total-sum proof lacks claimed sum";
      return out;
    }
    transcript.absorb_field(kLabelClaimedSum, *proof.claimed_sum);
    FieldElement running = *proof.claimed_sum;
    std::vector<FieldElement> flat;
    if (!replay_rounds(proof, st.num_rounds(), round_degree_bound(st.mode), params, transcript,
                       stream, running, flat, out.reason)) {
      return out;
    }
    out.challenges = split_total_sum_challenges(st, flat);
    if (proof.final_eval != running) {
      out.reason = "final evaluation mismatch";
      return out;
    }
    if (!final_check(st, out.challenges, running)) {
      out.reason = "statement evaluation mismatch";
      return out;
    }
    out.ok = true;
    return out;
  }

  for (size_t n = 0; n < st.i_bits(); ++n)
    out.challenges.r_i.push_back(stream.draw(kLabelRij, params));
  for (size_t n = 0; n < st.j_bits(); ++n)
    out.challenges.r_j.push_back(stream.draw(kLabelRij, params));
  FieldElement running = st.y.evaluate(concat(out.challenges.r_i, out.challenges.r_j));
  if (proof.claimed_sum.has_value() && *proof.claimed_sum != running) {
    out.reason = "claimed sum differs from Y~(r_i, r_j)";
    return out;
  }
  std::vector<FieldElement> flat;
  if (!replay_rounds(proof, st.num_rounds(), round_degree_bound(st.mode), params, transcript,
                     stream, running, flat, out.reason)) {
    return out;
  }
  out.challenges.r_k = std::move(flat);
  if (proof.final_eval != running) {
    out.reason = "final evaluation mismatch";
    return out;
  }
  if (!final_check(st, out.challenges, running)) {
    out.reason = "statement evaluation mismatch";
    return out;
  }
  out.ok = true;
  return out;
}

VerifyOutput verify_public(const PublicMatmulStatement& st, const SumcheckProof& proof,
                           Transcript& transcript,
                           const std::vector<FieldElement>* forced_challenges) {
  if (st.mode != Mode::SoundRandomPoint) {
    throw std::invalid_argument("sumcheck: public verification requires SoundRandomPoint");
  }
  const auto& params = st.params();
  ChallengeStream stream(transcript, forced_challenges);
  VerifyOutput out;

  const size_t ib = MlePoly::ceil_log2(st.d1);
  const size_t kb = MlePoly::ceil_log2(st.d2);
  const size_t jb = MlePoly::ceil_log2(st.d3);
  for (size_t n = 0; n < ib; ++n) out.challenges.r_i.push_back(stream.draw(kLabelRij, params));
  for (size_t n = 0; n < jb; ++n) out.challenges.r_j.push_back(stream.draw(kLabelRij, params));

  FieldElement running = st.y.evaluate(concat(out.challenges.r_i, out.challenges.r_j));
  if (proof.claimed_sum.has_value() && *proof.claimed_sum != running) {
    out.reason = "claimed sum differs from Y~(r_i, r_j)";
    return out;
  }
  std::vector<FieldElement> flat;
  if (!replay_rounds(proof, kb, round_degree_bound(st.mode), params, transcript, stream, running,
                     flat, out.reason)) {
    return out;
  }
  out.challenges.r_k = std::move(flat);
  if (proof.final_eval != running) {
    out.reason = "final evaluation mismatch";
    return out;
  }
  const FieldElement x_part =
      st.x.evaluate(concat(out.challenges.r_k, out.challenges.r_j));
  if (x_part.is_zero()) {
    // W~ is unconstrained at this point; the claim degenerates to 0 = 0.
    if (!running.is_zero()) {
      out.reason = "final evaluation inconsistent with vanishing input factor";
      return out;
    }
  } else {
    out.implied_w_eval = running * x_part.inv();
  }
  out.ok = true;
  return out;
}

void encode_proof(ByteWriter& w, const SumcheckProof& proof) {
  w.u32be(static_cast<uint32_t>(proof.rounds.size()));
  for (const auto& poly : proof.rounds) {
    w.u8(static_cast<uint8_t>(poly.degree()));
    for (const auto& c : poly.coeffs) w.field(c);
  }
  w.field(proof.final_eval);
}

SumcheckProof decode_proof(ByteReader& r, const FieldParamsPtr& params) {
  const uint32_t round_count = r.u32be();
  if (round_count > 64) throw std::runtime_error("sumcheck: implausible round count");
  SumcheckProof proof{std::nullopt, {}, FieldElement::zero(params)};
  proof.rounds.reserve(round_count);
  for (uint32_t i = 0; i < round_count; ++i) {
    const uint8_t degree = r.u8();
    if (degree > 2) throw std::runtime_error("sumcheck: round degree out of range");
    std::vector<FieldElement> coeffs;
    coeffs.reserve(degree + 1);
    for (uint32_t c = 0; c <= degree; ++c) coeffs.push_back(r.field(params));
    proof.rounds.push_back(RoundPolynomial{std::move(coeffs)});
  }
  proof.final_eval = r.field(params);
  return proof;
}

}  // namespace zkfingpt::sumcheck
