#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zkfingpt/mle.hpp"
#include "zkfingpt/serialize.hpp"
#include "zkfingpt/transcript.hpp"

namespace zkfingpt::sumcheck {

/// ExampleTotalSum: the paper's worked-example statement, a single sum over
/// all (i, k, j) variables of the multilinearized
///   g(i,k,j) = inv(2^ceil(log2 D2)) * Y~(i,j) - W~(i,k) * X~(k,j),
/// claiming total sum 0. Round polynomials have degree <= 1. Non-normative;
/// kept to reproduce the paper's transcript bit for bit.
///
/// SoundRandomPoint: the default mode. The verifier derives (r_i, r_j) from
/// the transcript, sets C = Y~(r_i, r_j), and the sumcheck runs over the k
/// variables of sum_k W~(r_i, e_k) * X~(e_k, r_j) with degree-2 rounds.
enum class Mode : uint8_t { ExampleTotalSum = 0, SoundRandomPoint = 1 };

struct RoundPolynomial {
  std::vector<FieldElement> coeffs;  // ascending degree, trailing zeros trimmed

  FieldElement evaluate(const FieldElement& x) const;
  FieldElement sum_over_binary() const;  // p(0) + p(1)
  size_t degree() const { return coeffs.size() - 1; }
};

/// Trims trailing zero coefficients (keeping at least the constant term).
RoundPolynomial make_round_poly(std::vector<FieldElement> coeffs);

struct SumcheckProof {
  /// Present on proofs built in-process. Absent on the wire: in
  /// SoundRandomPoint mode the verifier derives C from public data.
  std::optional<FieldElement> claimed_sum;
  std::vector<RoundPolynomial> rounds;
  FieldElement final_eval;
};

/// Prover-side statement: all three MLEs are known.
struct MatmulStatement {
  Mode mode;
  size_t d1, d2, d3;
  MlePoly w;  // (i-bits || k-bits)
  MlePoly x;  // (k-bits || j-bits)
  MlePoly y;  // (i-bits || j-bits)

  static MatmulStatement make(Mode mode, const FieldMatrix& W, const FieldMatrix& X,
                              const FieldMatrix& Y);

  size_t i_bits() const { return MlePoly::ceil_log2(d1); }
  size_t k_bits() const { return MlePoly::ceil_log2(d2); }
  size_t j_bits() const { return MlePoly::ceil_log2(d3); }
  size_t num_rounds() const;
  const FieldParamsPtr& params() const { return w.params(); }

  /// Evaluations of the multilinearized total-sum polynomial over the
  /// (i-bits || k-bits || j-bits) hypercube.
  std::vector<FieldElement> total_sum_table() const;
};

/// Verifier-side statement: weights withheld.
struct PublicMatmulStatement {
  Mode mode;
  size_t d1, d2, d3;
  MlePoly x;
  MlePoly y;

  static PublicMatmulStatement make(Mode mode, const FieldMatrix& X, const FieldMatrix& Y);
  const FieldParamsPtr& params() const { return x.params(); }
};

struct ChallengeLog {
  std::vector<FieldElement> r_i, r_k, r_j;
};

struct ProveOutput {
  SumcheckProof proof;
  ChallengeLog challenges;
};

struct VerifyOutput {
  bool ok = false;
  std::string reason;
  ChallengeLog challenges;
  /// SoundRandomPoint only: the weight-MLE evaluation implied by final_eval,
  /// i.e. final_eval / X~(r_k, r_j) when that factor is invertible.
  std::optional<FieldElement> implied_w_eval;
};

/// Step-wise prover state. Rounds must be driven strictly in order:
/// prover_round(i) emits g_i, bind_challenge folds r_i into the tables.
class RoundProver {
 public:
  /// ExampleTotalSum: builds the full g table. SoundRandomPoint additionally
  /// needs the pre-drawn (r_i, r_j) restriction point.
  RoundProver(const MatmulStatement& st, std::span<const FieldElement> r_i = {},
              std::span<const FieldElement> r_j = {});

  size_t rounds_total() const { return rounds_total_; }
  size_t next_round() const { return next_round_; }

  /// Throws std::invalid_argument when round_index is not the next round or
  /// the previous challenge has not been bound yet.
  RoundPolynomial prover_round(size_t round_index);
  void bind_challenge(const FieldElement& r);

  /// g(r_1, ..., r_m); valid once every round is bound.
  FieldElement final_value() const;
  /// Sum of the statement over the remaining hypercube (the honest claim
  /// before round 1).
  FieldElement initial_claim() const;

 private:
  Mode mode_;
  size_t rounds_total_;
  size_t next_round_ = 0;
  bool awaiting_challenge_ = false;
  FieldElement inv2_;
  FieldElement two_;
  std::vector<FieldElement> table_;  // total-sum mode
  std::vector<FieldElement> wk_;     // sound mode: W~(r_i, e_k)
  std::vector<FieldElement> ak_;     // sound mode: X~(e_k, r_j)
};

/// One round's verifier check: degree bound and g_i(0) + g_i(1) = prev.
bool verifier_round(const FieldElement& prev_value, const RoundPolynomial& poly,
                    size_t degree_bound);

/// Statement value at the challenge point, mode-appropriate: the total-sum
/// table's MLE, or W~(r_i, r_k) * X~(r_k, r_j).
FieldElement evaluate_statement(const MatmulStatement& st, std::span<const FieldElement> r_i,
                                std::span<const FieldElement> r_k,
                                std::span<const FieldElement> r_j);

/// Last step of the protocol: g_m(r_m) must equal the statement evaluation.
bool final_check(const MatmulStatement& st, const ChallengeLog& challenges,
                 const FieldElement& final_value);

/// Runs the full prover. Challenges come from the transcript; a forced
/// sequence (golden-vector tests) overrides draw values in order while the
/// transcript still advances identically.
ProveOutput prove(const MatmulStatement& st, Transcript& transcript,
                  const std::vector<FieldElement>* forced_challenges = nullptr);

/// Full-knowledge verification (statement includes W).
VerifyOutput verify(const MatmulStatement& st, const SumcheckProof& proof, Transcript& transcript,
                    const std::vector<FieldElement>* forced_challenges = nullptr);

/// Public verification: checks the round chain against C = Y~(r_i, r_j) and
/// reports the implied weight evaluation; binding that value to the weight
/// commitment is the caller's concern.
VerifyOutput verify_public(const PublicMatmulStatement& st, const SumcheckProof& proof,
                           Transcript& transcript,
                           const std::vector<FieldElement>* forced_challenges = nullptr);

/// Wire format: round count u32be, then per round a degree byte and
/// fixed-width coefficients, then final_eval.
void encode_proof(ByteWriter& w, const SumcheckProof& proof);
SumcheckProof decode_proof(ByteReader& r, const FieldParamsPtr& params);

}  // namespace zkfingpt::sumcheck
