#pragma once

#include <span>
#include <vector>

#include "zkfingpt/matrix.hpp"

namespace zkfingpt {

/// Multilinear extension in evaluations-table form: 2^m values on the boolean
/// hypercube, first variable = most significant bit of the index. Matrices
/// with non-power-of-two dimensions are zero-padded.
class MlePoly {
 public:
  MlePoly(size_t num_vars, std::vector<FieldElement> evals);

  static size_t ceil_log2(size_t n);

  /// Row bits first (most significant), then column bits.
  static MlePoly from_matrix(const FieldMatrix& m);

  size_t num_vars() const { return num_vars_; }
  const std::vector<FieldElement>& evals() const { return evals_; }
  const FieldParamsPtr& params() const { return evals_.front().params(); }

  /// Value of the unique multilinear extension at an arbitrary field point.
  FieldElement evaluate(std::span<const FieldElement> point) const;

  /// Restriction x_1 <- r: an MLE in m-1 variables.
  MlePoly fix_first_var(const FieldElement& r) const;

  FieldElement sum_over_hypercube() const;

  /// Swaps the leading `first_bits` variables with the trailing block; for a
  /// matrix MLE this is the transpose.
  MlePoly swap_var_blocks(size_t first_bits) const;

 private:
  size_t num_vars_;
  std::vector<FieldElement> evals_;
};

/// In-place fold of an evaluations table: fixes the first variable at r,
/// halving the table. Shared by the sumcheck prover.
void fold_first_var(std::vector<FieldElement>& table, const FieldElement& r);

}  // namespace zkfingpt
