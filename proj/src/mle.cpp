#include "zkfingpt/mle.hpp"

#include <stdexcept>

namespace zkfingpt {

MlePoly::MlePoly(size_t num_vars, std::vector<FieldElement> evals)
    : num_vars_(num_vars), evals_(std::move(evals)) {
  if (evals_.size() != (size_t{1} << num_vars_)) {
    throw std::invalid_argument("mle: table size must be 2^m");
  }
}

size_t MlePoly::ceil_log2(size_t n) {
  if (n == 0) throw std::invalid_argument("mle: log of zero");
  size_t bits = 0;
  while ((size_t{1} << bits) < n) ++bits;
  return bits;
}

MlePoly MlePoly::from_matrix(const FieldMatrix& m) {
  const size_t row_bits = ceil_log2(m.rows());
  const size_t col_bits = ceil_log2(m.cols());
  const size_t num_vars = row_bits + col_bits;
  std::vector<FieldElement> evals;
  evals.reserve(size_t{1} << num_vars);
  const FieldElement zero = FieldElement::zero(m.params());
  for (size_t i = 0; i < (size_t{1} << row_bits); ++i) {
    for (size_t j = 0; j < (size_t{1} << col_bits); ++j) {
      if (i < m.rows() && j < m.cols()) {
        evals.push_back(m.at(i, j));
      } else {
        evals.push_back(zero);
      }
    }
  }
  return {num_vars, std::move(evals)};
}

void fold_first_var(std::vector<FieldElement>& table, const FieldElement& r) {
  if (table.size() < 2 || (table.size() & (table.size() - 1)) != 0) {
    throw std::invalid_argument("mle: cannot fold table of this size");
  }
  const size_t half = table.size() / 2;
  for (size_t t = 0; t < half; ++t) {
    // (1-r)*lo + r*hi  ==  lo + r*(hi - lo)
    table[t] = table[t] + r * (table[half + t] - table[t]);
  }
  table.erase(table.begin() + static_cast<std::ptrdiff_t>(half), table.end());
}

FieldElement MlePoly::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != num_vars_) throw std::invalid_argument("mle: point length mismatch");
  std::vector<FieldElement> table = evals_;
  for (const auto& r : point) fold_first_var(table, r);
  return table.front();
}

MlePoly MlePoly::fix_first_var(const FieldElement& r) const {
  if (num_vars_ == 0) throw std::invalid_argument("mle: no variable to fix");
  std::vector<FieldElement> table = evals_;
  fold_first_var(table, r);
  return {num_vars_ - 1, std::move(table)};
}

FieldElement MlePoly::sum_over_hypercube() const {
  FieldElement acc = FieldElement::zero(params());
  for (const auto& e : evals_) acc = acc + e;
  return acc;
}

MlePoly MlePoly::swap_var_blocks(size_t first_bits) const {
  if (first_bits > num_vars_) throw std::invalid_argument("mle: block size exceeds vars");
  const size_t second_bits = num_vars_ - first_bits;
  std::vector<FieldElement> out;
  out.reserve(evals_.size());
  for (size_t b = 0; b < (size_t{1} << second_bits); ++b) {
    for (size_t a = 0; a < (size_t{1} << first_bits); ++a) {
      out.push_back(evals_[(a << second_bits) | b]);
    }
  }
  return {num_vars_, std::move(out)};
}

}  // namespace zkfingpt
