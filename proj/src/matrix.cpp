#include "zkfingpt/matrix.hpp"

#include <stdexcept>

namespace zkfingpt {

namespace {
void put_u32be(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(static_cast<uint8_t>(v >> 24));
  out.push_back(static_cast<uint8_t>(v >> 16));
  out.push_back(static_cast<uint8_t>(v >> 8));
  out.push_back(static_cast<uint8_t>(v));
}
}  // namespace

FieldMatrix::FieldMatrix(size_t rows, size_t cols, std::vector<FieldElement> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("matrix: empty dimension");
  if (entries_.size() != rows_ * cols_) throw std::invalid_argument("matrix: entry count");
  for (const auto& e : entries_) {
    if (!e.params()->same(*entries_.front().params())) {
      throw std::invalid_argument("matrix: mixed parameter sets");
    }
  }
}

FieldMatrix FieldMatrix::zeros(size_t rows, size_t cols, const FieldParamsPtr& params) {
  std::vector<FieldElement> entries;
  entries.reserve(rows * cols);
  for (size_t i = 0; i < rows * cols; ++i) entries.push_back(FieldElement::zero(params));
  return {rows, cols, std::move(entries)};
}

FieldMatrix FieldMatrix::from_signed(const std::vector<std::vector<int64_t>>& values,
                                     const FieldParamsPtr& params) {
  if (values.empty() || values.front().empty()) {
    throw std::invalid_argument("matrix: empty input");
  }
  size_t rows = values.size();
  size_t cols = values.front().size();
  std::vector<FieldElement> entries;
  entries.reserve(rows * cols);
  for (const auto& row : values) {
    if (row.size() != cols) throw std::invalid_argument("matrix: ragged rows");
    for (int64_t v : row) entries.push_back(FieldElement::from_signed(v, params));
  }
  return {rows, cols, std::move(entries)};
}

void FieldMatrix::set(size_t i, size_t j, FieldElement v) {
  if (!v.params()->same(*params())) throw std::invalid_argument("matrix: mixed parameter sets");
  entries_[i * cols_ + j] = std::move(v);
}

FieldMatrix FieldMatrix::transposed() const {
  std::vector<FieldElement> out;
  out.reserve(entries_.size());
  for (size_t j = 0; j < cols_; ++j) {
    for (size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
  }
  return {cols_, rows_, std::move(out)};
}

bool FieldMatrix::operator==(const FieldMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

std::vector<uint8_t> FieldMatrix::to_bytes() const {
  std::vector<uint8_t> out;
  out.reserve(8 + entries_.size() * params()->byte_width());
  put_u32be(out, static_cast<uint32_t>(rows_));
  put_u32be(out, static_cast<uint32_t>(cols_));
  for (const auto& e : entries_) {
    auto b = e.to_bytes();
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

Digest FieldMatrix::digest() const { return sha256(to_bytes()); }

FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
  if (!a.params()->same(*b.params())) throw std::invalid_argument("matmul: mixed parameter sets");
  FieldMatrix c = FieldMatrix::zeros(a.rows(), b.cols(), a.params());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t k = 0; k < a.cols(); ++k) {
      const FieldElement& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < b.cols(); ++j) {
        c.set(i, j, c.at(i, j) + aik * b.at(k, j));
      }
    }
  }
  return c;
}

}  // namespace zkfingpt
