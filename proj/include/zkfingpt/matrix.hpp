#pragma once

#include <cstdint>
#include <vector>

#include "zkfingpt/field.hpp"
#include "zkfingpt/sha256.hpp"

namespace zkfingpt {

/// Dense row-major matrix over F_p. rows, cols >= 1.
class FieldMatrix {
 public:
  FieldMatrix(size_t rows, size_t cols, std::vector<FieldElement> entries);
  static FieldMatrix zeros(size_t rows, size_t cols, const FieldParamsPtr& params);
  static FieldMatrix from_signed(const std::vector<std::vector<int64_t>>& values,
                                 const FieldParamsPtr& params);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const FieldParamsPtr& params() const { return entries_.front().params(); }

  const FieldElement& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }
  void set(size_t i, size_t j, FieldElement v);
  const std::vector<FieldElement>& entries() const { return entries_; }

  FieldMatrix transposed() const;
  bool operator==(const FieldMatrix& other) const;

  /// Canonical encoding used for digests: u32be rows, u32be cols, entries LE.
  std::vector<uint8_t> to_bytes() const;
  Digest digest() const;

 private:
  size_t rows_;
  size_t cols_;
  std::vector<FieldElement> entries_;
};

/// C = A * B over the field; throws on dimension or parameter mismatch.
FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b);

}  // namespace zkfingpt
