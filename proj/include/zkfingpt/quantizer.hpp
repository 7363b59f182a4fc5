#pragma once

#include <vector>

#include "zkfingpt/matrix.hpp"

namespace zkfingpt {

/// Fixed-point quantization boundary: reals enter the field once, scaled by
/// 2^bits with half-away-from-zero rounding; no rescaling happens inside the
/// proven statement, so the field matmul is exact and the accumulated scale
/// exponent is tracked as metadata only.
struct QuantScheme {
  unsigned bits = 16;  // fractional bits b; scale = 2^b
  FieldParamsPtr params;
};

/// from_signed(round(x * 2^b)); throws std::overflow_error when
/// |x| * 2^b >= p/2.
FieldElement quantize(double x, const QuantScheme& scheme);

/// signed-lift(f) / 2^(b * accumulated_scale_exponent). A product of two
/// quantized operands carries exponent 2.
double dequantize(const FieldElement& f, const QuantScheme& scheme,
                  unsigned accumulated_scale_exponent);

FieldMatrix quantize_matrix(const std::vector<std::vector<double>>& values,
                            const QuantScheme& scheme);

}  // namespace zkfingpt
