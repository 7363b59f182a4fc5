#include "zkfingpt/kzg.hpp"

namespace zkfingpt::kzg {

FieldElement eval_poly(std::span<const FieldElement> coeffs, const FieldElement& u) {
  FieldElement acc = FieldElement::zero(u.params());
  for (size_t i = coeffs.size(); i > 0; --i) {
    acc = acc * u + coeffs[i - 1];
  }
  return acc;
}

std::vector<FieldElement> divide_by_linear(std::span<const FieldElement> coeffs,
                                           const FieldElement& u, const FieldElement& v) {
  if (coeffs.size() <= 1) {
    // Constant (or zero) polynomial: quotient is zero.
    if (!coeffs.empty() && coeffs[0] != v) {
      throw std::logic_error("kzg: division remainder mismatch");
    }
    return {};
  }
  std::vector<FieldElement> quotient(coeffs.size() - 1, FieldElement::zero(u.params()));
  quotient.back() = coeffs.back();
  for (size_t i = coeffs.size() - 2; i > 0; --i) {
    quotient[i - 1] = coeffs[i] + u * quotient[i];
  }
  const FieldElement remainder = coeffs[0] + u * quotient[0];
  if (remainder != v) throw std::logic_error("kzg: division remainder mismatch");
  return quotient;
}

}  // namespace zkfingpt::kzg
