#include "zkfingpt/quantizer.hpp"

#include <cmath>
#include <stdexcept>

namespace zkfingpt {

FieldElement quantize(double x, const QuantScheme& scheme) {
  if (!std::isfinite(x)) throw std::invalid_argument("quantize: non-finite input");
  const double scaled = std::ldexp(x, static_cast<int>(scheme.bits));
  const double rounded = std::round(scaled);  // half away from zero
  mpz_class n;
  mpz_set_d(n.get_mpz_t(), rounded);
  if (abs(n) * 2 >= scheme.params->modulus()) {
    throw std::overflow_error("quantize: scaled magnitude exceeds p/2");
  }
  return FieldElement::from_signed(n, scheme.params);
}

double dequantize(const FieldElement& f, const QuantScheme& scheme,
                  unsigned accumulated_scale_exponent) {
  const mpz_class lifted = f.signed_lift();
  return std::ldexp(lifted.get_d(),
                    -static_cast<int>(scheme.bits * accumulated_scale_exponent));
}

FieldMatrix quantize_matrix(const std::vector<std::vector<double>>& values,
                            const QuantScheme& scheme) {
  if (values.empty() || values.front().empty()) {
    throw std::invalid_argument("quantize: empty matrix");
  }
  const size_t rows = values.size();
  const size_t cols = values.front().size();
  std::vector<FieldElement> entries;
  entries.reserve(rows * cols);
  for (const auto& row : values) {
    if (row.size() != cols) throw std::invalid_argument("quantize: ragged rows");
    for (double v : row) entries.push_back(quantize(v, scheme));
  }
  return {rows, cols, std::move(entries)};
}

}  // namespace zkfingpt
