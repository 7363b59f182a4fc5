#pragma once

#include <span>

#include "zkfingpt/field.hpp"

namespace zkfingpt {

/// Deterministic, insecure pairing-group mock for unit tests and CI:
/// G1 = G2 = the scalar field written additively (a point is a*G with G = 1),
/// the target group is the field's additive group, and e(x, y) = x*y, so
/// e(aG, bH) = ab*e(G, H). Discrete logs are trivially readable; never use
/// outside tests.
class MockGroup {
 public:
  using G1 = FieldElement;
  using G2 = FieldElement;
  using Gt = FieldElement;

  static constexpr uint8_t kBackendId = 0x01;

  explicit MockGroup(FieldParamsPtr scalar_params) : params_(std::move(scalar_params)) {}

  uint8_t backend_id() const { return kBackendId; }
  const FieldParamsPtr& scalar_params() const { return params_; }

  G1 g1_generator() const { return FieldElement::one(params_); }
  G2 g2_generator() const { return FieldElement::one(params_); }
  G1 g1_identity() const { return FieldElement::zero(params_); }

  G1 g1_add(const G1& a, const G1& b) const { return a + b; }
  G1 g1_mul(const G1& p, const FieldElement& scalar) const { return p * scalar; }
  bool g1_eq(const G1& a, const G1& b) const { return a == b; }

  G2 g2_sub(const G2& a, const G2& b) const { return a - b; }
  G2 g2_mul(const G2& p, const FieldElement& scalar) const { return p * scalar; }

  Gt pairing(const G1& p, const G2& q) const { return p * q; }
  /// Target-group operation (the paper's multiplicative e(..)e(..)).
  Gt gt_combine(const Gt& a, const Gt& b) const { return a + b; }
  /// Target-group exponentiation (the paper's e(..)^v).
  Gt gt_pow(const Gt& base, const FieldElement& exp) const { return base * exp; }
  bool gt_eq(const Gt& a, const Gt& b) const { return a == b; }

  size_t g1_byte_size() const { return params_->byte_width(); }
  size_t g2_byte_size() const { return params_->byte_width(); }
  std::vector<uint8_t> g1_to_bytes(const G1& p) const { return p.to_bytes(); }
  std::vector<uint8_t> g2_to_bytes(const G2& p) const { return p.to_bytes(); }
  G1 g1_from_bytes(std::span<const uint8_t> b) const {
    return FieldElement::from_bytes(b, params_);
  }
  G2 g2_from_bytes(std::span<const uint8_t> b) const {
    return FieldElement::from_bytes(b, params_);
  }

 private:
  FieldParamsPtr params_;
};

}  // namespace zkfingpt
