#include "zkfingpt/field.hpp"

#include <stdexcept>

namespace zkfingpt {

namespace {

size_t mpz_bit_length(const mpz_class& v) { return mpz_sizeinbase(v.get_mpz_t(), 2); }

mpz_class mpz_from_be(std::span<const uint8_t> bytes) {
  mpz_class v;
  mpz_import(v.get_mpz_t(), bytes.size(), 1 /*most significant word first*/, 1, 0, 0,
             bytes.data());
  return v;
}

}  // namespace

FieldParams::FieldParams(mpz_class modulus, unsigned lambda, bool insecure, uint8_t profile_id)
    : modulus_(std::move(modulus)),
      lambda_(lambda),
      insecure_(insecure),
      profile_id_(profile_id),
      bits_(mpz_bit_length(modulus_)),
      width_((bits_ + 7) / 8) {}

FieldParamsPtr FieldParams::make(mpz_class modulus, unsigned lambda, bool insecure_test,
                                 uint8_t profile_id) {
  if (modulus < 2) throw std::invalid_argument("field: modulus must be >= 2");
  if (mpz_probab_prime_p(modulus.get_mpz_t(), 30) == 0) {
    throw std::invalid_argument("field: modulus is not prime");
  }
  if (!insecure_test && mpz_bit_length(modulus) < lambda) {
    throw std::invalid_argument("field: bit length below security parameter");
  }
  return FieldParamsPtr(new FieldParams(std::move(modulus), lambda, insecure_test, profile_id));
}

FieldParamsPtr FieldParams::test64() {
  static FieldParamsPtr instance =
      make(mpz_class("18446744073709551557"), 64, /*insecure=*/true, kProfileTest64);
  return instance;
}

FieldParamsPtr FieldParams::bls12381_scalar() {
  static FieldParamsPtr instance = make(
      mpz_class("73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001", 16), 128,
      /*insecure=*/false, kProfileBls12381Scalar);
  return instance;
}

FieldParamsPtr FieldParams::from_profile(uint8_t profile_id, const mpz_class* modulus) {
  switch (profile_id) {
    case kProfileTest64:
      return test64();
    case kProfileBls12381Scalar:
      return bls12381_scalar();
    case kProfileCustom:
      if (modulus == nullptr) {
        throw std::invalid_argument("field: custom profile needs a modulus");
      }
      return make(*modulus, 0, /*insecure=*/true, kProfileCustom);
    default:
      throw std::invalid_argument("field: unknown profile id");
  }
}

FieldElement::FieldElement(mpz_class value, FieldParamsPtr params)
    : value_(std::move(value)), params_(std::move(params)) {
  if (!params_) throw std::invalid_argument("field: null params");
  mpz_mod(value_.get_mpz_t(), value_.get_mpz_t(), params_->modulus().get_mpz_t());
}

FieldElement FieldElement::zero(const FieldParamsPtr& params) { return {mpz_class(0), params}; }

FieldElement FieldElement::one(const FieldParamsPtr& params) { return {mpz_class(1), params}; }

FieldElement FieldElement::from_signed(const mpz_class& n, const FieldParamsPtr& params) {
  mpz_class mag = abs(n);
  if (mag * 2 >= params->modulus()) {
    throw std::overflow_error("field: signed magnitude exceeds p/2");
  }
  if (n >= 0) return {n, params};
  return {params->modulus() - mag, params};
}

FieldElement FieldElement::from_signed(int64_t n, const FieldParamsPtr& params) {
  return from_signed(mpz_class(static_cast<long>(n)), params);
}

FieldElement FieldElement::from_unsigned(uint64_t n, const FieldParamsPtr& params) {
  mpz_class v;
  mpz_import(v.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  return {v, params};
}

void FieldElement::check_same_params(const FieldElement& other) const {
  if (!params_->same(*other.params_)) {
    throw std::invalid_argument("field: mixed parameter sets");
  }
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
  check_same_params(other);
  mpz_class v = value_ + other.value_;
  if (v >= params_->modulus()) v -= params_->modulus();
  return {std::move(v), params_};
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
  check_same_params(other);
  mpz_class v = value_ - other.value_;
  if (v < 0) v += params_->modulus();
  return {std::move(v), params_};
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
  check_same_params(other);
  mpz_class v = value_ * other.value_;
  mpz_mod(v.get_mpz_t(), v.get_mpz_t(), params_->modulus().get_mpz_t());
  return {std::move(v), params_};
}

FieldElement FieldElement::neg() const {
  if (value_ == 0) return *this;
  return {params_->modulus() - value_, params_};
}

FieldElement FieldElement::inv() const {
  if (value_ == 0) throw std::domain_error("field: no inverse for zero");
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), value_.get_mpz_t(), params_->modulus().get_mpz_t()) == 0) {
    throw std::domain_error("field: no inverse");
  }
  return {std::move(r), params_};
}

FieldElement FieldElement::pow(const mpz_class& exponent) const {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), value_.get_mpz_t(), exponent.get_mpz_t(),
           params_->modulus().get_mpz_t());
  return {std::move(r), params_};
}

bool FieldElement::operator==(const FieldElement& other) const {
  return params_->same(*other.params_) && value_ == other.value_;
}

mpz_class FieldElement::signed_lift() const {
  if (value_ * 2 > params_->modulus()) return value_ - params_->modulus();
  return value_;
}

std::vector<uint8_t> FieldElement::to_bytes() const {
  std::vector<uint8_t> out(params_->byte_width(), 0);
  size_t count = 0;
  // Least significant byte first.
  mpz_export(out.data(), &count, -1, 1, 0, 0, value_.get_mpz_t());
  return out;
}

FieldElement FieldElement::from_bytes(std::span<const uint8_t> bytes,
                                      const FieldParamsPtr& params) {
  if (bytes.size() != params->byte_width()) {
    throw std::invalid_argument("field: encoded width mismatch");
  }
  mpz_class v;
  mpz_import(v.get_mpz_t(), bytes.size(), -1, 1, 0, 0, bytes.data());
  if (v >= params->modulus()) {
    throw std::invalid_argument("field: non-canonical encoding");
  }
  return {std::move(v), params};
}

FieldElement field_from_wide_bytes(std::span<const uint8_t> bytes, const FieldParamsPtr& params) {
  return {mpz_from_be(bytes), params};
}

}  // namespace zkfingpt
