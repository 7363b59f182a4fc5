#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace zkfingpt {

class FieldParams;
using FieldParamsPtr = std::shared_ptr<const FieldParams>;

/// Prime-field parameters. Every FieldElement references one of these;
/// elements from different parameter sets never mix.
class FieldParams : public std::enable_shared_from_this<FieldParams> {
 public:
  /// Builds a parameter set after a probabilistic primality check.
  /// A non-insecure profile additionally requires bitlen(p) >= lambda.
  static FieldParamsPtr make(mpz_class modulus, unsigned lambda, bool insecure_test,
                             uint8_t profile_id = kProfileCustom);

  /// 64-bit prime 2^64 - 59. Fast, deterministic fixtures; insecure by design.
  static FieldParamsPtr test64();
  /// BLS12-381 scalar field (255 bits), the production profile.
  static FieldParamsPtr bls12381_scalar();
  /// Lookup by serialized profile id; custom profiles must carry the modulus.
  static FieldParamsPtr from_profile(uint8_t profile_id, const mpz_class* modulus = nullptr);

  static constexpr uint8_t kProfileCustom = 0;
  static constexpr uint8_t kProfileTest64 = 1;
  static constexpr uint8_t kProfileBls12381Scalar = 2;

  const mpz_class& modulus() const { return modulus_; }
  unsigned lambda() const { return lambda_; }
  bool insecure() const { return insecure_; }
  uint8_t profile_id() const { return profile_id_; }
  size_t bit_length() const { return bits_; }
  /// Serialized element width: ceil(bitlen(p)/8).
  size_t byte_width() const { return width_; }

  bool same(const FieldParams& other) const {
    return this == &other || modulus_ == other.modulus_;
  }

 private:
  FieldParams(mpz_class modulus, unsigned lambda, bool insecure, uint8_t profile_id);

  mpz_class modulus_;
  unsigned lambda_;
  bool insecure_;
  uint8_t profile_id_;
  size_t bits_;
  size_t width_;
};

/// Immutable element of F_p in canonical form: 0 <= value < p after every
/// operation. All operations are pure.
class FieldElement {
 public:
  FieldElement(mpz_class value, FieldParamsPtr params);

  static FieldElement zero(const FieldParamsPtr& params);
  static FieldElement one(const FieldParamsPtr& params);
  /// Signed embedding: n >= 0 -> n, n < 0 -> p - |n|. Requires |n| < p/2.
  static FieldElement from_signed(const mpz_class& n, const FieldParamsPtr& params);
  static FieldElement from_signed(int64_t n, const FieldParamsPtr& params);
  static FieldElement from_unsigned(uint64_t n, const FieldParamsPtr& params);

  const mpz_class& value() const { return value_; }
  const FieldParamsPtr& params() const { return params_; }

  FieldElement operator+(const FieldElement& other) const;
  FieldElement operator-(const FieldElement& other) const;
  FieldElement operator*(const FieldElement& other) const;
  FieldElement neg() const;
  /// Modular inverse; throws std::domain_error("no inverse") on zero.
  FieldElement inv() const;
  FieldElement pow(const mpz_class& exponent) const;

  bool operator==(const FieldElement& other) const;
  bool operator!=(const FieldElement& other) const { return !(*this == other); }
  bool is_zero() const { return value_ == 0; }

  /// Lift to the signed representative in (-p/2, p/2].
  mpz_class signed_lift() const;

  /// Fixed-width little-endian canonical residue, width = params->byte_width().
  std::vector<uint8_t> to_bytes() const;
  static FieldElement from_bytes(std::span<const uint8_t> bytes, const FieldParamsPtr& params);

  std::string to_string() const { return value_.get_str(); }

 private:
  void check_same_params(const FieldElement& other) const;

  mpz_class value_;
  FieldParamsPtr params_;
};

/// Uniform element from raw bytes interpreted big-endian, reduced mod p.
/// Used by the transcript (2x field width in, bias <= 2^-bitlen(p)).
FieldElement field_from_wide_bytes(std::span<const uint8_t> bytes, const FieldParamsPtr& params);

}  // namespace zkfingpt
