#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "zkfingpt/field.hpp"

namespace zkfingpt::bls12381 {

// Tower: Fp2 = Fp[u]/(u^2+1), Fp6 = Fp2[v]/(v^3 - (u+1)), Fp12 = Fp6[w]/(w^2 - v).

struct Fp {
  mpz_class v;
  bool operator==(const Fp&) const = default;
};

struct Fp2 {
  Fp c0, c1;
  bool operator==(const Fp2&) const = default;
};

struct Fp6 {
  Fp2 c0, c1, c2;
  bool operator==(const Fp6&) const = default;
};

struct Fp12 {
  Fp6 c0, c1;
  bool operator==(const Fp12&) const = default;
};

struct G1Affine {
  Fp x, y;
  bool infinity = true;
  bool operator==(const G1Affine&) const = default;
};

struct G2Affine {
  Fp2 x, y;
  bool infinity = true;
  bool operator==(const G2Affine&) const = default;
};

/// Pairing backend over BLS12-381: affine arithmetic on GMP integers, the
/// ate Miller loop run on untwisted points in Fp12, and a generic
/// (p^12 - 1)/r final exponentiation. Built for correctness at spot-check
/// scale, not throughput.
class Bls12381Group {
 public:
  using G1 = G1Affine;
  using G2 = G2Affine;
  using Gt = Fp12;

  static constexpr uint8_t kBackendId = 0x02;

  Bls12381Group();

  uint8_t backend_id() const { return kBackendId; }
  const FieldParamsPtr& scalar_params() const { return scalar_params_; }

  G1 g1_generator() const;
  G2 g2_generator() const;
  G1 g1_identity() const { return G1{}; }

  G1 g1_add(const G1& a, const G1& b) const;
  G1 g1_neg(const G1& a) const;
  G1 g1_mul(const G1& p, const FieldElement& scalar) const;
  bool g1_eq(const G1& a, const G1& b) const { return a == b; }

  G2 g2_add(const G2& a, const G2& b) const;
  G2 g2_sub(const G2& a, const G2& b) const;
  G2 g2_mul(const G2& p, const FieldElement& scalar) const;

  Gt pairing(const G1& p, const G2& q) const;
  Gt gt_combine(const Gt& a, const Gt& b) const;
  Gt gt_pow(const Gt& base, const FieldElement& exp) const;
  Gt gt_one() const;
  bool gt_eq(const Gt& a, const Gt& b) const { return a == b; }

  size_t g1_byte_size() const { return 1 + 2 * 48; }
  size_t g2_byte_size() const { return 1 + 4 * 48; }
  std::vector<uint8_t> g1_to_bytes(const G1& p) const;
  std::vector<uint8_t> g2_to_bytes(const G2& p) const;
  /// Rejects off-curve and out-of-subgroup encodings.
  G1 g1_from_bytes(std::span<const uint8_t> data) const;
  G2 g2_from_bytes(std::span<const uint8_t> data) const;

  bool g1_on_curve(const G1& p) const;
  bool g2_on_curve(const G2& p) const;

 private:
  FieldParamsPtr scalar_params_;
};

}  // namespace zkfingpt::bls12381
