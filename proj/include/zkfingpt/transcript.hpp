#pragma once

#include <span>
#include <string_view>

#include "zkfingpt/field.hpp"
#include "zkfingpt/sha256.hpp"

namespace zkfingpt {

/// Fiat-Shamir transcript: a SHA-256 hash chain with mandatory domain
/// separation labels. Framing is part of the wire format (docs/FORMATS.md);
/// prover and verifier replaying the same absorb/challenge sequence derive
/// identical challenges.
class Transcript {
 public:
  explicit Transcript(std::string_view domain_label);

  void absorb(std::string_view label, std::span<const uint8_t> data);
  void absorb_field(std::string_view label, const FieldElement& e);
  void absorb_byte(std::string_view label, uint8_t b);

  /// Squeezes 2*bitlen(p) bits and reduces mod p; advances the state.
  FieldElement challenge_field(std::string_view label, const FieldParamsPtr& params);

  const Digest& state() const { return state_; }
  uint64_t draws() const { return draws_; }

 private:
  Digest state_{};
  uint64_t draws_ = 0;
};

}  // namespace zkfingpt
