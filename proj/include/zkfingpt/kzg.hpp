#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "zkfingpt/field.hpp"
#include "zkfingpt/transcript.hpp"

namespace zkfingpt::kzg {

/// Horner evaluation of sum_i coeffs[i] x^i at u. Empty coeffs = zero poly.
FieldElement eval_poly(std::span<const FieldElement> coeffs, const FieldElement& u);

/// Quotient Q(x) = (P(x) - v) / (x - u) by synthetic division. The division
/// must be exact: throws std::logic_error if the remainder differs from v.
std::vector<FieldElement> divide_by_linear(std::span<const FieldElement> coeffs,
                                           const FieldElement& u, const FieldElement& v);

template <class Group>
struct KzgKeys {
  std::vector<typename Group::G1> pk;  // (G, sG, ..., s^n G)
  std::vector<typename Group::G2> vk;  // (H, sH, ..., s^n H)
  // Retained only by test-profile setups for oracle checks.
  std::optional<FieldElement> insecure_secret;

  size_t degree_bound() const { return pk.size() - 1; }
};

template <class Group>
struct Commitment {
  typename Group::G1 point;
};

template <class Group>
struct Opening {
  typename Group::G1 point;  // Q(s)G
  FieldElement u;
  FieldElement v;
};

/// Trusted setup: derives the secret s deterministically from `seed`, raises
/// both generators to its powers, and discards s unless retain_secret.
template <class Group>
KzgKeys<Group> key_gen(const Group& g, size_t n, std::span<const uint8_t> seed,
                       bool retain_secret = false) {
  Transcript t("zkfingpt/kzg-setup");
  t.absorb("seed", seed);
  FieldElement s = t.challenge_field("kzg-s", g.scalar_params());
  while (s.is_zero()) s = t.challenge_field("kzg-s", g.scalar_params());

  KzgKeys<Group> keys;
  keys.pk.reserve(n + 1);
  keys.vk.reserve(n + 1);
  FieldElement power = FieldElement::one(g.scalar_params());
  for (size_t i = 0; i <= n; ++i) {
    keys.pk.push_back(g.g1_mul(g.g1_generator(), power));
    keys.vk.push_back(g.g2_mul(g.g2_generator(), power));
    power = power * s;
  }
  if (retain_secret) keys.insecure_secret = s;
  return keys;
}

template <class Group>
Commitment<Group> commit(const Group& g, std::span<const typename Group::G1> pk,
                         std::span<const FieldElement> coeffs) {
  if (coeffs.size() > pk.size()) throw std::invalid_argument("kzg: degree exceeds key bound");
  typename Group::G1 acc = g.g1_identity();
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    acc = g.g1_add(acc, g.g1_mul(pk[i], coeffs[i]));
  }
  return {acc};
}

template <class Group>
Opening<Group> open(const Group& g, std::span<const typename Group::G1> pk,
                    std::span<const FieldElement> coeffs, const FieldElement& u) {
  const FieldElement v = eval_poly(coeffs, u);
  const std::vector<FieldElement> quotient = divide_by_linear(coeffs, u, v);
  return {commit(g, pk, std::span<const FieldElement>(quotient)).point, u, v};
}

/// Pairing check e(comm, H) = e(opening, sH - uH) * e(G, H)^v, the paper's
/// equation read additively in G2.
template <class Group>
bool verify_opening(const Group& g, std::span<const typename Group::G2> vk,
                    const Commitment<Group>& comm, const typename Group::G1& opening,
                    const FieldElement& u, const FieldElement& v) {
  if (vk.empty()) throw std::invalid_argument("kzg: empty verification key");
  const typename Group::G2 h = vk[0];
  const typename Group::Gt lhs = g.pairing(comm.point, h);
  typename Group::Gt rhs = g.gt_pow(g.pairing(g.g1_generator(), h), v);
  if (vk.size() >= 2) {
    const typename Group::G2 shifted = g.g2_sub(vk[1], g.g2_mul(h, u));
    rhs = g.gt_combine(g.pairing(opening, shifted), rhs);
  } else {
    // Degree bound 0: only constant polynomials commit, Q = 0.
    if (!g.g1_eq(opening, g.g1_identity())) return false;
  }
  return g.gt_eq(lhs, rhs);
}

template <class Group>
bool verify_opening(const Group& g, std::span<const typename Group::G2> vk,
                    const Commitment<Group>& comm, const Opening<Group>& opening) {
  return verify_opening(g, vk, comm, opening.point, opening.u, opening.v);
}

}  // namespace zkfingpt::kzg
