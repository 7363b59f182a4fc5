#include <doctest.h>

#include <random>

#include "zkfingpt/field.hpp"

using namespace zkfingpt;

namespace {

FieldParamsPtr p97() {
  static auto params = FieldParams::make(mpz_class(97), 7, /*insecure=*/true);
  return params;
}

FieldElement fe(int64_t v, const FieldParamsPtr& p) {
  return {mpz_class(static_cast<long>(v)), p};  // canonical residue
}

// Independent oracle for the 64-bit profile: native 128-bit arithmetic,
// no GMP involved on this side.
uint64_t mul_mod_u128(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
uint64_t add_mod_u128(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) + b) % p);
}

uint64_t to_u64(const FieldElement& e) { return mpz_get_ui(e.value().get_mpz_t()); }

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("construction rejects composite moduli") {
    CHECK_THROWS_AS(FieldParams::make(mpz_class(96), 7, true), std::invalid_argument);
    CHECK_THROWS_AS(FieldParams::make(mpz_class(1), 7, true), std::invalid_argument);
  }

  TEST_CASE("production profile enforces bit length vs lambda") {
    CHECK_THROWS_AS(FieldParams::make(mpz_class(97), 128, /*insecure=*/false),
                    std::invalid_argument);
    auto prod = FieldParams::bls12381_scalar();
    CHECK(prod->bit_length() == 255);
    CHECK(prod->lambda() == 128);
    CHECK_FALSE(prod->insecure());
  }

  TEST_CASE("add golden values at p=97") {
    auto p = p97();
    CHECK(fe(50, p) + fe(60, p) == fe(13, p));
    const FieldElement a = fe(31, p);
    CHECK(a + FieldElement::zero(p) == a);
    CHECK(a + FieldElement(mpz_class(97 - 31), p) == FieldElement::zero(p));
  }

  TEST_CASE("mul/sub/neg golden values at p=97") {
    auto p = p97();
    CHECK(fe(10, p) * fe(10, p) == fe(3, p));
    const FieldElement a = fe(42, p);
    CHECK(a * FieldElement::one(p) == a);
    CHECK(a - a == FieldElement::zero(p));
    CHECK(a + a.neg() == FieldElement::zero(p));
  }

  TEST_CASE("inv golden values at p=97") {
    auto p = p97();
    CHECK(fe(2, p).inv() == fe(49, p));
    CHECK(fe(2, p) * fe(49, p) == FieldElement::one(p));
    CHECK(FieldElement::one(p).inv() == FieldElement::one(p));
    CHECK(fe(96, p).inv() == fe(96, p));  // (-1)^2 = 1
    CHECK_THROWS_AS(FieldElement::zero(p).inv(), std::domain_error);
  }

  TEST_CASE("from_signed embedding") {
    auto p = p97();
    CHECK(FieldElement::from_signed(int64_t{-1}, p).value() == 96);
    CHECK(FieldElement::from_signed(int64_t{0}, p).value() == 0);
    CHECK(FieldElement::from_signed(int64_t{-42}, p).value() == 55);
    CHECK_THROWS_AS(FieldElement::from_signed(int64_t{49}, p), std::overflow_error);
    CHECK_THROWS_AS(FieldElement::from_signed(int64_t{-49}, p), std::overflow_error);
  }

  TEST_CASE("from_signed is injective and odd") {
    auto p = p97();
    for (int64_t n = -48; n <= 48; ++n) {
      CHECK(FieldElement::from_signed(-n, p) == FieldElement::from_signed(n, p).neg());
      CHECK(FieldElement::from_signed(n, p).signed_lift() == n);
    }
  }

  TEST_CASE("params never mix") {
    auto a = FieldElement::one(p97());
    auto b = FieldElement::one(FieldParams::test64());
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
  }

  TEST_CASE("field axioms against the native 128-bit oracle") {
    auto params = FieldParams::test64();
    const uint64_t p = 18446744073709551557ULL;
    std::mt19937_64 rng(42);
    for (int i = 0; i < 500; ++i) {
      const uint64_t a = rng() % p, b = rng() % p, c = rng() % p;
      const auto fa = FieldElement::from_unsigned(a, params);
      const auto fb = FieldElement::from_unsigned(b, params);
      const auto fc = FieldElement::from_unsigned(c, params);
      CHECK(to_u64(fa + fb) == add_mod_u128(a, b, p));
      CHECK(to_u64(fa * fb) == mul_mod_u128(a, b, p));
      CHECK((fa + fb) + fc == fa + (fb + fc));
      CHECK((fa * fb) * fc == fa * (fb * fc));
      CHECK(fa * (fb + fc) == fa * fb + fa * fc);
      CHECK(fa + fb == fb + fa);
      CHECK(fa * fb == fb * fa);
      if (a != 0) {
        CHECK(fa * fa.inv() == FieldElement::one(params));
        CHECK(fa.inv() * fa == FieldElement::one(params));
      }
    }
  }

  TEST_CASE("canonical little-endian serialization") {
    auto params = FieldParams::test64();
    CHECK(params->byte_width() == 8);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
      const auto e = FieldElement::from_unsigned(rng(), params);
      const auto bytes = e.to_bytes();
      CHECK(bytes.size() == 8);
      CHECK(FieldElement::from_bytes(bytes, params) == e);
    }
    // width enforced
    std::vector<uint8_t> short_bytes(7, 0);
    CHECK_THROWS_AS(FieldElement::from_bytes(short_bytes, params), std::invalid_argument);
    // non-canonical (>= p) rejected
    std::vector<uint8_t> big(8, 0xff);
    CHECK_THROWS_AS(FieldElement::from_bytes(big, params), std::invalid_argument);
  }

  TEST_CASE("pow matches repeated multiplication") {
    auto p = p97();
    FieldElement acc = FieldElement::one(p);
    const FieldElement base = fe(5, p);
    for (int e = 0; e < 20; ++e) {
      CHECK(base.pow(e) == acc);
      acc = acc * base;
    }
  }
}
