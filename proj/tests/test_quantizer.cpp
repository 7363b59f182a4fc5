#include <doctest.h>

#include <random>

#include "zkfingpt/quantizer.hpp"

using namespace zkfingpt;

namespace {

QuantScheme b4() { return {4, FieldParams::test64()}; }

}  // namespace

TEST_SUITE("quantizer") {
  TEST_CASE("golden values at b=4") {
    const auto q = b4();
    CHECK(quantize(0.5, q) == FieldElement::from_unsigned(8, q.params));
    CHECK(quantize(-1.0, q).value() == q.params->modulus() - 16);
    // 0.03125 * 16 = 0.5 rounds away from zero
    CHECK(quantize(0.03125, q) == FieldElement::from_unsigned(1, q.params));
    CHECK(quantize(-0.03125, q) == FieldElement::from_unsigned(1, q.params).neg());
    CHECK(quantize(0.0, q).is_zero());
  }

  TEST_CASE("dequantize inverts exactly on the grid") {
    const auto q = b4();
    CHECK(dequantize(FieldElement::from_unsigned(8, q.params), q, 1) == 0.5);
    CHECK(dequantize(FieldElement::zero(q.params), q, 1) == 0.0);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
      const double x = static_cast<double>(static_cast<int32_t>(rng())) / 16.0;
      CHECK(dequantize(quantize(x, q), q, 1) == x);
    }
  }

  TEST_CASE("1x1 product carries scale exponent 2") {
    const auto q = b4();
    const auto a = quantize(0.5, q);
    const auto b = quantize(0.5, q);
    CHECK(dequantize(a * b, q, 2) == 0.25);
  }

  TEST_CASE("overflow rejected") {
    const QuantScheme tiny{4, FieldParams::make(mpz_class(97), 7, true)};
    CHECK_THROWS_AS(quantize(4.0, tiny), std::overflow_error);  // 4*16 = 64 > 48
    CHECK_NOTHROW(quantize(2.0, tiny));
    CHECK_THROWS_AS(quantize(std::numeric_limits<double>::infinity(), b4()),
                    std::invalid_argument);
  }

  TEST_CASE("field matmul of quantized operands equals quantized real matmul") {
    const auto q = b4();
    std::mt19937_64 rng(100);
    auto rand_real = [&](size_t r, size_t c) {
      std::vector<std::vector<double>> m(r, std::vector<double>(c));
      for (auto& row : m)
        for (auto& v : row) {
          // grid-aligned values so the real product is exact in fixed point
          v = static_cast<double>(static_cast<int16_t>(rng())) / 16.0;
        }
      return m;
    };
    for (int trial = 0; trial < 10; ++trial) {
      const auto wr = rand_real(3, 4);
      const auto xr = rand_real(4, 2);
      const auto wf = quantize_matrix(wr, q);
      const auto xf = quantize_matrix(xr, q);
      const auto yf = matmul(wf, xf);
      for (size_t i = 0; i < 3; ++i) {
        for (size_t j = 0; j < 2; ++j) {
          double acc = 0;
          for (size_t k = 0; k < 4; ++k) acc += wr[i][k] * xr[k][j];
          CHECK(dequantize(yf.at(i, j), q, 2) == acc);
        }
      }
    }
  }

  TEST_CASE("matrix helper validates shape") {
    CHECK_THROWS_AS(quantize_matrix({}, b4()), std::invalid_argument);
    CHECK_THROWS_AS(quantize_matrix({{1.0}, {1.0, 2.0}}, b4()), std::invalid_argument);
  }
}
