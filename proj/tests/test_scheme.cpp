#include <doctest.h>

#include <random>

#include "zkfingpt/bench.hpp"
#include "zkfingpt/mock_group.hpp"
#include "zkfingpt/scheme.hpp"

using namespace zkfingpt;

namespace {

FieldParamsPtr P() { return FieldParams::test64(); }

scheme::ModelWeights one_layer_example() {
  scheme::ModelWeights model;
  model.name = "example";
  model.layers.push_back(FieldMatrix::from_signed({{1, 2}, {3, 4}}, P()));
  return model;
}

FieldMatrix example_x() { return FieldMatrix::from_signed({{5, 6}, {7, 8}}, P()); }

kzg::KzgKeys<MockGroup> test_keys(const MockGroup& g, size_t max_params) {
  return kzg::key_gen(g, max_params - 1, std::vector<uint8_t>{7, 7}, /*retain_secret=*/true);
}

}  // namespace

TEST_SUITE("scheme") {
  TEST_CASE("worked example: Y = [[19,22],[43,50]] and the bundle verifies") {
    const MockGroup g(P());
    const auto model = one_layer_example();
    const auto keys = test_keys(g, 4);
    const auto comms = scheme::commit_model(g, keys, model);
    auto result = scheme::prove(g, keys, model, example_x());

    CHECK(result.output == FieldMatrix::from_signed({{19, 22}, {43, 50}}, P()));
    const auto verdict = scheme::verify(g, std::span<const MockGroup::G2>(keys.vk), comms,
                                        result.bundle, example_x(), result.output);
    CHECK_MESSAGE(verdict.yes, verdict.diagnostic);
  }

  TEST_CASE("commitment of the example layer is P(s) on the mock") {
    const MockGroup g(P());
    const auto model = one_layer_example();
    const auto keys = test_keys(g, 4);
    const auto comms = scheme::commit_layers(g, keys, model);
    REQUIRE(comms.size() == 1);
    // coeffs (1, 2, 3, 4): comm = 1 + 2s + 3s^2 + 4s^3
    const auto& s = *keys.insecure_secret;
    const auto expected = FieldElement::from_unsigned(1, P()) +
                          FieldElement::from_unsigned(2, P()) * s +
                          FieldElement::from_unsigned(3, P()) * s.pow(2) +
                          FieldElement::from_unsigned(4, P()) * s.pow(3);
    CHECK(comms[0].point == expected);
  }

  TEST_CASE("identity weights reproduce the input") {
    const MockGroup g(P());
    scheme::ModelWeights model;
    model.name = "identity";
    model.layers.push_back(FieldMatrix::from_signed({{1, 0}, {0, 1}}, P()));
    const auto keys = test_keys(g, 4);
    const auto comms = scheme::commit_model(g, keys, model);
    auto result = scheme::prove(g, keys, model, example_x());
    CHECK(result.output == example_x());
    CHECK(scheme::verify(g, std::span<const MockGroup::G2>(keys.vk), comms, result.bundle,
                         example_x(), result.output)
              .yes);
  }

  TEST_CASE("two-layer chain verifies and matches the direct matmul oracle") {
    const MockGroup g(P());
    std::mt19937_64 rng(55);
    scheme::ModelWeights model;
    model.name = "chain";
    model.layers.push_back(bench::random_matrix(4, 2, P(), rng));
    model.layers.push_back(bench::random_matrix(2, 4, P(), rng));
    const auto x = bench::random_matrix(2, 3, P(), rng);
    const auto keys = test_keys(g, 8);
    const auto comms = scheme::commit_model(g, keys, model);
    auto result = scheme::prove(g, keys, model, x);

    CHECK(result.output == matmul(model.layers[1], matmul(model.layers[0], x)));
    CHECK(result.bundle.records.size() == 2);
    CHECK(result.bundle.aux_activations.size() == 1);
    CHECK(scheme::verify(g, std::span<const MockGroup::G2>(keys.vk), comms, result.bundle, x,
                         result.output)
              .yes);
  }

  TEST_CASE("tampered output is rejected") {
    const MockGroup g(P());
    const auto model = one_layer_example();
    const auto keys = test_keys(g, 4);
    const auto comms = scheme::commit_model(g, keys, model);
    auto result = scheme::prove(g, keys, model, example_x());

    auto tampered = result.output;
    tampered.set(0, 0, FieldElement::from_signed(int64_t{20}, P()));  // 19 -> 20
    const auto verdict = scheme::verify(g, std::span<const MockGroup::G2>(keys.vk), comms,
                                        result.bundle, example_x(), tampered);
    CHECK_FALSE(verdict.yes);
  }

  TEST_CASE("tampered opening value v is rejected") {
    const MockGroup g(P());
    const auto model = one_layer_example();
    const auto keys = test_keys(g, 4);
    const auto comms = scheme::commit_model(g, keys, model);
    auto result = scheme::prove(g, keys, model, example_x());

    result.bundle.records[0].v = result.bundle.records[0].v + FieldElement::one(P());
    const auto verdict = scheme::verify(g, std::span<const MockGroup::G2>(keys.vk), comms,
                                        result.bundle, example_x(), result.output);
    CHECK_FALSE(verdict.yes);
    CHECK(verdict.diagnostic == "layer 0 kzg opening rejected");
  }

  TEST_CASE("bundle serialization round-trips and verifies from a fresh decode") {
    const MockGroup g(P());
    std::mt19937_64 rng(66);
    scheme::ModelWeights model;
    model.name = "serde";
    model.layers.push_back(bench::random_matrix(2, 4, P(), rng));
    model.layers.push_back(bench::random_matrix(4, 2, P(), rng));
    const auto x = bench::random_matrix(4, 4, P(), rng);
    const auto keys = test_keys(g, 8);
    const auto comms = scheme::commit_model(g, keys, model);
    auto result = scheme::prove(g, keys, model, x);

    const auto bundle_bytes = result.bundle.to_bytes();
    const auto comm_bytes = comms.to_bytes();
    const auto bundle2 = scheme::ProofBundle::from_bytes(bundle_bytes);
    const auto comms2 = scheme::CommitmentSet::from_bytes(comm_bytes);
    CHECK(bundle2.to_bytes() == bundle_bytes);

    const auto verdict = scheme::verify(g, std::span<const MockGroup::G2>(keys.vk), comms2,
                                        bundle2, x, result.output);
    CHECK_MESSAGE(verdict.yes, verdict.diagnostic);
  }

  TEST_CASE("malformed bundles give No with a diagnostic, not an exception") {
    const MockGroup g(P());
    const auto model = one_layer_example();
    const auto keys = test_keys(g, 4);
    const auto comms = scheme::commit_model(g, keys, model);
    auto result = scheme::prove(g, keys, model, example_x());

    SUBCASE("wrong backend id") {
      auto bundle = result.bundle;
      bundle.backend_id = 0x7f;
      const auto v = scheme::verify(g, std::span<const MockGroup::G2>(keys.vk), comms, bundle,
                                    example_x(), result.output);
      CHECK_FALSE(v.yes);
      CHECK(v.diagnostic == "backend id mismatch");
    }
    SUBCASE("commitment digest mismatch") {
      auto bundle = result.bundle;
      bundle.comm_digests[0][0] ^= 1;
      const auto v = scheme::verify(g, std::span<const MockGroup::G2>(keys.vk), comms, bundle,
                                    example_x(), result.output);
      CHECK_FALSE(v.yes);
      CHECK(v.diagnostic == "commitment digest mismatch");
    }
    SUBCASE("record index out of order") {
      auto bundle = result.bundle;
      bundle.records[0].index = 3;
      const auto v = scheme::verify(g, std::span<const MockGroup::G2>(keys.vk), comms, bundle,
                                    example_x(), result.output);
      CHECK_FALSE(v.yes);
    }
    SUBCASE("stored y digest corrupted") {
      auto bundle = result.bundle;
      bundle.records[0].y_digest[4] ^= 1;
      const auto v = scheme::verify(g, std::span<const MockGroup::G2>(keys.vk), comms, bundle,
                                    example_x(), result.output);
      CHECK_FALSE(v.yes);
      CHECK(v.diagnostic == "layer 0 output digest mismatch");
    }
  }

  TEST_CASE("verifier interface never sees weights") {
    // Compile-time property of the surface: verify takes (vk, comms, bundle,
    // X, Y). This case documents it and pins the weight-free replay: a fresh
    // verifier reconstructs everything from public data.
    const MockGroup g(P());
    const auto model = one_layer_example();
    const auto keys = test_keys(g, 4);
    const auto comm_bytes = scheme::commit_model(g, keys, model).to_bytes();
    const auto result = scheme::prove(g, keys, model, example_x());
    const auto verdict = scheme::verify(
        g, std::span<const MockGroup::G2>(keys.vk), scheme::CommitmentSet::from_bytes(comm_bytes),
        scheme::ProofBundle::from_bytes(result.bundle.to_bytes()), example_x(), result.output);
    CHECK(verdict.yes);
  }

  TEST_CASE("no weight bytes appear in published artifacts") {
    const MockGroup g(P());
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
      scheme::ModelWeights model;
      model.name = "scan";
      model.layers.push_back(bench::random_matrix(4, 4, P(), rng));
      const auto x = bench::random_matrix(4, 4, P(), rng);
      const auto keys = test_keys(g, 16);
      const auto comm_bytes = scheme::commit_model(g, keys, model).to_bytes();
      const auto result = scheme::prove(g, keys, model, x);
      const auto bundle_bytes = result.bundle.to_bytes();
      for (const auto& e : model.layers[0].entries()) {
        const auto enc = e.to_bytes();
        const auto find = [&](const std::vector<uint8_t>& hay) {
          return std::search(hay.begin(), hay.end(), enc.begin(), enc.end()) != hay.end();
        };
        CHECK_FALSE(find(comm_bytes));
        CHECK_FALSE(find(bundle_bytes));
      }
    }
  }

  TEST_CASE("bundles for distinct same-shape models are structurally identical") {
    const MockGroup g(P());
    std::mt19937_64 rng(88);
    const auto keys = test_keys(g, 16);
    const auto x = bench::random_matrix(4, 4, P(), rng);
    std::vector<size_t> sizes;
    for (int trial = 0; trial < 2; ++trial) {
      scheme::ModelWeights model;
      model.name = "shape";
      model.layers.push_back(bench::random_matrix(4, 4, P(), rng));
      const auto result = scheme::prove(g, keys, model, x);
      sizes.push_back(result.bundle.to_bytes().size());
    }
    CHECK(sizes[0] == sizes[1]);
  }

  TEST_CASE("empty model and dimension mismatches are errors") {
    const MockGroup g(P());
    const auto keys = test_keys(g, 4);
    scheme::ModelWeights empty;
    CHECK_THROWS_AS(scheme::commit_model(g, keys, empty), std::invalid_argument);
    CHECK_THROWS_AS(scheme::prove(g, keys, empty, example_x()), std::invalid_argument);

    auto model = one_layer_example();
    const auto bad_x = FieldMatrix::from_signed({{1, 2, 3}}, P());
    CHECK_THROWS_AS(scheme::prove(g, keys, model, bad_x), std::invalid_argument);

    scheme::ModelWeights too_big;
    too_big.layers.push_back(bench::random_matrix(4, 4, P(),
                                                  *[] {
                                                    static std::mt19937_64 r(1);
                                                    return &r;
                                                  }()));
    CHECK_THROWS_AS(scheme::commit_model(g, keys, too_big), std::invalid_argument);
  }

  TEST_CASE("artifacts are byte-identical across runs with the same seed") {
    const MockGroup g(P());
    std::mt19937_64 rng(101);
    scheme::ModelWeights model;
    model.name = "determinism";
    model.layers.push_back(bench::random_matrix(4, 4, P(), rng));
    const auto x = bench::random_matrix(4, 4, P(), rng);
    const auto keys1 = kzg::key_gen(g, 15, std::vector<uint8_t>{9});
    const auto keys2 = kzg::key_gen(g, 15, std::vector<uint8_t>{9});
    CHECK(scheme::commit_model(g, keys1, model).to_bytes() ==
          scheme::commit_model(g, keys2, model).to_bytes());
    const auto r1 = scheme::prove(g, keys1, model, x);
    const auto r2 = scheme::prove(g, keys2, model, x);
    CHECK(r1.bundle.to_bytes() == r2.bundle.to_bytes());
    CHECK(r1.output == r2.output);
  }

  TEST_CASE("keygen sizing: max_params keys carry that many powers") {
    const MockGroup g(P());
    const auto keys = kzg::key_gen(g, 3, std::vector<uint8_t>{1});
    CHECK(keys.pk.size() == 4);
    CHECK(keys.vk.size() == 4);
  }
}
