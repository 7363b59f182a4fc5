#include <doctest.h>

#include <random>

#include "zkfingpt/bench.hpp"
#include "zkfingpt/sumcheck.hpp"

using namespace zkfingpt;
using namespace zkfingpt::sumcheck;

namespace {

FieldParamsPtr P() { return FieldParams::test64(); }

FieldElement fe(int64_t v) { return FieldElement::from_signed(v, P()); }

/// n/d as a field element; the worked example's halves (17.5 = 35/2).
FieldElement fr(int64_t n, int64_t d) { return fe(n) * fe(d).inv(); }

FieldMatrix example_w() { return FieldMatrix::from_signed({{1, 2}, {3, 4}}, P()); }
FieldMatrix example_x() { return FieldMatrix::from_signed({{5, 6}, {7, 8}}, P()); }
FieldMatrix example_y() { return FieldMatrix::from_signed({{19, 22}, {43, 50}}, P()); }

MatmulStatement example_statement(Mode mode) {
  return MatmulStatement::make(mode, example_w(), example_x(), example_y());
}

std::vector<FieldElement> forced_234() { return {fe(2), fe(3), fe(4)}; }

}  // namespace

TEST_SUITE("sumcheck") {
  TEST_CASE("worked-example transcript with forced challenges (2,3,4)") {
    auto st = example_statement(Mode::ExampleTotalSum);
    Transcript t("test");
    const auto forced = forced_234();
    const auto out = prove(st, t, &forced);
    const auto& proof = out.proof;

    REQUIRE(proof.claimed_sum.has_value());
    CHECK(*proof.claimed_sum == fe(0));
    REQUIRE(proof.rounds.size() == 3);

    // g1(x1) = 0
    CHECK(proof.rounds[0].coeffs == std::vector<FieldElement>{fe(0)});
    // g2(x2) = 17.5 - 35 x2
    CHECK(proof.rounds[1].coeffs == std::vector<FieldElement>{fr(35, 2), fe(-35)});
    // g3(x3) = -42.5 - 2.5 x3
    CHECK(proof.rounds[2].coeffs == std::vector<FieldElement>{fr(-85, 2), fr(-5, 2)});

    // g2(r2) = -87.5 feeds round 3: g3(0) + g3(1) = -87.5
    CHECK(proof.rounds[1].evaluate(fe(3)) == fr(-175, 2));
    CHECK(proof.rounds[2].sum_over_binary() == fr(-175, 2));
    // g3(r3) = g(2,3,4) = -52.5
    CHECK(proof.rounds[2].evaluate(fe(4)) == fr(-105, 2));
    CHECK(proof.final_eval == fr(-105, 2));

    CHECK(out.challenges.r_i == std::vector<FieldElement>{fe(2)});
    CHECK(out.challenges.r_k == std::vector<FieldElement>{fe(3)});
    CHECK(out.challenges.r_j == std::vector<FieldElement>{fe(4)});

    Transcript tv("test");
    const auto vout = verify(st, proof, tv, &forced);
    CHECK(vout.ok);
  }

  TEST_CASE("statement evaluation at (2,3,4) equals -52.5") {
    auto st = example_statement(Mode::ExampleTotalSum);
    const std::vector<FieldElement> ri{fe(2)}, rk{fe(3)}, rj{fe(4)};
    CHECK(evaluate_statement(st, ri, rk, rj) == fr(-105, 2));
    ChallengeLog log{ri, rk, rj};
    CHECK(final_check(st, log, fr(-105, 2)));
    CHECK_FALSE(final_check(st, log, fr(-105, 2) + fe(1)));
  }

  TEST_CASE("example g-table sums to zero over the cube") {
    auto st = example_statement(Mode::ExampleTotalSum);
    const auto table = st.total_sum_table();
    FieldElement sum = fe(0);
    for (const auto& v : table) sum = sum + v;
    CHECK(sum == fe(0));
    // g(0,0,0) = 1/2*19 - 1*5 = 4.5
    CHECK(table[0] == fr(9, 2));
  }

  TEST_CASE("verifier_round golden cases") {
    // g1 = 0 against C = 0
    CHECK(verifier_round(fe(0), RoundPolynomial{{fe(0)}}, 1));
    // honest g2 against g1(r1) = 0: 17.5 + (17.5 - 35) = 0
    CHECK(verifier_round(fe(0), RoundPolynomial{{fr(35, 2), fe(-35)}}, 1));
    // tampered g2' = 17.5 - 34 x2: sums to 1, rejected
    CHECK_FALSE(verifier_round(fe(0), RoundPolynomial{{fr(35, 2), fe(-34)}}, 1));
    // degree bound enforced
    CHECK_FALSE(verifier_round(fe(0), RoundPolynomial{{fe(0), fe(0), fe(1)}}, 1));
  }

  TEST_CASE("tampered round polynomial rejects inside verify") {
    auto st = example_statement(Mode::ExampleTotalSum);
    Transcript t("test");
    const auto forced = forced_234();
    auto out = prove(st, t, &forced);
    out.proof.rounds[1].coeffs[1] = fe(-34);
    Transcript tv("test");
    const auto vout = verify(st, out.proof, tv, &forced);
    CHECK_FALSE(vout.ok);
    CHECK(vout.reason == "round sum check failed at round 2");
  }

  TEST_CASE("sound mode accepts the honest example") {
    auto st = example_statement(Mode::SoundRandomPoint);
    CHECK(st.num_rounds() == 1);
    Transcript t("test");
    const auto out = prove(st, t);
    REQUIRE(out.proof.rounds.size() == 1);
    CHECK(out.proof.rounds[0].degree() <= 2);
    Transcript tv("test");
    CHECK(verify(st, out.proof, tv).ok);
  }

  TEST_CASE("public verification recovers the implied weight evaluation") {
    auto st = example_statement(Mode::SoundRandomPoint);
    Transcript t("test");
    const auto out = prove(st, t);
    auto pub = PublicMatmulStatement::make(Mode::SoundRandomPoint, example_x(), example_y());
    Transcript tv("test");
    const auto vout = verify_public(pub, out.proof, tv);
    REQUIRE(vout.ok);
    REQUIRE(vout.implied_w_eval.has_value());
    std::vector<FieldElement> point = vout.challenges.r_i;
    point.insert(point.end(), vout.challenges.r_k.begin(), vout.challenges.r_k.end());
    CHECK(*vout.implied_w_eval == st.w.evaluate(point));
  }

  TEST_CASE("mode agreement on the fixture") {
    for (Mode mode : {Mode::ExampleTotalSum, Mode::SoundRandomPoint}) {
      auto st = example_statement(mode);
      Transcript t("agreement");
      const auto out = prove(st, t);
      Transcript tv("agreement");
      CHECK(verify(st, out.proof, tv).ok);
    }
  }

  TEST_CASE("completeness across random dims and both modes") {
    std::mt19937_64 rng(404);
    const std::vector<size_t> dims{1, 2, 4, 8};
    for (int trial = 0; trial < 200; ++trial) {
      const size_t d1 = dims[rng() % dims.size()];
      const size_t d2 = dims[rng() % dims.size()];
      const size_t d3 = dims[rng() % dims.size()];
      const auto w = bench::random_matrix(d1, d2, P(), rng);
      const auto x = bench::random_matrix(d2, d3, P(), rng);
      const auto y = matmul(w, x);
      for (Mode mode : {Mode::ExampleTotalSum, Mode::SoundRandomPoint}) {
        auto st = MatmulStatement::make(mode, w, x, y);
        Transcript t("complete");
        t.absorb("trial", std::vector<uint8_t>{static_cast<uint8_t>(trial)});
        const auto out = prove(st, t);
        Transcript tv("complete");
        tv.absorb("trial", std::vector<uint8_t>{static_cast<uint8_t>(trial)});
        const auto vout = verify(st, out.proof, tv);
        CHECK_MESSAGE(vout.ok, "mode=", static_cast<int>(mode), " dims=", d1, "x", d2, "x", d3,
                      " reason=", vout.reason);
      }
    }
  }

  TEST_CASE("degenerate 1x1x1 statement has zero rounds") {
    const auto w = FieldMatrix::from_signed({{3}}, P());
    const auto x = FieldMatrix::from_signed({{5}}, P());
    const auto y = FieldMatrix::from_signed({{15}}, P());
    auto st = MatmulStatement::make(Mode::SoundRandomPoint, w, x, y);
    CHECK(st.num_rounds() == 0);
    Transcript t("deg");
    const auto out = prove(st, t);
    CHECK(out.proof.rounds.empty());
    Transcript tv("deg");
    CHECK(verify(st, out.proof, tv).ok);

    const auto bad_y = FieldMatrix::from_signed({{16}}, P());
    auto bad = MatmulStatement::make(Mode::SoundRandomPoint, w, x, bad_y);
    Transcript tb("deg");
    CHECK_FALSE(verify(bad, out.proof, tb).ok);
  }

  TEST_CASE("round-reduction identity holds for honest provers") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 10; ++trial) {
      const auto w = bench::random_matrix(4, 8, P(), rng);
      const auto x = bench::random_matrix(8, 2, P(), rng);
      auto st = MatmulStatement::make(Mode::SoundRandomPoint, w, x, matmul(w, x));
      Transcript t("rri");
      const auto out = prove(st, t);
      FieldElement prev = *out.proof.claimed_sum;
      for (size_t i = 0; i < out.proof.rounds.size(); ++i) {
        CHECK(out.proof.rounds[i].sum_over_binary() == prev);
        prev = out.proof.rounds[i].evaluate(out.challenges.r_k[i]);
      }
      CHECK(prev == out.proof.final_eval);
    }
  }

  TEST_CASE("tampered output rejects in sound mode") {
    std::mt19937_64 rng(31337);
    int rejects = 0;
    const int trials = 200;
    for (int trial = 0; trial < trials; ++trial) {
      const auto w = bench::random_matrix(2, 2, P(), rng);
      const auto x = bench::random_matrix(2, 2, P(), rng);
      auto y = matmul(w, x);
      auto st = MatmulStatement::make(Mode::SoundRandomPoint, w, x, y);
      Transcript t("soundness");
      t.absorb_byte("trial", static_cast<uint8_t>(trial));
      const auto out = prove(st, t);

      auto tampered = y;
      const size_t pos = rng() % 4;
      tampered.set(pos / 2, pos % 2,
                   y.at(pos / 2, pos % 2) + FieldElement::from_unsigned(1 + rng() % 100, P()));
      auto bad = MatmulStatement::make(Mode::SoundRandomPoint, w, x, tampered);
      Transcript tv("soundness");
      tv.absorb_byte("trial", static_cast<uint8_t>(trial));
      if (!verify(bad, out.proof, tv).ok) ++rejects;
    }
    CHECK(rejects == trials);
  }

  TEST_CASE("proof wire format round-trips") {
    auto st = example_statement(Mode::SoundRandomPoint);
    Transcript t("wire");
    const auto out = prove(st, t);
    ByteWriter w;
    encode_proof(w, out.proof);
    ByteReader r(w.data());
    const auto decoded = decode_proof(r, P());
    CHECK(r.at_end());
    CHECK_FALSE(decoded.claimed_sum.has_value());
    REQUIRE(decoded.rounds.size() == out.proof.rounds.size());
    for (size_t i = 0; i < decoded.rounds.size(); ++i) {
      CHECK(decoded.rounds[i].coeffs == out.proof.rounds[i].coeffs);
    }
    CHECK(decoded.final_eval == out.proof.final_eval);

    Transcript tv("wire");
    CHECK(verify(st, decoded, tv).ok);
  }

  TEST_CASE("tampered statement disagrees at random points per Schwartz-Zippel") {
    // Small field so the bound is visible: over p = 97, two distinct
    // multilinear 3-variable polynomials agree at a random point with
    // probability <= 3/97.
    auto p97 = FieldParams::make(mpz_class(97), 7, true);
    auto fp = [&](int64_t v) { return FieldElement(mpz_class(static_cast<long>(v)), p97); };
    auto mat = [&](std::vector<std::vector<int64_t>> vals) {
      std::vector<FieldElement> entries;
      for (const auto& row : vals)
        for (int64_t v : row) entries.push_back(fp(v));
      return FieldMatrix(vals.size(), vals.front().size(), std::move(entries));
    };
    const auto w = mat({{1, 2}, {3, 4}});
    const auto x = mat({{5, 6}, {7, 8}});
    const auto y = mat({{19, 22}, {43, 50}});
    auto tampered_y = y;
    tampered_y.set(0, 0, fp(20));
    auto honest = MatmulStatement::make(Mode::ExampleTotalSum, w, x, y);
    auto forged = MatmulStatement::make(Mode::ExampleTotalSum, w, x, tampered_y);

    std::mt19937_64 rng(1000);
    int disagreements = 0;
    const int trials = 1000;
    for (int t = 0; t < trials; ++t) {
      const std::vector<FieldElement> ri{fp(static_cast<int64_t>(rng() % 97))};
      const std::vector<FieldElement> rk{fp(static_cast<int64_t>(rng() % 97))};
      const std::vector<FieldElement> rj{fp(static_cast<int64_t>(rng() % 97))};
      if (evaluate_statement(honest, ri, rk, rj) != evaluate_statement(forged, ri, rk, rj)) {
        ++disagreements;
      }
    }
    // expected disagreement rate >= 1 - 3/97 ~ 96.9%; demand 90% with slack
    CHECK(disagreements >= 900);
  }

  TEST_CASE("step-wise prover enforces round order") {
    auto st = example_statement(Mode::ExampleTotalSum);
    RoundProver rp(st);
    CHECK(rp.rounds_total() == 3);
    CHECK_THROWS_AS(rp.prover_round(1), std::invalid_argument);  // must start at 0
    CHECK_THROWS_AS(rp.final_value(), std::invalid_argument);    // nothing bound yet
    const auto g1 = rp.prover_round(0);
    CHECK(g1.coeffs == std::vector<FieldElement>{fe(0)});
    CHECK_THROWS_AS(rp.prover_round(1), std::invalid_argument);  // challenge not bound
    rp.bind_challenge(fe(2));
    CHECK_THROWS_AS(rp.bind_challenge(fe(2)), std::invalid_argument);
    CHECK_THROWS_AS(rp.prover_round(0), std::invalid_argument);  // already done
    const auto g2 = rp.prover_round(1);
    CHECK(g2.coeffs == std::vector<FieldElement>{fr(35, 2), fe(-35)});
    rp.bind_challenge(fe(3));
    const auto g3 = rp.prover_round(2);
    CHECK(g3.coeffs == std::vector<FieldElement>{fr(-85, 2), fr(-5, 2)});
    rp.bind_challenge(fe(4));
    CHECK(rp.final_value() == fr(-105, 2));
    CHECK_THROWS_AS(rp.prover_round(3), std::invalid_argument);  // no round m+1
  }

  TEST_CASE("honest initial claim in sound mode equals Y~(r_i, r_j)") {
    std::mt19937_64 rng(12);
    const auto w = bench::random_matrix(4, 4, P(), rng);
    const auto x = bench::random_matrix(4, 2, P(), rng);
    auto st = MatmulStatement::make(Mode::SoundRandomPoint, w, x, matmul(w, x));
    std::vector<FieldElement> ri{FieldElement::from_unsigned(rng(), P()),
                                 FieldElement::from_unsigned(rng(), P())};
    std::vector<FieldElement> rj{FieldElement::from_unsigned(rng(), P())};
    RoundProver rp(st, ri, rj);
    std::vector<FieldElement> point = ri;
    point.push_back(rj[0]);
    CHECK(rp.initial_claim() == st.y.evaluate(point));
  }

  TEST_CASE("proof length mismatch rejects") {
    auto st = example_statement(Mode::SoundRandomPoint);
    Transcript t("len");
    auto out = prove(st, t);
    out.proof.rounds.push_back(out.proof.rounds.front());
    Transcript tv("len");
    const auto vout = verify(st, out.proof, tv);
    CHECK_FALSE(vout.ok);
    CHECK(vout.reason == "round count mismatch");
  }
}
