#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "zkfingpt/bench.hpp"

using namespace zkfingpt;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("zkfg-bench-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("bench") {
  TEST_CASE("csv header matches the record fields") {
    bench::BenchRecord rec;
    rec.label = "x";
    const auto csv = bench::to_csv({rec});
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "label,layers,params,commit_s,prove_s,verify_s,commit_bytes,proof_bytes");
  }

  TEST_CASE("tiny bench run produces one record per schedule point") {
    bench::BenchConfig config;
    config.layer_schedule = {1, 2};
    config.dim_schedule = {2};
    config.repetitions = 1;
    const auto records = bench::run_bench(config);
    REQUIRE(records.size() == 2);
    CHECK(records[0].layers == 1);
    CHECK(records[1].layers == 2);
    CHECK(records[0].params == 4);
    CHECK(records[1].params == 8);
    for (const auto& r : records) {
      CHECK(r.commit_s >= 0);
      CHECK(r.proof_bytes > 0);
      CHECK(r.commit_bytes > 0);
    }
    CHECK(records[1].proof_bytes > records[0].proof_bytes);
  }

  TEST_CASE("linear fit helper") {
    CHECK(bench::linear_fit_r2({1, 2, 3, 4}, {2, 4, 6, 8}) == doctest::Approx(1.0));
    const double noisy = bench::linear_fit_r2({1, 2, 3, 4}, {2.1, 3.9, 6.2, 7.9});
    CHECK(noisy > 0.99);
    const double flat = bench::linear_fit_r2({1, 2, 3, 4}, {5, 5, 5, 5});
    CHECK(flat == doctest::Approx(1.0));  // perfectly explained by slope 0
    CHECK_THROWS_AS(bench::linear_fit_r2({1}, {1}), std::invalid_argument);
  }

  TEST_CASE("scenario case1 honest run says Yes and publishes the flow") {
    TempDir tmp;
    const auto report = bench::run_scenario("case1", tmp.path / "store", false, 7);
    CHECK(report.yes);
    CHECK(report.exit_code == 0);
    // comm, proof, output record, input record
    CHECK(report.published.size() == 4);
    CHECK(report.published[0].starts_with("comm"));
    CHECK(report.published[1].starts_with("proof"));
  }

  TEST_CASE("scenario case1 tampered output says No with exit 1") {
    TempDir tmp;
    const auto report = bench::run_scenario("case1", tmp.path / "store", true, 7);
    CHECK_FALSE(report.yes);
    CHECK(report.exit_code == 1);
  }

  TEST_CASE("scenario case2 keeps the input off the ledger") {
    TempDir tmp;
    const auto report = bench::run_scenario("case2", tmp.path / "store", false, 7);
    CHECK(report.yes);
    CHECK(report.published.size() == 3);  // comm, proof, output record only
  }

  TEST_CASE("scenario case3 verifies and the weight scan is clean") {
    TempDir tmp;
    const auto report = bench::run_scenario("case3", tmp.path / "store", false, 7);
    CHECK(report.yes);
    CHECK(report.detail.find("weight scan clean") != std::string::npos);
  }

  TEST_CASE("unknown case is an error") {
    TempDir tmp;
    CHECK_THROWS_AS(bench::run_scenario("case9", tmp.path / "store", false, 7),
                    std::invalid_argument);
  }
}
