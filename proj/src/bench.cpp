#include "zkfingpt/bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "zkfingpt/artifact_io.hpp"
#include "zkfingpt/kzg.hpp"
#include "zkfingpt/ledger.hpp"
#include "zkfingpt/mock_group.hpp"
#include "zkfingpt/quantizer.hpp"

namespace zkfingpt::bench {

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

FieldMatrix random_matrix(size_t rows, size_t cols, const FieldParamsPtr& params,
                          std::mt19937_64& rng) {
  std::vector<FieldElement> entries;
  entries.reserve(rows * cols);
  for (size_t i = 0; i < rows * cols; ++i) {
    // Two 64-bit words cover every supported modulus width with negligible bias.
    mpz_class v = rng();
    v <<= 64;
    v += mpz_class(rng());
    for (size_t extra = 128; extra < params->bit_length() + 64; extra += 64) {
      v <<= 64;
      v += mpz_class(rng());
    }
    entries.emplace_back(std::move(v), params);
  }
  return {rows, cols, std::move(entries)};
}

scheme::ModelWeights random_model(const std::vector<size_t>& layer_dims_chain,
                                  const FieldParamsPtr& params, std::mt19937_64& rng) {
  // layer_dims_chain = (d_0, d_1, ..., d_L): layer l maps d_l rows -> d_{l+1} rows.
  if (layer_dims_chain.size() < 2) throw std::invalid_argument("bench: need at least one layer");
  scheme::ModelWeights model;
  model.name = "random";
  for (size_t l = 0; l + 1 < layer_dims_chain.size(); ++l) {
    model.layers.push_back(
        random_matrix(layer_dims_chain[l + 1], layer_dims_chain[l], params, rng));
  }
  return model;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  if (config.layer_schedule.empty() || config.dim_schedule.empty()) {
    throw std::invalid_argument("bench: empty schedule");
  }
  const auto params = FieldParams::test64();
  const MockGroup group(params);
  std::vector<BenchRecord> records;

  for (size_t dim : config.dim_schedule) {
    for (size_t layers : config.layer_schedule) {
      std::mt19937_64 rng(config.seed ^ (layers * 0x9e3779b97f4a7c15ULL) ^ dim);
      std::vector<size_t> chain(layers + 1, dim);
      const auto model = random_model(chain, params, rng);
      const auto x = random_matrix(dim, dim, params, rng);
      const auto keys =
          kzg::key_gen(group, dim * dim - 1, std::span<const uint8_t>(), false);

      // The verifier is a separate party: its operation starts from the
      // published bytes, so decoding vk/comm/bundle is timed as part of it.
      const auto vk_bytes = io::encode_vk(group, keys);
      const auto x_bytes = io::encode_quantized_matrix(x, 0);
      auto timed_verify = [&](const std::vector<uint8_t>& comm_bytes,
                              const std::vector<uint8_t>& bundle_bytes,
                              const std::vector<uint8_t>& y_bytes) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto vk = io::decode_vk(group, vk_bytes);
        const auto comms = scheme::CommitmentSet::from_bytes(comm_bytes);
        const auto bundle = scheme::ProofBundle::from_bytes(bundle_bytes);
        const auto [xq, xb] = io::decode_quantized_matrix(x_bytes);
        const auto [yq, yb] = io::decode_quantized_matrix(y_bytes);
        const auto verdict = scheme::verify(group, std::span<const MockGroup::G2>(vk), comms,
                                            bundle, xq, yq);
        const double secs = seconds_since(t0);
        if (!verdict.yes) throw std::logic_error("bench: honest case failed to verify");
        return secs;
      };

      // one untimed warmup settles allocator and cache state
      {
        const auto comms = scheme::commit_model(group, keys, model);
        auto result = scheme::prove(group, keys, model, x);
        timed_verify(comms.to_bytes(), result.bundle.to_bytes(),
                     io::encode_quantized_matrix(result.output, 0));
      }

      std::vector<double> commit_times, prove_times, verify_times;
      size_t commit_bytes = 0, proof_bytes = 0;
      for (size_t rep = 0; rep < config.repetitions; ++rep) {
        auto t0 = std::chrono::steady_clock::now();
        const auto comms = scheme::commit_model(group, keys, model);
        commit_times.push_back(seconds_since(t0));

        t0 = std::chrono::steady_clock::now();
        auto result = scheme::prove(group, keys, model, x);
        prove_times.push_back(seconds_since(t0));

        const auto comm_bytes_vec = comms.to_bytes();
        const auto bundle_bytes_vec = result.bundle.to_bytes();
        verify_times.push_back(timed_verify(
            comm_bytes_vec, bundle_bytes_vec, io::encode_quantized_matrix(result.output, 0)));

        commit_bytes = comm_bytes_vec.size();
        proof_bytes = bundle_bytes_vec.size();
      }

      BenchRecord rec;
      rec.label = "mock-l" + std::to_string(layers) + "-d" + std::to_string(dim);
      rec.layers = layers;
      rec.params = layers * dim * dim;
      rec.commit_s = median(commit_times);
      rec.prove_s = median(prove_times);
      rec.verify_s = median(verify_times);
      rec.commit_bytes = commit_bytes;
      rec.proof_bytes = proof_bytes;
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::string to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "label,layers,params,commit_s,prove_s,verify_s,commit_bytes,proof_bytes\n";
  for (const auto& r : records) {
    out << r.label << ',' << r.layers << ',' << r.params << ',' << r.commit_s << ','
        << r.prove_s << ',' << r.verify_s << ',' << r.commit_bytes << ',' << r.proof_bytes
        << '\n';
  }
  return out.str();
}

double linear_fit_r2(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument("fit: need at least two points");
  }
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0) return 0.0;
  const double slope = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  const double mean_y = sy / n;
  for (size_t i = 0; i < xs.size(); ++i) {
    const double fit = slope * xs[i] + intercept;
    ss_res += (ys[i] - fit) * (ys[i] - fit);
    ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
  }
  if (ss_tot == 0) return 1.0;
  return 1.0 - ss_res / ss_tot;
}

namespace {

struct ScenarioFixture {
  scheme::ModelWeights model;
  FieldMatrix input;
  bool publish_input = true;  // case2 keeps the exam set off the ledger
  bool scan_for_weights = false;
};

ScenarioFixture make_fixture(const std::string& case_name, const FieldParamsPtr& params,
                             uint64_t seed) {
  const QuantScheme q{4, params};
  if (case_name == "case1") {
    // Inference-log verification: the worked 2x2 model and prompt.
    scheme::ModelWeights model;
    model.name = "case1-model";
    model.quant_bits = q.bits;
    model.layers.push_back(quantize_matrix({{1, 2}, {3, 4}}, q));
    FieldMatrix x = quantize_matrix({{5, 6}, {7, 8}}, q);
    return {std::move(model), std::move(x), true, false};
  }
  if (case_name == "case2") {
    // Exam-set results: input stays off the ledger.
    std::mt19937_64 rng(seed ^ 0x2222);
    std::vector<std::vector<double>> w(4, std::vector<double>(4));
    std::vector<std::vector<double>> x(4, std::vector<double>(8));
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (auto& row : w)
      for (auto& vv : row) vv = dist(rng);
    for (auto& row : x)
      for (auto& vv : row) vv = dist(rng);
    scheme::ModelWeights model;
    model.name = "case2-fingpt";
    model.quant_bits = q.bits;
    model.layers.push_back(quantize_matrix(w, q));
    return {std::move(model), quantize_matrix(x, q), false, false};
  }
  if (case_name == "case3") {
    // Trading-strategy chain: two layers, published files must not leak them.
    std::mt19937_64 rng(seed ^ 0x3333);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    auto fill = [&](size_t r, size_t c) {
      std::vector<std::vector<double>> m(r, std::vector<double>(c));
      for (auto& row : m)
        for (auto& vv : row) vv = dist(rng);
      return m;
    };
    const QuantScheme q16{16, params};
    scheme::ModelWeights model;
    model.name = "case3-strategy";
    model.quant_bits = q16.bits;
    model.layers.push_back(quantize_matrix(fill(4, 8), q16));
    model.layers.push_back(quantize_matrix(fill(2, 4), q16));
    return {std::move(model), quantize_matrix(fill(8, 4), q16), true, true};
  }
  throw std::invalid_argument("scenario: unknown case '" + case_name + "'");
}

bool contains_subsequence(std::span<const uint8_t> haystack, std::span<const uint8_t> needle) {
  if (needle.empty() || haystack.size() < needle.size()) return false;
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
         haystack.end();
}

}  // namespace

ScenarioReport run_scenario(const std::string& case_name,
                            const std::filesystem::path& store_dir, bool tamper_output,
                            uint64_t seed) {
  ScenarioReport report;
  report.case_name = case_name;

  const auto params = FieldParams::test64();
  const MockGroup group(params);
  auto fixture = make_fixture(case_name, params, seed);

  auto store = ledger::Store::open(store_dir);
  auto publish = [&](std::span<const uint8_t> payload, ledger::PayloadType type) {
    const auto entry = store.publish(payload, type);
    report.published.push_back(std::string(ledger::payload_type_name(type)) +
                               " index=" + std::to_string(entry.index) +
                               " payload=" + hex_encode(entry.payload_hash));
    return entry;
  };

  ByteWriter seed_bytes;
  seed_bytes.u64be(seed);
  const auto keys = kzg::key_gen(group, fixture.model.total_params() - 1,
                                 seed_bytes.data(), false);

  // Monitor side: commit and prove, publishing each artifact.
  const auto comms = scheme::commit_model(group, keys, fixture.model);
  const auto comm_bytes = comms.to_bytes();
  const auto comm_entry = publish(comm_bytes, ledger::PayloadType::Comm);

  auto result = scheme::prove(group, keys, fixture.model, fixture.input);
  const auto bundle_bytes = result.bundle.to_bytes();
  const auto proof_entry = publish(bundle_bytes, ledger::PayloadType::Proof);

  const auto y_record = io::encode_quantized_matrix(result.output, fixture.model.quant_bits);
  publish(y_record, ledger::PayloadType::Record);
  if (fixture.publish_input) {
    publish(io::encode_quantized_matrix(fixture.input, fixture.model.quant_bits),
            ledger::PayloadType::Record);
  }

  // Verify side: fetch from the ledger, replay, decide.
  const auto fetched_comms = scheme::CommitmentSet::from_bytes(store.fetch(comm_entry.index).first);
  const auto fetched_bundle = scheme::ProofBundle::from_bytes(store.fetch(proof_entry.index).first);

  FieldMatrix claimed = result.output;
  if (tamper_output) {
    claimed.set(0, 0, claimed.at(0, 0) + FieldElement::one(params));
  }
  const auto verdict = scheme::verify(group, std::span<const MockGroup::G2>(keys.vk),
                                      fetched_comms, fetched_bundle, fixture.input, claimed);
  report.yes = verdict.yes;
  report.exit_code = verdict.yes ? 0 : 1;
  report.detail = verdict.diagnostic;

  if (fixture.scan_for_weights && verdict.yes) {
    for (const auto& layer : fixture.model.layers) {
      for (const auto& w : layer.entries()) {
        const auto enc = w.to_bytes();
        if (contains_subsequence(comm_bytes, enc) || contains_subsequence(bundle_bytes, enc)) {
          report.yes = false;
          report.exit_code = 1;
          report.detail = "weight bytes leaked into a published artifact";
          return report;
        }
      }
    }
    report.detail += "; weight scan clean";
  }
  return report;
}

}  // namespace zkfingpt::bench
