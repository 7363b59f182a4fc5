#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "zkfingpt/artifact_io.hpp"
#include "zkfingpt/bench.hpp"
#include "zkfingpt/bls12381.hpp"
#include "zkfingpt/ledger.hpp"
#include "zkfingpt/mock_group.hpp"
#include "zkfingpt/quantizer.hpp"

#define CPPHTTPLIB_THREAD_POOL_COUNT 4
#include <httplib.h>

namespace {

using namespace zkfingpt;
using nlohmann::json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

FieldParamsPtr field_by_name(const std::string& name) {
  if (name == "test64") return FieldParams::test64();
  if (name == "bls-scalar") return FieldParams::bls12381_scalar();
  throw CLI::ValidationError("--field", "unknown field profile '" + name + "'");
}

std::vector<size_t> parse_schedule(const std::string& csv) {
  std::vector<size_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoull(item));
  }
  if (out.empty()) throw CLI::ValidationError("schedule", "empty schedule");
  return out;
}

std::vector<std::vector<double>> json_to_real_matrix(const json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) {
    throw std::runtime_error("quantize: expected a 2D JSON array");
  }
  std::vector<std::vector<double>> out;
  for (const auto& row : j) {
    out.emplace_back();
    for (const auto& v : row) out.back().push_back(v.get<double>());
  }
  return out;
}

// ---- backend-generic command bodies ----

template <class Group>
int do_keygen(const Group& g, unsigned lambda, size_t max_params, uint64_t seed,
              const std::string& out_prefix) {
  if (max_params == 0) throw std::runtime_error("keygen: --max-params must be positive");
  if (g.scalar_params()->bit_length() < lambda && !g.scalar_params()->insecure()) {
    throw std::runtime_error("keygen: field narrower than lambda");
  }
  ByteWriter seed_bytes;
  seed_bytes.u64be(seed);
  const auto keys = kzg::key_gen(g, max_params - 1, seed_bytes.data(), false);
  const auto pk = io::encode_pk(g, keys);
  const auto vk = io::encode_vk(g, keys);
  write_file(out_prefix + ".pk", pk);
  write_file(out_prefix + ".vk", vk);
  std::cout << "wrote " << out_prefix << ".pk (" << pk.size() << " bytes), " << out_prefix
            << ".vk (" << vk.size() << " bytes)\n";
  return kExitYes;
}

template <class Group>
int do_commit(const Group& g, const std::string& pk_path, const std::string& weights_path,
              const std::string& out_path) {
  const auto pk = io::decode_pk(g, read_file(pk_path));
  const auto model = io::decode_model(read_file(weights_path));
  kzg::KzgKeys<Group> keys{pk, {}, std::nullopt};
  const auto comms = scheme::commit_model(g, keys, model);
  const auto bytes = comms.to_bytes();
  write_file(out_path, bytes);
  std::cout << "committed " << model.layers.size() << " layer(s) -> " << out_path << " ("
            << bytes.size() << " bytes)\n";
  return kExitYes;
}

template <class Group>
int do_prove(const Group& g, const std::string& pk_path, const std::string& weights_path,
             const std::string& input_path, const std::string& bundle_path,
             const std::string& output_path) {
  const auto pk = io::decode_pk(g, read_file(pk_path));
  const auto model = io::decode_model(read_file(weights_path));
  const auto [x, bits] = io::decode_quantized_matrix(read_file(input_path));
  kzg::KzgKeys<Group> keys{pk, {}, std::nullopt};
  auto result = scheme::prove(g, keys, model, x);
  const auto bundle_bytes = result.bundle.to_bytes();
  write_file(bundle_path, bundle_bytes);
  write_file(output_path, io::encode_quantized_matrix(result.output, model.quant_bits));
  std::cout << "proved " << model.layers.size() << " layer(s): bundle " << bundle_path << " ("
            << bundle_bytes.size() << " bytes), output " << output_path << "\n";
  return kExitYes;
}

template <class Group>
int do_verify(const Group& g, const std::string& vk_path,
              const scheme::CommitmentSet& comms, const std::string& bundle_path,
              const std::string& input_path, const std::string& output_path) {
  const auto vk = io::decode_vk(g, read_file(vk_path));
  const auto [x, xbits] = io::decode_quantized_matrix(read_file(input_path));
  const auto [y, ybits] = io::decode_quantized_matrix(read_file(output_path));
  const auto bundle_file = read_file(bundle_path);
  scheme::ProofBundle bundle;
  try {
    bundle = scheme::ProofBundle::from_bytes(bundle_file);
  } catch (const std::exception& e) {
    // A bundle that does not parse is a rejected proof, not a usage error.
    std::cout << "No (malformed bundle: " << e.what() << ")\n";
    return kExitNo;
  }
  const auto verdict =
      scheme::verify(g, std::span<const typename Group::G2>(vk), comms, bundle, x, y);
  std::cout << (verdict.yes ? "Yes" : "No") << " (" << verdict.diagnostic << ")\n";
  return verdict.yes ? kExitYes : kExitNo;
}

template <class F>
int with_backend(uint8_t backend_id, const FieldParamsPtr& field, F&& body) {
  switch (backend_id) {
    case MockGroup::kBackendId: {
      MockGroup g(field);
      return body(g);
    }
    case bls12381::Bls12381Group::kBackendId: {
      bls12381::Bls12381Group g;
      return body(g);
    }
    default:
      throw std::runtime_error("unknown backend id " + std::to_string(backend_id));
  }
}

uint8_t backend_by_name(const std::string& name) {
  if (name == "mock") return MockGroup::kBackendId;
  if (name == "bls12381") return bls12381::Bls12381Group::kBackendId;
  throw CLI::ValidationError("--backend", "unknown backend '" + name + "'");
}

int do_serve(const std::string& host, int port) {
  httplib::Server server;
  server.Post("/verify", [](const httplib::Request& req, httplib::Response& res) {
    json response;
    int status = 200;
    try {
      const json body = json::parse(req.body);
      const auto vk_path = body.at("vk").get<std::string>();
      const auto comm_path = body.at("comm").get<std::string>();
      const auto bundle_path = body.at("bundle").get<std::string>();
      const auto input_path = body.at("input").get<std::string>();
      const auto output_path = body.at("output").get<std::string>();

      const auto comm_file = read_file(comm_path);
      const auto bundle_file = read_file(bundle_path);
      const auto [x, xb] = io::decode_quantized_matrix(read_file(input_path));
      const auto [y, yb] = io::decode_quantized_matrix(read_file(output_path));

      try {
        const auto comms = scheme::CommitmentSet::from_bytes(comm_file);
        const auto bundle = scheme::ProofBundle::from_bytes(bundle_file);
        with_backend(comms.backend_id, comms.params, [&](auto& g) {
          const auto vk = io::decode_vk(g, read_file(vk_path));
          const auto verdict = scheme::verify(
              g, std::span<const typename std::decay_t<decltype(g)>::G2>(vk), comms, bundle, x,
              y);
          response["verdict"] = verdict.yes ? "Yes" : "No";
          response["diagnostic"] = verdict.diagnostic;
          return verdict.yes ? kExitYes : kExitNo;
        });
      } catch (const std::exception& e) {
        response["verdict"] = "No";
        response["diagnostic"] = std::string("malformed artifact: ") + e.what();
      }
    } catch (const std::exception& e) {
      status = 400;
      response["error"] = e.what();
    }
    res.status = status;
    res.set_content(response.dump(), "application/json");
  });
  server.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("ok", "text/plain");
  });

  int bound_port = port;
  if (port == 0) {
    bound_port = server.bind_to_any_port(host);
    if (bound_port < 0) throw std::runtime_error("serve: cannot bind");
  } else if (!server.bind_to_port(host, port)) {
    throw std::runtime_error("serve: cannot bind " + host + ":" + std::to_string(port));
  }
  std::cout << "verify service listening on " << host << ":" << bound_port << std::endl;
  server.listen_after_bind();
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zkfingpt: verifiable linear-layer inference (sumcheck + KZG + ledger)"};
  app.require_subcommand(1);

  std::string backend_name = "mock";
  std::string field_name = "bls-scalar";

  // keygen
  auto* keygen = app.add_subcommand("keygen", "run the trusted setup and write pk/vk files");
  unsigned lambda = 128;
  size_t max_params = 0;
  uint64_t seed = 0;
  std::string out_prefix = "zkfg";
  keygen->add_option("--lambda", lambda, "security parameter")->capture_default_str();
  keygen->add_option("--max-params", max_params, "largest flattened layer size")->required();
  keygen->add_option("--seed", seed, "setup randomness seed")->capture_default_str();
  keygen->add_option("--out", out_prefix, "output prefix for .pk/.vk")->capture_default_str();
  keygen->add_option("--backend", backend_name, "mock | bls12381")->capture_default_str();
  keygen->add_option("--field", field_name, "test64 | bls-scalar (mock backend only)")
      ->capture_default_str();

  // quantize
  auto* quantize_cmd = app.add_subcommand("quantize", "fixed-point quantize JSON reals");
  unsigned bits = 16;
  std::string in_path, out_path;
  std::string q_field = "bls-scalar";
  quantize_cmd->add_option("--bits", bits, "fractional bits")->capture_default_str();
  quantize_cmd->add_option("--in", in_path, "JSON input (2D array, or {name, layers})")
      ->required();
  quantize_cmd->add_option("--out", out_path, "output file")->required();
  quantize_cmd->add_option("--field", q_field, "test64 | bls-scalar")->capture_default_str();

  // commit
  auto* commit_cmd = app.add_subcommand("commit", "KZG-commit model weights per layer");
  std::string pk_path, weights_path, comm_out;
  commit_cmd->add_option("--pk", pk_path)->required();
  commit_cmd->add_option("--weights", weights_path)->required();
  commit_cmd->add_option("--out", comm_out)->required();

  // prove
  auto* prove_cmd = app.add_subcommand("prove", "run inference and emit the proof bundle");
  std::string prove_pk, prove_weights, prove_input, out_bundle, out_output;
  prove_cmd->add_option("--pk", prove_pk)->required();
  prove_cmd->add_option("--weights", prove_weights)->required();
  prove_cmd->add_option("--input", prove_input)->required();
  prove_cmd->add_option("--out-bundle", out_bundle)->required();
  prove_cmd->add_option("--out-output", out_output)->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check a bundle against public data");
  std::string vk_path, comm_path, bundle_path, input_path, output_path;
  verify_cmd->add_option("--vk", vk_path)->required();
  verify_cmd->add_option("--comm", comm_path)->required();
  verify_cmd->add_option("--bundle", bundle_path)->required();
  verify_cmd->add_option("--input", input_path)->required();
  verify_cmd->add_option("--output", output_path)->required();

  // publish / fetch / audit
  auto* publish_cmd = app.add_subcommand("publish", "append a file to the ledger store");
  std::string store_dir, publish_file, payload_type = "record";
  publish_cmd->add_option("--store", store_dir)->required();
  publish_cmd->add_option("--file", publish_file)->required();
  publish_cmd->add_option("--type", payload_type, "comm | proof | record")
      ->capture_default_str();

  auto* fetch_cmd = app.add_subcommand("fetch", "fetch a payload by ledger index");
  uint64_t fetch_index = 0;
  std::string fetch_store, fetch_out;
  fetch_cmd->add_option("--store", fetch_store)->required();
  fetch_cmd->add_option("--index", fetch_index)->required();
  fetch_cmd->add_option("--out", fetch_out)->required();

  auto* audit_cmd = app.add_subcommand("audit", "recompute the whole ledger chain");
  std::string audit_store;
  audit_cmd->add_option("--store", audit_store)->required();

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "measure commit/prove/verify scaling");
  std::string layers_csv = "1,2,4,8", dims_csv = "16", csv_out;
  size_t reps = 3;
  uint64_t bench_seed = 1;
  bench_cmd->add_option("--layers", layers_csv, "layer-count schedule")->capture_default_str();
  bench_cmd->add_option("--dims", dims_csv, "matrix-dimension schedule")->capture_default_str();
  bench_cmd->add_option("--reps", reps, "repetitions per point")->capture_default_str();
  bench_cmd->add_option("--csv", csv_out, "CSV output path");
  bench_cmd->add_option("--seed", bench_seed)->capture_default_str();

  // scenario
  auto* scenario_cmd = app.add_subcommand("scenario", "run a use-case flow end to end");
  std::string case_name, scenario_store = "scenario-store";
  bool tamper = false;
  uint64_t scenario_seed = 7;
  scenario_cmd->add_option("--case", case_name, "case1 | case2 | case3")->required();
  scenario_cmd->add_option("--store", scenario_store)->capture_default_str();
  scenario_cmd->add_flag("--tamper", tamper, "perturb the output before verifying");
  scenario_cmd->add_option("--seed", scenario_seed)->capture_default_str();

  // serve
  auto* serve_cmd = app.add_subcommand("serve", "run the verify service (POST /verify)");
  std::string host = "127.0.0.1";
  int port = 0;
  serve_cmd->add_option("--host", host)->capture_default_str();
  serve_cmd->add_option("--port", port, "0 picks a free port")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitYes : kExitError;  // help is success, usage errors are 2
  }

  try {
    if (app.got_subcommand(keygen)) {
      const uint8_t backend = backend_by_name(backend_name);
      auto field = field_by_name(field_name);
      if (backend == bls12381::Bls12381Group::kBackendId) {
        field = FieldParams::bls12381_scalar();
      }
      return with_backend(backend, field, [&](auto& g) {
        return do_keygen(g, lambda, max_params, seed, out_prefix);
      });
    }
    if (app.got_subcommand(quantize_cmd)) {
      std::ifstream in(in_path);
      if (!in) throw std::runtime_error("quantize: cannot open " + in_path);
      const json j = json::parse(in);
      const QuantScheme scheme_cfg{bits, field_by_name(q_field)};
      if (j.is_object() && j.contains("layers")) {
        scheme::ModelWeights model;
        model.name = j.value("name", "model");
        model.quant_bits = bits;
        for (const auto& layer : j.at("layers")) {
          model.layers.push_back(quantize_matrix(json_to_real_matrix(layer), scheme_cfg));
        }
        write_file(out_path, io::encode_model(model));
        std::cout << "quantized model '" << model.name << "' (" << model.layers.size()
                  << " layers, b=" << bits << ") -> " << out_path << "\n";
      } else {
        const auto m = quantize_matrix(json_to_real_matrix(j), scheme_cfg);
        write_file(out_path, io::encode_quantized_matrix(m, bits));
        std::cout << "quantized " << m.rows() << "x" << m.cols() << " matrix (b=" << bits
                  << ") -> " << out_path << "\n";
      }
      return kExitYes;
    }
    if (app.got_subcommand(commit_cmd)) {
      const auto file = read_file(pk_path);
      return with_backend(io::peek_backend_id(file),
                          io::decode_model(read_file(weights_path)).params(),
                          [&](auto& g) { return do_commit(g, pk_path, weights_path, comm_out); });
    }
    if (app.got_subcommand(prove_cmd)) {
      const auto file = read_file(prove_pk);
      return with_backend(
          io::peek_backend_id(file), io::decode_model(read_file(prove_weights)).params(),
          [&](auto& g) {
            return do_prove(g, prove_pk, prove_weights, prove_input, out_bundle, out_output);
          });
    }
    if (app.got_subcommand(verify_cmd)) {
      const auto comm_file = read_file(comm_path);
      scheme::CommitmentSet comms;
      try {
        comms = scheme::CommitmentSet::from_bytes(comm_file);
      } catch (const std::exception& e) {
        std::cout << "No (malformed commitment file: " << e.what() << ")\n";
        return kExitNo;
      }
      return with_backend(comms.backend_id, comms.params, [&](auto& g) {
        return do_verify(g, vk_path, comms, bundle_path, input_path, output_path);
      });
    }
    if (app.got_subcommand(publish_cmd)) {
      auto store = ledger::Store::open(store_dir);
      const auto entry = store.publish(read_file(publish_file),
                                       ledger::payload_type_from_name(payload_type));
      std::cout << "published index=" << entry.index << " payload="
                << hex_encode(entry.payload_hash) << " entry="
                << hex_encode(entry.entry_hash) << "\n";
      return kExitYes;
    }
    if (app.got_subcommand(fetch_cmd)) {
      auto store = ledger::Store::open(fetch_store);
      const auto [payload, entry] = store.fetch(fetch_index);
      write_file(fetch_out, payload);
      std::cout << "fetched index=" << entry.index << " type="
                << ledger::payload_type_name(entry.payload_type) << " -> " << fetch_out << "\n";
      return kExitYes;
    }
    if (app.got_subcommand(audit_cmd)) {
      auto store = ledger::Store::open(audit_store);
      const bool ok = store.audit();
      std::cout << (ok ? "ledger intact (" : "LEDGER CORRUPT (") << store.size()
                << " entries)\n";
      return ok ? kExitYes : kExitNo;
    }
    if (app.got_subcommand(bench_cmd)) {
      bench::BenchConfig config;
      config.layer_schedule = parse_schedule(layers_csv);
      config.dim_schedule = parse_schedule(dims_csv);
      config.repetitions = reps;
      config.seed = bench_seed;
      const auto records = bench::run_bench(config);
      const auto csv = bench::to_csv(records);
      std::cout << csv;
      if (!csv_out.empty()) {
        write_file(csv_out, std::span<const uint8_t>(
                                reinterpret_cast<const uint8_t*>(csv.data()), csv.size()));
      }
      return kExitYes;
    }
    if (app.got_subcommand(scenario_cmd)) {
      const auto report = bench::run_scenario(case_name, scenario_store, tamper, scenario_seed);
      for (const auto& line : report.published) std::cout << "published " << line << "\n";
      std::cout << "case " << report.case_name << ": " << (report.yes ? "Yes" : "No") << " ("
                << report.detail << ")\n";
      return report.exit_code;
    }
    if (app.got_subcommand(serve_cmd)) {
      return do_serve(host, port);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
