#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zkfingpt/artifact_io.hpp"
#include "zkfingpt/bench.hpp"
#include "zkfingpt/mock_group.hpp"
#include "zkfingpt/quantizer.hpp"
#include "zkfingpt/transcript.hpp"

namespace py = pybind11;
using namespace zkfingpt;

namespace {

FieldParamsPtr field_by_name(const std::string& name) {
  if (name == "test64") return FieldParams::test64();
  if (name == "bls-scalar") return FieldParams::bls12381_scalar();
  throw std::invalid_argument("unknown field profile '" + name + "'");
}

py::int_ to_py_int(const FieldElement& e) {
  return py::module_::import("builtins").attr("int")(py::str(e.value().get_str()));
}

FieldElement from_py_int(const py::int_& v, const FieldParamsPtr& params) {
  const std::string dec = py::str(v);
  return {mpz_class(dec), params};
}

py::list matrix_to_py(const FieldMatrix& m) {
  py::list rows;
  for (size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (size_t j = 0; j < m.cols(); ++j) row.append(to_py_int(m.at(i, j)));
    rows.append(row);
  }
  return rows;
}

FieldMatrix matrix_from_py(const py::sequence& rows, const FieldParamsPtr& params) {
  std::vector<FieldElement> entries;
  const size_t r = py::len(rows);
  if (r == 0) throw std::invalid_argument("empty matrix");
  const size_t c = py::len(rows[0]);
  for (const auto& row : rows) {
    if (py::len(row) != c) throw std::invalid_argument("ragged matrix");
    for (const auto& v : py::cast<py::sequence>(row)) {
      entries.push_back(from_py_int(py::cast<py::int_>(v), params));
    }
  }
  return {r, c, std::move(entries)};
}

std::vector<uint8_t> bytes_from_py(const py::bytes& b) {
  const std::string s = b;
  return {s.begin(), s.end()};
}

py::bytes bytes_to_py(const std::vector<uint8_t>& v) {
  return py::bytes(reinterpret_cast<const char*>(v.data()), v.size());
}

/// Mock-backend session: keygen/quantize/commit/prove/verify over
/// python-native types. Artifacts cross the boundary in the same byte
/// formats the CLI reads and writes.
class Session {
 public:
  Session(const std::string& field, unsigned bits)
      : params_(field_by_name(field)), group_(params_), bits_(bits) {}

  void keygen(size_t max_params, uint64_t seed) {
    ByteWriter w;
    w.u64be(seed);
    keys_ = kzg::key_gen(group_, max_params - 1, w.data());
  }

  py::bytes vk_bytes() const { return bytes_to_py(io::encode_vk(group_, require_keys())); }
  py::bytes pk_bytes() const { return bytes_to_py(io::encode_pk(group_, require_keys())); }

  py::list quantize(const std::vector<std::vector<double>>& values) const {
    return matrix_to_py(quantize_matrix(values, QuantScheme{bits_, params_}));
  }

  double dequantize_value(const py::int_& v, unsigned scale_exponent) const {
    return zkfingpt::dequantize(from_py_int(v, params_), QuantScheme{bits_, params_},
                                scale_exponent);
  }

  py::bytes commit(const std::vector<std::vector<std::vector<double>>>& weights) const {
    return bytes_to_py(scheme::commit_model(group_, require_keys(), model_of(weights)).to_bytes());
  }

  py::tuple prove(const std::vector<std::vector<std::vector<double>>>& weights,
                  const std::vector<std::vector<double>>& x) const {
    const auto model = model_of(weights);
    const auto xq = quantize_matrix(x, QuantScheme{bits_, params_});
    auto result = scheme::prove(group_, require_keys(), model, xq);
    return py::make_tuple(matrix_to_py(result.output), bytes_to_py(result.bundle.to_bytes()));
  }

  py::tuple verify(const py::bytes& comm, const py::bytes& bundle,
                   const std::vector<std::vector<double>>& x, const py::sequence& y) const {
    const auto comms = scheme::CommitmentSet::from_bytes(bytes_from_py(comm));
    const auto decoded = scheme::ProofBundle::from_bytes(bytes_from_py(bundle));
    const auto xq = quantize_matrix(x, QuantScheme{bits_, params_});
    const auto yq = matrix_from_py(y, params_);
    const auto verdict = scheme::verify(group_, std::span<const MockGroup::G2>(require_keys().vk),
                                        comms, decoded, xq, yq);
    return py::make_tuple(verdict.yes, verdict.diagnostic);
  }

  py::bytes export_input(const std::vector<std::vector<double>>& x) const {
    return bytes_to_py(
        io::encode_quantized_matrix(quantize_matrix(x, QuantScheme{bits_, params_}), bits_));
  }

  py::bytes export_output(const py::sequence& y) const {
    return bytes_to_py(io::encode_quantized_matrix(matrix_from_py(y, params_), bits_));
  }

  py::bytes export_model(const std::vector<std::vector<std::vector<double>>>& weights) const {
    return bytes_to_py(io::encode_model(model_of(weights)));
  }

 private:
  const kzg::KzgKeys<MockGroup>& require_keys() const {
    if (!keys_.has_value()) throw std::runtime_error("call keygen() first");
    return *keys_;
  }

  scheme::ModelWeights model_of(const std::vector<std::vector<std::vector<double>>>& weights) const {
    scheme::ModelWeights model;
    model.name = "python";
    model.quant_bits = bits_;
    for (const auto& layer : weights) {
      model.layers.push_back(quantize_matrix(layer, QuantScheme{bits_, params_}));
    }
    return model;
  }

  FieldParamsPtr params_;
  MockGroup group_;
  unsigned bits_;
  std::optional<kzg::KzgKeys<MockGroup>> keys_;
};

py::int_ transcript_challenge(const std::string& domain,
                              const std::vector<std::pair<std::string, py::bytes>>& absorbs,
                              const std::string& label, const std::string& field) {
  Transcript t(domain);
  for (const auto& [lbl, data] : absorbs) t.absorb(lbl, bytes_from_py(data));
  const auto c = t.challenge_field(label, field_by_name(field));
  return to_py_int(c);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "zkfingpt: verifiable linear-layer inference (sumcheck + KZG)";

  py::class_<Session>(m, "Session")
      .def(py::init<const std::string&, unsigned>(), py::arg("field") = "test64",
           py::arg("bits") = 16)
      .def("keygen", &Session::keygen, py::arg("max_params"), py::arg("seed") = 0)
      .def("quantize", &Session::quantize, py::arg("values"))
      .def("dequantize_value", &Session::dequantize_value, py::arg("value"),
           py::arg("scale_exponent"))
      .def("commit", &Session::commit, py::arg("weights"))
      .def("prove", &Session::prove, py::arg("weights"), py::arg("x"))
      .def("verify", &Session::verify, py::arg("comm"), py::arg("bundle"), py::arg("x"),
           py::arg("y"))
      .def("vk_bytes", &Session::vk_bytes)
      .def("pk_bytes", &Session::pk_bytes)
      .def("export_input", &Session::export_input, py::arg("x"))
      .def("export_output", &Session::export_output, py::arg("y"))
      .def("export_model", &Session::export_model, py::arg("weights"));

  m.def("transcript_challenge", &transcript_challenge, py::arg("domain"), py::arg("absorbs"),
        py::arg("label"), py::arg("field"),
        "Derive one Fiat-Shamir challenge after the given absorb sequence.");

  m.attr("__version__") = "0.1.0";
}
