// Copyright 2026 The Magic Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "magic/json_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include <boost/archive/iterators/base64_from_binary.hpp>
#include <boost/archive/iterators/binary_from_base64.hpp>
#include <boost/archive/iterators/transform_width.hpp>

#include "magic/error.hpp"

namespace magic {

static_assert(std::endian::native == std::endian::little, "matrix encoding assumes a little-endian host");

namespace {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail(ErrorCode::kMalformedFile, "complex entries must be [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

int declared_qubits(const Json& j, Index dim) {
  const int n = qubits_for_dim(dim);
  if (j.contains("n")) {
    if (!j["n"].is_number_integer() || j["n"].get<int>() != n) {
      fail(ErrorCode::kDimensionMismatch, "declared n does not match the matrix size");
    }
  }
  return n;
}

Json support_to_json(const std::vector<std::pair<std::size_t, double>>& w) {
  Json out = Json::array();
  for (const auto& [i, v] : w) out.push_back({{"index", i}, {"weight", v}});
  return out;
}

}  // namespace

Json operator_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"n", qubits_for_dim(m.rows())}, {"entries", std::move(rows)}};
}

Json ket_to_json(const CVector& psi) {
  Json amps = Json::array();
  for (Index i = 0; i < psi.size(); ++i) amps.push_back(complex_to_json(psi(i)));
  return {{"n", qubits_for_dim(psi.size())}, {"ket", std::move(amps)}};
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    fail(ErrorCode::kMalformedFile, "operator JSON needs an \"entries\" array");
  }
  const Json& rows = j["entries"];
  const Index d = static_cast<Index>(rows.size());
  if (d == 0) fail(ErrorCode::kMalformedFile, "operator has no rows");
  CMatrix m(d, d);
  for (Index r = 0; r < d; ++r) {
    if (!rows[r].is_array() || static_cast<Index>(rows[r].size()) != d) {
      fail(ErrorCode::kDimensionMismatch, "operator must be square");
    }
    for (Index c = 0; c < d; ++c) m(r, c) = complex_from_json(rows[r][c]);
  }
  if (!m.allFinite()) fail(ErrorCode::kNonFinite, "operator has non-finite entries");
  declared_qubits(j, d);
  return m;
}

HermitianOperator operator_from_json(const Json& j) {
  // Reports from the witness command carry the operator under results.witness.
  if (j.contains("results") && j["results"].contains("witness")) return operator_from_json(j["results"]["witness"]);
  return HermitianOperator(matrix_from_json(j));
}

DensityMatrix state_from_json(const Json& j) {
  if (j.is_object() && j.contains("ket")) {
    const Json& amps = j["ket"];
    if (!amps.is_array() || amps.empty()) fail(ErrorCode::kMalformedFile, "\"ket\" must be a non-empty array");
    CVector psi(static_cast<Index>(amps.size()));
    for (Index i = 0; i < psi.size(); ++i) psi(i) = complex_from_json(amps[i]);
    declared_qubits(j, psi.size());
    if (!psi.allFinite()) fail(ErrorCode::kNonFinite, "ket has non-finite entries");
    const double norm = psi.norm();
    if (std::abs(norm - 1.0) > 1e-9) fail(ErrorCode::kNotDensityMatrix, "ket is not normalized");
    return DensityMatrix::from_ket(psi / norm);
  }
  return DensityMatrix(matrix_from_json(j));
}

QuantumChannel channel_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kraus") || !j["kraus"].is_array()) {
    fail(ErrorCode::kMalformedFile, "channel JSON needs a \"kraus\" array");
  }
  std::vector<CMatrix> kraus;
  for (const auto& k : j["kraus"]) kraus.push_back(matrix_from_json(Json{{"entries", k}}));
  QuantumChannel ch(std::move(kraus));
  if (j.contains("n") && j["n"] != ch.num_qubits()) {
    fail(ErrorCode::kDimensionMismatch, "declared n does not match the Kraus operators");
  }
  return ch;
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kMalformedFile, path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::kIo, "cannot write " + path);
  f << j.dump(2) << '\n';
  if (!f) fail(ErrorCode::kIo, "write failed for " + path);
}

std::string encode_matrix(const CMatrix& m) {
  using namespace boost::archive::iterators;
  using Encoder = base64_from_binary<transform_width<const char*, 6, 8>>;
  std::string bytes(static_cast<std::size_t>(m.size()) * 2 * sizeof(double), '\0');
  std::size_t off = 0;
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      const double parts[2] = {m(r, c).real(), m(r, c).imag()};
      std::memcpy(bytes.data() + off, parts, sizeof parts);
      off += sizeof parts;
    }
  }
  std::string out(Encoder(bytes.data()), Encoder(bytes.data() + bytes.size()));
  out.append((3 - bytes.size() % 3) % 3, '=');
  return out;
}

CMatrix decode_matrix(const std::string& text, Index dim) {
  using namespace boost::archive::iterators;
  using Decoder = transform_width<binary_from_base64<std::string::const_iterator>, 8, 6>;
  const std::size_t expected = static_cast<std::size_t>(dim * dim) * 2 * sizeof(double);
  if (text.size() % 4 != 0) fail(ErrorCode::kMalformedFile, "base64 length is not a multiple of 4");
  std::string padded = text;
  while (!padded.empty() && padded.back() == '=') padded.pop_back();
  std::string bytes;
  try {
    bytes.assign(Decoder(padded.cbegin()), Decoder(padded.cend()));
  } catch (const std::exception&) {
    fail(ErrorCode::kMalformedFile, "invalid base64 matrix payload");
  }
  if (bytes.size() < expected) fail(ErrorCode::kMalformedFile, "matrix payload too short");
  bytes.resize(expected);
  CMatrix m(dim, dim);
  std::size_t off = 0;
  for (Index r = 0; r < dim; ++r) {
    for (Index c = 0; c < dim; ++c) {
      double parts[2];
      std::memcpy(parts, bytes.data() + off, sizeof parts);
      off += sizeof parts;
      m(r, c) = Complex(parts[0], parts[1]);
    }
  }
  return m;
}

Json artifact_to_json(const ReductionArtifact& a) {
  Json clauses = Json::array();
  for (const auto& c : a.instance.clauses()) {
    Json cl = Json::array();
    for (const auto& l : c) cl.push_back(l.negated ? -(l.var + 1) : l.var + 1);
    clauses.push_back(std::move(cl));
  }
  Json edges = Json::array();
  for (const auto& [i, j] : a.var_to_edge) edges.push_back(Json::array({i, j}));
  Json checks = Json::object();
  for (const auto& [k, v] : a.checks) checks[k] = v;
  Json mats = {{"dim", a.h.dim()}, {"encoding", "base64 row-major float64 (re, im) pairs, little-endian"}};
  mats["H"] = encode_matrix(a.h.matrix());
  if (a.stages_built >= 4) {
    mats["H1"] = encode_matrix(a.h1.matrix());
    mats["H2"] = encode_matrix(a.h2.matrix());
    mats["H3"] = encode_matrix(a.h3.matrix());
    mats["H4"] = encode_matrix(a.h4.matrix());
  }
  if (a.stages_built >= 5) mats["W"] = encode_matrix(a.w.matrix());
  return {
      {"format", "magic-reduction-artifact"},
      {"instance", {{"num_vars", a.instance.num_vars()}, {"clauses", std::move(clauses)}}},
      {"vertices", a.vertices},
      {"qubits", 2 * a.vertices},
      {"var_to_edge", std::move(edges)},
      {"gamma", a.gamma},
      {"delta", a.delta},
      {"norms",
       {{"h_inf", a.norm_h_inf},
        {"h3_minus_h2_inf", a.norm_h3_minus_h2_inf},
        {"h4_2", a.norm_h4_2},
        {"h4_2_bound", a.norm_bound}}},
      {"checks", std::move(checks)},
      {"stages_built", a.stages_built},
      {"matrices", std::move(mats)},
      {"build", {{"tool_version", MAGIC_VERSION}}},
  };
}

ReductionArtifact artifact_from_json(const Json& j) {
  try {
    if (j.at("format") != "magic-reduction-artifact") fail(ErrorCode::kMalformedFile, "not a reduction artifact");
    ReductionArtifact a;
    std::vector<Clause> clauses;
    const int num_vars = j.at("instance").at("num_vars").get<int>();
    for (const auto& cl : j.at("instance").at("clauses")) {
      if (!cl.is_array() || cl.size() != 3) fail(ErrorCode::kWrongWidth, "artifact clause width must be 3");
      Clause c;
      for (int k = 0; k < 3; ++k) {
        const int lit = cl[k].get<int>();
        if (lit == 0 || std::abs(lit) > num_vars) fail(ErrorCode::kLiteralOutOfRange, "artifact literal out of range");
        c[k] = Literal{std::abs(lit) - 1, lit < 0};
      }
      clauses.push_back(c);
    }
    a.instance = SatInstance(num_vars, std::move(clauses));
    a.vertices = j.at("vertices").get<int>();
    for (const auto& e : j.at("var_to_edge")) a.var_to_edge.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    if (a.var_to_edge != assign_edges(num_vars, a.vertices)) {
      fail(ErrorCode::kMalformedFile, "artifact edge map is not the lexicographic assignment");
    }
    a.gamma = j.at("gamma").get<double>();
    a.delta = j.at("delta").get<double>();
    const Json& norms = j.at("norms");
    a.norm_h_inf = norms.at("h_inf").get<double>();
    a.norm_h3_minus_h2_inf = norms.at("h3_minus_h2_inf").get<double>();
    a.norm_h4_2 = norms.at("h4_2").get<double>();
    a.norm_bound = norms.at("h4_2_bound").get<double>();
    for (const auto& [k, v] : j.at("checks").items()) a.checks[k] = v.get<double>();
    a.stages_built = j.at("stages_built").get<int>();
    const Json& mats = j.at("matrices");
    const Index dim = mats.at("dim").get<Index>();
    if (dim != (Index{1} << (2 * a.vertices))) fail(ErrorCode::kDimensionMismatch, "artifact matrix size mismatch");
    auto load = [&](const char* key) { return HermitianOperator(decode_matrix(mats.at(key).get<std::string>(), dim)); };
    a.h = load("H");
    if (a.stages_built >= 4) {
      a.h1 = load("H1");
      a.h2 = load("H2");
      a.h3 = load("H3");
      a.h4 = load("H4");
    }
    if (a.stages_built >= 5) a.w = load("W");
    return a;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kMalformedFile, std::string("artifact: ") + e.what());
  }
}

Json certificate_to_json(const RobustnessCertificate& c) {
  Json j = {
      {"value", c.value},
      {"support", support_to_json(c.primal)},
      {"dual_witness", operator_to_json(c.dual_witness.matrix())},
      {"dual_value", c.dual_value},
      {"duality_gap", c.duality_gap},
      {"max_dual_constraint", c.max_dual_constraint},
      {"reconstruction_error", c.reconstruction_error},
      {"dictionary", {{"tag", c.dictionary_tag}, {"size", c.dictionary_size}}},
      {"iterations", c.iterations},
  };
  if (c.verbose) {
    j["one_sided_value"] = c.one_sided_value ? Json(*c.one_sided_value) : Json(nullptr);
  }
  return j;
}

Json verdict_to_json(const MembershipVerdict& v) {
  Json j = {
      {"distance", v.distance},
      {"eps", v.eps},
      {"decision", v.decision ? Json(std::string(decision_name(*v.decision))) : Json(nullptr)},
      {"optimality_gap", v.optimality_gap},
      {"iterations", v.iterations},
      {"dictionary", v.dictionary_tag},
      {"projection", operator_to_json(v.projection.matrix())},
      {"weights", support_to_json(v.weights)},
  };
  if (v.interior_margin) {
    j["interior_margin"] = *v.interior_margin;
    j["interior_margin_exact"] = v.interior_margin_exact;
  }
  return j;
}

Json witness_to_json(const WitnessReport& w) {
  Json op = operator_to_json(w.witness.matrix());
  return {{"witness", std::move(op)}, {"margin", w.margin}, {"gamma", w.gamma}, {"value_on_rho", w.value_on_rho}};
}

Json wwd_to_json(const WwdResult& r) {
  Json fams = Json::array();
  for (const auto& f : r.families) {
    fams.push_back({{"name", f.name}, {"count", f.count}, {"max", f.max_value}, {"min", f.min_value}});
  }
  return {{"decision", std::string(decision_name(r.decision))},
          {"max_value", r.max_value},
          {"min_value", r.min_value},
          {"scanned", r.scanned},
          {"exhaustive", r.exhaustive},
          {"argmax", r.argmax_label},
          {"families", std::move(fams)}};
}

Json verification_to_json(const VerificationReport& r) {
  Json fams = Json::array();
  for (const auto& f : r.families) {
    fams.push_back({{"name", f.name},
                    {"count", f.count},
                    {"sampled", f.sampled},
                    {"min", f.min_value},
                    {"max", f.max_value},
                    {"argmin", f.argmin},
                    {"argmax", f.argmax}});
  }
  Json j = {
      {"stage", std::string(stage_name(r.stage))},
      {"mode", r.mode},
      {"seed", r.seed},
      {"satisfiable", r.satisfiable},
      {"satisfying_assignment", r.satisfying_assignment ? Json(*r.satisfying_assignment) : Json(nullptr)},
      {"satisfying_graph", r.satisfying_graph ? Json(*r.satisfying_graph) : Json(nullptr)},
      {"min_value", r.min_value},
      {"max_value", r.max_value},
      {"scanned", r.scanned},
      {"exhaustive_coverage", r.exhaustive_coverage},
      {"families", std::move(fams)},
      {"violations", r.violations},
      {"failures", r.failures},
      {"pass", r.pass},
  };
  if (r.stage == Stage::kH4Stab) {
    j["threshold_yes"] = r.threshold_yes;
    j["threshold_no"] = r.threshold_no;
    j["witness_at_satisfying"] = r.witness_at_satisfying ? Json(*r.witness_at_satisfying) : Json(nullptr);
  }
  return j;
}

}  // namespace magic
