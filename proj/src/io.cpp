// Copyright 2026 The gaussbound Authors
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

#include "gaussbound/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gaussbound/errors.hpp"

namespace gaussbound::io {
namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::Format, msg); }

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

void check_version(const json& j) {
  if (!j.is_object()) fail("expected a JSON object");
  if (j.contains("format_version") && j["format_version"] != kFormatVersion) {
    fail("unsupported format_version " + j["format_version"].dump());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j[key];
}

double number(const json& j, const char* what) {
  if (!j.is_number()) fail(std::string(what) + " must be a number");
  return j.get<double>();
}

int integer(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string ordering_name(Ordering o) { return o == Ordering::Interleaved ? "interleaved" : "grouped"; }

Ordering parse_ordering(const json& j) {
  if (j == "interleaved") return Ordering::Interleaved;
  if (j == "grouped") return Ordering::Grouped;
  fail("ordering must be \"interleaved\" or \"grouped\"");
}

ordered rows(const Matrix& m) {
  ordered out = ordered::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered row = ordered::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(round15(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

std::string dump(const ordered& j) { return j.dump(2) + "\n"; }

std::string csv_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace

double round15(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write " + path.string());
  out << text;
  if (!out) fail("error writing " + path.string());
}

Matrix matrix_from_json(std::string_view text, Ordering* ordering) {
  const json j = parse(text);
  check_version(j);
  const int n = integer(field(j, "n_modes"), "n_modes");
  if (n < 1) fail("n_modes must be positive");
  const json& data = field(j, "data");
  if (!data.is_array() || static_cast<int>(data.size()) != 2 * n) {
    fail("data must have 2 n_modes rows");
  }
  Matrix m(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    if (!data[i].is_array() || static_cast<int>(data[i].size()) != 2 * n) {
      fail("data row " + std::to_string(i + 1) + " must have 2 n_modes entries");
    }
    for (int k = 0; k < 2 * n; ++k) m(i, k) = number(data[i][k], "matrix entry");
  }
  const Ordering ord = j.contains("ordering") ? parse_ordering(j["ordering"]) : Ordering::Interleaved;
  if (ordering) *ordering = ord;
  return m;
}

std::string matrix_to_json(const Matrix& m, Ordering ordering) {
  ordered j;
  j["format_version"] = kFormatVersion;
  j["n_modes"] = m.rows() / 2;
  j["ordering"] = ordering_name(ordering);
  j["data"] = rows(m);
  return dump(j);
}

CovarianceMatrix covariance_from_json(std::string_view text) {
  Ordering ordering;
  const Matrix m = matrix_from_json(text, &ordering);
  return CovarianceMatrix(m, ordering);
}

std::string covariance_to_json(const CovarianceMatrix& gamma) {
  return matrix_to_json(gamma.data(), gamma.ordering());
}

BoundFamilyParams params_from_json(std::string_view text) {
  const json j = parse(text);
  check_version(j);
  const json& beta = field(j, "beta");
  const json& alpha = field(j, "alpha");
  if (!beta.is_array() || beta.size() != 2) fail("beta must hold 2 numbers");
  if (!alpha.is_array() || alpha.size() != 8) fail("alpha must hold 8 numbers");
  BoundFamilyParams p;
  p.beta1 = number(beta[0], "beta");
  p.beta2 = number(beta[1], "beta");
  for (int i = 0; i < 8; ++i) p.alpha[i] = number(alpha[i], "alpha");
  return p;
}

std::string params_to_json(const BoundFamilyParams& params) {
  ordered j;
  j["format_version"] = kFormatVersion;
  // Parameters keep full precision: rounding them moves the constructed
  // entries by more than the 15-digit output rounding.
  j["beta"] = {params.beta1, params.beta2};
  j["alpha"] = params.alpha;
  return dump(j);
}

OpticalCircuit circuit_from_json(std::string_view text) {
  const json j = parse(text);
  check_version(j);
  OpticalCircuit c;
  c.n_modes = integer(field(j, "n_modes"), "n_modes");
  const json& elements = field(j, "elements");
  if (!elements.is_array()) fail("elements must be an array");
  for (const json& e : elements) {
    if (!e.is_object()) fail("circuit element must be an object");
    const json& kind = field(e, "kind");
    const json& modes = field(e, "modes");
    if (!modes.is_array()) fail("modes must be an array");
    auto mode = [&](std::size_t i) { return integer(modes[i], "mode") - 1; };
    if (kind == "bs") {
      if (modes.size() != 2) fail("beam splitter needs two modes");
      c.elements.push_back(BeamSplitter{mode(0), mode(1), number(field(e, "theta"), "theta"),
                                        number(field(e, "phi"), "phi")});
    } else if (kind == "phase") {
      if (modes.size() != 1) fail("phase shifter needs one mode");
      c.elements.push_back(PhaseShift{mode(0), number(field(e, "phi"), "phi")});
    } else if (kind == "squeezer") {
      if (modes.size() != 1) fail("squeezer needs one mode");
      c.elements.push_back(Squeezer{mode(0), number(field(e, "r"), "r")});
    } else {
      fail("unknown element kind " + kind.dump());
    }
  }
  try {
    c.validate();
  } catch (const Error& e) {
    fail(e.what());
  }
  return c;
}

std::string circuit_to_json(const OpticalCircuit& circuit) {
  ordered j;
  j["format_version"] = kFormatVersion;
  j["n_modes"] = circuit.n_modes;
  ordered elements = ordered::array();
  for (const auto& e : circuit.elements) {
    ordered o;
    if (const auto* bs = std::get_if<BeamSplitter>(&e)) {
      o["kind"] = "bs";
      o["modes"] = {bs->j + 1, bs->k + 1};
      o["theta"] = round15(bs->theta);
      o["phi"] = round15(bs->phi);
    } else if (const auto* ps = std::get_if<PhaseShift>(&e)) {
      o["kind"] = "phase";
      o["modes"] = {ps->mode + 1};
      o["phi"] = round15(ps->phi);
    } else {
      const auto& sq = std::get<Squeezer>(e);
      o["kind"] = "squeezer";
      o["modes"] = {sq.mode + 1};
      o["r"] = round15(sq.r);
    }
    elements.push_back(std::move(o));
  }
  j["elements"] = elements;
  return dump(j);
}

std::string verdict_to_json(const EntanglementVerdict& v) {
  ordered j;
  j["format_version"] = kFormatVersion;
  j["class"] = to_string(v.cls);
  j["ppt_margin"] = round15(v.ppt_margin);
  j["slack"] = v.slack ? ordered(round15(*v.slack)) : ordered(nullptr);
  j["iterations"] = v.iterations;
  return dump(j);
}

std::string grid_to_csv(const SweepGrid& grid) {
  std::string out = "kappa,tau,class,ppt_margin,slack\n";
  for (std::size_t i = 0; i < grid.kappa.size(); ++i) {
    for (std::size_t k = 0; k < grid.tau.size(); ++k) {
      const SweepCell& c = grid.at(i, k);
      out += csv_number(grid.kappa[i]) + "," + csv_number(grid.tau[k]) + "," +
             (c.cls ? to_string(*c.cls) : "inconclusive") + "," + csv_number(c.ppt_margin) + "," +
             (c.slack ? csv_number(*c.slack) : "") + "\n";
    }
  }
  return out;
}

std::string boundaries_to_csv(const BoundaryCurve& sep_to_bound, const BoundaryCurve& bound_to_free) {
  std::string out = "kappa,kind,tau_lower,tau_upper,converged\n";
  auto emit = [&](const BoundaryCurve& c, const char* kind) {
    for (std::size_t i = 0; i < c.kappa.size(); ++i) {
      out += csv_number(c.kappa[i]) + "," + kind + "," +
             (c.converged[i] ? csv_number(c.tau_lower[i]) : "") + "," +
             (c.converged[i] ? csv_number(c.tau_upper[i]) : "") + "," +
             (c.converged[i] ? "true" : "false") + "\n";
    }
  };
  emit(sep_to_bound, "sep_to_bound");
  emit(bound_to_free, "bound_to_free");
  return out;
}

}  // namespace gaussbound::io
