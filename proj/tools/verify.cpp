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

#include "verify.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gaussbound/bound_family.hpp"
#include "gaussbound/circuit.hpp"
#include "gaussbound/decomposition.hpp"
#include "gaussbound/errors.hpp"
#include "gaussbound/io.hpp"
#include "gaussbound/reference_data.hpp"
#include "gaussbound/sweep.hpp"

namespace gaussbound::tools {
namespace {

struct Verdict {
  bool ok;
  std::string detail;
};

std::string sci(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

Verdict within(double error, double tol) {
  return {error <= tol, "error " + sci(error) + " (tolerance " + sci(tol) + ")"};
}

class SuiteBuilder {
 public:
  explicit SuiteBuilder(std::string name) { suite_.name = std::move(name); }

  void check(std::string name, const std::function<Verdict()>& body) {
    CheckResult r{std::move(name), Outcome::Pass, ""};
    try {
      const Verdict v = body();
      r.outcome = v.ok ? Outcome::Pass : Outcome::Fail;
      r.detail = v.detail;
    } catch (const Error& e) {
      r.outcome = e.code() == ErrorCode::Inconclusive ? Outcome::Inconclusive : Outcome::Fail;
      r.detail = e.what();
    } catch (const std::exception& e) {
      r.outcome = Outcome::Fail;
      r.detail = e.what();
    }
    suite_.checks.push_back(std::move(r));
  }

  SuiteResult done() { return std::move(suite_); }

 private:
  SuiteResult suite_;
};

double max_diff(const Matrix& a, const Matrix& b) { return linalg::max_abs(Matrix(a - b)); }
double max_diff(const CMatrix& a, const CMatrix& b) { return linalg::max_abs(CMatrix(a - b)); }

SuiteResult reconstruction(const VerifyConfig& cfg) {
  SuiteBuilder s("example reconstruction");
  for (int e = 1; e <= 4; ++e) {
    s.check("example-" + std::to_string(e) + " reconstruction", [&] {
      const auto path = cfg.fixtures_dir / ("example" + std::to_string(e) + ".json");
      const CovarianceMatrix fixture = io::covariance_from_json(io::read_text(path));
      const CovarianceMatrix built = construct(preset_params(e));
      if (fixture.n_modes() != 4 || fixture.ordering() != Ordering::Interleaved) {
        return Verdict{false, path.string() + " is not a 4-mode interleaved matrix"};
      }
      return within(max_diff(built.data(), fixture.data()), 1e-12);
    });
  }
  return s.done();
}

SuiteResult classification(const VerifyConfig& cfg) {
  SuiteBuilder s("PPT and separability classification");
  for (int e = 1; e <= 4; ++e) {
    s.check("example-" + std::to_string(e) + " classification", [&] {
      const EntanglementVerdict v = classify(construct(preset_params(e)), family_partition(), cfg.classify);
      return Verdict{v.cls == EntanglementClass::BoundEntangled,
                     std::string(to_string(v.cls)) + ", ppt margin " + sci(v.ppt_margin) +
                         ", slack " + (v.slack ? sci(*v.slack) : "n/a")};
    });
  }
  return s.done();
}

SuiteResult minimality() {
  SuiteBuilder s("minimality ranks");
  for (int e = 1; e <= 4; ++e) {
    s.check("example-" + std::to_string(e) + " minimality", [&] {
      const MinimalityReport r = is_minimal_ppt(construct(preset_params(e)), family_partition());
      const bool ranks = r.rank_sigma == 4 && r.rank_tilde == 4 && r.rank_stacked == 8;
      return Verdict{r.minimal && ranks, "ranks (" + std::to_string(r.rank_sigma) + ", " +
                                             std::to_string(r.rank_tilde) + ", " +
                                             std::to_string(r.rank_stacked) + ")"};
    });
  }
  return s.done();
}

SuiteResult williamson_suite() {
  SuiteBuilder s("Williamson normal form");
  const CovarianceMatrix g = construct(preset_params(1));
  s.check("example-1 symplectic eigenvalues", [&] {
    const std::vector<double> nu = symplectic_eigenvalues(g);
    const double expect[4] = {1, 1, 3, 3};
    double err = 0.0;
    for (int k = 0; k < 4; ++k) err = std::max(err, std::abs(nu[k] - expect[k]));
    return within(err, 1e-9);
  });
  s.check("example-1 Williamson reconstruction", [&] {
    const WilliamsonForm w = williamson(g);
    const Matrix rec = w.s.data() * w.diagonal() * w.s.data().transpose();
    return within((rec - g.data()).norm(), 1e-9);
  });
  s.check("reference S D S^T", [&] {
    const Matrix s_ref = reference::williamson_symplectic();
    return within(
        max_diff(s_ref * reference::williamson_diagonal() * s_ref.transpose(), g.data()), 1e-9);
  });
  return s.done();
}

SuiteResult euler_suite() {
  SuiteBuilder s("Euler decomposition");
  const double tau = reference::squeezing_tau();
  s.check("squeezer diagonals", [&] {
    const EulerForm e = euler_decompose(SymplecticTransform(reference::williamson_symplectic()));
    double err = 0.0;
    for (double r : e.r) {
      const double hi = std::max(std::exp(-r), std::exp(r)), lo = std::min(std::exp(-r), std::exp(r));
      err = std::max({err, std::abs(hi - tau), std::abs(lo - 1.0 / tau)});
    }
    return within(err, 1e-9);
  });
  s.check("computed K, L orthogonal", [&] {
    const EulerForm e = euler_decompose(SymplecticTransform(reference::williamson_symplectic()));
    const Matrix id = Matrix::Identity(8, 8);
    return within(std::max(max_diff(e.k.data() * e.k.data().transpose(), id),
                           max_diff(e.l.data() * e.l.data().transpose(), id)),
                  1e-10);
  });
  const FixtureReport fixtures = verify_reference_fixtures();
  for (const FixtureCheck& c : fixtures.checks) {
    s.check("reference " + c.name, [&] { return within(c.error, c.tolerance); });
  }
  return s.done();
}

SuiteResult interferometer_suite() {
  SuiteBuilder s("interferometer factorizations");
  const InterferometerFactors f = interferometer_factors();
  s.check("A4 A3 A2 A1 A0 diag(1,-1,1,1) = U_L", [&] {
    return within(max_diff(f.a[4] * f.a[3] * f.a[2] * f.a[1] * f.a[0] * f.phase_a, f.u_l), 1e-10);
  });
  s.check("B4 B3 B2 B1 diag(1,1,i,-i) = U_K", [&] {
    return within(max_diff(f.b[3] * f.b[2] * f.b[1] * f.b[0] * f.phase_b, f.u_k), 1e-10);
  });
  s.check("factors unitary", [&] {
    double err = 0.0;
    const CMatrix id = CMatrix::Identity(4, 4);
    for (const auto& m : f.a) err = std::max(err, max_diff(CMatrix(m.adjoint() * m), id));
    for (const auto& m : f.b) err = std::max(err, max_diff(CMatrix(m.adjoint() * m), id));
    return within(err, 1e-10);
  });
  s.check("U_L, U_K match L, K", [&] {
    return within(std::max(max_diff(unitary_to_passive(ComplexUnitary(f.u_l)).data(), reference::euler_l()),
                           max_diff(unitary_to_passive(ComplexUnitary(f.u_k)).data(), reference::euler_k())),
                  1e-10);
  });
  return s.done();
}

SuiteResult circuit_suite() {
  SuiteBuilder s("preparation circuit");
  const double tau = reference::squeezing_tau();
  const Matrix target = construct(preset_params(1)).data();
  s.check("circuit output equals example 1", [&] {
    return within(max_diff(fig1_state(3.0, tau).data(), target), 1e-8);
  });
  s.check("A0 and pi phase irrelevant", [&] {
    Fig1Options o;
    o.include_a0 = false;
    o.include_pi_phase = false;
    return within(max_diff(fig1_state(3.0, tau, o).data(), fig1_state(3.0, tau).data()), 1e-10);
  });
  s.check("generic mesh agrees", [&] {
    Fig1Options o;
    o.use_factors = false;
    return within(max_diff(fig1_state(3.0, tau, o).data(), target), 1e-8);
  });
  return s.done();
}

SuiteResult unsqueezed_row(const VerifyConfig& cfg) {
  SuiteBuilder s("unsqueezed row separable");
  for (int kappa = 1; kappa <= 21; kappa += 2) {
    s.check("kappa " + std::to_string(kappa) + ", tau 1", [&] {
      const EntanglementVerdict v = classify(fig1_state(kappa, 1.0), family_partition(), cfg.classify);
      return Verdict{v.cls == EntanglementClass::Separable,
                     std::string(to_string(v.cls)) + ", slack " + (v.slack ? sci(*v.slack) : "n/a")};
    });
  }
  return s.done();
}

SuiteResult star_point(const VerifyConfig& cfg) {
  SuiteBuilder s("bound/free boundary at kappa 3");
  s.check("boundary brackets the example-1 squeezing", [&] {
    BoundaryOptions o;
    o.classify = cfg.classify;
    const Bracket b = find_boundary(3.0, BoundaryKind::BoundToFree, o);
    const double tau = reference::squeezing_tau();
    const double dist = std::max({0.0, b.tau_lo - tau, tau - b.tau_hi});
    std::ostringstream d;
    d.precision(8);
    d << "bracket [" << b.tau_lo << ", " << b.tau_hi << "], distance " << dist;
    return Verdict{dist <= 1e-3, d.str()};
  });
  return s.done();
}

}  // namespace

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

Outcome SuiteResult::outcome() const {
  Outcome out = Outcome::Pass;
  for (const auto& c : checks) {
    if (c.outcome == Outcome::Fail) return Outcome::Fail;
    if (c.outcome == Outcome::Inconclusive) out = Outcome::Inconclusive;
  }
  return out;
}

std::vector<SuiteResult> run_verification(const VerifyConfig& cfg) {
  return {reconstruction(cfg), classification(cfg), minimality(),       williamson_suite(),
          euler_suite(),       interferometer_suite(), circuit_suite(), unsqueezed_row(cfg),
          star_point(cfg)};
}

int exit_code(const std::vector<SuiteResult>& suites) {
  bool inconclusive = false;
  for (const auto& s : suites) {
    if (s.outcome() == Outcome::Fail) return 1;
    if (s.outcome() == Outcome::Inconclusive) inconclusive = true;
  }
  return inconclusive ? 2 : 0;
}

std::string report_text(const std::vector<SuiteResult>& suites) {
  std::ostringstream out;
  int passed = 0;
  const CheckResult* first_fail = nullptr;
  const CheckResult* first_open = nullptr;
  for (const auto& s : suites) {
    const Outcome o = s.outcome();
    passed += o == Outcome::Pass;
    out << "[" << (o == Outcome::Pass ? "PASS" : o == Outcome::Fail ? "FAIL" : "INCONCLUSIVE") << "] "
        << s.name << "\n";
    for (const auto& c : s.checks) {
      out << "    " << to_string(c.outcome) << "  " << c.name << ": " << c.detail << "\n";
      if (c.outcome == Outcome::Fail && !first_fail) first_fail = &c;
      if (c.outcome == Outcome::Inconclusive && !first_open) first_open = &c;
    }
  }
  out << passed << "/" << suites.size() << " suites passed\n";
  if (first_fail) {
    out << "first failing check: " << first_fail->name << "\n";
  } else if (first_open) {
    out << "first inconclusive check: " << first_open->name << "\n";
  }
  return out.str();
}

std::string report_json(const std::vector<SuiteResult>& suites) {
  nlohmann::ordered_json j;
  j["format_version"] = 1;
  j["exit_code"] = exit_code(suites);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& s : suites) {
    nlohmann::ordered_json js;
    js["name"] = s.name;
    js["outcome"] = to_string(s.outcome());
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : s.checks) {
      checks.push_back({{"name", c.name}, {"outcome", to_string(c.outcome)}, {"detail", c.detail}});
    }
    js["checks"] = checks;
    arr.push_back(js);
  }
  j["suites"] = arr;
  return j.dump(2) + "\n";
}

}  // namespace gaussbound::tools
