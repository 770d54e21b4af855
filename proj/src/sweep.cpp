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

#include "gaussbound/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "gaussbound/bound_family.hpp"
#include "gaussbound/errors.hpp"

namespace gaussbound {
namespace {

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(threads > 0 ? threads : default_threads()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

double parse_double(std::string_view s, std::string_view whole) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::InvalidAxis, "cannot parse axis '" + std::string(whole) + "'");
  }
  return v;
}

int rank(EntanglementClass c) { return static_cast<int>(c); }

// Positive on the lower-class side of the boundary.
double boundary_margin(double kappa, double tau, BoundaryKind kind, const BoundaryOptions& opt) {
  const CovarianceMatrix gamma = fig1_state(kappa, tau, opt.circuit);
  if (kind == BoundaryKind::BoundToFree) {
    const PsdCheck ppt = is_ppt(gamma, family_partition(), opt.classify.tol_ppt);
    return ppt.margin + ppt.tolerance;
  }
  const SdpSolution s = solve_min_slack(build_problem(gamma, family_partition()), opt.classify.sdp);
  if (s.status != sdp::Status::Optimal) {
    throw Error(ErrorCode::Inconclusive, std::string("separability solver stopped with status ") +
                                             sdp::to_string(s.status));
  }
  return opt.classify.tol_sep - s.t_star;
}

}  // namespace

std::vector<double> parse_axis(std::string_view spec) {
  const auto c1 = spec.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : spec.find(':', c1 + 1);
  if (c2 == std::string_view::npos || spec.find(':', c2 + 1) != std::string_view::npos) {
    throw Error(ErrorCode::InvalidAxis, "axis '" + std::string(spec) + "' is not start:stop:count");
  }
  const double a = parse_double(spec.substr(0, c1), spec);
  const double b = parse_double(spec.substr(c1 + 1, c2 - c1 - 1), spec);
  const double n = parse_double(spec.substr(c2 + 1), spec);
  if (!(n >= 1.0) || n != std::floor(n) || n > 1e6) {
    throw Error(ErrorCode::InvalidAxis, "axis count must be a positive integer");
  }
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorCode::InvalidAxis, "axis '" + std::string(spec) + "' has non-finite ends");
  }
  const int count = static_cast<int>(n);
  if (count == 1) {
    if (a != b) throw Error(ErrorCode::InvalidAxis, "single-point axis needs start == stop");
    return {a};
  }
  if (!(b > a)) throw Error(ErrorCode::InvalidAxis, "axis must be increasing");
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) out[i] = a + (b - a) * i / (count - 1);
  out.back() = b;
  return out;
}

void validate_axis(const std::vector<double>& axis, double min_value, bool inclusive,
                   std::string_view name) {
  if (axis.empty()) throw Error(ErrorCode::InvalidAxis, std::string(name) + " axis is empty");
  for (std::size_t i = 0; i < axis.size(); ++i) {
    const double v = axis[i];
    const bool above = inclusive ? v >= min_value : v > min_value;
    if (!std::isfinite(v) || !above || (i > 0 && !(v > axis[i - 1]))) {
      throw Error(ErrorCode::InvalidAxis,
                  std::string(name) + " axis must be finite, strictly increasing and " +
                      (inclusive ? ">= " : "> ") + std::to_string(min_value));
    }
  }
}

int default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

int SweepGrid::inconclusive_count() const {
  return static_cast<int>(
      std::count_if(cells.begin(), cells.end(), [](const SweepCell& c) { return !c.cls; }));
}

SweepCell evaluate_cell(double kappa, double tau, const SweepOptions& options) {
  SweepCell cell;
  const CovarianceMatrix gamma = fig1_state(kappa, tau, options.circuit);
  const Bipartition part = family_partition();
  cell.ppt_margin = is_ppt(gamma, part, options.classify.tol_ppt).margin;
  try {
    const EntanglementVerdict v = classify(gamma, part, options.classify);
    cell.cls = v.cls;
    cell.slack = v.slack;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Inconclusive) throw;
    cell.note = e.what();
  }
  return cell;
}

SweepGrid scan(const std::vector<double>& kappa_axis, const std::vector<double>& tau_axis,
               const SweepOptions& options) {
  validate_axis(kappa_axis, 1.0, true, "kappa");
  validate_axis(tau_axis, 0.0, false, "tau");
  SweepGrid grid{kappa_axis, tau_axis, std::vector<SweepCell>(kappa_axis.size() * tau_axis.size())};
  parallel_for(grid.cells.size(), options.threads, [&](std::size_t idx) {
    grid.cells[idx] =
        evaluate_cell(kappa_axis[idx / tau_axis.size()], tau_axis[idx % tau_axis.size()], options);
  });
  return grid;
}

void require_conclusive(const SweepGrid& grid, double max_fraction) {
  const int bad = grid.inconclusive_count();
  if (bad > max_fraction * static_cast<double>(grid.cells.size())) {
    std::ostringstream msg;
    msg << bad << " of " << grid.cells.size() << " cells are inconclusive";
    throw Error(ErrorCode::Inconclusive, msg.str());
  }
}

std::vector<MonotoneViolation> monotone_violations(const SweepGrid& grid) {
  std::vector<MonotoneViolation> out;
  const std::size_t nt = grid.tau.size();
  for (std::size_t i = 0; i < grid.kappa.size(); ++i) {
    // Walk away from tau = 1 in both directions.
    auto walk = [&](auto begin, auto end, auto step) {
      int highest = -1;
      for (auto j = begin; j != end; j = step(j)) {
        const SweepCell& c = grid.at(i, j);
        if (!c.cls) continue;
        if (rank(*c.cls) < highest) out.push_back({i, j});
        highest = std::max(highest, rank(*c.cls));
      }
    };
    const std::size_t first_up =
        std::lower_bound(grid.tau.begin(), grid.tau.end(), 1.0) - grid.tau.begin();
    walk(first_up, nt, [](std::size_t j) { return j + 1; });
    const std::size_t last_down =
        std::upper_bound(grid.tau.begin(), grid.tau.end(), 1.0) - grid.tau.begin();
    if (last_down > 0) {
      walk(last_down - 1, static_cast<std::size_t>(-1), [](std::size_t j) { return j - 1; });
    }
  }
  std::sort(out.begin(), out.end(), [](const MonotoneViolation& a, const MonotoneViolation& b) {
    return a.kappa_index != b.kappa_index ? a.kappa_index < b.kappa_index : a.tau_index < b.tau_index;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const MonotoneViolation& a, const MonotoneViolation& b) {
                          return a.kappa_index == b.kappa_index && a.tau_index == b.tau_index;
                        }),
            out.end());
  return out;
}

Bracket find_boundary(double kappa, BoundaryKind kind, const BoundaryOptions& opt) {
  if (!(opt.tol > 0.0) || !(opt.tau_max > opt.tau_min) || !(opt.tau_min > 0.0) ||
      opt.coarse_steps < 1) {
    throw Error(ErrorCode::InvalidAxis, "boundary search needs tol > 0 and 0 < tau_min < tau_max");
  }
  Bracket b;
  const double h = (opt.tau_max - opt.tau_min) / opt.coarse_steps;
  int first_above = -1;
  for (int i = 0; i <= opt.coarse_steps; ++i) {
    ++b.evaluations;
    if (boundary_margin(kappa, opt.tau_min + i * h, kind, opt) < 0.0) {
      first_above = i;
      break;
    }
  }
  std::ostringstream where;
  where << "kappa = " << kappa << ", tau in [" << opt.tau_min << ", " << opt.tau_max << "]";
  if (first_above <= 0) {
    throw Error(ErrorCode::NoBracket,
                std::string(first_above < 0 ? "no transition" : "transition below tau_min") +
                    " for " + where.str());
  }
  b.tau_lo = opt.tau_min + (first_above - 1) * h;
  b.tau_hi = first_above == opt.coarse_steps ? opt.tau_max : opt.tau_min + first_above * h;
  if (kind == BoundaryKind::BoundToFree) {
    const EntanglementVerdict v =
        classify(fig1_state(kappa, b.tau_lo, opt.circuit), family_partition(), opt.classify);
    ++b.evaluations;
    if (v.cls != EntanglementClass::BoundEntangled) {
      throw Error(ErrorCode::NoBracket, std::string("state below the PPT transition is ") +
                                            to_string(v.cls) + " for " + where.str());
    }
  }
  while (b.tau_hi - b.tau_lo > opt.tol) {
    const double mid = 0.5 * (b.tau_lo + b.tau_hi);
    ++b.evaluations;
    (boundary_margin(kappa, mid, kind, opt) >= 0.0 ? b.tau_lo : b.tau_hi) = mid;
  }
  return b;
}

BoundaryCurve boundary_curve(const std::vector<double>& kappa_axis, BoundaryKind kind,
                             const BoundaryOptions& options, int threads) {
  validate_axis(kappa_axis, 1.0, true, "kappa");
  const std::size_t n = kappa_axis.size();
  BoundaryCurve curve{kappa_axis, std::vector<double>(n, std::nan("")),
                      std::vector<double>(n, std::nan("")), std::vector<bool>(n, false)};
  std::vector<char> ok(n, 0);
  parallel_for(n, threads, [&](std::size_t i) {
    try {
      const Bracket b = find_boundary(kappa_axis[i], kind, options);
      curve.tau_lower[i] = b.tau_lo;
      curve.tau_upper[i] = b.tau_hi;
      ok[i] = 1;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoBracket && e.code() != ErrorCode::Inconclusive) throw;
    }
  });
  for (std::size_t i = 0; i < n; ++i) curve.converged[i] = ok[i] != 0;
  return curve;
}

AsymptoteEstimate estimate_asymptote(double kappa_max, double tol, int rungs,
                                     const BoundaryOptions& options) {
  if (!(kappa_max >= 41.0) || !std::isfinite(kappa_max)) {
    throw Error(ErrorCode::InvalidKappa, "asymptote ladder needs kappa_max >= 41");
  }
  if (rungs < 3) throw Error(ErrorCode::InvalidAxis, "asymptote ladder needs at least 3 rungs");
  BoundaryOptions opt = options;
  // The extrapolation doubles bisection errors; keep them well below tol.
  opt.tol = std::min(opt.tol, 1e-3 * tol);
  AsymptoteEstimate est;
  for (int j = rungs - 1; j >= 0; --j) {
    const double kappa = kappa_max / std::pow(2.0, j);
    const Bracket b = find_boundary(kappa, BoundaryKind::BoundToFree, opt);
    est.kappa.push_back(kappa);
    est.tau_star.push_back(0.5 * (b.tau_lo + b.tau_hi));
  }
  // tau*(kappa) = tau_inf + a / kappa + O(1 / kappa^2).
  auto extrapolate = [&](std::size_t i) {
    const double k1 = est.kappa[i], k2 = est.kappa[i + 1];
    return (k2 * est.tau_star[i + 1] - k1 * est.tau_star[i]) / (k2 - k1);
  };
  const std::size_t last = est.kappa.size() - 2;
  est.value = extrapolate(last);
  est.error = std::abs(est.value - extrapolate(last - 1));
  if (!(est.error <= tol)) {
    std::ostringstream msg;
    msg << "asymptote estimate " << est.value << " has error " << est.error << " above " << tol;
    throw Error(ErrorCode::NotConverged, msg.str());
  }
  return est;
}

}  // namespace gaussbound
