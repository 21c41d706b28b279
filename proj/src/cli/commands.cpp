// Copyright 2026 The fefkit Authors
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

#include "fefkit/cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "fefkit/cli/state_file.hpp"
#include "fefkit/cli/verify.hpp"
#include "fefkit/exact.hpp"
#include "fefkit/linalg.hpp"

namespace fefkit::cli {
namespace {

// Unvalidated family members; f may lie outside the physical range.
ComplexMatrix RawIsotropic(std::size_t d, double f) {
  const double dd = static_cast<double>(d * d);
  ComplexMatrix rho = ComplexMatrix::identity(d * d) * ((1.0 - f) / (dd - 1.0));
  rho += max_entangled(d).projector() * ((dd * f - 1.0) / (dd - 1.0));
  return rho;
}

ComplexMatrix RawWerner(std::size_t d, double f) {
  const double dn = static_cast<double>(d);
  const double denom = dn * dn * dn - dn;
  ComplexMatrix rho = ComplexMatrix::identity(d * d) * ((dn - f) / denom);
  rho += swap_operator(d) * ((dn * f - 1.0) / denom);
  return rho;
}

template <typename Member>
std::optional<FamilyMatch> Fit(const DensityMatrix& rho, Family family,
                               Member member, double f_lo, double f_hi,
                               double tolerance) {
  const std::size_t d = rho.d();
  const ComplexMatrix base = member(d, 0.0);
  const ComplexMatrix slope = member(d, 1.0) - base;
  const ComplexMatrix offset = rho.matrix() - base;
  const double f = inner(slope.entries(), offset.entries()).real() /
                   inner(slope.entries(), slope.entries()).real();
  if (!(f >= f_lo - tolerance && f <= f_hi + tolerance)) return std::nullopt;
  const double clamped = std::min(std::max(f, f_lo), f_hi);
  const double residual = max_abs_diff(rho.matrix(), member(d, clamped));
  if (residual > tolerance) return std::nullopt;
  return FamilyMatch{family, clamped, residual};
}

std::string MatrixJson(const ComplexMatrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s += r ? ", [" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) s += ", ";
      s += "[" + format_double(m(r, c).real()) + ", " +
           format_double(m(r, c).imag()) + "]";
    }
    s += "]";
  }
  return s + "]";
}

OptimizerConfig MakeConfig(int restarts, double tol, std::uint64_t seed) {
  OptimizerConfig config;
  config.restarts = restarts;
  config.tolerance = tol;
  config.seed = seed;
  config.validate();
  return config;
}

}  // namespace

const char* to_string(Family family) {
  return family == Family::kIsotropic ? "isotropic" : "werner";
}

std::optional<FamilyMatch> detect_family(const DensityMatrix& rho,
                                         double tolerance) {
  if (auto m = Fit(rho, Family::kIsotropic, RawIsotropic, 0.0, 1.0, tolerance)) {
    return m;
  }
  return Fit(rho, Family::kWerner, RawWerner, -1.0, 1.0, tolerance);
}

int cmd_compute(const ComputeOptions& opts, std::ostream& out,
                std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  if (opts.method != "exact" && opts.method != "numeric" &&
      opts.method != "both") {
    err << "error: --method must be exact, numeric or both\n";
    return kExitInputError;
  }
  OptimizerConfig config;
  ParsedState parsed = PureState::from_amplitudes(2, {1.0, 0.0, 0.0, 0.0});
  try {
    config = MakeConfig(opts.restarts, opts.tol, opts.seed);
    parsed = read_state_file(opts.input);
  } catch (const std::exception& e) {
    err << "error: " << opts.input << ": " << e.what() << "\n";
    return kExitInputError;
  }

  const bool is_pure = std::holds_alternative<PureState>(parsed);
  const DensityMatrix rho = is_pure ? std::get<PureState>(parsed).density()
                                    : std::get<DensityMatrix>(parsed);
  const std::size_t d = rho.d();
  const bool want_exact = opts.method != "numeric";
  const bool want_numeric = opts.method != "exact";

  std::optional<double> exact;
  std::string exact_method;
  if (want_exact) {
    if (is_pure) {
      exact = fef_pure(std::get<PureState>(parsed));
      exact_method = "pure-schmidt";
    } else if (auto match = detect_family(rho)) {
      exact = match->family == Family::kIsotropic ? fef_isotropic(d, match->f)
                                                  : fef_werner(d, match->f);
      exact_method = std::string(to_string(match->family)) +
                     " f=" + format_double(match->f) +
                     " residual=" + format_double(match->residual);
    } else if (opts.method == "exact") {
      err << "error: no closed form: state is mixed and matches neither the "
             "isotropic nor the Werner family\n";
      return kExitNoClosedForm;
    } else {
      exact_method = "unavailable";
    }
  }

  std::optional<FefResult> numeric;
  if (want_numeric) numeric = fef_maximize(rho, config);

  const FefRange range = fef_range_bounds(rho);
  const double best = exact ? *exact : numeric->value;
  const Teleportation tele =
      teleportation_fidelity(std::min(std::max(best, range.low), range.high), d);
  const double spectral = numeric ? numeric->spectral_bound
                                  : hermitian_eig(rho.matrix()).values.front();

  out << "input: " << opts.input << "\n";
  out << "d: " << d << "\n";
  out << "kind: " << (is_pure ? "pure" : "density") << "\n";
  out << "method: " << opts.method << "\n";
  out << "seed: " << opts.seed << "\n";
  if (want_exact) {
    out << "fef_exact: " << (exact ? format_double(*exact) : "n/a") << "\n";
    out << "exact_method: " << exact_method << "\n";
  }
  if (numeric) {
    out << "fef_numeric: " << format_double(numeric->value) << "\n";
    out << "numeric_restarts: " << numeric->restarts_used << "\n";
    out << "numeric_iterations: " << numeric->iterations_total << "\n";
    out << "numeric_converged: " << (numeric->converged ? "true" : "false")
        << "\n";
  }
  if (exact && numeric) {
    out << "abs_gap: " << format_double(std::abs(*exact - numeric->value))
        << "\n";
  }
  out << "fef_range: [" << format_double(range.low) << ", "
      << format_double(range.high) << "]\n";
  out << "spectral_bound: " << format_double(spectral) << "\n";
  out << "teleport_fidelity: " << format_double(tele.fidelity) << "\n";
  out << "useful_for_teleportation: " << (tele.useful ? "true" : "false")
      << "\n";
  if (opts.emit_unitary && numeric) {
    out << "optimal_unitary: " << MatrixJson(numeric->optimal_unitary) << "\n";
  }
  const auto ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  char ms_text[32];
  std::snprintf(ms_text, sizeof ms_text, "%.3f", ms);
  out << "time_ms: " << ms_text << "\n";
  return kExitOk;
}

int cmd_family(const FamilyOptions& opts, std::ostream& out,
               std::ostream& err) {
  const bool iso = opts.family == "isotropic";
  if (!iso && opts.family != "werner") {
    err << "error: family must be isotropic or werner\n";
    return kExitInputError;
  }
  const double lo = iso ? 0.0 : -1.0;
  if (opts.d < 2 || opts.d > 16) {
    err << "error: --d must lie in [2, 16]\n";
    return kExitInputError;
  }
  if (opts.steps < 1) {
    err << "error: --steps must be positive\n";
    return kExitInputError;
  }
  if (!(opts.f_min >= lo && opts.f_max <= 1.0 && opts.f_min <= opts.f_max)) {
    err << "error: f range [" << opts.f_min << ", " << opts.f_max
        << "] outside the " << opts.family << " domain [" << lo << ", 1]\n";
    return kExitInputError;
  }
  OptimizerConfig config;
  try {
    config = MakeConfig(opts.restarts, opts.tol, opts.seed);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  std::ostringstream csv;
  csv << "f,fef_exact,fef_numeric,abs_err,teleport_fidelity,useful\n";
  for (int i = 0; i < opts.steps; ++i) {
    double f = opts.f_min;
    if (opts.steps > 1) {
      f = i + 1 == opts.steps
              ? opts.f_max
              : opts.f_min + (opts.f_max - opts.f_min) * i / (opts.steps - 1);
    }
    const DensityMatrix rho = iso ? isotropic(opts.d, f) : werner(opts.d, f);
    const double exact = iso ? fef_isotropic(opts.d, f) : fef_werner(opts.d, f);
    const double numeric = fef_maximize(rho, config).value;
    const Teleportation tele = teleportation_fidelity(exact, opts.d);
    csv << format_double(f) << ',' << format_double(exact) << ','
        << format_double(numeric) << ',' << format_double(std::abs(exact - numeric))
        << ',' << format_double(tele.fidelity) << ','
        << (tele.useful ? "true" : "false") << '\n';
  }

  if (opts.output == "-") {
    out << csv.str();
    return kExitOk;
  }
  std::ofstream file(opts.output, std::ios::binary | std::ios::trunc);
  file << csv.str();
  file.flush();
  if (!file) {
    err << "error: cannot write " << opts.output << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<PropertyCheck> checks;
  try {
    checks = run_verify_suite(opts.suite, opts.d, opts.samples, opts.seed);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  bool all = true;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name
        << " worst=" << format_double(c.worst) << " seed=" << opts.seed;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
    all = all && c.passed;
  }
  out << (all ? "all properties passed" : "some properties FAILED") << "\n";
  return all ? kExitOk : kExitPropertyFailure;
}

int cmd_random(const RandomOptions& opts, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    if (opts.kind == "pure") {
      text = serialize_state(random_pure(opts.d, opts.seed));
    } else if (opts.kind == "density") {
      text = serialize_state(random_density(opts.d, opts.rank, opts.seed));
    } else {
      err << "error: kind must be pure or density\n";
      return kExitInputError;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (opts.output == "-") {
    out << text;
    return kExitOk;
  }
  try {
    write_state_file(opts.output, text);
  } catch (const StateFileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace fefkit::cli
