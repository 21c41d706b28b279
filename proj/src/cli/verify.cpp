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

#include "fefkit/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fefkit/cli/state_file.hpp"
#include "fefkit/exact.hpp"
#include "fefkit/numeric.hpp"

namespace fefkit::cli {
namespace {

// Tracks the largest violation of a property; passes while it stays within
// the allowed slack.
class Check {
 public:
  Check(std::string name, double slack) : name_(std::move(name)), slack_(slack) {}

  void violation(double amount) { worst_ = std::max(worst_, amount); }
  void note(const std::string& detail) { detail_ = detail; }

  PropertyCheck done() const {
    return {name_, worst_ <= slack_, worst_, detail_};
  }

 private:
  std::string name_;
  double slack_;
  double worst_ = 0.0;
  std::string detail_;
};

double Inv(std::size_t n) { return 1.0 / static_cast<double>(n); }

std::vector<PropertyCheck> Bounds(std::size_t d, int samples, std::uint64_t seed) {
  Rng rng(mix_seed(seed) ^ 0x1);
  const double low = Inv(d * d);

  Check range("bounds/fef-range", 1e-9);
  Check spectral("bounds/spectral-certificate", 1e-9);
  for (int s = 0; s < samples; ++s) {
    const std::size_t rank = 1 + static_cast<std::size_t>(s) % (d * d);
    const DensityMatrix rho = random_density(d, rank, rng);
    OptimizerConfig config;
    config.seed = seed + static_cast<std::uint64_t>(s);
    const FefResult r = fef_maximize(rho, config);
    range.violation(std::max({low - r.value, r.value - 1.0, 0.0}));
    spectral.violation(std::max(r.value - r.spectral_bound, 0.0));
  }

  Check mixed("bounds/maximally-mixed", 1e-6);
  const ComplexMatrix id = ComplexMatrix::identity(d * d) * low;
  const double f_mixed = fef_maximize(validate_density(id, d)).value;
  mixed.violation(std::abs(f_mixed - low));
  mixed.note("F(I/d^2)=" + format_double(f_mixed));

  Check mes("bounds/max-entangled", 1e-9);
  const double f_mes = fef_maximize(max_entangled(d).density()).value;
  mes.violation(std::abs(f_mes - 1.0));
  mes.note("F(psi+)=" + format_double(f_mes));

  Check e_range("bounds/geometric-measure-range", 1e-12);
  const double e_max = static_cast<double>(d - 1) / static_cast<double>(d);
  for (int s = 0; s < samples; ++s) {
    const GeometricMeasure g = geometric_measure_pure(random_pure(d, rng));
    e_range.violation(std::max({-g.e, g.e - e_max, 0.0}));
  }
  e_range.violation(std::abs(geometric_measure_pure(basis_state(d, 0, 0)).e));
  e_range.violation(
      std::abs(geometric_measure_pure(max_entangled(d)).e - e_max));

  return {range.done(), spectral.done(), mixed.done(), mes.done(),
          e_range.done()};
}

std::vector<PropertyCheck> Relations(std::size_t d, int samples,
                                     std::uint64_t seed) {
  Rng rng(mix_seed(seed) ^ 0x2);
  const double dn = static_cast<double>(d);

  Check neg("relations/negativity-identity", 1e-9);
  Check geo("relations/fef-le-d(1-E)", 1e-9);
  Check lam("relations/d-lambda1sq-ge-fef", 1e-9);
  Check conc("relations/concurrence-lower-bound", 1e-9);
  Check formula("relations/numeric-vs-pure-formula", 1e-6);
  for (int s = 0; s < samples; ++s) {
    const PureState psi = random_pure(d, rng);
    const double f = fef_pure(psi);
    const GeometricMeasure g = geometric_measure_pure(psi);
    neg.violation(std::abs(negativity(psi) - (dn * f - 1.0) / 2.0));
    geo.violation(std::max(f - dn * (1.0 - g.e), 0.0));
    lam.violation(std::max(f - dn * g.lambda_max_sq, 0.0));
    conc.violation(
        std::max(concurrence_lower_bound(f, d) - concurrence_pure(psi), 0.0));
    OptimizerConfig config;
    config.seed = seed + static_cast<std::uint64_t>(s);
    formula.violation(std::abs(fef_maximize(psi.density(), config).value - f));
  }

  Check separable("relations/separable-pure-threshold", 1e-12);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t k = 0; k < d; ++k) {
      separable.violation(std::abs(fef_pure(basis_state(d, a, k)) - Inv(d)));
    }
  }
  // Random product states u (x) v.
  for (int s = 0; s < samples; ++s) {
    ComplexVector u(d), v(d), amps(d * d);
    for (auto& z : u) z = rng.complex_normal();
    for (auto& z : v) z = rng.complex_normal();
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t k = 0; k < d; ++k) amps[a * d + k] = u[a] * v[k];
    }
    separable.violation(
        std::abs(fef_pure(PureState::normalized(d, std::move(amps))) - Inv(d)));
  }

  Check continuity("relations/branch-continuity", 1e-15);
  const double fi = Inv(d * d);
  continuity.violation(std::abs(fef_isotropic(d, fi) - (1.0 - fi) / (dn * dn - 1.0)));
  continuity.violation(std::abs(fef_isotropic(d, fi) - fef_isotropic(d, std::nextafter(fi, 0.0))));
  const double fw = Inv(d);
  continuity.violation(std::abs(fef_werner(d, fw) - Inv(d * d)));
  continuity.violation(std::abs(fef_werner(d, fw) - fef_werner(d, std::nextafter(fw, -1.0))));

  Check useful("relations/entangled-isotropic-useful", 0.0);
  for (int i = 1; i <= 200; ++i) {
    const double f = Inv(d) + (1.0 - Inv(d)) * i / 200.0;
    const double F = fef_isotropic(d, f);
    if (!teleportation_fidelity(F, d).useful || !(F > Inv(d))) useful.violation(1.0);
  }

  return {neg.done(),      geo.done(),        lam.done(),
          conc.done(),     formula.done(),    separable.done(),
          continuity.done(), useful.done()};
}

std::vector<PropertyCheck> Mixtures(std::size_t d, int samples,
                                    std::uint64_t seed) {
  Rng rng(mix_seed(seed) ^ 0x3);

  Check upper("mixtures/mixture-upper-bound", 1e-8);
  for (int s = 0; s < samples; ++s) {
    std::vector<PureState> pures;
    std::vector<double> w(3);
    for (auto& x : w) x = rng.uniform() + 1e-3;
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto& x : w) x /= total;
    for (int i = 0; i < 3; ++i) pures.push_back(random_pure(d, rng));
    OptimizerConfig config;
    config.seed = seed + static_cast<std::uint64_t>(s);
    const double f_mix = fef_maximize(mixture(w, pures), config).value;
    upper.violation(std::max(f_mix - mixture_upper_bound(w, pures), 0.0));
  }

  // The two-qubit counter-example to a convex-roof formula.
  Check counter("mixtures/counter-example", 1e-6);
  const std::vector<PureState> diag{basis_state(2, 0, 0), basis_state(2, 1, 1)};
  const std::vector<double> half{0.5, 0.5};
  const double f_counter = fef_maximize(mixture(half, diag)).value;
  counter.violation(std::abs(f_counter - 0.5));
  int strict = 0;
  const int trials = std::max(10, std::min(samples, 50));
  for (int s = 0; s < trials; ++s) {
    // Random decompositions of the same state: psi_i ~ V_i0 |00> + V_i1 |11>
    // with V a random isometry.
    const std::size_t n = 2 + static_cast<std::size_t>(s % 3);
    const ComplexMatrix v = random_unitary(n, rng);
    std::vector<PureState> comps;
    std::vector<double> p;
    for (std::size_t i = 0; i < n; ++i) {
      ComplexVector amps{v(i, 0) / std::sqrt(2.0), 0.0, 0.0, v(i, 1) / std::sqrt(2.0)};
      const double pi = std::norm(amps[0]) + std::norm(amps[3]);
      if (pi < 1e-14) continue;
      p.push_back(pi);
      comps.push_back(PureState::normalized(2, std::move(amps)));
    }
    const double total = std::accumulate(p.begin(), p.end(), 0.0);
    for (auto& x : p) x /= total;
    if (mixture_upper_bound(p, comps) > 0.5 + 1e-12) ++strict;
  }
  if (strict != trials) counter.violation(1.0);
  counter.note("F=" + format_double(f_counter) + ", " + std::to_string(strict) +
               "/" + std::to_string(trials) + " decompositions strictly above");

  Check perm("mixtures/permutation-mixtures", 1e-6);
  int equal = 0;
  const int perm_trials = std::max(1, std::min(samples, 20));
  for (int s = 0; s < perm_trials; ++s) {
    std::vector<std::size_t> sigma(d);
    std::iota(sigma.begin(), sigma.end(), 0);
    for (std::size_t i = d; i > 1; --i) std::swap(sigma[i - 1], sigma[rng.below(i)]);
    std::vector<double> p(d);
    for (auto& x : p) x = rng.uniform() + 1e-3;
    const double total = std::accumulate(p.begin(), p.end(), 0.0);
    for (auto& x : p) x /= total;
    std::vector<PureState> comps;
    for (std::size_t i = 0; i < d; ++i) comps.push_back(basis_state(d, i, sigma[i]));
    OptimizerConfig config;
    config.seed = seed + static_cast<std::uint64_t>(s);
    const double f = fef_maximize(permutation_mixture(d, sigma, p), config).value;
    perm.violation(std::abs(f - Inv(d)));
    if (decomposition_equality_check(p, comps, config).equality_holds) ++equal;
  }
  if (equal != perm_trials) perm.violation(1.0);
  perm.note(std::to_string(equal) + "/" + std::to_string(perm_trials) +
            " decompositions attain equality");

  return {upper.done(), counter.done(), perm.done()};
}

std::vector<PropertyCheck> Superpositions(std::size_t d, int samples,
                                          std::uint64_t seed) {
  Rng rng(mix_seed(seed) ^ 0x4);

  Check printed("superposition/sandwich-as-printed", 1e-8);
  Check triangle("superposition/triangle-core", 1e-8);
  int printed_failures = 0;
  for (int s = 0; s < samples; ++s) {
    const PureState phi1 = random_pure(d, rng);
    const PureState phi2 = random_pure(d, rng);
    Complex alpha = rng.complex_normal();
    Complex beta = rng.complex_normal();
    const double n = std::sqrt(std::norm(alpha) + std::norm(beta));
    alpha /= n;
    beta /= n;
    const Complex coeffs[] = {alpha, beta};
    const PureState states[] = {phi1, phi2};
    const Superposition psi = superpose(coeffs, states);
    const SuperpositionBounds b = superposition_bounds(alpha, beta, phi1, phi2);
    const double value = psi.gamma * std::sqrt(fef_pure(psi.state));
    const double miss = std::max({b.lower - value, value - b.upper, 0.0});
    if (miss > 1e-8) ++printed_failures;
    printed.violation(miss);
    triangle.violation(std::max(
        {b.lower_uncapped - value, value - b.upper_uncapped, 0.0}));
  }
  printed.note(std::to_string(printed_failures) + "/" +
               std::to_string(samples) + " samples outside");

  // Boundary examples (two qubits).
  Check upper("superposition/upper-bound-attained", 1e-12);
  {
    const double h = 1.0 / std::sqrt(2.0);
    const Complex alpha = h, beta = h;
    const PureState phi1 = basis_state(2, 0, 0), phi2 = basis_state(2, 1, 1);
    const Complex coeffs[] = {alpha, beta};
    const PureState states[] = {phi1, phi2};
    const Superposition psi = superpose(coeffs, states);
    const double value = psi.gamma * std::sqrt(fef_pure(psi.state));
    upper.violation(std::abs(value - superposition_bounds(alpha, beta, phi1, phi2).upper));
  }
  Check lower("superposition/lower-bound-attained", 1e-12);
  {
    const double h = 1.0 / std::sqrt(2.0);
    const PureState phi1 = PureState::from_amplitudes(2, {h, 0.0, 0.0, -h});
    const PureState phi2 = basis_state(2, 1, 1);
    const Complex alpha = std::sqrt(2.0), beta = 1.0;  // alpha phi1 + beta phi2 = |00>
    const Complex coeffs[] = {alpha, beta};
    const PureState states[] = {phi1, phi2};
    const Superposition psi = superpose(coeffs, states);
    const double value = psi.gamma * std::sqrt(fef_pure(psi.state));
    lower.violation(std::abs(value - superposition_bounds(alpha, beta, phi1, phi2).lower));
  }
  return {printed.done(), triangle.done(), upper.done(), lower.done()};
}

}  // namespace

std::vector<PropertyCheck> run_verify_suite(std::string_view suite,
                                            std::size_t d, int samples,
                                            std::uint64_t seed) {
  if (d < 2 || d > 6) throw std::invalid_argument("verify: d must lie in [2, 6]");
  if (samples < 1) throw std::invalid_argument("verify: samples must be >= 1");
  std::vector<PropertyCheck> out;
  const auto append = [&out](std::vector<PropertyCheck> more) {
    out.insert(out.end(), more.begin(), more.end());
  };
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "bounds") { append(Bounds(d, samples, seed)); known = true; }
  if (all || suite == "relations") { append(Relations(d, samples, seed)); known = true; }
  if (all || suite == "mixtures") { append(Mixtures(d, samples, seed)); known = true; }
  if (all || suite == "superposition") { append(Superpositions(d, samples, seed)); known = true; }
  if (!known) {
    throw std::invalid_argument("verify: unknown suite '" + std::string(suite) +
                                "' (bounds, relations, mixtures, superposition, all)");
  }
  return out;
}

}  // namespace fefkit::cli
