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

// fef: fully entangled fraction calculator.
//
//   fef compute state.json --method both
//   fef family werner --d 3 --f-min -1 --f-max 1 --steps 21 --output w3.csv
//   fef verify all --d 2 --samples 100
//   fef random density --d 3 --rank 2 --seed 7 --output rho.json

#include <iostream>

#include "CLI11.hpp"
#include "fefkit/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace fefkit::cli;

  CLI::App app{"Fully entangled fraction of d x d bipartite states"};
  app.require_subcommand(1);

  ComputeOptions compute;
  auto* c = app.add_subcommand("compute", "FEF of a state file");
  c->add_option("input", compute.input, "JSON state file")->required();
  c->add_option("--method", compute.method, "exact | numeric | both")
      ->check(CLI::IsMember({"exact", "numeric", "both"}));
  c->add_option("--restarts", compute.restarts, "optimizer restarts");
  c->add_option("--tol", compute.tol, "absolute improvement tolerance");
  c->add_option("--seed", compute.seed, "base seed");
  c->add_flag("--emit-unitary", compute.emit_unitary, "print the maximizing unitary");

  FamilyOptions family;
  auto* f = app.add_subcommand("family", "scan an isotropic or Werner family to CSV");
  f->add_option("family", family.family, "isotropic | werner")
      ->required()
      ->check(CLI::IsMember({"isotropic", "werner"}));
  f->add_option("--d", family.d, "local dimension")->required();
  f->add_option("--f-min", family.f_min, "first f")->required();
  f->add_option("--f-max", family.f_max, "last f")->required();
  f->add_option("--steps", family.steps, "grid points")->required();
  f->add_option("--output", family.output, "CSV path, - for stdout");
  f->add_option("--seed", family.seed, "base seed");
  f->add_option("--restarts", family.restarts, "optimizer restarts");
  f->add_option("--tol", family.tol, "absolute improvement tolerance");

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "run property suites");
  v->add_option("suite", verify.suite, "bounds | relations | mixtures | superposition | all")
      ->check(CLI::IsMember({"bounds", "relations", "mixtures", "superposition", "all"}));
  v->add_option("--d", verify.d, "local dimension in [2, 6]");
  v->add_option("--samples", verify.samples, "random samples per property");
  v->add_option("--seed", verify.seed, "base seed");

  RandomOptions random;
  auto* r = app.add_subcommand("random", "write a random state file");
  r->add_option("kind", random.kind, "pure | density")
      ->required()
      ->check(CLI::IsMember({"pure", "density"}));
  r->add_option("--d", random.d, "local dimension")->required();
  r->add_option("--rank", random.rank, "density matrix rank");
  r->add_option("--seed", random.seed, "seed");
  r->add_option("--output", random.output, "output path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  if (c->parsed()) return cmd_compute(compute, std::cout, std::cerr);
  if (f->parsed()) return cmd_family(family, std::cout, std::cerr);
  if (v->parsed()) return cmd_verify(verify, std::cout, std::cerr);
  return cmd_random(random, std::cout, std::cerr);
}
