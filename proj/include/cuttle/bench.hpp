//   Copyright 2026 The cuttle authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.

#ifndef CUTTLE_BENCH_HPP
#define CUTTLE_BENCH_HPP

#include <span>
#include <string>
#include <vector>

#include "cuttle/solver.hpp"

namespace cuttle {

// Small deterministic generator (splitmix64) so instances and permutations
// are reproducible across platforms and standard-library versions.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // Uniform in [lo, hi], inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
  bool coin() { return next() & 1; }
};

// Shifted geometric mean (prod(v_i + s))^(1/n) - s; throws on an empty list
// or a non-positive shift.
double shiftedGeoMean(std::span<const double> values, double shift);

// --- instance generators ---

Problem randomPbProblem(Rng& rng, int numVars, int numConstraints, long long maxCoeff);
// Pigeonhole principle: `pigeons` pigeons into `holes` holes; unsatisfiable
// whenever pigeons > holes.
Problem phpProblem(int pigeons, int holes);
Problem random3SatProblem(Rng& rng, int numVars, int numClauses);

// Seeded shuffle of constraint order plus a renumbering of the variables;
// preserves satisfiability.
Problem permuted(const Problem& p, uint64_t seed);

// --- benchmark harness ---

struct NamedProblem {
  std::string name;
  Problem problem;
};

struct BenchRecord {
  std::string instanceName;
  uint64_t permutationSeed = 0;
  AnalysisMode strategy = AnalysisMode::Mir;
  Status status = Status::Unknown;
  int64_t nodes = 0;
  int64_t conflicts = 0;
  double timeSeconds = 0.0;
  double learnedPropagatingFraction = 0.0;
  double meanLearnedLength = 0.0;
};

std::string recordToJsonLine(const BenchRecord& r);

struct SuiteConfig {
  std::vector<AnalysisMode> strategies = {
      AnalysisMode::None, AnalysisMode::Clausal, AnalysisMode::Saturation,
      AnalysisMode::Division, AnalysisMode::Mir};
  std::vector<uint64_t> seeds = {1};
  SolverConfig solver;  // analysis/seed fields are overridden per run
  int threads = 1;
};

struct SuiteResult {
  std::vector<BenchRecord> records;  // one per (instance, seed, strategy)
  std::string table;                 // rendered per-subset summary
};

// Runs every (instance, permutation seed, strategy) combination, in parallel
// when configured; records merge deterministically by job order.
SuiteResult runSuite(const std::vector<NamedProblem>& instances, const SuiteConfig& cfg);

}  // namespace cuttle

#endif  // CUTTLE_BENCH_HPP
