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

#include "cuttle/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace cuttle {

double shiftedGeoMean(std::span<const double> values, double shift) {
  if (values.empty()) throw std::invalid_argument("shiftedGeoMean: empty list");
  if (shift <= 0.0) throw std::invalid_argument("shiftedGeoMean: shift must be positive");
  double logSum = 0.0;
  for (double v : values) {
    if (v < 0.0) throw std::invalid_argument("shiftedGeoMean: negative value");
    logSum += std::log(v + shift);
  }
  return std::exp(logSum / static_cast<double>(values.size())) - shift;
}

Problem randomPbProblem(Rng& rng, int numVars, int numConstraints, long long maxCoeff) {
  Problem p;
  p.numVars = numVars;
  for (int i = 0; i < numConstraints; ++i) {
    int len = static_cast<int>(rng.range(2, std::min(numVars, 5)));
    // distinct variables for this constraint
    std::vector<int> vars;
    while (static_cast<int>(vars.size()) < len) {
      int v = static_cast<int>(rng.range(1, numVars));
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    RawConstraint rc;
    Int sum = 0;
    for (int v : vars) {
      Int coeff = rng.range(1, maxCoeff);
      sum += coeff;
      rc.terms.push_back({coeff, Lit::make(v, rng.coin())});
    }
    rc.rel = Relation::Ge;
    rc.rhs = rng.range(1, sum.as64());
    p.raw.push_back(rc);
    for (PBConstraint& c : normalize(rc)) p.constraints.push_back(std::move(c));
  }
  return p;
}

Problem phpProblem(int pigeons, int holes) {
  Problem p;
  p.numVars = pigeons * holes;
  auto var = [&](int pigeon, int hole) { return (pigeon - 1) * holes + hole; };
  for (int i = 1; i <= pigeons; ++i) {
    RawConstraint rc;
    for (int j = 1; j <= holes; ++j) rc.terms.push_back({1, Lit::pos(var(i, j))});
    rc.rel = Relation::Ge;
    rc.rhs = 1;
    p.raw.push_back(rc);
    for (PBConstraint& c : normalize(rc)) p.constraints.push_back(std::move(c));
  }
  for (int j = 1; j <= holes; ++j) {
    // at most one pigeon per hole
    RawConstraint rc;
    for (int i = 1; i <= pigeons; ++i) rc.terms.push_back({1, Lit::pos(var(i, j))});
    rc.rel = Relation::Le;
    rc.rhs = 1;
    p.raw.push_back(rc);
    for (PBConstraint& c : normalize(rc)) p.constraints.push_back(std::move(c));
  }
  return p;
}

Problem random3SatProblem(Rng& rng, int numVars, int numClauses) {
  Problem p;
  p.numVars = numVars;
  for (int i = 0; i < numClauses; ++i) {
    std::vector<int> vars;
    while (static_cast<int>(vars.size()) < std::min(3, numVars)) {
      int v = static_cast<int>(rng.range(1, numVars));
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    RawConstraint rc;
    for (int v : vars) rc.terms.push_back({1, Lit::make(v, rng.coin())});
    rc.rel = Relation::Ge;
    rc.rhs = 1;
    p.raw.push_back(rc);
    for (PBConstraint& c : normalize(rc)) p.constraints.push_back(std::move(c));
  }
  return p;
}

Problem permuted(const Problem& p, uint64_t seed) {
  Rng rng(seed);
  // variable renumbering
  std::vector<int> perm(p.numVars + 1);
  for (int v = 1; v <= p.numVars; ++v) perm[v] = v;
  for (int v = p.numVars; v >= 2; --v)
    std::swap(perm[v], perm[rng.range(1, v)]);
  auto mapLit = [&](Lit l) { return Lit::make(perm[l.var()], l.negated()); };

  Problem out;
  out.numVars = p.numVars;
  out.hasObjective = p.hasObjective;
  for (const RawTerm& t : p.objective) out.objective.push_back({t.coeff, mapLit(t.lit)});

  if (!p.raw.empty()) {
    std::vector<RawConstraint> raw = p.raw;
    for (size_t i = raw.size(); i >= 2; --i)
      std::swap(raw[i - 1], raw[rng.range(0, static_cast<long long>(i) - 1)]);
    for (RawConstraint& rc : raw) {
      for (RawTerm& t : rc.terms) t.lit = mapLit(t.lit);
      for (PBConstraint& c : normalize(rc)) out.constraints.push_back(std::move(c));
      out.raw.push_back(std::move(rc));
    }
    return out;
  }
  std::vector<PBConstraint> cs = p.constraints;
  for (size_t i = cs.size(); i >= 2; --i)
    std::swap(cs[i - 1], cs[rng.range(0, static_cast<long long>(i) - 1)]);
  for (const PBConstraint& c : cs) {
    std::vector<std::pair<Lit, Int>> terms;
    for (const Term& t : c.terms()) terms.emplace_back(mapLit(t.lit), t.coeff);
    out.constraints.push_back(PBConstraint::fromTerms(std::move(terms), c.degree()));
  }
  return out;
}

std::string recordToJsonLine(const BenchRecord& r) {
  nlohmann::json j;
  j["instance"] = r.instanceName;
  j["seed"] = r.permutationSeed;
  j["strategy"] = toString(r.strategy);
  j["status"] = toString(r.status);
  j["nodes"] = r.nodes;
  j["conflicts"] = r.conflicts;
  j["time"] = r.timeSeconds;
  j["propagatingFraction"] = r.learnedPropagatingFraction;
  j["meanLearnedLength"] = r.meanLearnedLength;
  return j.dump();
}

namespace {

struct SubsetStats {
  std::string label;
  std::map<AnalysisMode, std::vector<const BenchRecord*>> byStrategy;
};

void renderSubset(std::ostringstream& os, const SubsetStats& subset,
                  const std::vector<AnalysisMode>& strategies) {
  double baseTime = -1.0, baseNodes = -1.0;
  struct Row {
    AnalysisMode mode;
    size_t solved;
    double sgmTime, sgmNodes;
  };
  std::vector<Row> rows;
  for (AnalysisMode m : strategies) {
    auto it = subset.byStrategy.find(m);
    if (it == subset.byStrategy.end() || it->second.empty()) continue;
    std::vector<double> times, nodes;
    size_t solved = 0;
    for (const BenchRecord* r : it->second) {
      times.push_back(r->timeSeconds);
      nodes.push_back(static_cast<double>(r->nodes));
      if (r->status != Status::Unknown) ++solved;
    }
    Row row{m, solved, shiftedGeoMean(times, 1.0), shiftedGeoMean(nodes, 100.0)};
    if (m == AnalysisMode::None) {
      baseTime = row.sgmTime;
      baseNodes = row.sgmNodes;
    }
    rows.push_back(row);
  }
  size_t count = rows.empty() ? 0 : subset.byStrategy.begin()->second.size();
  os << subset.label << "(" << count << ")\n";
  os << "  " << std::left << std::setw(12) << "setting" << std::right
     << std::setw(8) << "solved" << std::setw(12) << "time(s)" << std::setw(12)
     << "nodes" << std::setw(11) << "time quot" << std::setw(12) << "nodes quot"
     << "\n";
  for (const Row& r : rows) {
    os << "  " << std::left << std::setw(12) << toString(r.mode) << std::right
       << std::setw(8) << r.solved << std::setw(12) << std::fixed
       << std::setprecision(2) << r.sgmTime << std::setw(12) << r.sgmNodes;
    if (baseTime > 0.0)
      os << std::setw(11) << std::setprecision(2) << r.sgmTime / baseTime;
    else
      os << std::setw(11) << "-";
    if (baseNodes > 0.0)
      os << std::setw(12) << std::setprecision(2) << r.sgmNodes / baseNodes;
    else
      os << std::setw(12) << "-";
    os << "\n";
  }
}

}  // namespace

SuiteResult runSuite(const std::vector<NamedProblem>& instances, const SuiteConfig& cfg) {
  struct Job {
    const NamedProblem* instance;
    uint64_t seed;
    AnalysisMode strategy;
  };
  std::vector<Job> jobs;
  for (const NamedProblem& np : instances)
    for (uint64_t seed : cfg.seeds)
      for (AnalysisMode m : cfg.strategies) jobs.push_back({&np, seed, m});

  std::vector<BenchRecord> records(jobs.size());
  std::atomic<size_t> nextJob{0};
  auto worker = [&]() {
    while (true) {
      size_t i = nextJob.fetch_add(1);
      if (i >= jobs.size()) return;
      const Job& job = jobs[i];
      Problem inst = permuted(job.instance->problem, job.seed);
      SolverConfig sc = cfg.solver;
      sc.analysis = job.strategy;
      sc.seed = job.seed;
      SolveOutcome out = solve(inst, sc);
      BenchRecord& r = records[i];
      r.instanceName = job.instance->name;
      r.permutationSeed = job.seed;
      r.strategy = job.strategy;
      r.status = out.status;
      r.nodes = out.stats.nodes();
      r.conflicts = out.stats.conflicts;
      r.timeSeconds = out.stats.wallTime;
      r.learnedPropagatingFraction = out.stats.propagatingFraction();
      r.meanLearnedLength = out.stats.meanLearnedLength;
    }
  };
  int threads = std::max(1, cfg.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Group per (instance, seed) to compute the subsets.
  std::map<std::pair<std::string, uint64_t>, std::vector<const BenchRecord*>> byRun;
  for (const BenchRecord& r : records)
    byRun[{r.instanceName, r.permutationSeed}].push_back(&r);

  SubsetStats all{"all", {}}, affected{"affected", {}}, allOptimal{"all-optimal", {}};
  for (auto& [key, rs] : byRun) {
    bool diverged = false;
    bool solvedByAll = true;
    for (const BenchRecord* r : rs) {
      if (r->nodes != rs.front()->nodes || r->conflicts != rs.front()->conflicts ||
          r->status != rs.front()->status)
        diverged = true;
      if (r->status == Status::Unknown) solvedByAll = false;
    }
    for (const BenchRecord* r : rs) {
      all.byStrategy[r->strategy].push_back(r);
      if (diverged) affected.byStrategy[r->strategy].push_back(r);
      if (solvedByAll) allOptimal.byStrategy[r->strategy].push_back(r);
    }
  }

  SuiteResult result;
  result.records = std::move(records);
  std::ostringstream os;
  renderSubset(os, all, cfg.strategies);
  renderSubset(os, affected, cfg.strategies);
  renderSubset(os, allOptimal, cfg.strategies);
  os << "affected = any statistic differs across settings"
     << " (a proxy for execution-path divergence)\n";
  result.table = os.str();
  return result;
}

}  // namespace cuttle
