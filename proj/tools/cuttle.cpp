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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cuttle/opb.hpp"
#include "cuttle/solver.hpp"

namespace {

using namespace cuttle;

// Exact rational from a decimal string like "0.15", so the length cap never
// suffers floating-point rounding.
bool parseFraction(const std::string& s, long long& num, long long& den) {
  num = 0;
  den = 1;
  size_t i = 0;
  bool digits = false;
  for (; i < s.size() && s[i] != '.'; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    num = num * 10 + (s[i] - '0');
    digits = true;
    if (num > (1LL << 40)) return false;
  }
  if (i < s.size() && s[i] == '.') {
    for (++i; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
      num = num * 10 + (s[i] - '0');
      den *= 10;
      digits = true;
      if (num > (1LL << 40) || den > (1LL << 40)) return false;
    }
  }
  return digits && i == s.size();
}

void printModel(const std::vector<int8_t>& model) {
  std::ostringstream os;
  os << "v";
  for (size_t v = 1; v < model.size(); ++v)
    os << (model[v] ? " x" : " -x") << v;
  std::cout << os.str() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cuttle - a conflict-driven pseudo-Boolean solver"};
  std::string analysis = "mir", weakening = "all-at-once", heuristic = "activity";
  std::string lengthFrac = "0.15", statsPath, file;
  int64_t conflictLimit = -1, nodeLimit = -1, maxLearned = 0;
  double timeLimit = -1.0;
  uint64_t seed = 0;
  bool restarts = false;

  app.add_option("--analysis", analysis, "conflict analysis backend")
      ->check(CLI::IsMember({"none", "clausal", "saturation", "division", "mir"}));
  app.add_option("--weakening", weakening, "weakening policy during reduction")
      ->check(CLI::IsMember({"iterative", "all-at-once"}));
  app.add_option("--max-length-frac", lengthFrac,
                 "accept learned constraints shorter than this fraction of the variables");
  app.add_option("--conflict-limit", conflictLimit, "stop after N conflicts");
  app.add_option("--node-limit", nodeLimit, "stop after N nodes (decisions+conflicts)");
  app.add_option("--time-limit", timeLimit, "stop after S seconds");
  app.add_option("--seed", seed, "seed recorded with the run");
  app.add_option("--heuristic", heuristic, "decision heuristic")
      ->check(CLI::IsMember({"activity", "fixed"}));
  app.add_option("--stats-json", statsPath, "write run statistics as JSON");
  app.add_flag("--restarts", restarts, "enable Luby restarts");
  app.add_option("--max-learned", maxLearned,
                 "delete least-recently-propagated learned constraints over this bound");
  app.add_option("file", file, "OPB input file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  SolverConfig config;
  if (analysis == "none") config.analysis = AnalysisMode::None;
  else if (analysis == "clausal") config.analysis = AnalysisMode::Clausal;
  else if (analysis == "saturation") config.analysis = AnalysisMode::Saturation;
  else if (analysis == "division") config.analysis = AnalysisMode::Division;
  else config.analysis = AnalysisMode::Mir;
  config.weakening =
      weakening == "iterative" ? Weakening::Iterative : Weakening::AllAtOnce;
  config.heuristic = heuristic == "fixed" ? DecisionHeuristic::FixedOrder
                                          : DecisionHeuristic::Activity;
  if (!parseFraction(lengthFrac, config.capNumerator, config.capDenominator) ||
      config.capNumerator <= 0 || config.capNumerator > config.capDenominator) {
    std::cerr << "error: --max-length-frac must be a decimal in (0,1]\n";
    return 1;
  }
  if (conflictLimit >= 0) config.conflictLimit = conflictLimit;
  if (nodeLimit >= 0) config.nodeLimit = nodeLimit;
  if (timeLimit >= 0) config.timeLimitSeconds = timeLimit;
  config.seed = seed;
  config.lubyRestarts = restarts;
  config.maxLearned = maxLearned;

  std::ifstream in(file);
  if (!in) {
    std::cerr << "error: cannot open '" << file << "'\n";
    return 1;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  OpbProblem opb;
  try {
    opb = parseOpb(buf.str());
  } catch (const ParseError& e) {
    std::cerr << "error: " << file << ": " << e.what() << "\n";
    return 1;
  }
  for (const std::string& w : opb.warnings) std::cerr << "warning: " << w << "\n";

  Problem problem = toProblem(opb);
  SolveHooks hooks;
  hooks.onImprovedObjective = [](const Int& v) {
    std::cout << "o " << v << "\n" << std::flush;
  };

  SolveOutcome out;
  try {
    out = solve(problem, config, hooks);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (!statsPath.empty()) {
    nlohmann::json j;
    j["status"] = toString(out.status);
    j["optimumProven"] = out.optimumProven;
    if (out.objectiveValue) j["objectiveValue"] = out.objectiveValue->toString();
    j["decisions"] = out.stats.decisions;
    j["conflicts"] = out.stats.conflicts;
    j["propagations"] = out.stats.propagations;
    j["learnedCount"] = out.stats.learnedCount;
    j["learnedPropagatedAtLeastOnce"] = out.stats.learnedPropagatedAtLeastOnce;
    j["meanLearnedLength"] = out.stats.meanLearnedLength;
    j["weakenedFraction"] = out.stats.weakenedFraction;
    j["propagatingFraction"] = out.stats.propagatingFraction();
    j["nodes"] = out.stats.nodes();
    j["wallTime"] = out.stats.wallTime;
    std::ofstream js(statsPath);
    if (!js) {
      std::cerr << "error: cannot write '" << statsPath << "'\n";
      return 1;
    }
    js << j.dump(2) << "\n";
  }

  if (problem.hasObjective) {
    if (out.status == Status::Sat && out.optimumProven) {
      std::cout << "s OPTIMUM FOUND\n";
      printModel(*out.model);
      return 30;
    }
    if (out.status == Status::Sat) {
      std::cout << "s SATISFIABLE\n";
      printModel(*out.model);
      return 10;
    }
    if (out.status == Status::Unsat) {
      std::cout << "s UNSATISFIABLE\n";
      return 20;
    }
    std::cout << "s UNKNOWN\n";
    return 0;
  }
  if (out.status == Status::Sat) {
    std::cout << "s SATISFIABLE\n";
    printModel(*out.model);
    return 10;
  }
  if (out.status == Status::Unsat) {
    std::cout << "s UNSATISFIABLE\n";
    return 20;
  }
  std::cout << "s UNKNOWN\n";
  return 0;
}
