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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cuttle/bench.hpp"
#include "cuttle/opb.hpp"

using namespace cuttle;

int main(int argc, char** argv) {
  CLI::App app{"cuttle-bench - run strategies over a directory of OPB instances"};
  std::string dir, strategiesCsv = "none,clausal,saturation,division,mir";
  std::string seedsCsv = "1", recordsPath;
  int64_t conflictLimit = -1, nodeLimit = -1;
  double timeLimit = 10.0;
  int threads = 1;

  app.add_option("dir", dir, "directory of .opb files")->required();
  app.add_option("--strategies", strategiesCsv, "comma-separated analysis settings");
  app.add_option("--seeds", seedsCsv, "comma-separated permutation seeds");
  app.add_option("--conflict-limit", conflictLimit, "per-run conflict limit");
  app.add_option("--node-limit", nodeLimit, "per-run node limit");
  app.add_option("--time-limit", timeLimit, "per-run time limit in seconds");
  app.add_option("--jobs", threads, "concurrent solver workers");
  app.add_option("--records", recordsPath, "write line-delimited JSON records here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  SuiteConfig cfg;
  cfg.strategies.clear();
  std::stringstream ss(strategiesCsv);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok == "none") cfg.strategies.push_back(AnalysisMode::None);
    else if (tok == "clausal") cfg.strategies.push_back(AnalysisMode::Clausal);
    else if (tok == "saturation") cfg.strategies.push_back(AnalysisMode::Saturation);
    else if (tok == "division") cfg.strategies.push_back(AnalysisMode::Division);
    else if (tok == "mir") cfg.strategies.push_back(AnalysisMode::Mir);
    else {
      std::cerr << "error: unknown strategy '" << tok << "'\n";
      return 1;
    }
  }
  cfg.seeds.clear();
  std::stringstream s2(seedsCsv);
  for (std::string tok; std::getline(s2, tok, ',');) {
    try {
      cfg.seeds.push_back(std::stoull(tok));
    } catch (...) {
      std::cerr << "error: bad seed '" << tok << "'\n";
      return 1;
    }
  }
  if (cfg.strategies.empty() || cfg.seeds.empty()) {
    std::cerr << "error: need at least one strategy and one seed\n";
    return 1;
  }
  if (conflictLimit >= 0) cfg.solver.conflictLimit = conflictLimit;
  if (nodeLimit >= 0) cfg.solver.nodeLimit = nodeLimit;
  if (timeLimit >= 0) cfg.solver.timeLimitSeconds = timeLimit;
  cfg.threads = threads;

  std::vector<NamedProblem> instances;
  std::error_code ec;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec))
    if (entry.path().extension() == ".opb") files.push_back(entry.path());
  if (ec) {
    std::cerr << "error: cannot read directory '" << dir << "'\n";
    return 1;
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      OpbProblem opb = parseOpb(buf.str());
      instances.push_back({path.filename().string(), toProblem(opb)});
    } catch (const ParseError& e) {
      std::cerr << "error: " << path.string() << ": " << e.what() << "\n";
      return 1;
    }
  }
  if (instances.empty()) {
    std::cerr << "error: no .opb files in '" << dir << "'\n";
    return 1;
  }

  SuiteResult result = runSuite(instances, cfg);

  std::ostream* recOut = &std::cout;
  std::ofstream recFile;
  if (!recordsPath.empty()) {
    recFile.open(recordsPath);
    if (!recFile) {
      std::cerr << "error: cannot write '" << recordsPath << "'\n";
      return 1;
    }
    recOut = &recFile;
  }
  for (const BenchRecord& r : result.records) *recOut << recordToJsonLine(r) << "\n";
  std::cout << result.table;
  return 0;
}
