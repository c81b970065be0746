// Copyright 2026 The propaudit Authors
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

#ifndef PROPAUDIT_EXPERIMENT_H_
#define PROPAUDIT_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace propaudit {

enum class Axiom { kMpjrPlus, kDcMpjrPlus };

const char* AxiomName(Axiom axiom);

// Synthetic satisfaction-rate study: for every (n, g) cell, Gaussian
// instances with M = N are generated and uniformly sampled size-k selections
// are audited.
struct ExperimentConfig {
  std::vector<std::size_t> n_values{20, 50, 80, 100};
  std::vector<std::size_t> g_values{4, 5, 6};
  std::size_t instances_per_cell = 50;
  std::size_t selections_per_instance = 1000;
  std::size_t k = 5;
  double sigma = 0.04;
  std::uint64_t master_seed = 0;
  std::vector<Axiom> axioms{Axiom::kMpjrPlus, Axiom::kDcMpjrPlus};
  double gamma = 1.0;
  // 0: PROPAUDIT_THREADS if set, else std::thread::hardware_concurrency().
  std::size_t threads = 0;
};

struct ExperimentRow {
  std::size_t n = 0;
  std::size_t g = 0;
  Axiom axiom = Axiom::kMpjrPlus;
  double gamma = 1.0;
  std::uint64_t satisfied = 0;
  std::uint64_t total = 0;
  double rate = 0.0;
  double mean_ms = 0.0;
};

struct ExperimentReport {
  std::uint64_t master_seed = 0;
  // Cell-major (n, then g), axioms in config order.
  std::vector<ExperimentRow> rows;
  double wall_seconds = 0.0;
  std::size_t threads_used = 1;
};

// Throws ConfigError on empty grids, zero counts, g > n, k > min(n), gamma < 1
// or sigma < 0.
void ValidateExperimentConfig(const ExperimentConfig& config);

// Seeds: cell = DeriveSeed(master, n << 32 | g); instance i of a cell is
// generated from DeriveSeed(cell, i); selection s of that instance from
// DeriveSeed(instance_seed, s + 1). Counts do not depend on the thread count.
//
// When both axioms are audited, a selection passing mPJR+ but failing
// DC-mPJR+ is a bug and aborts the run with an Error naming its seeds.
ExperimentReport RunExperiment(const ExperimentConfig& config);

// Columns n,g,axiom,gamma,satisfied,total,rate,mean_ms,seed. Without timing
// the mean_ms column is left empty so reruns compare byte-identical.
void WriteExperimentCsv(const ExperimentReport& report, std::ostream& out,
                        bool include_timing = true);

// Tab-separated bar-chart table: one block per g, one line per n, one column
// per axiom rate.
void WritePlotData(const ExperimentReport& report, std::ostream& out);

// Number of worker threads honoring PROPAUDIT_THREADS.
std::size_t ResolveThreadCount(std::size_t requested);

}  // namespace propaudit

#endif  // PROPAUDIT_EXPERIMENT_H_
