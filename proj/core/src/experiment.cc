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

#include "propaudit/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>

#include "propaudit/errors.h"
#include "propaudit/generators.h"
#include "propaudit/rng.h"
#include "propaudit/verify.h"

namespace propaudit {
namespace {

struct AxiomTally {
  std::uint64_t satisfied = 0;
  std::uint64_t total = 0;
  double total_ms = 0.0;
};

std::string FormatDouble(const char* format, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), format, value);
  return buffer;
}

}  // namespace

const char* AxiomName(Axiom axiom) {
  return axiom == Axiom::kMpjrPlus ? "mpjr+" : "dc-mpjr+";
}

std::size_t ResolveThreadCount(std::size_t requested) {
  std::size_t threads = requested;
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  if (const char* env = std::getenv("PROPAUDIT_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) threads = std::min(threads, static_cast<std::size_t>(cap));
  }
  return std::max<std::size_t>(1, threads);
}

void ValidateExperimentConfig(const ExperimentConfig& config) {
  if (config.n_values.empty() || config.g_values.empty()) {
    throw ConfigError("n and g grids must be nonempty");
  }
  if (config.instances_per_cell == 0 || config.selections_per_instance == 0) {
    throw ConfigError("instance and selection counts must be positive");
  }
  if (config.axioms.empty()) throw ConfigError("no axiom to audit");
  if (config.k == 0) throw ConfigError("k must be positive");
  const std::size_t min_n =
      *std::min_element(config.n_values.begin(), config.n_values.end());
  const std::size_t max_g =
      *std::max_element(config.g_values.begin(), config.g_values.end());
  if (config.k > min_n) {
    throw ConfigError("k exceeds the smallest n (candidates are the agents)");
  }
  if (max_g == 0 || max_g > min_n) {
    throw ConfigError("every g must lie in [1, n]");
  }
  if (*std::min_element(config.g_values.begin(), config.g_values.end()) == 0) {
    throw ConfigError("every g must lie in [1, n]");
  }
  if (!(config.sigma >= 0.0)) throw ConfigError("sigma must be >= 0");
  if (!(config.gamma >= 1.0)) throw ConfigError("gamma must be >= 1");
}

ExperimentReport RunExperiment(const ExperimentConfig& config) {
  ValidateExperimentConfig(config);
  const auto wall_start = std::chrono::steady_clock::now();

  struct Cell {
    std::size_t n;
    std::size_t g;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (std::size_t n : config.n_values) {
    for (std::size_t g : config.g_values) {
      cells.push_back({n, g, DeriveSeed(config.master_seed, (n << 32) | g)});
    }
  }
  const std::size_t axis = config.axioms.size();
  const std::size_t tasks = cells.size() * config.instances_per_cell;
  // tallies[task * axis + a]; summed per cell afterwards so the counts do not
  // depend on scheduling.
  std::vector<AxiomTally> tallies(tasks * axis);

  const bool check_implication =
      std::find(config.axioms.begin(), config.axioms.end(), Axiom::kMpjrPlus) !=
          config.axioms.end() &&
      std::find(config.axioms.begin(), config.axioms.end(),
                Axiom::kDcMpjrPlus) != config.axioms.end();

  VerifyOptions options;
  options.gamma = config.gamma;

  std::atomic<std::size_t> next_task{0};
  std::atomic<bool> failed{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (;;) {
        const std::size_t task = next_task.fetch_add(1);
        if (task >= tasks || failed.load()) return;
        const Cell& cell = cells[task / config.instances_per_cell];
        const std::size_t index = task % config.instances_per_cell;
        const std::uint64_t instance_seed = DeriveSeed(cell.seed, index);
        GaussianConfig gaussian;
        gaussian.n = cell.n;
        gaussian.g = cell.g;
        gaussian.sigma = config.sigma;
        gaussian.seed = instance_seed;
        gaussian.k = config.k;
        // Same verdicts, no square roots in the inner loops.
        const Instance instance =
            GenerateGaussianInstance(gaussian).instance.Materialized();

        for (std::size_t s = 0; s < config.selections_per_instance; ++s) {
          const std::uint64_t selection_seed = DeriveSeed(instance_seed, s + 1);
          const Selection selection =
              SampleSelection(instance.num_candidates(), config.k,
                              selection_seed);
          bool mpjr_plus = false;
          bool dc = true;
          for (std::size_t a = 0; a < axis; ++a) {
            const Verdict verdict =
                config.axioms[a] == Axiom::kMpjrPlus
                    ? VerifyMpjrPlusSmallK(instance, selection, options)
                    : VerifyDcMpjrPlus(instance, selection, options);
            AxiomTally& tally = tallies[task * axis + a];
            tally.satisfied += verdict.satisfied;
            ++tally.total;
            tally.total_ms += verdict.elapsed_ms;
            if (config.axioms[a] == Axiom::kMpjrPlus) {
              mpjr_plus = verdict.satisfied;
            } else {
              dc = verdict.satisfied;
            }
          }
          if (check_implication && mpjr_plus && !dc) {
            throw Error("mPJR+ satisfied but DC-mPJR+ violated: n=" +
                        std::to_string(cell.n) + " g=" +
                        std::to_string(cell.g) + " instance_seed=" +
                        std::to_string(instance_seed) + " selection_seed=" +
                        std::to_string(selection_seed));
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      failed.store(true);
    }
  };

  const std::size_t thread_count =
      std::min(ResolveThreadCount(config.threads), std::max<std::size_t>(1, tasks));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < thread_count; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  ExperimentReport report;
  report.master_seed = config.master_seed;
  report.threads_used = thread_count;
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    for (std::size_t a = 0; a < axis; ++a) {
      AxiomTally sum;
      for (std::size_t i = 0; i < config.instances_per_cell; ++i) {
        const AxiomTally& t =
            tallies[(ci * config.instances_per_cell + i) * axis + a];
        sum.satisfied += t.satisfied;
        sum.total += t.total;
        sum.total_ms += t.total_ms;
      }
      ExperimentRow row;
      row.n = cells[ci].n;
      row.g = cells[ci].g;
      row.axiom = config.axioms[a];
      row.gamma = config.gamma;
      row.satisfied = sum.satisfied;
      row.total = sum.total;
      row.rate = static_cast<double>(sum.satisfied) /
                 static_cast<double>(sum.total);
      row.mean_ms = sum.total_ms / static_cast<double>(sum.total);
      report.rows.push_back(row);
    }
  }
  report.wall_seconds = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - wall_start)
                            .count();
  return report;
}

void WriteExperimentCsv(const ExperimentReport& report, std::ostream& out,
                        bool include_timing) {
  out << "n,g,axiom,gamma,satisfied,total,rate,mean_ms,seed\n";
  for (const ExperimentRow& row : report.rows) {
    out << row.n << ',' << row.g << ',' << AxiomName(row.axiom) << ','
        << FormatDouble("%g", row.gamma) << ',' << row.satisfied << ','
        << row.total << ',' << FormatDouble("%.6f", row.rate) << ','
        << (include_timing ? FormatDouble("%.6f", row.mean_ms) : std::string())
        << ',' << report.master_seed << '\n';
  }
}

void WritePlotData(const ExperimentReport& report, std::ostream& out) {
  std::vector<std::size_t> gs;
  std::vector<Axiom> axioms;
  for (const ExperimentRow& row : report.rows) {
    if (std::find(gs.begin(), gs.end(), row.g) == gs.end()) gs.push_back(row.g);
    if (std::find(axioms.begin(), axioms.end(), row.axiom) == axioms.end()) {
      axioms.push_back(row.axiom);
    }
  }
  for (std::size_t g : gs) {
    out << "# g=" << g << '\n' << 'n';
    for (Axiom a : axioms) out << '\t' << AxiomName(a);
    out << '\n';
    std::vector<std::size_t> ns;
    for (const ExperimentRow& row : report.rows) {
      if (row.g == g && std::find(ns.begin(), ns.end(), row.n) == ns.end()) {
        ns.push_back(row.n);
      }
    }
    for (std::size_t n : ns) {
      out << n;
      for (Axiom a : axioms) {
        for (const ExperimentRow& row : report.rows) {
          if (row.g == g && row.n == n && row.axiom == a) {
            out << '\t' << FormatDouble("%.6f", row.rate);
          }
        }
      }
      out << '\n';
    }
    out << '\n';
  }
}

}  // namespace propaudit
