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

#include "propaudit/generators.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "propaudit/embedding.h"
#include "propaudit/errors.h"
#include "propaudit/rng.h"

namespace propaudit {

GaussianSample GenerateGaussianInstance(const GaussianConfig& config) {
  if (config.g == 0 || config.n < config.g) {
    throw ConfigError("gaussian generator needs n >= g >= 1");
  }
  if (!(config.sigma >= 0.0)) throw ConfigError("sigma must be >= 0");
  if (config.k == 0 || config.k > config.n) {
    throw ConfigError("k must lie in [1, n] since candidates are the agents");
  }
  CounterRng rng(config.seed);
  GaussianSample sample{Instance::Euclidean(1, {0.0}, {0.0}, 1), {}, {}};
  sample.cluster_centers.resize(2 * config.g);
  for (double& v : sample.cluster_centers) v = rng.NextUniform();

  std::vector<double> coords(2 * config.n);
  sample.cluster_of.resize(config.n);
  for (std::size_t i = 0; i < config.n; ++i) {
    const std::size_t cluster = i % config.g;
    sample.cluster_of[i] = cluster;
    for (std::size_t t = 0; t < 2; ++t) {
      const double noise = rng.NextGaussian();
      coords[2 * i + t] =
          sample.cluster_centers[2 * cluster + t] + config.sigma * noise;
    }
  }
  std::vector<double> candidates = coords;
  sample.instance =
      Instance::Euclidean(2, std::move(coords), std::move(candidates), config.k);
  return sample;
}

Fixture IncomparabilityFixture(int which) {
  std::vector<std::string> agents{"1", "2", "3", "4", "5", "6"};
  std::vector<std::vector<std::size_t>> near;
  std::vector<std::string> candidates;
  std::vector<std::size_t> selection;
  if (which == 1) {
    // a, b, x1, x2, x3
    candidates = {"a", "b", "x1", "x2", "x3"};
    near = {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 3}, {0, 1, 4}};
    selection = {2, 3, 4};
  } else if (which == 2) {
    // z, x1, x2, x3
    candidates = {"z", "x1", "x2", "x3"};
    near = {{0, 1}, {0, 1}, {0, 1}, {0}, {2}, {3}};
    selection = {1, 2, 3};
  } else {
    throw InputError("incomparability fixture must be 1 or 2");
  }
  // Agent-candidate distances are 1 (listed) or 2, which is exactly the
  // approval embedding of the "distance 1" sets.
  const std::size_t m = candidates.size();
  const ApprovalInstance profile =
      ApprovalInstance::Create(agents.size(), m, std::move(near), 3);
  Instance instance =
      EmbedApproval(profile, std::move(agents), std::move(candidates));
  Selection chosen = Selection::For(instance, std::move(selection));
  return {std::move(instance), std::move(chosen)};
}

Instance ObjectiveFailureFixture() {
  std::vector<double> agents;
  agents.insert(agents.end(), 6, -1.0);
  agents.insert(agents.end(), 8, 0.0);
  agents.insert(agents.end(), 6, 1.0);
  agents.insert(agents.end(), 5, 1000.0);
  agents.insert(agents.end(), 5, 1020.0);
  std::vector<double> candidates{0.0, -1.0, 1.0, 1000.0, 1020.0};
  return Instance::Euclidean(1, std::move(agents), std::move(candidates), 3);
}

Selection SampleSelection(std::size_t m, std::size_t k, std::uint64_t seed) {
  if (k > m) throw InputError("cannot sample more centers than candidates");
  std::vector<std::size_t> pool(m);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  CounterRng rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.NextBelow(m - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return Selection::Create(std::move(pool), m, k);
}

}  // namespace propaudit
