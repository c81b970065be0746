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

#include "propaudit/instance.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "propaudit/errors.h"

namespace propaudit {

Instance Instance::Euclidean(std::size_t dim, std::vector<double> agent_coords,
                             std::vector<double> candidate_coords,
                             std::size_t k) {
  if (dim == 0) throw InputError("euclidean instance needs dim >= 1");
  if (agent_coords.size() % dim != 0 || candidate_coords.size() % dim != 0) {
    throw InputError("coordinate count is not a multiple of dim");
  }
  for (double v : agent_coords) {
    if (!std::isfinite(v)) throw InputError("non-finite agent coordinate");
  }
  for (double v : candidate_coords) {
    if (!std::isfinite(v)) throw InputError("non-finite candidate coordinate");
  }
  Instance inst;
  inst.kind_ = MetricKind::kEuclidean;
  inst.dim_ = dim;
  inst.n_ = agent_coords.size() / dim;
  inst.m_ = candidate_coords.size() / dim;
  inst.k_ = k;
  inst.agent_coords_ = std::move(agent_coords);
  inst.candidate_coords_ = std::move(candidate_coords);
  if (inst.n_ == 0) throw InputError("instance needs at least one agent");
  if (k == 0 || k > inst.m_) {
    throw InputError("k must lie in [1, number of candidates]");
  }
  return inst;
}

Instance Instance::Explicit(std::vector<std::string> agent_names,
                            std::vector<std::string> candidate_names,
                            std::vector<double> matrix, std::size_t k) {
  const std::size_t n = agent_names.size();
  const std::size_t m = candidate_names.size();
  if (n == 0) throw InputError("instance needs at least one agent");
  if (k == 0 || k > m) {
    throw InputError("k must lie in [1, number of candidates]");
  }
  if (matrix.size() != (n + m) * (n + m)) {
    throw InputError("explicit matrix must be (n + m) x (n + m)");
  }
  for (double v : matrix) {
    if (!std::isfinite(v)) throw InputError("non-finite distance in matrix");
  }
  Instance inst;
  inst.kind_ = MetricKind::kExplicit;
  inst.n_ = n;
  inst.m_ = m;
  inst.k_ = k;
  inst.matrix_ = std::move(matrix);
  inst.agent_names_ = std::move(agent_names);
  inst.candidate_names_ = std::move(candidate_names);
  return inst;
}

double Instance::EuclideanDistance(const double* a, const double* b) const {
  double sum = 0.0;
  for (std::size_t t = 0; t < dim_; ++t) {
    const double diff = a[t] - b[t];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

const double* Instance::Coords(PointRef p) const {
  return p.side == Side::kAgent ? &agent_coords_[p.index * dim_]
                                : &candidate_coords_[p.index * dim_];
}

double Instance::Distance(PointRef a, PointRef b) const {
  auto check = [this](PointRef p) {
    const std::size_t limit = p.side == Side::kAgent ? n_ : m_;
    if (p.index >= limit) {
      std::ostringstream msg;
      msg << (p.side == Side::kAgent ? "agent" : "candidate") << " id "
          << p.index << " out of range";
      throw InputError(msg.str());
    }
  };
  check(a);
  check(b);
  if (kind_ == MetricKind::kExplicit) {
    auto row = [this](PointRef p) {
      return p.side == Side::kAgent ? p.index : n_ + p.index;
    };
    return matrix_[row(a) * (n_ + m_) + row(b)];
  }
  return EuclideanDistance(Coords(a), Coords(b));
}

std::span<const double> Instance::agent_position(std::size_t i) const {
  if (kind_ != MetricKind::kEuclidean) return {};
  return {agent_coords_.data() + i * dim_, dim_};
}

std::span<const double> Instance::candidate_position(std::size_t c) const {
  if (kind_ != MetricKind::kEuclidean) return {};
  return {candidate_coords_.data() + c * dim_, dim_};
}

Instance Instance::Materialized() const {
  if (kind_ == MetricKind::kExplicit) return *this;
  const std::size_t total = n_ + m_;
  std::vector<double> matrix(total * total, 0.0);
  auto point = [this](std::size_t u) {
    return u < n_ ? Agent(u) : Candidate(u - n_);
  };
  for (std::size_t u = 0; u < total; ++u) {
    for (std::size_t v = u + 1; v < total; ++v) {
      const double d = Distance(point(u), point(v));
      matrix[u * total + v] = d;
      matrix[v * total + u] = d;
    }
  }
  std::vector<std::string> agents(n_);
  std::vector<std::string> candidates(m_);
  for (std::size_t i = 0; i < n_; ++i) agents[i] = "a" + std::to_string(i);
  for (std::size_t c = 0; c < m_; ++c) candidates[c] = "c" + std::to_string(c);
  return Explicit(std::move(agents), std::move(candidates), std::move(matrix),
                  k_);
}

Instance Instance::WithK(std::size_t k) const {
  if (k == 0 || k > m_) {
    throw InputError("k must lie in [1, number of candidates]");
  }
  Instance copy = *this;
  copy.k_ = k;
  return copy;
}

Selection Selection::Create(std::vector<std::size_t> centers,
                            std::size_t num_candidates, std::size_t k) {
  if (centers.size() != k) {
    std::ostringstream msg;
    msg << "selection has " << centers.size() << " centers, expected k = "
        << k;
    throw InputError(msg.str());
  }
  std::sort(centers.begin(), centers.end());
  if (std::adjacent_find(centers.begin(), centers.end()) != centers.end()) {
    throw InputError("selection contains a duplicate center");
  }
  if (!centers.empty() && centers.back() >= num_candidates) {
    throw InputError("selection index " + std::to_string(centers.back()) +
                     " out of range");
  }
  Selection s;
  s.centers_ = std::move(centers);
  return s;
}

bool Selection::Contains(std::size_t c) const {
  return std::binary_search(centers_.begin(), centers_.end(), c);
}

std::vector<char> Selection::Mask(std::size_t num_candidates) const {
  std::vector<char> mask(num_candidates, 0);
  for (std::size_t c : centers_) mask[c] = 1;
  return mask;
}

bool QuotaAtLeast(std::int64_t count, std::int64_t level, QuotaCmp quota) {
  return quota.AtLeast(count, level);
}

std::vector<std::size_t> GroupApprovalSet(const Instance& instance,
                                          std::span<const std::size_t> agents,
                                          double radius) {
  if (agents.empty()) throw InputError("group approval set of an empty group");
  for (std::size_t i : agents) {
    if (i >= instance.num_agents()) {
      throw InputError("agent id " + std::to_string(i) + " out of range");
    }
  }
  std::vector<std::size_t> approved;
  for (std::size_t c = 0; c < instance.num_candidates(); ++c) {
    for (std::size_t i : agents) {
      if (instance.AgentToCandidate(i, c) <= radius) {
        approved.push_back(c);
        break;
      }
    }
  }
  return approved;
}

const char* MetricIssueName(MetricIssue issue) {
  switch (issue) {
    case MetricIssue::kOk:
      return "OK";
    case MetricIssue::kNonFinite:
      return "NonFiniteViolation";
    case MetricIssue::kNegative:
      return "NegativeViolation";
    case MetricIssue::kNonzeroDiagonal:
      return "NonzeroDiagonalViolation";
    case MetricIssue::kAsymmetry:
      return "AsymmetryViolation";
    case MetricIssue::kTriangle:
      return "TriangleViolation";
  }
  return "Unknown";
}

MetricReport ValidateMetric(const Instance& instance,
                            const MetricCheckOptions& options) {
  MetricReport report;
  if (instance.kind() == MetricKind::kEuclidean) return report;

  const std::size_t total = instance.num_agents() + instance.num_candidates();
  const std::vector<double>& d = instance.matrix();
  auto at = [&](std::size_t u, std::size_t v) { return d[u * total + v]; };
  auto fail = [&](MetricIssue issue, std::size_t a, std::size_t b,
                  std::size_t c, std::string message) {
    report.issue = issue;
    report.a = a;
    report.b = b;
    report.c = c;
    report.message = std::move(message);
    return report;
  };

  for (std::size_t u = 0; u < total; ++u) {
    if (at(u, u) != 0.0) {
      return fail(MetricIssue::kNonzeroDiagonal, u, u, u,
                  "d(" + std::to_string(u) + "," + std::to_string(u) +
                      ") != 0");
    }
    for (std::size_t v = 0; v < total; ++v) {
      if (!std::isfinite(at(u, v))) {
        return fail(MetricIssue::kNonFinite, u, v, v, "non-finite entry");
      }
      if (at(u, v) < 0.0) {
        return fail(MetricIssue::kNegative, u, v, v,
                    "d(" + std::to_string(u) + "," + std::to_string(v) +
                        ") < 0");
      }
      if (at(u, v) != at(v, u)) {
        return fail(MetricIssue::kAsymmetry, u, v, v,
                    "d(" + std::to_string(u) + "," + std::to_string(v) +
                        ") != d(" + std::to_string(v) + "," +
                        std::to_string(u) + ")");
      }
    }
  }

  if (!options.check_triangle) return report;
  for (std::size_t a = 0; a < total; ++a) {
    for (std::size_t b = 0; b < total; ++b) {
      const double ab = at(a, b);
      for (std::size_t c = 0; c < total; ++c) {
        const double ac = at(a, c);
        const double slack =
            options.triangle_tolerance * std::max(1.0, ac);
        if (ac > ab + at(b, c) + slack) {
          return fail(MetricIssue::kTriangle, a, b, c,
                      "d(" + std::to_string(a) + "," + std::to_string(c) +
                          ") > d(" + std::to_string(a) + "," +
                          std::to_string(b) + ") + d(" + std::to_string(b) +
                          "," + std::to_string(c) + ")");
        }
      }
    }
  }
  return report;
}

}  // namespace propaudit
