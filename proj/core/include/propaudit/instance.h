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

#ifndef PROPAUDIT_INSTANCE_H_
#define PROPAUDIT_INSTANCE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace propaudit {

enum class MetricKind { kEuclidean, kExplicit };

enum class Side { kAgent, kCandidate };

// Addresses a point of the universe N ∪ M.
struct PointRef {
  Side side;
  std::size_t index;
};

constexpr PointRef Agent(std::size_t i) { return {Side::kAgent, i}; }
constexpr PointRef Candidate(std::size_t c) { return {Side::kCandidate, c}; }

// A centroid clustering instance (N, M, k) over a metric backend.
//
// Agents form a multiset: two agents may share a position and still count as
// two agents. Instances are immutable once built, so every const member is
// safe to call from concurrent readers.
//
// Euclidean distances are evaluated on the fly in O(dim). Explicit instances
// store the full symmetric (n + m) x (n + m) matrix, rows ordered agents
// first, then candidates.
class Instance {
 public:
  // Coordinates are row-major: agent i occupies [i * dim, (i + 1) * dim).
  static Instance Euclidean(std::size_t dim, std::vector<double> agent_coords,
                            std::vector<double> candidate_coords,
                            std::size_t k);

  // The matrix is only checked for shape and finiteness here; use
  // ValidateMetric for symmetry, sign, diagonal and triangle checks.
  static Instance Explicit(std::vector<std::string> agent_names,
                           std::vector<std::string> candidate_names,
                           std::vector<double> matrix, std::size_t k);

  MetricKind kind() const { return kind_; }
  std::size_t num_agents() const { return n_; }
  std::size_t num_candidates() const { return m_; }
  std::size_t k() const { return k_; }
  std::size_t dim() const { return dim_; }

  // Checked lookup over the whole universe. Throws InputError on a bad id.
  double Distance(PointRef a, PointRef b) const;

  // Unchecked hot path used by the verifiers.
  double AgentToCandidate(std::size_t i, std::size_t c) const {
    if (kind_ == MetricKind::kExplicit) {
      return matrix_[i * (n_ + m_) + n_ + c];
    }
    return EuclideanDistance(&agent_coords_[i * dim_],
                             &candidate_coords_[c * dim_]);
  }

  std::span<const double> agent_position(std::size_t i) const;
  std::span<const double> candidate_position(std::size_t c) const;
  const std::vector<double>& agent_coords() const { return agent_coords_; }
  const std::vector<double>& candidate_coords() const {
    return candidate_coords_;
  }
  const std::vector<double>& matrix() const { return matrix_; }
  const std::vector<std::string>& agent_names() const { return agent_names_; }
  const std::vector<std::string>& candidate_names() const {
    return candidate_names_;
  }

  // Explicit copy of this instance. Euclidean instances get names "a<i>" and
  // "c<j>". Verifiers give identical results on the copy.
  Instance Materialized() const;

  // Same points and metric with a different target size.
  Instance WithK(std::size_t k) const;

 private:
  Instance() = default;
  double EuclideanDistance(const double* a, const double* b) const;
  const double* Coords(PointRef p) const;

  MetricKind kind_ = MetricKind::kEuclidean;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t k_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> agent_coords_;
  std::vector<double> candidate_coords_;
  std::vector<double> matrix_;
  std::vector<std::string> agent_names_;
  std::vector<std::string> candidate_names_;
};

// A size-k set of candidate indices, stored sorted.
class Selection {
 public:
  // Throws InputError unless the indices are distinct, in range and exactly k.
  static Selection Create(std::vector<std::size_t> centers,
                          std::size_t num_candidates, std::size_t k);
  static Selection For(const Instance& instance,
                       std::vector<std::size_t> centers) {
    return Create(std::move(centers), instance.num_candidates(), instance.k());
  }

  const std::vector<std::size_t>& centers() const { return centers_; }
  std::size_t size() const { return centers_.size(); }
  bool Contains(std::size_t c) const;
  // Membership flags over [0, num_candidates).
  std::vector<char> Mask(std::size_t num_candidates) const;

  friend bool operator==(const Selection&, const Selection&) = default;

 private:
  std::vector<std::size_t> centers_;
};

// Quota comparisons q = n / k done as integer cross-multiplication.
struct QuotaCmp {
  std::int64_t n;
  std::int64_t k;

  // count >= level * n / k
  bool AtLeast(std::int64_t count, std::int64_t level) const {
    return count * k >= level * n;
  }
  // floor(count / q): the representation level count agents deserve.
  std::int64_t Level(std::int64_t count) const { return count * k / n; }
};

inline QuotaCmp QuotaOf(const Instance& instance) {
  return {static_cast<std::int64_t>(instance.num_agents()),
          static_cast<std::int64_t>(instance.k())};
}

bool QuotaAtLeast(std::int64_t count, std::int64_t level, QuotaCmp quota);

// A_r(S): candidates within closed distance r of some member of S.
// Returned sorted. Throws InputError for an empty S or a bad agent id.
std::vector<std::size_t> GroupApprovalSet(const Instance& instance,
                                          std::span<const std::size_t> agents,
                                          double radius);

enum class MetricIssue {
  kOk,
  kNonFinite,
  kNegative,
  kNonzeroDiagonal,
  kAsymmetry,
  kTriangle,
};

struct MetricReport {
  MetricIssue issue = MetricIssue::kOk;
  // Universe indices (agents first, then candidates) naming the violation.
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  std::string message;

  bool ok() const { return issue == MetricIssue::kOk; }
};

struct MetricCheckOptions {
  // The O((n + m)^3) triangle scan is opt-in.
  bool check_triangle = false;
  // Relative slack for the triangle test; float round-off on materialized
  // Euclidean instances would otherwise be reported.
  double triangle_tolerance = 1e-12;
};

MetricReport ValidateMetric(const Instance& instance,
                            const MetricCheckOptions& options = {});

const char* MetricIssueName(MetricIssue issue);

}  // namespace propaudit

#endif  // PROPAUDIT_INSTANCE_H_
