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

#ifndef PROPAUDIT_VERIFY_H_
#define PROPAUDIT_VERIFY_H_

#include <cstddef>
#include <vector>

#include "propaudit/instance.h"
#include "propaudit/verdict.h"

namespace propaudit {

// The smallest closed ball around `center` holding at least level * n / k
// agents, together with every agent inside it (ties may push the member count
// above the quota).
struct DefaultCoalition {
  std::size_t center = 0;
  int level = 0;
  double radius = 0.0;
  std::vector<std::size_t> members;
};

// Throws InfeasibleLevel when level lies outside [1, k] (for such levels no
// ball can hold level * n / k agents) and InputError for a bad candidate id.
DefaultCoalition ComputeDefaultCoalition(const Instance& instance,
                                         std::size_t center, int level);

struct VerifyOptions {
  // Distance slack gamma >= 1 applied to the coverage radius.
  double gamma = 1.0;
  // Agent distances within this much of the first distance of a group are
  // swept as one radius by the DC verifiers. Zero means exact equality.
  double tie_epsilon = 0.0;
  // DC only: keep sweeping after the first violation and record every
  // violating (center, level) pair in Verdict::all_witnesses.
  bool all_witnesses = false;
  // The small-k verifier enumerates 2^k subsets.
  std::size_t max_k = 24;
};

// gamma-DC-mPJR+ in O(mn log n + mnk).
//
// For each unselected c the agents are swept by distance from c. At each
// distinct radius rho the prefix P = B(c, rho) ∩ N deserves
// t = floor(|P| k / n) centers, and the selection must place at least t
// centers within gamma * rho of P. The first failure is reported as
// (c, level = t, radius = rho, coalition = P, covered = reached centers).
Verdict VerifyDcMpjrPlus(const Instance& instance, const Selection& selection,
                         const VerifyOptions& options = {});

// gamma-mPJR+ in O(mn log n 2^k).
//
// For every Y ⊊ X and unselected c, agent i is "unserved at r" for r in
// [d(i, c), min_{x in X\Y} d(i, x) / gamma). A point covered by at least
// (|Y| + 1) * n / k such intervals is a violation. The sweep runs in the
// gamma-scaled coordinate gamma * r so both endpoints stay exact at gamma = 1.
// Throws SizeError when k exceeds options.max_k.
Verdict VerifyMpjrPlusSmallK(const Instance& instance,
                             const Selection& selection,
                             const VerifyOptions& options = {});

// DC check restricted to one level: per unselected c only the first radius
// whose prefix deserves at least `level` centers is tested. Throws
// InfeasibleLevel for level outside [1, k].
Verdict VerifyFixedEllDc(const Instance& instance, const Selection& selection,
                         int level, const VerifyOptions& options = {});

}  // namespace propaudit

#endif  // PROPAUDIT_VERIFY_H_
