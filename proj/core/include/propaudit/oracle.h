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

#ifndef PROPAUDIT_ORACLE_H_
#define PROPAUDIT_ORACLE_H_

// Brute-force reference checks written straight from the axiom definitions.
// None of them share code with the sweep verifiers in verify.h; they exist to
// cross-validate those on desk-scale instances.

#include <cstddef>
#include <vector>

#include "propaudit/instance.h"
#include "propaudit/verdict.h"

namespace propaudit {

struct OracleCaps {
  std::size_t max_agents = 16;
  std::size_t max_ball = 20;
};

// mPJR: for every radius r in {d(i, c)} the induced approval profile
// A_i = B(i, r) ∩ M must satisfy PJR. Witness carries (radius, level,
// coalition).
Verdict OracleMpjr(const Instance& instance, const Selection& selection,
                   const OracleCaps& caps = {});

// gamma-mPJR+ over every unselected c and every nonempty S ⊆ N.
Verdict OracleMpjrPlus(const Instance& instance, const Selection& selection,
                       double gamma = 1.0, const OracleCaps& caps = {});

// mPJR+ restricted to a single level (gamma = 1).
Verdict OracleFixedEllMpjrPlus(const Instance& instance,
                               const Selection& selection, int level,
                               const OracleCaps& caps = {});

// gamma-DC-mPJR+ by computing every default coalition from scratch.
Verdict OracleDc(const Instance& instance, const Selection& selection,
                 double gamma = 1.0);

// Exhaustive minimum of f(S) = |X ∩ A_r(S)| - |S| k / n over S ⊆ B(c, r) ∩ N.
// The value is kept as the integer pair (coverage, size); `violation` is the
// exact test f <= -1, i.e. coverage * n <= size * k - n.
struct SubmodularMinimum {
  std::vector<std::size_t> ball;
  std::vector<std::size_t> minimizer;
  std::size_t coverage = 0;
  std::size_t size = 0;
  bool violation = false;
};

// Throws SizeError if the ball holds more than caps.max_ball agents.
SubmodularMinimum SubmodularMinCheck(const Instance& instance,
                                     const Selection& selection,
                                     std::size_t center, double radius,
                                     const OracleCaps& caps = {});

// n * f(S) as an exact integer: coverage * n - size * k.
long long ScaledCoverageObjective(const Instance& instance,
                                  std::size_t coverage, std::size_t size);

}  // namespace propaudit

#endif  // PROPAUDIT_ORACLE_H_
