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

#ifndef PROPAUDIT_VERDICT_H_
#define PROPAUDIT_VERDICT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace propaudit {

// Certificate of a violation.
//
// Anchored axioms (mPJR+, DC-mPJR+, PJR+) set `center` to the unselected
// candidate; the unanchored PJR/mPJR witnesses leave it empty. `coalition`
// lists agent (or voter) indices and, when non-empty, always satisfies
// |coalition| * k >= level * n. `covered` lists the selected centers the
// coalition reaches at the audited radius (the set Y for the small-k sweep).
struct Witness {
  std::optional<std::size_t> center;
  int level = 0;
  double radius = 0.0;
  std::vector<std::size_t> coalition;
  std::vector<std::size_t> covered;
};

struct Verdict {
  std::string axiom;
  double gamma = 1.0;
  bool satisfied = true;
  std::optional<Witness> witness;
  // Filled only by the all-witnesses DC mode.
  std::vector<Witness> all_witnesses;
  double elapsed_ms = 0.0;

  static Verdict Satisfied(std::string axiom, double gamma) {
    return {std::move(axiom), gamma, true, std::nullopt, {}, 0.0};
  }
  static Verdict Violated(std::string axiom, double gamma, Witness witness) {
    return {std::move(axiom), gamma, false, std::move(witness), {}, 0.0};
  }
};

}  // namespace propaudit

#endif  // PROPAUDIT_VERDICT_H_
