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

#ifndef PROPAUDIT_EMBEDDING_H_
#define PROPAUDIT_EMBEDDING_H_

#include "propaudit/approval.h"
#include "propaudit/instance.h"

namespace propaudit {

// Explicit metric over voters ∪ candidates: an approved pair is at distance 1,
// a disapproved pair at 2, and same-side pairs take the shortest two-hop path
// through the other side (2, 3 or 4). For every radius r in [1, 2) the ball of
// voter i meets M in exactly A_i.
//
// Voters become agents "v<i>", candidates keep their order as "c<j>".
Instance EmbedApproval(const ApprovalInstance& approval);

// Same construction with caller-chosen names.
Instance EmbedApproval(const ApprovalInstance& approval,
                       std::vector<std::string> agent_names,
                       std::vector<std::string> candidate_names);

}  // namespace propaudit

#endif  // PROPAUDIT_EMBEDDING_H_
