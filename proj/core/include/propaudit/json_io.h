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

#ifndef PROPAUDIT_JSON_IO_H_
#define PROPAUDIT_JSON_IO_H_

// JSON schemas shared by the CLI and external tooling.
//
// Instance:
//   {"metric": "euclidean", "dim": 2, "agents": [[x, y], ...],
//    "candidates": [[x, y], ...], "k": 3}
//   {"metric": "explicit", "agents": ["v0", ...], "candidates": ["c0", ...],
//    "matrix": [[...], ...], "k": 3}
//   Explicit matrix rows are ordered agents first, then candidates.
// Approval instance:
//   {"voters": n, "candidates": m, "approvals": [[0, 2], ...], "k": 2}
// Verdict:
//   {"axiom": "...", "gamma": 1.0, "satisfied": false,
//    "witness": {...} | null, "elapsed_ms": 0.1}

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "propaudit/approval.h"
#include "propaudit/instance.h"
#include "propaudit/sear.h"
#include "propaudit/verdict.h"

namespace propaudit {

nlohmann::json InstanceToJson(const Instance& instance);

// With `validate` the explicit matrix must be finite, nonnegative, symmetric
// with zero diagonal (triangle inequality is not checked). Throws InputError.
Instance InstanceFromJson(const nlohmann::json& json, bool validate = true);

nlohmann::json ApprovalToJson(const ApprovalInstance& instance);
ApprovalInstance ApprovalFromJson(const nlohmann::json& json);

nlohmann::json WitnessToJson(const Witness& witness);
nlohmann::json VerdictToJson(const Verdict& verdict);

nlohmann::json SearToJson(const SearResult& result);

// Accepts a bare array of indices or {"selection": [...]}.
std::vector<std::size_t> SelectionIndicesFromJson(const nlohmann::json& json);

nlohmann::json ReadJsonFile(const std::string& path);
void WriteJsonFile(const std::string& path, const nlohmann::json& json);

}  // namespace propaudit

#endif  // PROPAUDIT_JSON_IO_H_
