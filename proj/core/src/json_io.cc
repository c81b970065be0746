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

#include "propaudit/json_io.h"

#include <fstream>
#include <sstream>

#include "propaudit/errors.h"

namespace propaudit {
namespace {

using nlohmann::json;

const json& Require(const json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw InputError(std::string("missing key \"") + key + "\"");
  }
  return object.at(key);
}

std::size_t ReadCount(const json& value, const char* what) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
    throw InputError(std::string(what) + " must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

double ReadNumber(const json& value, const char* what) {
  if (!value.is_number()) {
    throw InputError(std::string(what) + " must be a number");
  }
  return value.get<double>();
}

std::vector<double> ReadPoints(const json& points, std::size_t dim,
                               const char* what) {
  if (!points.is_array()) {
    throw InputError(std::string(what) + " must be an array of coordinates");
  }
  std::vector<double> flat;
  flat.reserve(points.size() * dim);
  for (const json& point : points) {
    if (!point.is_array() || point.size() != dim) {
      throw InputError(std::string(what) + ": every point needs " +
                       std::to_string(dim) + " coordinates");
    }
    for (const json& x : point) flat.push_back(ReadNumber(x, what));
  }
  return flat;
}

std::vector<std::string> ReadNames(const json& names, const char* what) {
  if (!names.is_array()) {
    throw InputError(std::string(what) + " must be an array of names");
  }
  std::vector<std::string> out;
  for (const json& name : names) {
    if (name.is_string()) {
      out.push_back(name.get<std::string>());
    } else if (name.is_number_integer()) {
      out.push_back(std::to_string(name.get<std::int64_t>()));
    } else {
      throw InputError(std::string(what) + ": names must be strings");
    }
  }
  return out;
}

json Points(std::span<const double> flat, std::size_t dim) {
  json out = json::array();
  for (std::size_t i = 0; dim > 0 && i < flat.size(); i += dim) {
    out.push_back(std::vector<double>(flat.begin() + i, flat.begin() + i + dim));
  }
  return out;
}

}  // namespace

json InstanceToJson(const Instance& instance) {
  json out;
  if (instance.kind() == MetricKind::kEuclidean) {
    out["metric"] = "euclidean";
    out["dim"] = instance.dim();
    out["agents"] = Points(instance.agent_coords(), instance.dim());
    out["candidates"] = Points(instance.candidate_coords(), instance.dim());
  } else {
    out["metric"] = "explicit";
    out["agents"] = instance.agent_names();
    out["candidates"] = instance.candidate_names();
    const std::size_t size = instance.num_agents() + instance.num_candidates();
    json rows = json::array();
    for (std::size_t r = 0; r < size; ++r) {
      rows.push_back(std::vector<double>(
          instance.matrix().begin() + r * size,
          instance.matrix().begin() + (r + 1) * size));
    }
    out["matrix"] = std::move(rows);
  }
  out["k"] = instance.k();
  return out;
}

Instance InstanceFromJson(const json& in, bool validate) {
  const json& metric = Require(in, "metric");
  if (!metric.is_string()) throw InputError("\"metric\" must be a string");
  const std::size_t k = ReadCount(Require(in, "k"), "k");
  const std::string kind = metric.get<std::string>();
  if (kind == "euclidean") {
    const std::size_t dim = ReadCount(Require(in, "dim"), "dim");
    if (dim == 0) throw InputError("dim must be positive");
    return Instance::Euclidean(dim,
                               ReadPoints(Require(in, "agents"), dim, "agents"),
                               ReadPoints(Require(in, "candidates"), dim,
                                          "candidates"),
                               k);
  }
  if (kind != "explicit") {
    throw InputError("unknown metric \"" + kind + "\"");
  }
  std::vector<std::string> agents = ReadNames(Require(in, "agents"), "agents");
  std::vector<std::string> candidates =
      ReadNames(Require(in, "candidates"), "candidates");
  const std::size_t size = agents.size() + candidates.size();
  const json& rows = Require(in, "matrix");
  if (!rows.is_array() || rows.size() != size) {
    throw InputError("matrix must have " + std::to_string(size) + " rows");
  }
  std::vector<double> matrix;
  matrix.reserve(size * size);
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != size) {
      throw InputError("matrix must be square with " + std::to_string(size) +
                       " columns");
    }
    for (const json& x : row) matrix.push_back(ReadNumber(x, "matrix entry"));
  }
  Instance instance = Instance::Explicit(std::move(agents),
                                         std::move(candidates),
                                         std::move(matrix), k);
  if (validate) {
    const MetricReport report = ValidateMetric(instance);
    if (!report.ok()) {
      throw InputError(std::string(MetricIssueName(report.issue)) + ": " +
                       report.message);
    }
  }
  return instance;
}

json ApprovalToJson(const ApprovalInstance& instance) {
  return {{"voters", instance.num_voters},
          {"candidates", instance.num_candidates},
          {"approvals", instance.approvals},
          {"k", instance.k}};
}

ApprovalInstance ApprovalFromJson(const json& in) {
  const std::size_t voters = ReadCount(Require(in, "voters"), "voters");
  const std::size_t candidates =
      ReadCount(Require(in, "candidates"), "candidates");
  const std::size_t k = ReadCount(Require(in, "k"), "k");
  const json& ballots = Require(in, "approvals");
  if (!ballots.is_array()) throw InputError("approvals must be an array");
  std::vector<std::vector<std::size_t>> approvals;
  for (const json& ballot : ballots) {
    if (!ballot.is_array()) throw InputError("each ballot must be an array");
    std::vector<std::size_t> row;
    for (const json& c : ballot) row.push_back(ReadCount(c, "approval"));
    approvals.push_back(std::move(row));
  }
  return ApprovalInstance::Create(voters, candidates, std::move(approvals), k);
}

json WitnessToJson(const Witness& witness) {
  json out;
  out["center"] = witness.center ? json(*witness.center) : json(nullptr);
  out["level"] = witness.level;
  out["radius"] = witness.radius;
  out["coalition"] = witness.coalition;
  out["covered"] = witness.covered;
  return out;
}

json VerdictToJson(const Verdict& verdict) {
  json out;
  out["axiom"] = verdict.axiom;
  out["gamma"] = verdict.gamma;
  out["satisfied"] = verdict.satisfied;
  out["witness"] =
      verdict.witness ? WitnessToJson(*verdict.witness) : json(nullptr);
  if (!verdict.all_witnesses.empty()) {
    json all = json::array();
    for (const Witness& w : verdict.all_witnesses) all.push_back(WitnessToJson(w));
    out["all_witnesses"] = std::move(all);
  }
  out["elapsed_ms"] = verdict.elapsed_ms;
  return out;
}

json SearToJson(const SearResult& result) {
  json trace = json::array();
  for (const SearStep& step : result.trace) {
    json charges = json::array();
    for (const SearCharge& charge : step.charges) {
      charges.push_back({{"agent", charge.agent}, {"amount", charge.amount}});
    }
    trace.push_back({{"candidate", step.candidate},
                     {"radius", step.radius},
                     {"ball_weight", step.ball_weight},
                     {"charges", std::move(charges)}});
  }
  return {{"selection", result.selection.centers()},
          {"trace", std::move(trace)},
          {"final_weights", result.final_weights}};
}

std::vector<std::size_t> SelectionIndicesFromJson(const json& in) {
  const json& list =
      in.is_object() ? Require(in, "selection") : in;
  if (!list.is_array()) throw InputError("selection must be an array");
  std::vector<std::size_t> out;
  for (const json& c : list) out.push_back(ReadCount(c, "selection index"));
  return out;
}

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void WriteJsonFile(const std::string& path, const json& value) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << value.dump(2) << '\n';
}

}  // namespace propaudit
