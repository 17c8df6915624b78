// Copyright 2026 The CWBound Authors.
//
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

#include "cwbound/metrics.hpp"

#include <string>

#include "cwbound/error.hpp"
#include "json.hpp"

namespace cwbound {

MetricsReport metrics_from_counts(std::size_t tp, std::size_t fp,
                                  std::size_t tn, std::size_t fn) {
  MetricsReport r;
  r.tp = tp;
  r.fp = fp;
  r.tn = tn;
  r.fn = fn;
  const auto ratio = [](std::size_t num, std::size_t den) -> std::optional<double> {
    if (den == 0) return std::nullopt;
    return static_cast<double>(num) / static_cast<double>(den);
  };
  r.sensitivity = ratio(tp, tp + fn);
  r.specificity = ratio(tn, tn + fp);
  r.accuracy = ratio(tp + tn, tp + fp + tn + fn);
  return r;
}

namespace {

std::vector<bool> membership(std::span<const NodeId> ids, std::size_t total,
                             const char* what) {
  std::vector<bool> flags(total, false);
  for (const NodeId id : ids) {
    if (id >= total) {
      throw Error(ErrorCode::kIdOutOfRange,
                  std::string(what) + " id " + std::to_string(id) +
                      " with total " + std::to_string(total));
    }
    flags[id] = true;
  }
  return flags;
}

}  // namespace

MetricsReport evaluate(std::span<const NodeId> predicted,
                       std::span<const NodeId> truth, std::size_t total) {
  if (total == 0) throw Error(ErrorCode::kInvalidArgument, "total must be >= 1");
  const auto p = membership(predicted, total, "predicted");
  const auto t = membership(truth, total, "truth");
  std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
  for (std::size_t i = 0; i < total; ++i) {
    if (p[i] && t[i]) ++tp;
    else if (p[i]) ++fp;
    else if (t[i]) ++fn;
    else ++tn;
  }
  return metrics_from_counts(tp, fp, tn, fn);
}

MetricsReport evaluate(const BoundaryPrediction& predicted,
                       std::span<const NodeId> truth, std::size_t total) {
  return evaluate(predicted.boundary_ids, truth, total);
}

std::string metrics_to_json(const MetricsReport& report) {
  nlohmann::ordered_json j;
  j["tp"] = report.tp;
  j["fp"] = report.fp;
  j["tn"] = report.tn;
  j["fn"] = report.fn;
  nlohmann::json undefined = nlohmann::json::array();
  const auto put = [&](const char* key, const std::optional<double>& v) {
    if (v) {
      j[key] = *v;
    } else {
      j[key] = nullptr;
      undefined.push_back(key);
    }
  };
  put("sensitivity", report.sensitivity);
  put("specificity", report.specificity);
  put("accuracy", report.accuracy);
  j["undefined"] = std::move(undefined);
  j["elapsed_s"] = report.elapsed_s;
  return j.dump(2) + "\n";
}

std::string prediction_to_csv(std::size_t total,
                              std::span<const NodeId> predicted,
                              std::span<const NodeId> truth) {
  const auto p = membership(predicted, total, "predicted");
  const auto t = membership(truth, total, "truth");
  std::string out = "node_id,predicted_boundary,truth_boundary\n";
  for (std::size_t i = 0; i < total; ++i) {
    out += std::to_string(i) + (p[i] ? ",1" : ",0") + (t[i] ? ",1\n" : ",0\n");
  }
  return out;
}

}  // namespace cwbound
