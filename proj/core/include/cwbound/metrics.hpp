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

#ifndef CWBOUND_METRICS_HPP_
#define CWBOUND_METRICS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cwbound/boundary.hpp"
#include "cwbound/graph.hpp"

namespace cwbound {

// Confusion counts and the derived rates. A rate whose denominator is zero
// is std::nullopt (reported as undefined) rather than a number.
struct MetricsReport {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;
  std::optional<double> sensitivity;  // tp / (tp + fn)
  std::optional<double> specificity;  // tn / (tn + fp)
  std::optional<double> accuracy;     // (tp + tn) / total
  double elapsed_s = 0.0;

  std::size_t total() const { return tp + fp + tn + fn; }
  bool fully_defined() const {
    return sensitivity && specificity && accuracy;
  }
};

// Rates from raw counts.
MetricsReport metrics_from_counts(std::size_t tp, std::size_t fp,
                                  std::size_t tn, std::size_t fn);

// Scores predicted boundary ids against the ground truth over nodes
// 0..total-1. Throws kIdOutOfRange for ids >= total and kInvalidArgument for
// total == 0.
MetricsReport evaluate(std::span<const NodeId> predicted,
                       std::span<const NodeId> truth, std::size_t total);
MetricsReport evaluate(const BoundaryPrediction& predicted,
                       std::span<const NodeId> truth, std::size_t total);

// {"tp":..,"fp":..,"tn":..,"fn":..,"sensitivity":x|null,...,
//  "undefined":["sensitivity",...],"elapsed_s":..}
std::string metrics_to_json(const MetricsReport& report);

// prediction.csv: node_id,predicted_boundary,truth_boundary
std::string prediction_to_csv(std::size_t total,
                              std::span<const NodeId> predicted,
                              std::span<const NodeId> truth);

}  // namespace cwbound

#endif  // CWBOUND_METRICS_HPP_
