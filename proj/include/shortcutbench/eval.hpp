/*
 * Copyright 2026 The shortcutbench Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shortcutbench/corpus.hpp"
#include "shortcutbench/prediction.hpp"

namespace scb {

struct MetricsReport {
  Split split = Split::kTest;
  double accuracy = 0.0;
  double macro_f1 = 0.0;
  std::vector<double> per_class_f1;
  std::size_t n = 0;
};

enum class VarianceKind { kPopulation, kSample };

struct DeltaReport {
  MetricsReport test;
  MetricsReport anti;
  double delta_accuracy = 0.0;
  double delta_macro_f1 = 0.0;
  std::size_t runs = 1;
  // Variance of per-run delta macro F1 / delta accuracy; set by aggregate_runs.
  std::optional<double> var_delta;
  std::optional<double> var_delta_accuracy;
};

// Pairs every gold sample with its prediction (by id) and returns the
// predicted labels in gold order. Throws Error("prediction_mismatch") on
// missing, duplicate, or extra ids and on out-of-range labels.
std::vector<int> align_predictions(std::span<const Prediction> preds, const Dataset& gold);

double accuracy(std::span<const Prediction> preds, const Dataset& gold);

struct MacroF1 {
  double macro = 0.0;
  std::vector<double> per_class;
};

// Per-class F1 from the confusion matrix; 0 when precision + recall = 0.
// The macro mean runs over every class in the label space.
MacroF1 macro_f1(std::span<const Prediction> preds, const Dataset& gold);
MacroF1 macro_f1_from_labels(std::span<const int> gold, std::span<const int> pred, std::size_t num_classes);

MetricsReport compute_metrics(std::span<const Prediction> preds, const Dataset& gold);

// test - anti, unclamped. Throws Error("label_space_mismatch") when the
// per-class vectors disagree in length.
DeltaReport delta_report(const MetricsReport& test, const MetricsReport& anti);

// Arithmetic means of every metric; var_delta is the variance of per-run
// delta macro F1 (population by default). Throws Error("no_runs").
DeltaReport aggregate_runs(std::span<const DeltaReport> reports, VarianceKind kind = VarianceKind::kPopulation);

double variance(std::span<const double> xs, VarianceKind kind);

}  // namespace scb
