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

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "shortcutbench/attribution.hpp"
#include "shortcutbench/config.hpp"
#include "shortcutbench/style.hpp"

namespace scb {

// Uninjected corpora. Concept shortcuts fill the aspect corpora and leave
// the plain datasets empty.
struct BaseCorpora {
  Dataset train;
  Dataset validation;
  Dataset test;
  std::optional<AspectCorpus> aspects_train;
  std::optional<AspectCorpus> aspects_validation;
  std::optional<AspectCorpus> aspects_test;
};

// Loads or generates the base corpora and strips pre-existing trigger terms.
BaseCorpora load_base_corpora(const RunConfig& cfg);

std::unique_ptr<Rewriter> make_rewriter(const RewriterSettings& settings);

// Style variants of every base split, rewritten once and cached on disk.
struct StyleStores {
  StyleVariantStore train;
  StyleVariantStore validation;
  StyleVariantStore test;
  std::size_t remote_calls = 0;
  std::size_t cache_hits = 0;
};

StyleStores prepare_style(const RunConfig& cfg, const BaseCorpora& base, Rewriter& rewriter);

// Injects one split. Training and validation follow the lambda-scaled
// schedule, test the base schedule and anti_test its reversal.
// style must be non-null for register/author shortcuts.
Dataset inject_split(const RunConfig& cfg, const BaseCorpora& base, const StyleStores* style, Split split,
                     double lambda, std::uint64_t seed);

struct InjectedSplits {
  Dataset train;
  Dataset validation;
  Dataset test;
  Dataset anti;
  nlohmann::ordered_json summary;
};

InjectedSplits inject_all(const RunConfig& cfg, const BaseCorpora& base, const StyleStores* style, double lambda,
                          std::uint64_t seed);

// Per-label counts and rates read back from the annotations.
nlohmann::ordered_json injection_summary(const Dataset& ds, const std::vector<double>& expected);

// Expected per-label coin probability of a split (concept_correlation: the
// same-label pairing probability).
std::vector<double> expected_rates(const RunConfig& cfg, Split split, double lambda);

// Seed of run k at strength lambda.
std::uint64_t run_seed(std::uint64_t master, double lambda, std::size_t run);

struct RunResult {
  double lambda = 0.0;
  std::size_t run = 0;
  std::uint64_t seed = 0;
  DeltaReport delta;
  std::optional<AttributionTable> attribution;
};

struct LambdaResult {
  double lambda = 0.0;
  DeltaReport aggregate;
  std::optional<AttributionTable> attribution;  // mean over runs
};

struct SweepResult {
  std::vector<RunResult> runs;  // lambda-major, then run index
  std::vector<LambdaResult> lambdas;
};

struct SweepOptions {
  std::size_t workers = 1;
  bool write_outputs = true;
};

// Full lambda grid x runs_per_setting: inject, train, predict, evaluate and
// attribute. Results do not depend on the worker count. Writes the output
// tree under cfg.out_dir unless disabled.
SweepResult run_sweep(const RunConfig& cfg, const SweepOptions& options);

// CSV renderings of a sweep.
std::string report_csv(const RunConfig& cfg, const SweepResult& result);
std::string sweep_csv(const SweepResult& result);
std::string attribution_csv(const RunConfig& cfg, const SweepResult& result);
nlohmann::ordered_json report_json(const RunConfig& cfg, const SweepResult& result);

nlohmann::ordered_json delta_to_json(const DeltaReport& d, const LabelSpace& ls);
nlohmann::ordered_json attribution_to_json(const AttributionTable& t, const LabelSpace& ls);

// Concatenates CSV files sharing one header. Throws Error("csv_header_mismatch").
std::string merge_csv(const std::vector<std::filesystem::path>& inputs);

}  // namespace scb
