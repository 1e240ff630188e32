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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "shortcutbench/common.hpp"
#include "shortcutbench/concept.hpp"
#include "shortcutbench/corpus.hpp"
#include "shortcutbench/eval.hpp"
#include "shortcutbench/occurrence.hpp"
#include "shortcutbench/refmodel.hpp"
#include "shortcutbench/rewriter.hpp"
#include "shortcutbench/schedule.hpp"
#include "shortcutbench/synthetic.hpp"

namespace scb {

// Validation failure listing every offending field path ("lambdas[1]", ...).
class ConfigError : public Error {
 public:
  using Issue = std::pair<std::string, std::string>;  // field path, message
  explicit ConfigError(std::vector<Issue> issues);
  const std::vector<Issue>& issues() const { return issues_; }

 private:
  std::vector<Issue> issues_;
};

struct RewriterSettings {
  std::string kind = "mock";  // mock | http
  HttpEndpoint endpoint;
  std::string style_a;        // defaults: formal/casual or shakespeare/hemingway
  std::string style_b;
  RewriteOptions options;
};

struct SyntheticSettings {
  SyntheticConfig generator;
  std::size_t train_per_label = 500;
  std::size_t validation_per_label = 0;
  std::size_t test_per_label = 500;
};

struct RunConfig {
  std::string task = "five_class";  // five_class | four_class | custom
  LabelSpace label_space;
  BaseSchedule schedule;
  ShortcutType shortcut_type = ShortcutType::kSingleTerm;
  std::vector<double> lambdas = {1.0, 0.8, 0.6};
  std::uint64_t seed = 0;

  // Dataset files, or aspect-corpus manifests for concept shortcuts.
  std::filesystem::path train_path;
  std::filesystem::path validation_path;  // optional
  std::filesystem::path test_path;
  std::filesystem::path out_dir = "out";
  std::filesystem::path cache_dir = "cache";
  std::optional<SyntheticSettings> synthetic;

  std::vector<std::string> strip_terms;
  std::vector<std::string> trigger_phrases;
  CategorySpec category;
  ConceptPairingPlan concept_plan;
  RewriterSettings rewriter;
  FeatureConfig features;
  TrainConfig train;
  std::size_t runs_per_setting = 5;
  std::size_t attribution_sample_size = 100;
  VarianceKind variance = VarianceKind::kPopulation;
  std::size_t workers = 1;

  // The configuration document as read (before overrides), and its raw text
  // when loaded from a file.
  nlohmann::ordered_json document;
  std::string source_text;

  // FNV-1a 64 (hex) over the canonical dump of the effective configuration.
  std::string hash() const;
  nlohmann::ordered_json effective() const;
};

// Relative paths resolve against base_dir. Throws ConfigError.
RunConfig parse_config(const nlohmann::ordered_json& doc, const std::filesystem::path& base_dir);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace scb
