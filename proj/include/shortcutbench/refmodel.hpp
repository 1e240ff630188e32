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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shortcutbench/corpus.hpp"
#include "shortcutbench/prediction.hpp"

namespace scb {

struct FeatureConfig {
  std::uint32_t dim = 1u << 18;  // power of two, >= 2^10
  int ngram_max = 2;             // 1..3
  bool lowercase = true;

  // Throws Error("feature_config_invalid").
  void validate() const;
  bool operator==(const FeatureConfig&) const = default;
};

struct Token {
  std::string text;
  Span span;  // byte offsets into the source text
};

// Maximal runs of word bytes (ASCII alphanumerics and any non-ASCII byte).
std::vector<Token> tokenize(std::string_view text, bool lowercase);

// One hashed n-gram occurrence over tokens [first, first + length).
struct NgramHit {
  std::uint32_t bucket = 0;
  double sign = 1.0;
  std::size_t first = 0;
  std::size_t length = 1;
};

std::vector<NgramHit> ngram_hits(const std::vector<Token>& tokens, const FeatureConfig& cfg);

struct Feature {
  std::uint32_t bucket = 0;
  double value = 0.0;
  bool operator==(const Feature&) const = default;
};

// Sorted by bucket, one entry per bucket, zero-valued buckets dropped.
using SparseVector = std::vector<Feature>;

// Signed feature hashing of unigrams..ngram_max-grams. The bucket comes from
// FNV-1a of the n-gram (tokens joined by a space), the sign from a second,
// independently seeded FNV-1a.
SparseVector featurize(std::string_view text, const FeatureConfig& cfg);

struct TrainConfig {
  int epochs = 5;
  double learning_rate = 0.1;
  double l2 = 1e-6;
  std::uint64_t seed = 0;

  void validate() const;
};

// Multinomial logistic regression over hashed features.
struct LinearModel {
  LabelSpace label_space;
  FeatureConfig feature_config;
  // Bucket-major: weights[bucket * num_labels + label].
  std::vector<double> weights;
  std::vector<double> bias;

  LinearModel() = default;
  // Zero-initialized.
  LinearModel(LabelSpace labels, FeatureConfig cfg);

  std::size_t num_labels() const { return label_space.count(); }
  double weight(std::size_t label, std::uint32_t bucket) const { return weights[bucket * num_labels() + label]; }
  std::span<const double> row(std::uint32_t bucket) const {
    return {weights.data() + static_cast<std::size_t>(bucket) * num_labels(), num_labels()};
  }

  std::vector<double> logits(const SparseVector& x) const;
  std::vector<double> logits(std::string_view text) const { return logits(featurize(text, feature_config)); }

  // Versioned little-endian binary container: config, label names, bias, weights.
  std::string serialize() const;
  static LinearModel deserialize(std::string_view bytes);
  void save(const std::filesystem::path& path) const;
  static LinearModel load(const std::filesystem::path& path);
};

std::vector<double> softmax(std::span<const double> logits);

// Argmax with ties going to the lowest index.
int argmax(std::span<const double> values);

Prediction predict_one(const LinearModel& model, const Sample& sample);
std::vector<Prediction> predict(const LinearModel& model, const Dataset& ds);

struct TrainResult {
  LinearModel model;
  // Full objective (mean cross-entropy + l2/2 * |W|^2) after each epoch.
  std::vector<double> epoch_losses;
};

// Single-threaded SGD from zero weights, reshuffling every epoch with a
// seeded generator. Step size decays as learning_rate / (1 + epoch).
// Throws Error("degenerate_dataset") unless at least two labels occur.
TrainResult train_with_history(const Dataset& ds, const FeatureConfig& fcfg, const TrainConfig& tcfg);
LinearModel train(const Dataset& ds, const FeatureConfig& fcfg, const TrainConfig& tcfg);

struct LabeledVector {
  SparseVector x;
  int label = 0;
};

std::vector<LabeledVector> featurize_dataset(const Dataset& ds, const FeatureConfig& cfg);

// Mean cross-entropy over examples plus l2/2 * |W|^2 (bias unpenalized).
double objective(const LinearModel& model, std::span<const LabeledVector> examples, double l2);

struct ModelGradient {
  std::vector<double> weights;  // same layout as LinearModel::weights
  std::vector<double> bias;
};

// Analytic gradient of objective().
ModelGradient objective_gradient(const LinearModel& model, std::span<const LabeledVector> examples, double l2);

}  // namespace scb
