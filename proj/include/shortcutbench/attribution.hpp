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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "shortcutbench/corpus.hpp"
#include "shortcutbench/refmodel.hpp"

namespace scb {

// Per-token, per-label contributions for one sample.
struct TokenAttribution {
  std::string sample_id;
  std::vector<std::string> tokens;
  std::vector<Span> token_spans;
  std::vector<std::vector<double>> contributions;  // [token][label]
  std::vector<bool> is_shortcut;
  // Linear attribution: the model bias. Leave-one-out: scores of the full text.
  std::vector<double> baseline;
};

// A token is a shortcut token iff its byte range overlaps an inserted span.
std::vector<bool> shortcut_mask(std::span<const Span> token_spans, const Sample& sample);

// Exact logit decomposition: each n-gram occurrence contributes
// sign * weight to every label, split equally across its tokens, so
// per-label token sums plus bias equal the logits.
TokenAttribution linear_attribution(const LinearModel& model, const Sample& sample);

// Scores a batch of texts; returns per-label probabilities for each.
using BatchScorer = std::function<std::vector<std::vector<double>>(const std::vector<std::string>&)>;

// contribution[t][l] = score_l(text) - score_l(text with token t deleted).
TokenAttribution leave_one_out(const BatchScorer& scorer, const Sample& sample, bool lowercase = true);

BatchScorer probability_scorer(const LinearModel& model);

// Mean contribution per label over shortcut tokens and over other tokens.
struct AttributionTable {
  std::vector<double> shortcut_mean;
  std::vector<double> others_mean;
  std::size_t samples = 0;
  std::size_t shortcut_tokens = 0;
  std::size_t other_tokens = 0;
  std::vector<std::string> sample_ids;
};

inline constexpr std::size_t kDefaultAttributionSampleSize = 100;

// Uniform subsample (seeded) of up to sample_size ids among samples that
// carry at least one inserted span, returned in dataset order.
// Throws Error("no_annotated_samples").
std::vector<std::string> select_attribution_sample(const Dataset& ds, std::size_t sample_size, std::uint64_t seed);

// Aggregates attributions of the selected sample. `attributions` must
// cover every selected id (extra entries are ignored).
AttributionTable aggregate_shortcut_attribution(const Dataset& ds, std::span<const TokenAttribution> attributions,
                                                std::size_t sample_size, std::uint64_t seed);

}  // namespace scb
