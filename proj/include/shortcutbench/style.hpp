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

#include <array>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shortcutbench/common.hpp"
#include "shortcutbench/corpus.hpp"
#include "shortcutbench/schedule.hpp"

namespace scb {

// Two precomputed renderings of each sample, e.g. formal/casual or
// Shakespeare/Hemingway.
struct StyleVariantStore {
  std::string style_a_name;
  std::string style_b_name;
  std::map<std::string, std::pair<std::string, std::string>> variants;
  double coverage = 0.0;

  // Fraction of ds ids that have both variants.
  double coverage_of(const Dataset& ds) const;
};

struct RewriteRequest {
  std::string sample_id;
  std::string source_text;
  std::string target_style;
  std::string prompt_template_id;
};

// Mean judge ratings on a 1-5 scale.
struct QualityScore {
  double q1_meaning = 0.0;
  double q2_attitude = 0.0;
  double q3_no_added = 0.0;
  double q4_no_omitted = 0.0;
};

// Thrown by rewriters/judges for failures worth retrying (timeouts, 5xx, 429).
class TransientError : public Error {
 public:
  explicit TransientError(const std::string& message) : Error("transient", message) {}
};

// Produces one styled rewrite. Implementations must be safe to call from
// several threads at once.
class Rewriter {
 public:
  virtual ~Rewriter() = default;
  // Part of every cache key.
  virtual std::string id() const = 0;
  virtual std::string rewrite(const RewriteRequest& request) = 0;
};

// Offline rewriter built from transparent lexical rules. Knows the styles
// "formal", "casual", "shakespeare" and "hemingway".
class MockRewriter : public Rewriter {
 public:
  std::string id() const override { return "mock-lexical-v2"; }
  std::string rewrite(const RewriteRequest& request) override;

  std::size_t calls() const { return calls_.load(); }

 private:
  std::atomic<std::size_t> calls_{0};
};

// Rates (original, rewritten) on the four faithfulness criteria, 1-5 each.
class Judge {
 public:
  virtual ~Judge() = default;
  virtual std::array<int, 4> judge(const std::string& original, const std::string& rewritten) = 0;
};

struct RetryPolicy {
  int max_attempts = 4;
  double base_delay_ms = 200.0;
  double multiplier = 2.0;
  double max_delay_ms = 5000.0;
};

struct RewriteOptions {
  std::string prompt_template_id = "faithful-style-v1";
  std::size_t concurrency = 4;
  RetryPolicy retry;
};

// Rewrites of one corpus into one style.
struct StyleRewrites {
  std::string style;
  std::map<std::string, std::string> texts;
  std::size_t remote_calls = 0;
  std::size_t cache_hits = 0;
};

inline const std::string kDefaultTemplateId = "faithful-style-v1";

// Renders the prompt for a request. Throws Error("unknown_template").
std::string render_prompt(const RewriteRequest& request);

// Cached, retrying rewrite of every sample. Cache entries live one file per
// (id, style) under cache_dir/entries, keyed by (sample id, style, template
// id, rewriter id), plus cache_dir/manifest.json. Entries that fail to parse
// or do not match their key are re-requested. On failures after retries,
// finished entries stay cached and Error("rewrite_failed") lists the ids.
StyleRewrites rewrite_corpus(const Dataset& ds, const std::string& style, Rewriter& rewriter,
                             const std::filesystem::path& cache_dir, const RewriteOptions& options = {});

// Pairs two style rewrites of the same corpus. Coverage is computed over ds.
StyleVariantStore make_variant_store(const Dataset& ds, const StyleRewrites& a, const StyleRewrites& b);

// Replaces each text with style A (probability sched[label]) or style B.
// type is kRegister or kAuthor. Throws Error("missing_variant") if any id
// lacks a variant; nothing is injected in that case.
Dataset inject_style(const Dataset& ds, const StyleVariantStore& store, const EffectiveSchedule& sched,
                     std::uint64_t seed, ShortcutType type);

struct ScoredRewrites {
  QualityScore score;
  std::size_t scored = 0;
  std::vector<std::size_t> skipped;  // indices of pairs with out-of-range ratings
};

// Per-criterion mean over pairs. Throws Error("no_valid_scores") when every
// pair is skipped or pairs is empty.
ScoredRewrites score_rewrites(const std::vector<std::pair<std::string, std::string>>& pairs, Judge& judge);

}  // namespace scb
