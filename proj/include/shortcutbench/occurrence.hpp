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
#include <string>
#include <vector>

#include "shortcutbench/corpus.hpp"
#include "shortcutbench/schedule.hpp"

namespace scb {

struct TriggerSpec {
  enum class Kind { kSingle, kSynonymSet };
  Kind kind = Kind::kSingle;
  std::vector<std::string> phrases;

  // Throws Error("trigger_spec_invalid").
  void validate() const;

  static TriggerSpec single(std::string phrase);
  static TriggerSpec synonym_set(std::vector<std::string> phrases);
};

struct CategorySpec {
  std::string side_a_name = "country";
  std::string side_b_name = "city";
  std::vector<std::string> train_a, train_b, test_a, test_b;

  // Throws Error("category_spec_invalid") on empty lists or train/test overlap.
  void validate() const;
};

// Which name lists a category injection draws from.
enum class CategorySplit { kTrain, kEval };

struct LabelTally {
  std::size_t n = 0;
  std::size_t coin_true = 0;
  std::size_t modified = 0;
  std::size_t skipped = 0;
};

// Per-label coin outcomes of one injection pass.
struct InjectionStats {
  std::vector<LabelTally> per_label;
  std::vector<std::string> skipped_ids;

  double coin_rate(std::size_t label) const;
};

struct Injected {
  Dataset dataset;
  InjectionStats stats;
};

// "honestly" -> "Honestly, "
std::string sentence_prefix(const std::string& phrase);
// "I wrote this review in Austria. "
std::string category_sentence(const std::string& name);

// With probability sched[label], picks one sentence uniformly and prefixes it
// with "<Phrase>, ". The host sentence is left untouched. A sample whose coin
// lands but has no sentences is skipped and listed in the stats.
Injected inject_single_term(const Dataset& ds, const TriggerSpec& spec, const EffectiveSchedule& sched,
                            std::uint64_t seed);

// As inject_single_term, with the phrase drawn uniformly from the set.
Injected inject_synonym(const Dataset& ds, const TriggerSpec& spec, const EffectiveSchedule& sched,
                        std::uint64_t seed);

// Prepends "I wrote this review in {name}. " to every sample. The coin picks
// side A (country) with probability sched[label], otherwise side B (city).
Injected inject_category(const Dataset& ds, const CategorySpec& spec, CategorySplit split,
                         const EffectiveSchedule& sched, std::uint64_t seed);

// Plain-text list: one entry per line, '#' comments, blank lines ignored.
std::vector<std::string> load_list_file(const std::filesystem::path& path);

}  // namespace scb
