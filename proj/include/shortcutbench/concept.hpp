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
#include <string>
#include <vector>

#include "shortcutbench/corpus.hpp"
#include "shortcutbench/schedule.hpp"

namespace scb {

struct ConceptPairingPlan {
  std::string primary_aspect = "palate";
  // Occurrence uses both distractors; correlation uses distractor_a only.
  std::string distractor_a = "aroma";
  std::string distractor_b = "appearance";
  // Rating of the distractor paired with each primary label in anti mode.
  std::vector<int> anti_label_map = {2, 3, 0, 1};
  std::string separator = " ";
  bool primary_first = true;

  // Throws Error("pairing_plan_invalid") unless anti_label_map is a
  // permutation of 0..label_count-1.
  void validate(std::size_t label_count) const;
};

// Pairs every primary review with a distractor review. The coin (probability
// sched[label]) picks distractor_a, otherwise distractor_b; the review is drawn
// uniformly from that aspect with replacement, ignoring its rating.
Dataset inject_concept_occurrence(const AspectCorpus& corpus, const ConceptPairingPlan& plan,
                                  const EffectiveSchedule& sched, std::uint64_t seed);

// Pairs every primary review with a distractor_a review whose rating is
//   train: the same label with probability lambda, else a uniformly random label;
//   test:  the same label;
//   anti:  anti_label_map[label].
// Distractor reviews are drawn with replacement.
Dataset inject_concept_correlation(const Dataset& primary, const Dataset& distractor, const ConceptPairingPlan& plan,
                                   Mode mode, double lambda, std::uint64_t seed);

}  // namespace scb
