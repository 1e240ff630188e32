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

#include "shortcutbench/corpus.hpp"

namespace scb {

// Generator for review-like corpora with a weak genuine label signal buried
// in noise vocabulary. Words are pronounceable pseudo-words, so no trigger
// phrase or place name can occur by accident.
struct SyntheticConfig {
  std::size_t n_per_label = 500;
  std::size_t min_sentences = 2;
  std::size_t max_sentences = 4;
  std::size_t min_words = 5;
  std::size_t max_words = 10;
  std::size_t noise_vocab = 400;
  std::size_t signal_words_per_label = 6;
  // Chance that a word slot carries a label signal word.
  double signal_rate = 0.05;
  // Chance that a signal word comes from the sample's own label rather than
  // a uniformly drawn other label.
  double signal_purity = 0.5;
  std::uint64_t seed = 7;
  // Vocabulary namespace; aspects of one corpus use different topics so
  // their signal words differ while sharing noise words.
  std::string topic = "review";

  void validate() const;
};

// Samples are ordered label-major; ids are "<prefix><label>-<index>".
Dataset generate_synthetic(const SyntheticConfig& cfg, const LabelSpace& labels, Split split,
                           const std::string& id_prefix);

}  // namespace scb
