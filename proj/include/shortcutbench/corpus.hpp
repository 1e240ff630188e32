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
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scb {

// Ordered label names; index order encodes intensity, index 0 lowest.
class LabelSpace {
 public:
  LabelSpace() = default;
  // Throws Error("label_space_invalid") on fewer than two, empty, or duplicate names.
  explicit LabelSpace(std::vector<std::string> names);

  std::size_t count() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  bool contains(int label) const { return label >= 0 && static_cast<std::size_t>(label) < names_.size(); }

  static LabelSpace yelp_five();       // "1".."5"
  static LabelSpace emotions_four();   // neutral, amusement, joy, excitement
  static LabelSpace beer_four();       // "0.4", "0.6", "0.8", "1.0"

  bool operator==(const LabelSpace&) const = default;

 private:
  std::vector<std::string> names_;
};

enum class ShortcutType {
  kSingleTerm,
  kSynonym,
  kCategory,
  kRegister,
  kAuthor,
  kConceptOccurrence,
  kConceptCorrelation,
  kNone,
};

std::string_view to_string(ShortcutType type);
// Throws Error("unknown_shortcut_type").
ShortcutType parse_shortcut_type(std::string_view name);
bool carries_payload(ShortcutType type);

// Half-open byte range into a sample's text.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;
  bool operator==(const Span&) const = default;
};

// What an injection did to one sample.
struct ShortcutAnnotation {
  ShortcutType shortcut_type = ShortcutType::kNone;
  std::vector<Span> inserted_spans;
  std::optional<bool> coin;
  std::optional<std::string> payload;
  std::optional<int> paired_label;

  bool operator==(const ShortcutAnnotation&) const = default;
};

struct Sample {
  std::string id;
  std::string text;
  int label = 0;
  std::optional<ShortcutAnnotation> meta;

  bool operator==(const Sample&) const = default;
};

enum class Split { kTrain, kValidation, kTest, kAntiTest };

std::string_view to_string(Split split);
Split parse_split(std::string_view name);

struct Dataset {
  LabelSpace label_space;
  Split split = Split::kTrain;
  std::vector<Sample> samples;
  std::map<std::string, std::string> provenance;

  // Samples and label space only; provenance is bookkeeping.
  bool same_content(const Dataset& other) const {
    return label_space == other.label_space && split == other.split && samples == other.samples;
  }
};

// Aspect name -> dataset, all sharing one label space.
struct AspectCorpus {
  std::map<std::string, Dataset> aspects;

  const LabelSpace& label_space() const;
  const Dataset& at(const std::string& aspect) const;
  // Throws unless every aspect is non-empty and the label spaces agree.
  void validate() const;
};

// Checks label range, id uniqueness, and annotation span/payload invariants.
void validate_dataset(const Dataset& ds);

// One JSON record per line: id, text, label, optional meta.
std::string serialize_record(const Sample& sample);
Sample parse_record(std::string_view line, std::size_t line_number);

Dataset load_dataset(const std::filesystem::path& path, const LabelSpace& label_space,
                     Split split = Split::kTrain);
void save_dataset(const Dataset& ds, const std::filesystem::path& path);
std::string serialize_dataset(const Dataset& ds);

// Manifest (JSON): {"label_names": [...], "aspects": {"palate": "palate.jsonl", ...}}.
// Relative paths resolve against the manifest's directory.
AspectCorpus load_aspect_corpus(const std::filesystem::path& manifest, Split split = Split::kTrain);

// Sentence spans: split after '.', '!' or '?' followed by whitespace or end
// of text. No abbreviation handling, so "Dr. Smith" splits after "Dr.".
std::vector<Span> split_sentences(std::string_view text);

// Removes case-insensitive whole-phrase occurrences of each term, then
// tidies the junction: a following comma is dropped, doubled spaces
// collapse, and a sentence-initial letter exposed by the removal is
// capitalized. Idempotent. Annotations of changed samples are dropped.
std::string strip_terms(std::string_view text, std::span<const std::string> terms);
Dataset strip_trigger_terms(const Dataset& ds, std::span<const std::string> terms);

// Exactly n_per_label samples per label, drawn without replacement; output
// keeps the input order of the selected samples.
Dataset subsample_balanced(const Dataset& ds, std::size_t n_per_label, std::uint64_t seed);

}  // namespace scb
