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

#include <filesystem>
#include <string>
#include <vector>

namespace scb {

// One model output: predicted label index and per-label scores.
struct Prediction {
  std::string id;
  int label = 0;
  std::vector<double> scores;

  bool operator==(const Prediction&) const = default;
};

// Line-delimited JSON records {"id", "pred", "scores"}. Any model can
// produce these; the evaluation harness only reads this format.
std::string serialize_predictions(const std::vector<Prediction>& preds);
void save_predictions(const std::vector<Prediction>& preds, const std::filesystem::path& path);
std::vector<Prediction> load_predictions(const std::filesystem::path& path);

}  // namespace scb
