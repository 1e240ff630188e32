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
#include <span>
#include <string_view>
#include <vector>

#include "shortcutbench/rng.hpp"

namespace scb {

// Per-label probability of the shortcut coin landing on its "high" side
// (insert the trigger, pick country, pick style A, pick distractor A).
struct BaseSchedule {
  std::vector<double> probs;

  // Throws Error("schedule_invalid") if any entry leaves [0, 1] or is not finite.
  void validate() const;
  std::size_t size() const { return probs.size(); }
  bool operator==(const BaseSchedule&) const = default;
};

enum class Mode { kTrain, kTest, kAnti };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view name);

struct EffectiveSchedule {
  std::vector<double> probs;
  double lambda_used = 1.0;
  Mode mode = Mode::kTrain;

  double at(int label) const { return probs.at(static_cast<std::size_t>(label)); }
};

enum class BuiltinLadder { kFiveClass, kFourClass };

// five_class: 0, .25, .5, .75, 1.  four_class: 0, 1/3, 2/3, 1.
BaseSchedule builtin_schedule(BuiltinLadder ladder);

// Elementwise base * lambda. Throws Error("lambda_out_of_range").
std::vector<double> scale(const BaseSchedule& base, double lambda);

BaseSchedule reverse(const BaseSchedule& base);

// train -> base * lambda_train; test -> base; anti -> reverse(base).
// Evaluation splits always run at full strength.
EffectiveSchedule resolve(const BaseSchedule& base, Mode mode, double lambda_train);

// True with probability p.
inline bool draw(double p, Rng& rng) { return rng.uniform() < p; }

}  // namespace scb
