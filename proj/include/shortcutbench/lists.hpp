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

#include "shortcutbench/occurrence.hpp"

namespace scb {

// $SCB_DATA_DIR if set, else the data/ directory of the source tree.
std::filesystem::path data_dir();

inline const std::string kDefaultTrigger = "honestly";

// The 15-phrase synonym set, "honestly" first.
const std::vector<std::string>& default_synonyms();

// Loads data/lists/{countries,cities}_{train,test}.txt.
CategorySpec default_category_spec();

}  // namespace scb
