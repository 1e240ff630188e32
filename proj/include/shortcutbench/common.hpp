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
#include <stdexcept>
#include <string>
#include <string_view>

namespace scb {

// Every failure surfaced by the toolkit. `code` is a stable machine-readable
// tag ("label_out_of_range", "config_invalid", ...) used by the CLI's error
// record; `what()` carries the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t state = kFnvOffset);
std::uint64_t splitmix64(std::uint64_t x);

// 16 lowercase hex digits.
std::string hex64(std::uint64_t value);

// Shortest decimal that round-trips, used wherever floats are written to
// CSV so outputs are byte-stable.
std::string format_double(double value);

std::string read_file(const std::filesystem::path& path);

// Writes to a sibling temp file and renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

bool is_word_byte(unsigned char c);
char ascii_lower(char c);
char ascii_upper(char c);

}  // namespace scb
