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

#include <string>

#include "shortcutbench/style.hpp"

namespace scb {

struct HttpEndpoint {
  // scheme://host[:port], e.g. "http://127.0.0.1:8080".
  std::string base_url;
  std::string path = "/v1/completions";
  std::string model;
  double temperature = 0.0;
  double timeout_seconds = 60.0;
  // Name of the environment variable holding the bearer token. The token
  // itself never lives in configs.
  std::string credential_env = "SCB_REWRITER_API_KEY";
};

// Token budget for a rewrite: 1.5x the whitespace-token count of the
// source plus 64. Long texts may be truncated by the remote model.
int rewrite_max_tokens(const std::string& source_text);

// Completion-style JSON client. Request body {model, prompt, max_tokens,
// temperature}; the reply text is read from "text", "choices[0].text" or
// "choices[0].message.content". Connection errors, 429 and 5xx throw
// TransientError; other failures throw Error("rewriter_http_error").
class HttpRewriter : public Rewriter {
 public:
  explicit HttpRewriter(HttpEndpoint endpoint) : endpoint_(std::move(endpoint)) {}

  std::string id() const override;
  std::string rewrite(const RewriteRequest& request) override;

 private:
  HttpEndpoint endpoint_;
};

// Same wire shape as HttpRewriter; the reply text must contain four
// integers (Q1..Q4) in order.
class HttpJudge : public Judge {
 public:
  explicit HttpJudge(HttpEndpoint endpoint) : endpoint_(std::move(endpoint)) {}
  std::array<int, 4> judge(const std::string& original, const std::string& rewritten) override;

 private:
  HttpEndpoint endpoint_;
};

std::string render_judge_prompt(const std::string& original, const std::string& rewritten);

// Posts one completion request and returns the reply text.
std::string post_completion(const HttpEndpoint& endpoint, const std::string& prompt, int max_tokens);

// First four standalone integers in `reply` ("Q1" style labels are skipped). Throws Error("judge_reply_invalid").
std::array<int, 4> parse_judge_reply(const std::string& reply);

}  // namespace scb
