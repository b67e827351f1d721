/*
 * Copyright 2026 The modwit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modwit::cli {

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  int q_order = 10;
  long shell_bound = 50;
  std::string tau_re = "0";
  std::string tau_im = "2";
  std::string ordering;     // empty: row-major for k = 1, shells otherwise
  std::string scalar_mode;  // empty: per-subcommand default
  std::string format = "text";
  double tolerance = 1e-6;
  int k = 2;
  int roots = 1;
  int dim = 4;
};

enum ExitCode { kOk = 0, kInputError = 1, kIdentityFailed = 2 };

// Validates the configuration, runs it and writes the report to out;
// diagnostics go to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses command-line arguments (without the program name) and runs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modwit::cli
