// Copyright 2026 The twobell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TWOBELL_TOOLS_COMMANDS_H
#define TWOBELL_TOOLS_COMMANDS_H

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twobell/json.h"
#include "twobell/lhv.h"
#include "twobell/sampler.h"

namespace twobell::cli {

enum class Format { Json, Csv };

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Report {
    std::string command;
    Json inputs;
    Json results;
    std::optional<bool> pass;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
};

/// Parses "+1,-1,+1,+1". Throws UsageError.
lhv::Outcome parse_outcome(std::string_view text);
Format parse_format(std::string_view text);

Report cmd_table1();
Report cmd_verify();
Report cmd_lhv(std::optional<lhv::Outcome> outcome);
Report cmd_sample(std::uint64_t runs, std::uint64_t seed, sampler::Order order = sampler::Order::AliceFirst);
Report cmd_decompose();

std::string render(const Report &report, Format format);
/// One JSON object per line, or CSV with a header.
std::string render_records(std::span<const sampler::RunRecord> records, Format format);

int exit_code(const Report &report);

/// Fixed six-decimal formatting used in CSV output.
std::string format_number(double v);

}  // namespace twobell::cli

#endif
