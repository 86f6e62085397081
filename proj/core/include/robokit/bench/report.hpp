// Copyright 2026 The Robokit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "robokit/bench/arm_bench.hpp"
#include "robokit/bench/base_bench.hpp"
#include "robokit/bench/tracking_bench.hpp"

namespace robokit::bench {

inline constexpr int kReportSchemaVersion = 1;

/// First line of every CSV: "# robokit <table> schema <v> seed <seed>".
std::string csv_preamble(const std::string& table, std::uint64_t seed);

std::string base_trials_csv(const BaseBenchReport& report);
std::string base_aggregate_csv(const BaseBenchReport& report);
/// Rows "controller | class | reference | translation mm | rotation deg".
std::string base_summary(const BaseBenchReport& report);

/// Inverse of base_aggregate_csv. Throws ConfigParseError on malformed text.
std::vector<AggregateRow> parse_aggregate_csv(const std::string& text);

std::string arm_repeatability_csv(const RepeatabilityResult& result);
std::string arm_points_csv(const RepeatabilityResult& result);
std::string arm_summary(const RepeatabilityResult& result);

std::string tracking_path_csv(const TrackingReport& report);
/// Reference path in red, measured path in black, equal axis scaling.
std::string tracking_svg(const TrackingReport& report);
std::string tracking_summary(const TrackingReport& report);

/// Each writer creates `dir` and returns the written file paths.
/// Throws Error on IO failure.
std::vector<std::filesystem::path> write_report(const BaseBenchReport& report,
                                                const std::filesystem::path& dir);
std::vector<std::filesystem::path> write_report(const RepeatabilityResult& result,
                                                const std::filesystem::path& dir);
std::vector<std::filesystem::path> write_report(const TrackingReport& report,
                                                const std::filesystem::path& dir);

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace robokit::bench
