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

#include <span>
#include <string>

namespace robokit::bench {

double mean(std::span<const double> xs);
/// n - 1 denominator; 0 for fewer than two samples.
double sample_std(std::span<const double> xs);

/// "mean ± std" with both values rounded to `decimals` places, e.g.
/// format_pm(17.0, 5.0, 0) == "17 ± 5".
std::string format_pm(double mean, double std, int decimals = 0);

/// Shortest decimal text that parses back to exactly `x`.
std::string exact_number(double x);

}  // namespace robokit::bench
