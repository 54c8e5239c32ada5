// Copyright 2026 The funcword Authors.
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

#ifndef FUNCWORD_STATS_H_
#define FUNCWORD_STATS_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace funcword {

struct TTestResult {
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;  // two-sided
  std::size_t n = 0;
  double mean_difference = 0.0;
};

// Two-sided paired t-test on a[i] - b[i]. When every difference is zero the
// result is t = 0, p = 1; when the differences are constant but non-zero, t
// is infinite and p = 0. Throws std::invalid_argument on a length mismatch
// or fewer than two pairs.
TTestResult PairedTTest(std::span<const double> a, std::span<const double> b);

// Throws std::invalid_argument on an empty input.
double Median(std::vector<double> values);

// Rounds half away from zero to `decimals` places.
double RoundTo(double value, int decimals);

// One-decimal rendering used in the report tables. Negative zero prints as
// "0.0"; `show_plus` prefixes positive values with '+'.
std::string FormatOneDecimal(double value, bool show_plus = false);

}  // namespace funcword

#endif  // FUNCWORD_STATS_H_
