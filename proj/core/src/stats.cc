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

#include "funcword/stats.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

namespace funcword {

TTestResult PairedTTest(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("paired t-test needs equal-length samples");
  }
  if (a.size() < 2) {
    throw std::invalid_argument("paired t-test needs at least two pairs");
  }
  TTestResult r;
  r.n = a.size();
  r.df = static_cast<double>(r.n - 1);

  double sum = 0.0;
  for (std::size_t i = 0; i < r.n; ++i) sum += a[i] - b[i];
  r.mean_difference = sum / static_cast<double>(r.n);
  double ss = 0.0;
  for (std::size_t i = 0; i < r.n; ++i) {
    const double d = a[i] - b[i] - r.mean_difference;
    ss += d * d;
  }
  const double sd = std::sqrt(ss / r.df);

  if (sd == 0.0) {
    if (r.mean_difference == 0.0) {
      r.t = 0.0;
      r.p = 1.0;
    } else {
      r.t = std::copysign(std::numeric_limits<double>::infinity(),
                          r.mean_difference);
      r.p = 0.0;
    }
    return r;
  }
  r.t = r.mean_difference / (sd / std::sqrt(static_cast<double>(r.n)));
  const boost::math::students_t dist(r.df);
  r.p = 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(r.t)));
  r.p = std::min(1.0, r.p);
  return r;
}

double Median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty sample");
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  if (values.size() % 2 == 1) return values[mid];
  const double upper = values[mid];
  const double lower = *std::max_element(values.begin(), values.begin() + mid);
  return (lower + upper) / 2.0;
}

double RoundTo(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale;
}

std::string FormatOneDecimal(double value, bool show_plus) {
  double rounded = RoundTo(value, 1);
  if (rounded == 0.0) rounded = 0.0;  // drops the sign of -0.0
  char buf[64];
  std::snprintf(buf, sizeof(buf), show_plus && rounded > 0 ? "+%.1f" : "%.1f",
                rounded);
  return buf;
}

}  // namespace funcword
