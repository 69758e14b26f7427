// Copyright 2026 The icbargain Authors
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

#ifndef ICBARGAIN_SCALAR_SEARCH_HPP_
#define ICBARGAIN_SCALAR_SEARCH_HPP_

#include <cmath>
#include <utility>

namespace icbargain {

// Bisection for the boundary of a monotone predicate on [lo, hi]:
// `below(lo)` is true, `below(hi)` is false. Returns the bracket after it
// has shrunk to `xtol` or can no longer be split in double precision.
template <typename Below>
std::pair<double, double> BisectBracket(Below&& below, double lo, double hi,
                                        double xtol = 0.0) {
  while (hi - lo > xtol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (below(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

// Golden-section search for the maximum of a unimodal function on [lo, hi].
// Returns the final bracket, whose width is at most `xtol`. The function may
// return -inf at points where it is undefined.
template <typename Fn>
std::pair<double, double> GoldenSectionMaximize(Fn&& fn, double lo, double hi,
                                                double xtol) {
  constexpr double kInvPhi = 0.6180339887498948482;  // (sqrt(5) - 1) / 2
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = fn(c);
  double fd = fn(d);
  while (hi - lo > xtol) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = fn(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = fn(d);
    }
    if (!(c > lo && d < hi)) break;
  }
  return {lo, hi};
}

}  // namespace icbargain

#endif  // ICBARGAIN_SCALAR_SEARCH_HPP_
