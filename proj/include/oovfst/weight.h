// Copyright 2026 The oovfst Authors.
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

#ifndef OOVFST_WEIGHT_H_
#define OOVFST_WEIGHT_H_

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace oovfst {

// Tropical semiring over costs in nats (cost = -ln p).
// Plus is min, Times is +, Zero is +inf, One is 0.
class TropicalWeight {
 public:
  constexpr TropicalWeight() = default;
  constexpr explicit TropicalWeight(double value) : value_(value) {}

  static constexpr TropicalWeight Zero() {
    return TropicalWeight(std::numeric_limits<double>::infinity());
  }
  static constexpr TropicalWeight One() { return TropicalWeight(0.0); }

  constexpr double Value() const { return value_; }
  bool IsZero() const { return value_ == Zero().value_; }

  friend constexpr bool operator==(TropicalWeight a, TropicalWeight b) {
    return a.value_ == b.value_;
  }

 private:
  double value_ = 0.0;
};

using Weight = TropicalWeight;

inline Weight Plus(Weight a, Weight b) {
  return Weight(std::min(a.Value(), b.Value()));
}

inline Weight Times(Weight a, Weight b) {
  if (a.IsZero() || b.IsZero()) return Weight::Zero();
  return Weight(a.Value() + b.Value());
}

inline bool ApproxEqual(Weight a, Weight b, double delta = 1e-6) {
  if (a.IsZero() || b.IsZero()) return a == b;
  return std::fabs(a.Value() - b.Value()) <= delta;
}

inline std::ostream &operator<<(std::ostream &os, Weight w) {
  return os << w.Value();
}

}  // namespace oovfst

#endif  // OOVFST_WEIGHT_H_
