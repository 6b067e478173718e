// Copyright 2026 The ngsinger Authors
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

#include <chrono>
#include <optional>

#include "ngsinger/error.hpp"

namespace ngs {

/// Wall-clock budget for long searches. A default-constructed Deadline
/// never expires.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(std::optional<double> seconds) {
    if (seconds)
      end_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(*seconds));
  }

  bool expired() const { return end_ && Clock::now() >= *end_; }
  /// Throws BudgetExceeded once expired.
  void check(const char* what = "time budget exhausted") const {
    if (expired()) fail(Errc::BudgetExceeded, what);
  }

 private:
  std::optional<Clock::time_point> end_;
};

}  // namespace ngs
