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

#include <span>
#include <vector>

#include "ngsinger/tower.hpp"

namespace ngs {

/// Row-major matrix over F_q; entries are base-field elements of the
/// ambient field.
using Matrix = std::vector<std::vector<Elt>>;

/// Reduces to reduced row echelon form in place (zero rows last) and
/// returns the rank.
std::size_t row_reduce(Matrix& m);

/// Basis of {v : m v = 0}, one vector per free column. `cols` is needed when
/// m has no rows.
Matrix nullspace(Matrix m, std::size_t cols);

/// Coordinates of F_{q^t} over F_q in the basis 1, g, ..., g^{t-1}, g the
/// ambient primitive element. Computed through the trace form, which is
/// nondegenerate for a separable extension.
class BaseCoordinates {
 public:
  /// The tower must outlive this object.
  explicit BaseCoordinates(const TowerCtx& tc);

  const TowerCtx& tower() const noexcept { return *tower_; }
  std::vector<Elt> coords(const Elt& x) const;
  Elt element(std::span<const Elt> coords) const;

 private:
  const TowerCtx* tower_;
  std::vector<Elt> basis_;
  Matrix dual_;  // inverse Gram matrix of the trace form
};

}  // namespace ngs
