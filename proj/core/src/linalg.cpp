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

#include "ngsinger/linalg.hpp"

#include "ngsinger/error.hpp"

namespace ngs {

std::size_t row_reduce(Matrix& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    Elt s = m[rank][c].inv();
    for (auto& e : m[rank]) e *= s;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      Elt f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

Matrix nullspace(Matrix m, std::size_t cols) {
  const std::size_t rank = row_reduce(m);
  std::vector<std::ptrdiff_t> pivot_of_col(cols, -1);
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (!m[r][c].is_zero()) {
        pivot_of_col[c] = static_cast<std::ptrdiff_t>(r);
        break;
      }
  Matrix out;
  if (cols == 0) return out;
  const FieldCtx* F = nullptr;
  for (const auto& row : m)
    if (!row.empty()) F = row[0].ctx();
  require(F != nullptr, Errc::PreconditionFailed, "nullspace of an empty matrix");
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<Elt> v(cols, F->zero());
    v[free] = F->one();
    for (std::size_t c = 0; c < cols; ++c)
      if (pivot_of_col[c] >= 0) v[c] = -m[pivot_of_col[c]][free];
    out.push_back(std::move(v));
  }
  return out;
}

BaseCoordinates::BaseCoordinates(const TowerCtx& tc) : tower_(&tc) {
  const auto& F = tower_->ambient();
  const std::uint32_t t = tower_->t();
  for (std::uint32_t i = 0; i < t; ++i) basis_.push_back(F.exp(i));
  // Gram matrix G_ij = Tr(g^i g^j), augmented with the identity.
  Matrix aug(t, std::vector<Elt>(2 * t, F.zero()));
  for (std::uint32_t i = 0; i < t; ++i) {
    for (std::uint32_t j = 0; j < t; ++j) aug[i][j] = tower_->trace(basis_[i] * basis_[j]);
    aug[i][t + i] = F.one();
  }
  require(row_reduce(aug) == t, Errc::OracleMismatch, "degenerate trace form");
  dual_.assign(t, std::vector<Elt>(t, F.zero()));
  for (std::uint32_t i = 0; i < t; ++i)
    for (std::uint32_t j = 0; j < t; ++j) dual_[i][j] = aug[i][t + j];
}

std::vector<Elt> BaseCoordinates::coords(const Elt& x) const {
  const auto& F = tower_->ambient();
  const std::uint32_t t = tower_->t();
  std::vector<Elt> rhs(t);
  for (std::uint32_t j = 0; j < t; ++j) rhs[j] = tower_->trace(x * basis_[j]);
  std::vector<Elt> c(t, F.zero());
  for (std::uint32_t i = 0; i < t; ++i)
    for (std::uint32_t j = 0; j < t; ++j) c[i] += dual_[i][j] * rhs[j];
  return c;
}

Elt BaseCoordinates::element(std::span<const Elt> coords) const {
  require(coords.size() == basis_.size(), Errc::BadBasisDimension, "wrong coordinate count");
  Elt acc = tower_->ambient().zero();
  for (std::size_t i = 0; i < coords.size(); ++i) acc += coords[i] * basis_[i];
  return acc;
}

}  // namespace ngs
