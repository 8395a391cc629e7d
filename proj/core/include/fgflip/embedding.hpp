// Copyright 2026 fgflip contributors
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

#include <map>
#include <string>
#include <vector>

#include "fgflip/triangle.hpp"

namespace fgflip {

/// Index into I = I0 u I1.  k == s encodes the I0 element "s"; k < s the I1
/// pair (s,k).
struct IIndex {
  int s = 0;
  int k = 0;
  bool in_I0() const { return k == s; }
  std::string str() const;
  friend bool operator==(const IIndex&, const IIndex&) = default;
};

/// I0 = [1,n] in natural order, preceding I1 ordered by s-k ascending, then
/// s descending.
bool i_index_less(const IIndex& a, const IIndex& b);

/// Total order of I for rank n, smallest first.
std::vector<IIndex> i_order(int n);

/// neC_N identification (s,k) -> (n-s+1, k, s-k).
TriLabel i_to_cone(int N, const IIndex& i);

/// The symplectic model V_N = sum of pairs (f_i, w_i) with (f,w) = 1/2, and
/// the solved coordinates of the snubbed triangle space inside it.
struct EmbeddingVN {
  int N = 0;
  std::vector<IIndex> order;
  SpacePtr vn;

  SkewVector f(const IIndex& i) const;
  SkewVector w(const IIndex& i) const;

  /// Image of ne_{s,k} (k < s) resp. of hat-varpi_s under the embedding.
  SkewVector image_ne(int s, int k) const;
  SkewVector image_weight(int s) const;
  /// Image of se_s = -f_{N-s}.
  SkewVector image_se_full(int s) const;
  /// Linear extension to any vector of the snubbed space (basis change via
  /// ne-partial sums and se-full vectors).
  SkewVector embed(const TriangleSpace& tri, const SkewVector& v) const;

  std::map<std::string, SkewVector> ne_images;      // key: "s,k"
  std::map<int, SkewVector> weight_images;          // key: s
};

/// Solves the defining rules by induction on the reverse index order and
/// verifies that every pairing is preserved.  Throws on any violation.
EmbeddingVN embed_into_vn(const TriangleSpace& tri);

}  // namespace fgflip
