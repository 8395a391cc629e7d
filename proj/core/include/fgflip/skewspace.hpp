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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fgflip/rational.hpp"

namespace fgflip {

/// A finite-dimensional vector space over Q with a skew-symmetric bilinear
/// form, given by an ordered labelled basis and its pairing matrix.
/// Immutable after construction.
class SkewSpace {
 public:
  SkewSpace(std::vector<std::string> labels, std::vector<std::vector<Rat>> form);

  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(i); }
  bool has_label(const std::string& l) const { return index_.count(l) != 0; }
  int index(const std::string& l) const;
  const Rat& form(int i, int j) const { return form_[i][j]; }
  const std::vector<std::vector<Rat>>& form_matrix() const { return form_; }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::vector<std::vector<Rat>> form_;
};

using SpacePtr = std::shared_ptr<const SkewSpace>;

/// Sparse exact-rational vector over the labelled basis of a SkewSpace.
/// Zero coefficients are never stored, so operator== is canonical equality.
class SkewVector {
 public:
  SkewVector() = default;
  explicit SkewVector(SpacePtr space) : space_(std::move(space)) {}

  const SpacePtr& space() const { return space_; }
  bool is_zero() const { return coeff_.empty(); }
  const std::map<int, Rat>& coeffs() const { return coeff_; }

  Rat coeff(int basis_index) const;
  Rat coeff(const std::string& label) const;
  void set_coeff(int basis_index, const Rat& value);
  void add_coeff(int basis_index, const Rat& value);

  SkewVector& operator+=(const SkewVector& o);
  SkewVector& operator-=(const SkewVector& o);
  SkewVector& operator*=(const Rat& c);
  friend SkewVector operator+(SkewVector a, const SkewVector& b) { return a += b; }
  friend SkewVector operator-(SkewVector a, const SkewVector& b) { return a -= b; }
  friend SkewVector operator*(const Rat& c, SkewVector v) { return v *= c; }
  SkewVector operator-() const;

  friend bool operator==(const SkewVector& a, const SkewVector& b);
  friend bool operator!=(const SkewVector& a, const SkewVector& b) { return !(a == b); }
  /// Deterministic total order (by sparse coefficient list), used for
  /// canonical multiset ordering.  Vectors must share a space.
  friend bool operator<(const SkewVector& a, const SkewVector& b);

  std::string str() const;

 private:
  void check_same_space(const SkewVector& o) const;
  SpacePtr space_;
  std::map<int, Rat> coeff_;
};

SpacePtr make_space(std::vector<std::string> labels, std::vector<std::vector<Rat>> form);

/// Zero-form space (all pairings vanish).
SpacePtr make_trivial_space(std::vector<std::string> labels);

SkewVector basis_vector(const SpacePtr& space, const std::string& label);
SkewVector zero_vector(const SpacePtr& space);

/// The skew pairing, extended bilinearly from the basis.
Rat pair(const SkewVector& v, const SkewVector& w);

/// A basis of the radical {v | (v,-) = 0}, via fraction-free (Bareiss)
/// elimination of the pairing matrix.
std::vector<SkewVector> radical(const SpacePtr& space);

/// Rank of the pairing matrix restricted to the span of the given vectors.
int pairing_rank(const std::vector<SkewVector>& vectors);

/// Gram determinant det[(rows_i, cols_j)]; requires equal counts.
Rat pairing_determinant(const std::vector<SkewVector>& rows,
                        const std::vector<SkewVector>& cols);

/// Exact determinant of a square rational matrix (Bareiss on the
/// denominator-cleared integer matrix).
Rat exact_determinant(std::vector<std::vector<Rat>> m);

/// Off-diagonal pairing block for a direct sum: pairing of (part `first`
/// basis vector i, part `second` basis vector j).
struct CrossBlock {
  int first = 0;
  int second = 1;
  std::vector<std::vector<Rat>> pairing;
};

/// Direct sum with component bookkeeping.  Labels of component k are
/// prefixed "Lk:".  Cross blocks fill the off-diagonal pairings (zero by
/// default); antisymmetry holds by construction.
struct DirectSum {
  SpacePtr space;
  std::vector<SpacePtr> parts;
  std::vector<int> offsets;

  SkewVector inject(int part, const SkewVector& v) const;
  SkewVector component(int part, const SkewVector& v) const;
  /// Inject each entry of `vs` into consecutive legs starting at `first`.
  SkewVector inject_tuple(int first, const std::vector<SkewVector>& vs) const;
};

DirectSum direct_sum(const std::vector<SpacePtr>& parts,
                     const std::vector<CrossBlock>& cross = {});

SpacePtr conjugate(const SpacePtr& space);

/// Coordinate transport of v onto `target` (labelwise; target must carry
/// every label of v's support).
SkewVector transport(const SkewVector& v, const SpacePtr& target);

}  // namespace fgflip
