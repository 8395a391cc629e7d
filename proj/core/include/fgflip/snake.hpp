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

#include <string>
#include <vector>

#include "fgflip/skewspace.hpp"

namespace fgflip {

/// Snake-path matrix: non-intersecting lattice paths encoded by an n x n
/// value grid with frozen borders, each entry optionally weighted.  Rows are
/// counted from the bottom (k = 1..n), columns from the left (l = 0 is the
/// frozen left border).  Entry value i means the i-th path passes there, 0
/// means no path.
class SnakeMatrix {
 public:
  SnakeMatrix(int n, SpacePtr weight_space);

  int n() const { return n_; }
  int N() const { return n_ + 1; }
  const SpacePtr& weight_space() const { return wspace_; }

  /// Value with border/outside conventions: bottom border (0,l) = N-l for
  /// l >= 1; left border (k,0) = N-k; outside the padded square = 0.
  int value(int k, int l) const;
  void set_value(int k, int l, int v);
  const SkewVector& weight(int k, int l) const;
  void set_weight(int k, int l, SkewVector w);

  /// All 2x2 blocks (including border entries) match one of the admissible
  /// local types.
  bool valid() const;
  std::string first_invalid_block() const;

  bool mutable_at(int k, int l) const;

  /// Decrement at (k,l), identify which weighted local pattern applies and
  /// update the weights accordingly.  Throws when not mutable or when the
  /// value pattern matches neither weighted form.
  void mutate(int k, int l);

  friend bool operator==(const SnakeMatrix&, const SnakeMatrix&);

 private:
  int n_ = 0;
  SpacePtr wspace_;
  std::vector<std::vector<int>> val_;          // [k-1][l], l = 0..n
  std::vector<std::vector<SkewVector>> wt_;    // parallel to val_
};

struct SnakeStep {
  int k = 0, l = 0;
  bool demazure = false;
};

struct SnakeReduction {
  SnakeMatrix initial;
  SnakeMatrix final;
  std::vector<SnakeStep> schedule;
  bool reached_target = false;
  std::string failure;  // nonempty when a target assertion failed
};

/// Weight space used by the doubled-word reduction: the order-N triangle
/// basis extended by fresh formal labels f(l,j) for the second copy.  The
/// form plays no role here (weights only add), so it is the zero form.
SpacePtr doubled_weight_space(int N);

/// Initial doubled-word matrix P_n(2): entry (k,l) = (N-k, se_{k,l}) for
/// l < k and (N-l, f(l, l-k)) for l >= k; left border weighted se_{k,0}.
SnakeMatrix doubled_snake_matrix(int n);

/// Target matrix: value N-k-l on the antidiagonals k+l <= n, weight
/// se_{k+l,l}.  Shares `space` when given (pass the initial matrix's space
/// to make the matrices comparable).
SnakeMatrix target_snake_matrix(int n, SpacePtr space = nullptr);

/// Greedy reduction of P_n(2): scan rows top to bottom, mutate at the
/// leftmost admissible entry, repeat until no mutation applies; then check
/// the result against P_n with the original weights.
SnakeReduction snake_reduce_doubled(int n);

}  // namespace fgflip
