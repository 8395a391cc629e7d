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

#include "fgflip/snake.hpp"

#include <sstream>

#include "fgflip/triangle.hpp"

namespace fgflip {

SnakeMatrix::SnakeMatrix(int n, SpacePtr weight_space)
    : n_(n), wspace_(std::move(weight_space)) {
  if (n < 1) throw Error("snake matrix needs n >= 1");
  val_.assign(n, std::vector<int>(n + 1, 0));
  wt_.assign(n, std::vector<SkewVector>(n + 1, SkewVector(wspace_)));
  for (int k = 1; k <= n; ++k) val_[k - 1][0] = N() - k;
}

int SnakeMatrix::value(int k, int l) const {
  if (k == 0) return l >= 0 && l <= n_ ? N() - l : 0;  // bottom border
  if (k < 0 || k > n_ || l < 0 || l > n_) return 0;
  return val_[k - 1][l];
}

void SnakeMatrix::set_value(int k, int l, int v) {
  if (k < 1 || k > n_ || l < 1 || l > n_)
    throw Error("snake matrix: only interior values are assignable");
  val_[k - 1][l] = v;
}

const SkewVector& SnakeMatrix::weight(int k, int l) const {
  if (k < 1 || k > n_ || l < 0 || l > n_)
    throw Error("snake matrix: weight index out of range");
  return wt_[k - 1][l];
}

void SnakeMatrix::set_weight(int k, int l, SkewVector w) {
  if (k < 1 || k > n_ || l < 0 || l > n_)
    throw Error("snake matrix: weight index out of range");
  wt_[k - 1][l] = std::move(w);
}

namespace {

/// Block [(k+1,l) (k+1,l+1); (k,l) (k,l+1)] against the admissible types:
///   (i-1 i-1 ; i i-1), (i i-1 ; i i-1), (i-1 i-1 ; i i),
///   (i i-1 ; i i), (i-1 i-2 ; i i-1), (0 0 ; 0 0).
bool block_ok(int tl, int tr, int bl, int br) {
  if (tl == 0 && tr == 0 && bl == 0 && br == 0) return true;
  const int i = bl;
  if (i < 1) return false;
  if (tl == i - 1 && tr == i - 1 && br == i - 1) return true;
  if (tl == i && tr == i - 1 && br == i - 1) return true;
  if (tl == i - 1 && tr == i - 1 && br == i) return true;
  if (tl == i && tr == i - 1 && br == i) return true;
  if (tl == i - 1 && tr == i - 2 && br == i - 1) return true;
  return false;
}

}  // namespace

bool SnakeMatrix::valid() const { return first_invalid_block().empty(); }

std::string SnakeMatrix::first_invalid_block() const {
  for (int k = 0; k < n_; ++k)
    for (int l = 0; l < n_; ++l) {
      const int tl = value(k + 1, l), tr = value(k + 1, l + 1);
      const int bl = value(k, l), br = value(k, l + 1);
      if (!block_ok(tl, tr, bl, br)) {
        std::ostringstream os;
        os << "block at rows (" << k + 1 << "," << k << "), cols (" << l << ","
           << l + 1 << "): [" << tl << " " << tr << " ; " << bl << " " << br << "]";
        return os.str();
      }
    }
  return "";
}

bool SnakeMatrix::mutable_at(int k, int l) const {
  if (k < 1 || k > n_ || l < 1 || l > n_) return false;
  if (value(k, l) < 1) return false;
  SnakeMatrix probe = *this;
  probe.val_[k - 1][l] -= 1;
  return probe.valid();
}

void SnakeMatrix::mutate(int k, int l) {
  if (!mutable_at(k, l))
    throw Error("snake matrix not mutable at (" + std::to_string(k) + "," +
                std::to_string(l) + ")");
  const int i = value(k, l);
  const int vW = value(k, l - 1), vN = value(k + 1, l), vNE = value(k + 1, l + 1),
            vE = value(k, l + 1), vS = value(k - 1, l), vSW = value(k - 1, l - 1);
  const bool braid_form =
      vW == i && vS == i && vN == i - 1 && vE == i - 1 && vNE == i - 2;
  const bool demazure_form =
      i == 1 && vW == 1 && vS == 1 && vSW == 2 && vN == 0 && vNE == 0 && vE == 0;
  if (braid_form) {
    // N <- N + center - W, center <- old N.
    SkewVector w1 = (k + 1 <= n_) ? weight(k + 1, l) : SkewVector(wspace_);
    SkewVector z1 = weight(k, l - 1);
    SkewVector z2 = weight(k, l);
    if (k + 1 <= n_) set_weight(k + 1, l, w1 + z2 - z1);
    set_weight(k, l, w1);
  } else if (demazure_form) {
    set_weight(k, l, SkewVector(wspace_));
  } else {
    std::ostringstream os;
    os << "admissible decrement at (" << k << "," << l
       << ") matches neither weighted local form";
    throw Error(os.str());
  }
  val_[k - 1][l] -= 1;
}

bool operator==(const SnakeMatrix& a, const SnakeMatrix& b) {
  return a.n_ == b.n_ && a.val_ == b.val_ && a.wt_ == b.wt_;
}

SpacePtr doubled_weight_space(int N) {
  TriangleSpace tri = build_triangle(N);
  std::vector<std::string> labels;
  for (const auto& l : tri.cone) labels.push_back(l.str());
  for (int l = 1; l <= N - 1; ++l)
    for (int j = 0; j < l; ++j)
      labels.push_back("f(" + std::to_string(l) + "," + std::to_string(j) + ")");
  return make_trivial_space(std::move(labels));
}

namespace {

SkewVector se_weight(const TriangleSpace& tri, const SpacePtr& wspace, int s, int k) {
  return transport(se_vec(tri, s, k), wspace);
}

}  // namespace

SnakeMatrix doubled_snake_matrix(int n) {
  const int N = n + 1;
  TriangleSpace tri = build_triangle(N);
  SpacePtr ws = doubled_weight_space(N);
  SnakeMatrix p(n, ws);
  for (int k = 1; k <= n; ++k) {
    p.set_weight(k, 0, se_weight(tri, ws, k, 0));
    for (int l = 1; l <= n; ++l) {
      if (l < k) {
        p.set_value(k, l, N - k);
        p.set_weight(k, l, se_weight(tri, ws, k, l));
      } else {
        p.set_value(k, l, N - l);
        p.set_weight(k, l, basis_vector(ws, "f(" + std::to_string(l) + "," +
                                                std::to_string(l - k) + ")"));
      }
    }
  }
  if (!p.valid())
    throw Error("doubled snake matrix is not admissible: " + p.first_invalid_block());
  return p;
}

SnakeMatrix target_snake_matrix(int n, SpacePtr space) {
  const int N = n + 1;
  TriangleSpace tri = build_triangle(N);
  SpacePtr ws = space ? std::move(space) : doubled_weight_space(N);
  SnakeMatrix p(n, ws);
  for (int k = 1; k <= n; ++k) {
    p.set_weight(k, 0, se_weight(tri, ws, k, 0));
    for (int l = 1; l <= n; ++l) {
      if (k + l <= n) {
        p.set_value(k, l, N - k - l);
        p.set_weight(k, l, se_weight(tri, ws, k + l, l));
      }
    }
  }
  if (!p.valid())
    throw Error("target snake matrix is not admissible: " + p.first_invalid_block());
  return p;
}

SnakeReduction snake_reduce_doubled(int n) {
  SnakeMatrix initial = doubled_snake_matrix(n);
  SnakeReduction red{initial, initial, {}, false, ""};
  SnakeMatrix& p = red.final;
  // Greedy schedule: rows top to bottom, leftmost admissible entry first.
  for (;;) {
    bool moved = false;
    for (int k = n; k >= 1 && !moved; --k)
      for (int l = 1; l <= n && !moved; ++l)
        if (p.mutable_at(k, l)) {
          const int before = p.value(k, l);
          p.mutate(k, l);
          red.schedule.push_back({k, l, before == 1});
          moved = true;
        }
    if (!moved) break;
  }
  const SnakeMatrix target = target_snake_matrix(n, p.weight_space());
  if (p == target) {
    red.reached_target = true;
  } else {
    for (int k = 1; k <= n && red.failure.empty(); ++k)
      for (int l = 0; l <= n && red.failure.empty(); ++l) {
        if (p.value(k, l) != target.value(k, l))
          red.failure = "value mismatch at (" + std::to_string(k) + "," +
                        std::to_string(l) + ")";
        else if (p.weight(k, l) != target.weight(k, l))
          red.failure = "weight mismatch at (" + std::to_string(k) + "," +
                        std::to_string(l) + ")";
      }
    if (red.failure.empty()) red.failure = "reduction stalled away from target";
  }
  return red;
}

}  // namespace fgflip
