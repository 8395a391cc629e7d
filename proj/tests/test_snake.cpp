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

#include <doctest.h>

#include "fgflip/braidgraph.hpp"
#include "fgflip/snake.hpp"

using namespace fgflip;

TEST_CASE("border conventions") {
  SnakeMatrix p(3, doubled_weight_space(4));
  CHECK(p.value(0, 0) == 4);
  CHECK(p.value(0, 1) == 3);
  CHECK(p.value(0, 3) == 1);
  CHECK(p.value(1, 0) == 3);
  CHECK(p.value(3, 0) == 1);
  CHECK(p.value(4, 1) == 0);
  CHECK(p.value(1, 4) == 0);
}

TEST_CASE("the doubled matrix of rank 3, entry by entry") {
  // Rows from the bottom; f(l,j) are the second-copy weights.
  SnakeMatrix p = doubled_snake_matrix(3);
  TriangleSpace tri = build_triangle(4);
  SpacePtr ws = p.weight_space();
  auto se = [&](int s, int k) { return transport(se_vec(tri, s, k), ws); };
  auto f = [&](int l, int j) {
    return basis_vector(ws, "f(" + std::to_string(l) + "," + std::to_string(j) + ")");
  };

  // Top display row = matrix row k = 3: se30 | se31 se32 f30.
  CHECK(p.value(3, 0) == 1);
  CHECK(p.weight(3, 0) == se(3, 0));
  CHECK(p.value(3, 1) == 1);
  CHECK(p.weight(3, 1) == se(3, 1));
  CHECK(p.value(3, 2) == 1);
  CHECK(p.weight(3, 2) == se(3, 2));
  CHECK(p.value(3, 3) == 1);
  CHECK(p.weight(3, 3) == f(3, 0));
  // Middle row k = 2: se20 | se21 f20 f31.
  CHECK(p.value(2, 1) == 2);
  CHECK(p.weight(2, 1) == se(2, 1));
  CHECK(p.value(2, 2) == 2);
  CHECK(p.weight(2, 2) == f(2, 0));
  CHECK(p.value(2, 3) == 1);
  CHECK(p.weight(2, 3) == f(3, 1));
  // Bottom row k = 1: se10 | f10 f21 f32.
  CHECK(p.value(1, 1) == 3);
  CHECK(p.weight(1, 1) == f(1, 0));
  CHECK(p.value(1, 2) == 2);
  CHECK(p.weight(1, 2) == f(2, 1));
  CHECK(p.value(1, 3) == 1);
  CHECK(p.weight(1, 3) == f(3, 2));
  CHECK(p.valid());
}

TEST_CASE("the target matrix of rank 3, entry by entry") {
  // Fully slanted paths: the value-1 path carries the se_{3,*} weights along
  // the antidiagonal k + l = 3, the value-2 path se_{2,*} along k + l = 2.
  SnakeMatrix p = target_snake_matrix(3);
  TriangleSpace tri = build_triangle(4);
  SpacePtr ws = p.weight_space();
  auto se = [&](int s, int k) { return transport(se_vec(tri, s, k), ws); };
  CHECK(p.value(2, 1) == 1);
  CHECK(p.weight(2, 1) == se(3, 1));
  CHECK(p.value(1, 2) == 1);
  CHECK(p.weight(1, 2) == se(3, 2));
  CHECK(p.value(1, 1) == 2);
  CHECK(p.weight(1, 1) == se(2, 1));
  CHECK(p.value(3, 1) == 0);
  CHECK(p.value(2, 2) == 0);
  CHECK(p.valid());
}

TEST_CASE("rank-1 reduction is a single Demazure step") {
  SnakeReduction red = snake_reduce_doubled(1);
  CHECK(red.reached_target);
  REQUIRE(red.schedule.size() == 1);
  CHECK(red.schedule[0].demazure);
}

TEST_CASE("reduction terminates on the target for small ranks") {
  for (int n : {1, 2, 3, 4}) {
    SnakeReduction red = snake_reduce_doubled(n);
    INFO(red.failure);
    CHECK(red.reached_target);
    CHECK(!red.schedule.empty());
  }
}

TEST_CASE("final weights reproduce the standard graph labels") {
  // Differences of consecutive path weights in the reduced matrix are the
  // cells of the standard E-graph rows.
  const int n = 3, N = 4;
  SnakeReduction red = snake_reduce_doubled(n);
  REQUIRE(red.reached_target);
  TriangleSpace tri = build_triangle(N);
  SpacePtr ws = red.final.weight_space();
  LabeledBraidGraph ge = standard_graph(tri, GraphFamily::E);
  // Path i runs along the antidiagonal k + l = N - i; its weights are the
  // partial sums of graph row i.
  for (int i = 1; i <= n; ++i) {
    SkewVector prev(ws);
    for (int l = 0; l <= N - i; ++l) {
      const int k = N - i - l;
      if (k < 1) break;  // bottom border reached
      SkewVector w = red.final.weight(k, l);
      SkewVector difference = w - prev;
      CHECK(difference == transport(ge.label({i, l}), ws));
      prev = w;
    }
  }
}

TEST_CASE("stuck mutations throw") {
  SnakeMatrix p = target_snake_matrix(2);
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 2; ++l) CHECK_FALSE(p.mutable_at(k, l));
  CHECK_THROWS_AS(p.mutate(1, 1), Error);
}
