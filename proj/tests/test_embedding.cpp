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

#include "fgflip/embedding.hpp"

using namespace fgflip;

TEST_CASE("the index order is total") {
  for (int n = 1; n <= 6; ++n) {
    auto order = i_order(n);
    CHECK(order.size() == static_cast<size_t>(n + n * (n + 1) / 2));
    for (size_t a = 0; a < order.size(); ++a)
      for (size_t b = 0; b < order.size(); ++b) {
        const bool lt = i_index_less(order[a], order[b]);
        const bool gt = i_index_less(order[b], order[a]);
        if (a == b) {
          CHECK_FALSE(lt);
          CHECK_FALSE(gt);
        } else {
          CHECK(lt != gt);
          CHECK(lt == (a < b));  // the list is sorted
        }
      }
    // Transitivity over the sorted list is positional, hence automatic.
  }
}

TEST_CASE("cone identification") {
  // (s,k) -> (n-s+1, k, s-k) lands in the ne-cone bijectively.
  for (int n = 1; n <= 5; ++n) {
    const int N = n + 1;
    TriangleSpace tri = build_triangle(N);
    std::set<std::string> seen;
    for (const auto& i : i_order(n)) {
      TriLabel l = i_to_cone(N, i);
      CHECK(l.a >= 1);
      CHECK(l.a <= n);
      CHECK(l.a + l.b + l.c == N);
      seen.insert(l.str());
    }
    CHECK(seen.size() == tri.ne_cone.size());
  }
}

TEST_CASE("solved coordinates satisfy the defining rules") {
  for (int N : {2, 3, 4, 5}) {
    TriangleSpace tri = build_triangle(N);
    EmbeddingVN emb = embed_into_vn(tri);  // construction already verifies pairings
    auto order = emb.order;
    auto position = [&](const IIndex& i) {
      for (size_t p = 0; p < order.size(); ++p)
        if (order[p] == i) return static_cast<int>(p);
      return -1;
    };
    for (const auto& i : order) {
      SkewVector x = i.in_I0() ? emb.image_weight(i.s) : emb.image_ne(i.s, i.k);
      const int pi = position(i);
      for (const auto& j : order) {
        const int pj = position(j);
        const Rat cf = x.coeff(emb.f(j).coeffs().begin()->first);
        const Rat cw = x.coeff(emb.w(j).coeffs().begin()->first);
        if (pj < pi) {
          CHECK(cf == Rat(0));
          CHECK(cw == Rat(0));
        } else if (pj == pi) {
          CHECK(cf == (i.in_I0() ? Rat(0) : Rat(1)));
          CHECK(cw == (i.in_I0() ? Rat(1) : Rat(0)));
        } else {
          CHECK(cf == Rat(0));  // later components lie in the w-line
          if (i.in_I0() && j.in_I0()) CHECK(cw == Rat(0));
        }
      }
    }
  }
}

TEST_CASE("extension and linearity") {
  TriangleSpace tri = build_triangle(3);
  EmbeddingVN emb = embed_into_vn(tri);
  // se_s = -f_{N-s}.
  CHECK(emb.image_se_full(1) == -emb.f(IIndex{2, 2}));
  CHECK(emb.image_se_full(2) == -emb.f(IIndex{1, 1}));
  // embed() reproduces the stored images.
  for (int s = 1; s <= 2; ++s) {
    for (int k = 0; k < s; ++k)
      CHECK(emb.embed(tri, ne_vec(tri, s, k)) == emb.image_ne(s, k));
    CHECK(emb.embed(tri, se_full(tri, s)) == emb.image_se_full(s));
    CHECK(emb.embed(tri, fundamental_weights(tri, WeightSide::NE)[s - 1]) ==
          emb.image_weight(s));
  }
  // Pairing preservation through embed() on the snubbed basis.
  for (const auto& x : tri.snubbed)
    for (const auto& y : tri.snubbed)
      CHECK(pair(emb.embed(tri, tri.basis(x)), emb.embed(tri, tri.basis(y))) ==
            pair(tri.basis(x), tri.basis(y)));
}
