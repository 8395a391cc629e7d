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

#include "fgflip/verifications.hpp"

using namespace fgflip;

TEST_CASE("braided pentagon, rank one") {
  RewriteTrace trace;
  Report rep = verify_braided_pentagon(2, &trace);
  INFO(rep.detail);
  CHECK(rep.ok);
  CHECK(trace.pentagon_count() == 1);
}

TEST_CASE("braided pentagon, rank two, with replay") {
  RewriteTrace trace;
  Report rep = verify_braided_pentagon(3, &trace);
  INFO(rep.detail);
  CHECK(rep.ok);
  CHECK(trace.pentagon_count() > 1);

  // The recorded trace replays from the left-hand side to the right-hand
  // side with every precondition re-checked.
  FlipContext ctx = make_flip_context(3, 3);
  OperatorWord lhs, rhs;
  for (int r = 1; r <= 2; ++r)
    for (int b = r; b <= 2; ++b)
      for (int i = 1; i <= r; ++i) lhs.push_back(b_letter(ctx, BFamily::Legs23, b, r, i));
  for (int r = 1; r <= 2; ++r)
    for (int b = r; b <= 2; ++b)
      for (int i = 1; i <= r; ++i) lhs.push_back(b_letter(ctx, BFamily::Legs12, b, r, i));
  for (auto fam : {BFamily::Legs12, BFamily::Legs13, BFamily::Legs23})
    for (int r = 1; r <= 2; ++r)
      for (int b = r; b <= 2; ++b)
        for (int i = 1; i <= r; ++i) rhs.push_back(b_letter(ctx, fam, b, r, i));
  CHECK(replay(lhs, trace) == rhs);
}

TEST_CASE("bounded rewriting search confirms the pentagon at rank one") {
  Report rep = pentagon_bfs_oracle(2, 10000);
  INFO(rep.detail);
  CHECK(rep.ok);
}

TEST_CASE("Gaussian pentagon") {
  for (int N : {2, 3, 4}) {
    Report rep = verify_k_pentagon(N);
    INFO(rep.detail);
    CHECK(rep.ok);
  }
}

TEST_CASE("multiplicative unitary equation, rank one") {
  Report rep = verify_mu_pentagon(2);
  INFO(rep.detail);
  CHECK(rep.ok);
}

TEST_CASE("partition functions respect mutation") {
  // The order-2 standard words are single letters with no mutable face.
  Report r2 = verify_zmut(2);
  CHECK(r2.ok);
  CHECK(r2.checks == 0);
  Report r3 = verify_zmut(3);
  INFO(r3.detail);
  CHECK(r3.ok);
  CHECK(r3.checks > 0);
}

TEST_CASE("a wrong conjugation vector fails the mutation check") {
  TriangleSpace tri = build_triangle(3);
  LabeledBraidGraph g = standard_graph(tri, GraphFamily::E);
  auto mus = mutable_faces(g);
  REQUIRE(!mus.empty());
  LabeledBraidGraph m = mutate(g, mus[0].face);
  FormSum before = partition_function(g, 1, 3);
  FormSum after = partition_function(m, 1, 3);
  // Conjugating by a different face's label must not reproduce the mutation.
  SkewVector wrong = g.label({1, 0});
  bool agrees;
  try {
    agrees = conjugate_formsum_by_dilog(before, wrong, true) == after;
  } catch (const Error&) {
    agrees = false;
  }
  CHECK_FALSE(agrees);
}

TEST_CASE("Serre half-pairing") {
  Report rep = verify_serre(3, 2);
  INFO(rep.detail);
  CHECK(rep.ok);
  for (int i : {2, 3}) {
    Report r4 = verify_serre(4, i);
    INFO(r4.detail);
    CHECK(r4.ok);
  }
}

TEST_CASE("R equals F at rank one") {
  Report rep = verify_r_equals_f(2);
  INFO(rep.detail);
  CHECK(rep.ok);
}

TEST_CASE("rank-one decomposition") {
  for (int N : {2, 3}) {
    Report rep = verify_rank_one_decomposition(N);
    INFO(rep.detail);
    CHECK(rep.ok);
  }
}

TEST_CASE("symmetry maps") {
  for (int N : {2, 3}) {
    Report rep = verify_symmetry_maps(N);
    INFO(rep.detail);
    CHECK(rep.ok);
  }
}

TEST_CASE("randomised mutation walks keep the conjugation law") {
  for (unsigned seed : {0u, 1u, 7u}) {
    Report rep = verify_zmut_random(4, seed);
    INFO(rep.detail);
    CHECK(rep.ok);
  }
}

TEST_CASE("R equals F one order beyond the required range") {
  Report rep = verify_r_equals_f(4);
  INFO(rep.detail);
  CHECK(rep.ok);
}
