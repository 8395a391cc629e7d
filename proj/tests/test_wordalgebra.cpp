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

#include <random>
#include <set>

#include "fgflip/wordalgebra.hpp"

using namespace fgflip;

TEST_CASE("pentagon forward and backward") {
  FlipContext ctx = make_flip_context(2, 3);
  // The rank-one instance: v = 0 (+) ne_{1,0} (+) se_{1,0},
  // w = ne_{1,0} (+) se_{1,0} (+) 0, (v,w) = 1.
  SkewVector v = ctx.ne(1, 1, 0) + ctx.se(2, 1, 0);
  SkewVector w = ctx.ne(0, 1, 0) + ctx.se(1, 1, 0);
  CHECK(pair(v, w) == Rat(1));

  OperatorWord word{dilog(v), dilog(w)};
  apply_pentagon_forward(word, 0);
  REQUIRE(word.size() == 3);
  CHECK(word[0].vec == w);
  CHECK(word[1].vec == v + w);
  CHECK(word[2].vec == v);
  // The middle letter is ne_{1,0} (+) ne_{1,1} (+) se_{1,0}.
  CHECK(word[1].vec == ctx.ne(0, 1, 0) + ctx.ne(1, 1, 1) + ctx.se(2, 1, 0));

  apply_pentagon_backward(word, 0);
  REQUIRE(word.size() == 2);
  CHECK(word[0].vec == v);
  CHECK(word[1].vec == w);

  // Precondition failures carry the offending pairing.
  OperatorWord bad{dilog(w), dilog(v)};
  CHECK_THROWS_WITH_AS(apply_pentagon_forward(bad, 0),
                       doctest::Contains("(v,w) = -1"), Error);
}

TEST_CASE("Gaussian conjugation rule") {
  FlipContext ctx = make_flip_context(3, 2);
  TriangleSpace& tri = ctx.tri;
  // G(v1, v2) E(w1 (+) w2) G* = E((w1 + (v2,w2) v1) (+) (w2 + (v1,w1) v2)).
  SkewVector v1 = ctx.amb.inject(0, tri.basis({2, 1, 0}));
  SkewVector v2 = ctx.amb.inject(1, tri.basis({1, 1, 1}));
  Letter g = gauss({{Rat(1), v1, v2}});
  SkewVector w1 = ctx.amb.inject(0, tri.basis({1, 2, 0}));
  SkewVector w2 = ctx.amb.inject(1, tri.basis({0, 2, 1}));
  SkewVector expect = w1 + pair(v2, w2) * v1 + w2 + pair(v1, w1) * v2;
  CHECK(gauss_adjoint(g, w1 + w2) == expect);
  // Inverse undoes it.
  CHECK(gauss_adjoint(g, gauss_adjoint(g, w1 + w2), true) == w1 + w2);

  // Push through a dilog and back.
  OperatorWord word{g, dilog(w1 + w2)};
  gauss_push_right(word, 0);
  CHECK(word[0].kind == Letter::Kind::Dilog);
  CHECK(word[0].vec == expect);
  CHECK(word[1].kind == Letter::Kind::Gauss);
  gauss_push_left(word, 0);
  CHECK(word[0] == g);
  CHECK(word[1].vec == w1 + w2);
}

TEST_CASE("zero pairings leave the dilog unchanged under a Gaussian push") {
  FlipContext ctx = make_flip_context(2, 2);
  Letter k = k_letter(ctx, 0, 1);
  SkewVector torus = ctx.nef(0, 1);
  OperatorWord word{k, dilog(torus)};
  gauss_push_right(word, 0);
  CHECK(word[0].vec == torus);
}

TEST_CASE("commutation") {
  FlipContext ctx = make_flip_context(4, 2);
  // Same-r letters of the flip commute pairwise.
  const int n = ctx.n();
  for (int r = 1; r <= n; ++r)
    for (int b = r; b <= n; ++b)
      for (int i = 1; i <= r; ++i)
        for (int bp = r; bp <= n; ++bp)
          for (int ip = 1; ip <= r; ++ip)
            CHECK(commutes(b_letter(ctx, BFamily::Legs12, b, r, i),
                           b_letter(ctx, BFamily::Legs12, bp, r, ip)));
  // A pairing-one pair does not commute.
  FlipContext c3 = make_flip_context(2, 3);
  CHECK_FALSE(commutes(dilog(c3.ne(1, 1, 0) + c3.se(2, 1, 0)),
                       dilog(c3.ne(0, 1, 0) + c3.se(1, 1, 0))));
}

TEST_CASE("three-leg commutation conditions") {
  // The listed sufficient conditions for the letters of the three flip
  // families all hold at order <= 4.
  const int N = 4;
  FlipContext ctx = make_flip_context(N, 3);
  const int n = ctx.n();
  struct T { int b, r, i; };
  std::vector<T> idx;
  for (int r = 1; r <= n; ++r)
    for (int b = r; b <= n; ++b)
      for (int i = 1; i <= r; ++i) idx.push_back({b, r, i});
  // The asymmetric conditions require the primed triple to sit in a later
  // r-block, which is how every commuting shuffle in the pentagon proof
  // uses them; for earlier blocks counterexamples exist.
  long cond_checked = 0;
  for (const auto& x : idx)
    for (const auto& y : idx) {
      bool symmetric_condition =
          (y.r == x.r) || std::abs((y.b - y.i) - (x.b - x.i)) > 1;
      bool later_block_condition =
          y.r > x.r &&
          ((y.b - y.i == x.b - x.i + 1 && y.b < x.b && y.b - y.r <= x.b - x.r) ||
           (y.b - y.i == x.b - x.i + 1 && y.b >= x.b && y.b - y.r > x.b - x.r) ||
           (y.b - y.i == x.b - x.i && (y.b - x.b) * ((y.b - y.r) - (x.b - x.r)) > 0));
      if (!symmetric_condition && !later_block_condition) continue;
      ++cond_checked;
      CHECK(commutes(b_letter(ctx, BFamily::Legs12, x.b, x.r, x.i),
                     b_letter(ctx, BFamily::Legs12, y.b, y.r, y.i)));
      CHECK(commutes(b_letter(ctx, BFamily::Legs23, x.b, x.r, x.i),
                     b_letter(ctx, BFamily::Legs23, y.b, y.r, y.i)));
    }
  CHECK(cond_checked > 0);
}

TEST_CASE("trace monoid equality") {
  FlipContext ctx = make_flip_context(3, 2);
  OperatorWord f = flip_factors(ctx, FlipVariant::F);
  CHECK(trace_monoid_equal(f, f));
  // Swapping two same-r letters is allowed.
  OperatorWord g = f;
  std::swap(g[0], g[1]);  // r = 1 block: (b,i) = (1,1), (2,1)
  CHECK(commutes(f[0], f[1]));
  CHECK(trace_monoid_equal(f, g));
  // Reversing a non-commuting pair is not.
  OperatorWord h{dilog(ctx.ne(0, 1, 0) + ctx.se(1, 1, 0)), dilog(ctx.ne(0, 2, 1) + ctx.se(1, 1, 0))};
  if (!commutes(h[0], h[1])) {
    OperatorWord h2{h[1], h[0]};
    CHECK_FALSE(trace_monoid_equal(h, h2));
  }
  // Different sizes are never equal.
  OperatorWord short_word{f[0]};
  CHECK_FALSE(trace_monoid_equal(f, short_word));
}

TEST_CASE("reorder produces a replayable trace") {
  FlipContext ctx = make_flip_context(3, 2);
  OperatorWord f = flip_factors(ctx, FlipVariant::F);
  OperatorWord target = f;
  std::swap(target[0], target[1]);
  RewriteTrace trace;
  OperatorWord w = f;
  reorder_to(w, target, &trace);
  CHECK(w == target);
  CHECK(trace.swap_count() == 1);
  CHECK(replay(f, trace) == target);
}

TEST_CASE("form sum conjugation") {
  TriangleSpace tri = build_triangle(3);
  auto se = [&](int s, int k) { return se_vec(tri, s, k); };

  SUBCASE("pairing zero is fixed") {
    SkewVector u = ne_vec(tri, 1, 0);
    FormSum s({se_full(tri, 1)});
    REQUIRE(pair(u, se_full(tri, 1)) == Rat(0));
    CHECK(conjugate_formsum_by_dilog(s, u, true) == s);
  }
  SUBCASE("split and merge") {
    // u = e111 against the order-3 E-graph top-row weights: the split pair
    // of Z_{1,2} corresponds to the braid mutation instance.
    SkewVector u = tri.basis({1, 1, 1});
    SkewVector y = se(2, 0);
    REQUIRE(pair(u, y) == Rat(-1));
    FormSum merged = conjugate_formsum_by_dilog(FormSum({y, y + u}), u, true);
    CHECK(merged == FormSum({y}));
    // Reverse splits it again.
    CHECK(conjugate_formsum_by_dilog(merged, u, false) == FormSum({y, y + u}));
  }
  SUBCASE("split round trip") {
    SkewVector u = tri.basis({1, 1, 1});
    SkewVector x = -se(2, 0) - u;  // (u,x) = +1
    REQUIRE(pair(u, x) == Rat(1));
    FormSum split = conjugate_formsum_by_dilog(FormSum({x}), u, true);
    CHECK(split == FormSum({x, x + u}));
    CHECK(conjugate_formsum_by_dilog(split, u, false) == FormSum({x}));
  }
  SUBCASE("ungrouped terms raise") {
    SkewVector u = tri.basis({1, 1, 1});
    SkewVector y = se(2, 0);
    CHECK_THROWS_AS(conjugate_formsum_by_dilog(FormSum({y}), u, true), Error);
    CHECK_THROWS_AS(
        conjugate_formsum_by_dilog(FormSum({Rat(2) * se(2, 0)}), u, true), Error);
  }
}

TEST_CASE("flip letter counts") {
  FlipContext c2 = make_flip_context(2, 2);
  OperatorWord f2 = flip_factors(c2, FlipVariant::F);
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].vec == c2.ne(0, 1, 0) + c2.se(1, 1, 0));

  FlipContext c3 = make_flip_context(3, 2);
  CHECK(flip_factors(c3, FlipVariant::F).size() == 4);
  CHECK(flip_factors(c3, FlipVariant::F3).size() == 4);
  CHECK(flip_factors(c3, FlipVariant::Fdprime).size() == 4);
  CHECK(flip_factors(c3, FlipVariant::Ftilde).size() == 5);
  CHECK(flip_factors(c3, FlipVariant::Dual).size() == 5);
  CHECK(flip_factors(c3, FlipVariant::TildeFPrime).size() == 4);
  CHECK(flip_factors(c3, FlipVariant::TildeFDoublePrime).size() == 4);
}

TEST_CASE("the two product orders agree modulo commutation") {
  for (int N : {2, 3, 4}) {
    FlipContext ctx = make_flip_context(N, 2);
    CHECK(trace_monoid_equal(flip_factors(ctx, FlipVariant::F),
                             flip_factors(ctx, FlipVariant::F3)));
  }
}

TEST_CASE("the K-on-the-right presentation reduces to K times F") {
  for (int N : {2, 3, 4}) {
    FlipContext ctx = make_flip_context(N, 2);
    OperatorWord alt = flip_factors(ctx, FlipVariant::FtildeAlt);
    // Move the trailing Gaussian to the front.
    for (int pos = static_cast<int>(alt.size()) - 2; pos >= 0; --pos)
      gauss_push_left(alt, pos);
    OperatorWord kf = flip_factors(ctx, FlipVariant::Ftilde);
    CHECK(alt[0] == kf[0]);
    CHECK(trace_monoid_equal(OperatorWord(alt.begin() + 1, alt.end()),
                             OperatorWord(kf.begin() + 1, kf.end())));
  }
}

TEST_CASE("K tensor legs are mutually orthogonal") {
  for (int N : {2, 3, 4, 5}) {
    FlipContext ctx = make_flip_context(N, 2);
    CHECK_NOTHROW(k_letter(ctx, 0, 1));
    CHECK_NOTHROW(k_letter_alt(ctx, 0, 1));
    CHECK(gauss_tensor_coeffs(k_letter(ctx, 0, 1)) ==
          gauss_tensor_coeffs(k_letter_alt(ctx, 0, 1)));
  }
}

TEST_CASE("dilog product expansion") {
  TriangleSpace tri = build_triangle(3);
  FlipContext ctx = make_flip_context(3, 2);
  LabeledBraidGraph ge = standard_graph(tri, GraphFamily::E);
  LabeledBraidGraph gf = standard_graph(tri, GraphFamily::F);

  SUBCASE("single path times single path") {
    LabeledBraidGraph e23 = subgraph_lines(ge, 2, 3);
    LabeledBraidGraph f23_1 = conditional_top_keep_only(subgraph_lines(gf, 2, 3), 1);
    OperatorWord w = dilog_product_expansion(ctx, f23_1, e23);
    REQUIRE(w.size() == 1);
  }
  SUBCASE("factor counts multiply") {
    LabeledBraidGraph e12 = subgraph_lines(ge, 1, 2);
    LabeledBraidGraph f12 = subgraph_lines(gf, 1, 2);
    OperatorWord w = dilog_product_expansion(ctx, f12, e12);
    CHECK(w.size() == enumerate_paths(e12, 1, 2).size() *
                          enumerate_paths(f12, 1, 2).size());
  }
  SUBCASE("prefix hypothesis is checked") {
    // A 3-strand word with no sigma_1 at all cannot acquire the prefix.
    BraidWord w{3, {2}};
    LabeledBraidGraph g(w, tri.nabla);
    g.set_label({1, 0}, tri.basis({2, 1, 0}));
    g.set_label({2, 0}, tri.basis({1, 2, 0}));
    g.set_label({2, 1}, tri.basis({0, 2, 1}));
    CHECK_FALSE(has_reduced_prefix(g));
    CHECK_THROWS_AS(dilog_product_expansion(ctx, g, g), Error);
  }
}

TEST_CASE("letters print and compare") {
  FlipContext ctx = make_flip_context(2, 2);
  Letter a = dilog(ctx.ne(0, 1, 0));
  Letter b = dilog(ctx.se(1, 1, 0));
  CHECK(a.str().substr(0, 4) == "phi(");
  CHECK(letter_less(a, b) != letter_less(b, a));
  CHECK_THROWS_AS(dilog(SkewVector(ctx.amb.space)), Error);
}

TEST_CASE("trace equality is an equivalence relation on shuffles") {
  FlipContext ctx = make_flip_context(4, 2);
  OperatorWord f = flip_factors(ctx, FlipVariant::F);
  // Three pseudo-random commuting-shuffle images of the same word.
  std::mt19937 rng(3);
  auto shuffle = [&](OperatorWord w) {
    for (int step = 0; step < 40; ++step) {
      size_t i = rng() % (w.size() - 1);
      if (commutes(w[i], w[i + 1])) std::swap(w[i], w[i + 1]);
    }
    return w;
  };
  OperatorWord a = shuffle(f), b = shuffle(f), c = shuffle(f);
  CHECK(trace_monoid_equal(a, a));
  CHECK(trace_monoid_equal(a, b));
  CHECK(trace_monoid_equal(b, a));
  CHECK(trace_monoid_equal(b, c));
  CHECK(trace_monoid_equal(a, c));
  // The letter multiset is invariant.
  auto key = [](OperatorWord w) {
    std::multiset<std::string> m;
    for (const auto& l : w) m.insert(l.str());
    return m;
  };
  CHECK(key(a) == key(f));
}

TEST_CASE("the index-substituted product order splits into the same r-blocks") {
  // The re-indexing of the defining product runs, for each r,
  // over pairs (s, k) with 0 <= k <= s-1 and 0 <= (n-r)-k <= n-s; each
  // r-block is the same letter multiset as the defining (b, i)-block.
  for (int N : {3, 4, 5}) {
    FlipContext ctx = make_flip_context(N, 2);
    const int n = ctx.n();
    for (int r = 1; r <= n; ++r) {
      std::multiset<std::string> defining, substituted;
      for (int b = r; b <= n; ++b)
        for (int i = 1; i <= r; ++i)
          defining.insert(b_letter(ctx, BFamily::Legs12, b, r, i).str());
      for (int s = 1; s <= n; ++s)
        for (int k = 0; k <= s - 1; ++k) {
          const int kk = (n - r) - k;
          if (kk < 0 || kk > n - s) continue;
          substituted.insert(dilog(ctx.ne(0, s, k) + ctx.se(1, N - s, kk)).str());
        }
      CHECK(defining == substituted);
    }
  }
}

TEST_CASE("the contragredient flip maps onto the conjugate flip") {
  // Applying the second-leg label involution e_{abc} |-> -e_{cba} to the
  // contragredient word turns -nw into se, giving the conjugate of the
  // flip letter by letter.
  for (int N : {2, 3, 4}) {
    FlipContext ctx = make_flip_context(N, 2);
    const int n = ctx.n();
    OperatorWord tf = flip_factors(ctx, FlipVariant::TildeFPrime);
    OperatorWord expect;
    for (int r = 1; r <= n; ++r)
      for (int s = 1; s <= n; ++s)
        for (int k = 0; k <= s - 1; ++k) {
          const int kk = (n - r) - k;
          if (kk < 0 || kk > n - s) continue;
          expect.push_back(dilog(ctx.ne(0, s, k) + ctx.se(1, N - s, kk), true));
        }
    REQUIRE(tf.size() == expect.size());
    for (size_t t = 0; t < tf.size(); ++t) {
      const DirectSum amb2 = direct_sum({conjugate(ctx.tri.nabla), ctx.tri.nabla});
      // Rebuild the mixed-space letter in the plain two-leg ambient: the
      // first leg transports by label, the second maps through vartheta.
      SkewVector v1(ctx.tri.nabla), v2(ctx.tri.nabla);
      for (const auto& [i, c] : tf[t].vec.coeffs()) {
        const std::string& lbl = tf[t].vec.space()->label(i);
        TriLabel l{};
        sscanf(lbl.c_str() + 3, "e(%d,%d,%d)", &l.a, &l.b, &l.c);
        if (lbl.rfind("L0:", 0) == 0)
          v1.add_coeff(ctx.tri.nabla->index(l.str()), c);
        else
          v2.add_coeff(ctx.tri.nabla->index(TriLabel{l.c, l.b, l.a}.str()), -c);
      }
      SkewVector mapped = ctx.amb.inject(0, v1) + ctx.amb.inject(1, v2);
      CHECK(mapped == expect[t].vec);
    }
  }
}

TEST_CASE("merge chains pair from the bottom") {
  TriangleSpace tri = build_triangle(3);
  SkewVector u = tri.basis({1, 1, 1});
  SkewVector y = se_vec(tri, 2, 0);
  REQUIRE(pair(u, y) == Rat(-1));
  FormSum chain({y, y + u, y + 2 * u, y + 3 * u});
  FormSum merged = conjugate_formsum_by_dilog(chain, u, true);
  CHECK(merged == FormSum({y, y + 2 * u}));
  CHECK(conjugate_formsum_by_dilog(merged, u, false) == chain);
  // An odd chain has no valid pairing.
  CHECK_THROWS_AS(
      conjugate_formsum_by_dilog(FormSum({y, y + u, y + 2 * u}), u, true), Error);
}

TEST_CASE("expansion ordered by the second factor first is trace-equivalent") {
  TriangleSpace tri = build_triangle(3);
  FlipContext ctx = make_flip_context(3, 2);
  LabeledBraidGraph e12 = subgraph_lines(standard_graph(tri, GraphFamily::E), 1, 2);
  LabeledBraidGraph f12 = subgraph_lines(standard_graph(tri, GraphFamily::F), 1, 2);
  OperatorWord first_major = dilog_product_expansion(ctx, f12, e12);
  // Swap the roles: ordering by the e-paths first permutes the letters by a
  // commuting shuffle only.
  OperatorWord second_major;
  auto p1 = enumerate_paths(f12, 1, 2);
  auto p2 = enumerate_paths(e12, 1, 2);
  for (auto b = p2.rbegin(); b != p2.rend(); ++b)
    for (auto a = p1.rbegin(); a != p1.rend(); ++a)
      second_major.push_back(
          dilog(ctx.amb.inject(0, transport(a->adjusted_weight(f12), ctx.amb.parts[0])) +
                ctx.amb.inject(1, transport(b->adjusted_weight(e12), ctx.amb.parts[1]))));
  CHECK(trace_monoid_equal(first_major, second_major));
}
