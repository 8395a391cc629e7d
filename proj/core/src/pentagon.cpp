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

//
// Executable proof of the braided pentagon relation.  The derivation walks
// the product F_[23] F_[12] through a staircase of local rewrites:
// per step s and block a, the interleaved (B23, B12) pairs are expanded by
// forward Kashaev pentagons into (C12, C13, C23) triples, regrouped, and the
// (C23, C13, C12) triples contracted again by backward pentagons; the
// leftover C12/C13/C23 factors migrate into the accumulating F_[12], F_[13]
// and F_[23] products.  All rearrangements are performed as adjacent swaps
// of commuting letters, each asserting zero pairing.
//

#include <deque>
#include <map>
#include <set>

#include "fgflip/verifications.hpp"

namespace fgflip {

namespace {

struct PentagonCtx {
  FlipContext ctx;
  int n;

  Letter B(BFamily fam, int b, int r, int i) const {
    return b_letter(ctx, fam, b, r, i);
  }

  // lem:step letters at step parameters (s, c): the (r,i) pair of the block.
  Letter C12(int s, int c, int r, int i) const {
    return B(BFamily::Legs12, n - r + i, s + i, c + i + 1);
  }
  Letter C23(int s, int c, int r, int i) const {
    return B(BFamily::Legs23, n - c - 1, r, i);
  }
  Letter C13(int s, int c, int r, int i) const {
    return dilog(C12(s, c, r, i).vec + C23(s, c, r, i).vec);
  }
};

OperatorWord gen_f1(const PentagonCtx& p, BFamily fam) {
  OperatorWord w;
  for (int r = 1; r <= p.n; ++r)
    for (int b = r; b <= p.n; ++b)
      for (int i = 1; i <= r; ++i) w.push_back(p.B(fam, b, r, i));
  return w;
}

// The running expression after s steps, in segments.
OperatorWord gen_A(const PentagonCtx& p, int s) {
  OperatorWord w;
  for (int b = 1; b <= s; ++b)
    for (int r = 1; r <= b; ++r)
      for (int i = 1; i <= p.n - b + 1; ++i)
        w.push_back(p.B(BFamily::Legs12, p.n - i + 1, b, b - r + 1));
  return w;
}

OperatorWord gen_Bseg(const PentagonCtx& p, int s) {
  OperatorWord w;
  for (int b = 1; b <= p.n - s - 1; ++b)
    for (int r = 1; r <= b; ++r)
      for (int i = 1; i <= r; ++i) w.push_back(p.B(BFamily::Legs23, b, r, i));
  return w;
}

OperatorWord gen_P1(const PentagonCtx& p, int s, int a) {
  OperatorWord w;
  for (int r = 1; r <= p.n - s; ++r)
    for (int i = 1; i <= r; ++i)
      w.push_back(p.B(BFamily::Legs23, p.n + a - s - 1, r, i));
  return w;
}

OperatorWord gen_P2(const PentagonCtx& p, int s, int a) {
  OperatorWord w;
  for (int r = 1; r <= p.n - s; ++r)
    for (int i = 1; i <= r; ++i)
      w.push_back(p.B(BFamily::Legs12, p.n - r + i, s + i, s + i - a + 1));
  return w;
}

OperatorWord gen_P3(const PentagonCtx& p, int s, int a) {
  OperatorWord w;
  for (int r = p.n - s + 1; r <= p.n - a + 1; ++r)
    for (int i = 1; i <= r; ++i)
      w.push_back(p.B(BFamily::Legs13, a + r - 1, a + i - 1, i));
  return w;
}

OperatorWord gen_Cseg(const PentagonCtx& p, int s) {
  OperatorWord w;
  for (int b = s + 2; b <= p.n; ++b)
    for (int r = 1; r <= p.n - b + 1; ++r)
      for (int i = 1; i <= r; ++i)
        w.push_back(p.B(BFamily::Legs12, p.n - r + i, b + i - 1, i));
  return w;
}

OperatorWord gen_D(const PentagonCtx& p, int s) {
  OperatorWord w;
  for (int r = p.n - s + 1; r <= p.n; ++r)
    for (int b = r; b <= p.n; ++b)
      for (int i = 1; i <= r; ++i) w.push_back(p.B(BFamily::Legs23, b, r, i));
  return w;
}

void append(OperatorWord& w, const OperatorWord& tail) {
  w.insert(w.end(), tail.begin(), tail.end());
}

OperatorWord gen_S(const PentagonCtx& p, int s) {
  OperatorWord w = gen_A(p, s);
  append(w, gen_Bseg(p, s));
  for (int a = 1; a <= s + 1; ++a) {
    append(w, gen_P1(p, s, a));
    append(w, gen_P2(p, s, a));
    append(w, gen_P3(p, s, a));
  }
  append(w, gen_Cseg(p, s));
  append(w, gen_D(p, s));
  return w;
}

OperatorWord gen_interleaved(const PentagonCtx& p, int s, int c) {
  OperatorWord w;
  for (int r = 1; r <= p.n - s; ++r)
    for (int i = 1; i <= r; ++i) {
      w.push_back(p.C23(s, c, r, i));
      w.push_back(p.C12(s, c, r, i));
    }
  return w;
}

OperatorWord gen_regrouped(const PentagonCtx& p, int s, int c) {
  const int m = p.n - s;
  OperatorWord w;
  for (int r = 1; r <= m; ++r) w.push_back(p.C12(s, c, r, 1));
  for (int k = 1; k <= m - 1; ++k) {
    w.push_back(p.C13(s, c, k, k));
    for (int j = 1; j <= k; ++j) {
      w.push_back(p.C23(s, c, k, j));
      w.push_back(p.C13(s, c, k + 1, j));
      w.push_back(p.C12(s, c, k + 1, j + 1));
    }
  }
  w.push_back(p.C13(s, c, m, m));
  for (int i = 1; i <= m; ++i) w.push_back(p.C23(s, c, m, i));
  return w;
}

OperatorWord gen_step_rhs(const PentagonCtx& p, int s, int c) {
  const int m = p.n - s;
  OperatorWord w;
  for (int r = 1; r <= m; ++r) w.push_back(p.C12(s, c, r, 1));
  for (int k = 1; k <= m - 1; ++k)
    for (int j = 1; j <= k; ++j) w.push_back(p.C12(s, c, k + 1, j + 1));
  for (int k = 1; k <= m; ++k) w.push_back(p.C13(s, c, k, k));
  for (int k = 1; k <= m - 1; ++k)
    for (int j = 1; j <= k; ++j) w.push_back(p.C23(s, c, k, j));
  for (int i = 1; i <= m; ++i) w.push_back(p.C23(s, c, m, i));
  return w;
}

/// Replaces word[off .. off+len) by `segment` via verified swaps only
/// (the remainder of the word is left untouched).
void reorder_segment(OperatorWord& word, int off, int len, const OperatorWord& segment,
                     RewriteTrace* trace) {
  if (static_cast<int>(segment.size()) != len)
    throw Error("reorder_segment: length mismatch");
  OperatorWord target(word.begin(), word.begin() + off);
  append(target, segment);
  target.insert(target.end(), word.begin() + off + len, word.end());
  reorder_to(word, target, trace);
}

}  // namespace

Report verify_braided_pentagon(int N, RewriteTrace* trace) {
  Report rep;
  PentagonCtx p{make_flip_context(N, 3), N - 1};
  const int n = p.n;

  // Left hand side in the defining product order.
  OperatorWord word = gen_f1(p, BFamily::Legs23);
  append(word, gen_f1(p, BFamily::Legs12));

  try {
    // Rearranged starting expression.
    reorder_to(word, gen_S(p, 0), trace);

    for (int s = 0; s < n; ++s) {
      int off = static_cast<int>(gen_A(p, s).size() + gen_Bseg(p, s).size());
      for (int a = 1; a <= s + 1; ++a) {
        const int c = s - a;
        const int pairs = (n - s) * (n - s + 1) / 2;

        // (1) interleave the B23 and B12 blocks.
        reorder_segment(word, off, 2 * pairs, gen_interleaved(p, s, c), trace);

        // (2) forward pentagons on each adjacent (B23, B12) pair,
        // right-to-left so positions stay valid.
        for (int t = pairs - 1; t >= 0; --t)
          apply_pentagon_forward(word, off + 2 * t, trace);
        rep.checks += pairs;

        // (3) regroup the (C12, C13, C23) triples.
        reorder_segment(word, off, 3 * pairs, gen_regrouped(p, s, c), trace);

        // (4) backward pentagons on each (C23, C13, C12) triple.  In the
        // regrouped layout the k-block starts after the C12 run and k-1
        // previous blocks of size 1+3k'.
        const int m = n - s;
        for (int k = m - 1; k >= 1; --k) {
          int base = off + m;
          for (int kp = 1; kp < k; ++kp) base += 1 + 3 * kp;
          base += 1;  // skip C13(k,k)
          for (int j = k; j >= 1; --j)
            apply_pentagon_backward(word, base + 3 * (j - 1), trace);
          rep.checks += k;
        }

        // (5) the block now reads L1 L2' ... ; commute it into the step's
        // right-hand side layout.
        const int out_len = 3 * pairs - (m - 1) * m / 2;
        reorder_segment(word, off, out_len, gen_step_rhs(p, s, c), trace);

        off += out_len + static_cast<int>(gen_P3(p, s, a).size());
      }
      // Global reshuffle into the after-(s+1)-steps expression.
      reorder_to(word, gen_S(p, s + 1), trace);
    }

    // Right hand side in the defining product order.
    OperatorWord rhs = gen_f1(p, BFamily::Legs12);
    append(rhs, gen_f1(p, BFamily::Legs13));
    append(rhs, gen_f1(p, BFamily::Legs23));
    reorder_to(word, rhs, trace);
    if (!(word == rhs)) rep.fail("final word differs from F12 F13 F23");
  } catch (const Error& e) {
    rep.fail(e.what());
  }
  if (rep.ok)
    rep.detail = "pentagon derivation complete, " + std::to_string(rep.checks) +
                 " pentagon applications";
  return rep;
}

namespace {

// ---- bounded rewriting search ----

using Word = OperatorWord;

std::string word_key(const Word& w) { return word_str(w); }

/// Lexicographically least linearization modulo commutation.
Word canonical_word(const Word& w) {
  const int m = static_cast<int>(w.size());
  std::vector<bool> used(m, false);
  Word out;
  out.reserve(m);
  for (int step = 0; step < m; ++step) {
    int best = -1;
    for (int i = 0; i < m; ++i) {
      if (used[i]) continue;
      bool available = true;
      for (int j = 0; j < i && available; ++j)
        if (!used[j] && !commutes(w[j], w[i])) available = false;
      if (!available) continue;
      if (best < 0 || letter_less(w[i], w[best])) best = i;
    }
    used[best] = true;
    out.push_back(w[best]);
  }
  return out;
}

struct Reach {
  // reach[i][j], i < j: i must precede j (chain of non-commuting letters).
  std::vector<std::vector<bool>> r;
};

Reach reachability(const Word& w) {
  const int m = static_cast<int>(w.size());
  Reach out;
  out.r.assign(m, std::vector<bool>(m, false));
  for (int i = m - 1; i >= 0; --i)
    for (int j = i + 1; j < m; ++j) {
      if (!commutes(w[i], w[j])) {
        out.r[i][j] = true;
        continue;
      }
      for (int k = i + 1; k < j && !out.r[i][j]; ++k)
        if (out.r[i][k] && out.r[k][j]) out.r[i][j] = true;
    }
  return out;
}

bool has_intermediate(const Reach& re, int i, int j, int skip = -1) {
  for (int k = i + 1; k < j; ++k)
    if (k != skip && re.r[i][k] && re.r[k][j]) return true;
  return false;
}

/// Linearization X [sel...] Y with Y = positions reachable from some
/// selected letter (forced to its right), X = the rest.  Valid whenever no
/// strict intermediates separate the selected letters.
Word splice_out(const Word& w, const Reach& re, const std::vector<int>& sel,
                const Word& replacement) {
  const int m = static_cast<int>(w.size());
  std::set<int> selset(sel.begin(), sel.end());
  Word x, y;
  for (int k = 0; k < m; ++k) {
    if (selset.count(k)) continue;
    bool after = false;
    for (int s : sel)
      if (s < k && re.r[s][k]) after = true;
    (after ? y : x).push_back(w[k]);
  }
  Word out = x;
  out.insert(out.end(), replacement.begin(), replacement.end());
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

std::vector<Word> pentagon_moves(const Word& w) {
  std::vector<Word> out;
  const int m = static_cast<int>(w.size());
  Reach re = reachability(w);
  // Forward applications.
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (pair(w[i].vec, w[j].vec) != 1) continue;
      if (has_intermediate(re, i, j)) continue;
      Word repl{dilog(w[j].vec), dilog(w[i].vec + w[j].vec), dilog(w[i].vec)};
      out.push_back(splice_out(w, re, {i, j}, repl));
    }
  // Backward applications on triples (w, v+w, v).  The middle letter is an
  // allowed in-between of the outer pair.
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (!re.r[i][j] || has_intermediate(re, i, j)) continue;
      for (int k = j + 1; k < m; ++k) {
        if (!re.r[j][k] || has_intermediate(re, j, k)) continue;
        if (has_intermediate(re, i, k, /*skip=*/j)) continue;
        if (pair(w[k].vec, w[i].vec) != 1) continue;
        if (!(w[j].vec == w[i].vec + w[k].vec)) continue;
        Word repl{dilog(w[k].vec), dilog(w[i].vec)};
        out.push_back(splice_out(w, re, {i, j, k}, repl));
      }
    }
  return out;
}

}  // namespace

Report pentagon_bfs_oracle(int N, size_t budget) {
  Report rep;
  PentagonCtx p{make_flip_context(N, 3), N - 1};
  Word lhs = gen_f1(p, BFamily::Legs23);
  append(lhs, gen_f1(p, BFamily::Legs12));
  Word rhs = gen_f1(p, BFamily::Legs12);
  append(rhs, gen_f1(p, BFamily::Legs13));
  append(rhs, gen_f1(p, BFamily::Legs23));

  const std::string target = word_key(canonical_word(rhs));
  std::set<std::string> seen;
  std::deque<Word> queue;
  Word start = canonical_word(lhs);
  queue.push_back(start);
  seen.insert(word_key(start));
  while (!queue.empty()) {
    Word w = queue.front();
    queue.pop_front();
    if (word_key(w) == target) {
      rep.detail = "reached the right-hand side after exploring " +
                   std::to_string(seen.size()) + " words";
      rep.checks = static_cast<long long>(seen.size());
      return rep;
    }
    for (const auto& next : pentagon_moves(w)) {
      Word c = canonical_word(next);
      std::string key = word_key(c);
      if (seen.count(key)) continue;
      if (seen.size() >= budget) {
        rep.fail("search budget exhausted after " + std::to_string(seen.size()) +
                 " words");
        return rep;
      }
      seen.insert(std::move(key));
      queue.push_back(std::move(c));
    }
  }
  rep.fail("search space exhausted without reaching the right-hand side");
  return rep;
}

}  // namespace fgflip
