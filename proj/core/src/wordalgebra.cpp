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

#include "fgflip/wordalgebra.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace fgflip {

std::string Letter::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Dilog:
      os << (conj ? "phibar(" : "phi(") << vec.str() << ")";
      break;
    case Kind::DilogInv:
      os << "phi*(" << vec.str() << ")";
      break;
    case Kind::Gauss:
      os << (conj ? "Gbar(" : "G(");
      for (size_t i = 0; i < tensor.size(); ++i) {
        if (i) os << " + ";
        os << rat_to_string(tensor[i].coeff) << "*[" << tensor[i].v.str() << " (x) "
           << tensor[i].w.str() << "]";
      }
      os << ")";
      break;
  }
  return os.str();
}

bool operator==(const Letter& a, const Letter& b) {
  if (a.kind != b.kind || a.conj != b.conj) return false;
  if (a.kind != Letter::Kind::Gauss) return a.vec == b.vec;
  return gauss_tensor_coeffs(a) == gauss_tensor_coeffs(b);
}

bool letter_less(const Letter& a, const Letter& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.conj != b.conj) return a.conj < b.conj;
  if (a.kind != Letter::Kind::Gauss) return a.vec < b.vec;
  return gauss_tensor_coeffs(a) < gauss_tensor_coeffs(b);
}

Letter dilog(SkewVector v, bool conj) {
  if (v.is_zero()) throw Error("dilog letter with zero vector");
  Letter l;
  l.kind = Letter::Kind::Dilog;
  l.vec = std::move(v);
  l.conj = conj;
  return l;
}

Letter dilog_inv(SkewVector v) {
  Letter l = dilog(std::move(v));
  l.kind = Letter::Kind::DilogInv;
  return l;
}

Letter gauss(std::vector<GaussTerm> terms, bool conj) {
  Letter l;
  l.kind = Letter::Kind::Gauss;
  l.tensor = std::move(terms);
  l.conj = conj;
  // Well-definedness of the multi-term Gaussian: both leg families must be
  // mutually orthogonal and the legs themselves orthogonal to each other.
  for (size_t i = 0; i < l.tensor.size(); ++i)
    for (size_t j = 0; j < l.tensor.size(); ++j) {
      if (i != j && (pair(l.tensor[i].v, l.tensor[j].v) != 0 ||
                     pair(l.tensor[i].w, l.tensor[j].w) != 0))
        throw Error("Gaussian legs are not mutually orthogonal");
      if (pair(l.tensor[i].v, l.tensor[j].w) != 0)
        throw Error("Gaussian tensor factors pair across legs");
    }
  return l;
}

std::string word_str(const OperatorWord& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += " ";
    out += l.str();
  }
  return out;
}

SkewVector gauss_adjoint(const Letter& g, const SkewVector& u, bool inverse) {
  if (g.kind != Letter::Kind::Gauss) throw Error("gauss_adjoint on a non-Gaussian");
  SkewVector out = u;
  const Rat sign = inverse ? -1 : 1;
  for (const auto& t : g.tensor) {
    const Rat a = pair(t.w, u);
    const Rat b = pair(t.v, u);
    if (a != 0) out += (sign * t.coeff * a) * t.v;
    if (b != 0) out += (sign * t.coeff * b) * t.w;
  }
  return out;
}

std::vector<std::vector<Rat>> gauss_adjoint_matrix(const Letter& g, bool inverse) {
  const SpacePtr space = g.tensor.empty() ? nullptr : g.tensor[0].v.space();
  if (!space) throw Error("gauss_adjoint_matrix on an empty Gaussian");
  const int dim = space->dim();
  std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(dim, Rat(0)));
  for (int j = 0; j < dim; ++j) {
    SkewVector e(space);
    e.set_coeff(j, 1);
    SkewVector img = gauss_adjoint(g, e, inverse);
    for (const auto& [i, c] : img.coeffs()) m[i][j] = c;
  }
  return m;
}

std::map<std::pair<int, int>, Rat> gauss_tensor_coeffs(const Letter& g) {
  std::map<std::pair<int, int>, Rat> out;
  for (const auto& t : g.tensor)
    for (const auto& [i, ci] : t.v.coeffs())
      for (const auto& [j, cj] : t.w.coeffs()) {
        auto key = std::make_pair(i, j);
        Rat add = t.coeff * ci * cj;
        auto it = out.find(key);
        if (it == out.end()) {
          if (add != 0) out[key] = add;
        } else {
          it->second += add;
          if (it->second == 0) out.erase(it);
        }
      }
  return out;
}

bool commutes(const Letter& a, const Letter& b) {
  const bool ag = a.kind == Letter::Kind::Gauss;
  const bool bg = b.kind == Letter::Kind::Gauss;
  if (!ag && !bg) return pair(a.vec, b.vec) == 0;
  if (ag && !bg) return gauss_adjoint(a, b.vec) == b.vec;
  if (!ag && bg) return gauss_adjoint(b, a.vec) == a.vec;
  auto ma = gauss_adjoint_matrix(a);
  auto mb = gauss_adjoint_matrix(b);
  const int n = static_cast<int>(ma.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat ab = 0, ba = 0;
      for (int k = 0; k < n; ++k) {
        ab += ma[i][k] * mb[k][j];
        ba += mb[i][k] * ma[k][j];
      }
      if (ab != ba) return false;
    }
  return true;
}

size_t RewriteTrace::pentagon_count() const {
  size_t c = 0;
  for (const auto& s : steps)
    if (s.rule.rfind("pentagon", 0) == 0) ++c;
  return c;
}

size_t RewriteTrace::swap_count() const {
  size_t c = 0;
  for (const auto& s : steps)
    if (s.rule == "swap") ++c;
  return c;
}

namespace {
void record(RewriteTrace* trace, std::string rule, int pos, Rat pairing,
            std::string note = "") {
  if (trace) trace->steps.push_back({std::move(rule), pos, std::move(pairing),
                                     std::move(note)});
}

void expect_plain_dilog(const Letter& l, const char* ctx) {
  if (l.kind != Letter::Kind::Dilog || l.conj)
    throw Error(std::string(ctx) + ": expected a plain dilog letter, got " + l.str());
}
}  // namespace

void apply_pentagon_forward(OperatorWord& w, int pos, RewriteTrace* trace) {
  if (pos < 0 || pos + 1 >= static_cast<int>(w.size()))
    throw Error("pentagon-forward position out of range");
  expect_plain_dilog(w[pos], "pentagon-forward");
  expect_plain_dilog(w[pos + 1], "pentagon-forward");
  const SkewVector v = w[pos].vec;
  const SkewVector u = w[pos + 1].vec;
  const Rat p = pair(v, u);
  if (p != 1)
    throw Error("pentagon-forward precondition failed: (v,w) = " + rat_to_string(p));
  record(trace, "pentagon-forward", pos, p, w[pos].str() + " " + w[pos + 1].str());
  w[pos] = dilog(u);
  w[pos + 1] = dilog(v + u);
  w.insert(w.begin() + pos + 2, dilog(v));
}

void apply_pentagon_backward(OperatorWord& w, int pos, RewriteTrace* trace) {
  if (pos < 0 || pos + 2 >= static_cast<int>(w.size()))
    throw Error("pentagon-backward position out of range");
  for (int d = 0; d < 3; ++d) expect_plain_dilog(w[pos + d], "pentagon-backward");
  const SkewVector u = w[pos].vec;       // phi(w)
  const SkewVector mid = w[pos + 1].vec; // phi(v+w)
  const SkewVector v = w[pos + 2].vec;   // phi(v)
  if (mid != v + u)
    throw Error("pentagon-backward: middle letter is not the sum of the outer ones");
  const Rat p = pair(v, u);
  if (p != 1)
    throw Error("pentagon-backward precondition failed: (v,w) = " + rat_to_string(p));
  record(trace, "pentagon-backward", pos, p);
  w[pos] = dilog(v);
  w[pos + 1] = dilog(u);
  w.erase(w.begin() + pos + 2);
}

void gauss_push_right(OperatorWord& w, int pos, RewriteTrace* trace) {
  if (pos < 0 || pos + 1 >= static_cast<int>(w.size()))
    throw Error("gauss-push position out of range");
  if (w[pos].kind != Letter::Kind::Gauss || w[pos + 1].kind != Letter::Kind::Dilog)
    throw Error("gauss-push-right expects [Gauss, Dilog]");
  Letter g = w[pos];
  Letter d = w[pos + 1];
  d.vec = gauss_adjoint(g, d.vec, /*inverse=*/false);
  record(trace, "gauss-push-right", pos, 0, d.str());
  w[pos] = std::move(d);
  w[pos + 1] = std::move(g);
}

void gauss_push_left(OperatorWord& w, int pos, RewriteTrace* trace) {
  if (pos < 0 || pos + 1 >= static_cast<int>(w.size()))
    throw Error("gauss-push position out of range");
  if (w[pos].kind != Letter::Kind::Dilog || w[pos + 1].kind != Letter::Kind::Gauss)
    throw Error("gauss-push-left expects [Dilog, Gauss]");
  Letter d = w[pos];
  Letter g = w[pos + 1];
  d.vec = gauss_adjoint(g, d.vec, /*inverse=*/true);
  record(trace, "gauss-push-left", pos, 0, d.str());
  w[pos] = std::move(g);
  w[pos + 1] = std::move(d);
}

void swap_letters(OperatorWord& w, int pos, RewriteTrace* trace) {
  if (pos < 0 || pos + 1 >= static_cast<int>(w.size()))
    throw Error("swap position out of range");
  if (!commutes(w[pos], w[pos + 1]))
    throw Error("swap of non-commuting letters at position " + std::to_string(pos) +
                ": " + w[pos].str() + " | " + w[pos + 1].str());
  Rat p = 0;
  if (w[pos].kind == Letter::Kind::Dilog && w[pos + 1].kind == Letter::Kind::Dilog)
    p = pair(w[pos].vec, w[pos + 1].vec);  // asserted zero by commutes()
  record(trace, "swap", pos, p);
  std::swap(w[pos], w[pos + 1]);
}

void reorder_to(OperatorWord& w, const OperatorWord& target, RewriteTrace* trace) {
  if (w.size() != target.size())
    throw Error("reorder_to: words have different lengths");
  OperatorWord cur = w;
  for (int i = 0; i < static_cast<int>(target.size()); ++i) {
    int found = -1;
    for (int j = i; j < static_cast<int>(cur.size()); ++j) {
      if (!(cur[j] == target[i])) continue;
      bool movable = true;
      for (int k = i; k < j && movable; ++k) movable = commutes(cur[k], cur[j]);
      if (movable) {
        found = j;
        break;
      }
    }
    if (found < 0)
      throw Error("reorder_to: words are not commutation-equivalent (stuck at index " +
                  std::to_string(i) + ": " + target[i].str() + ")");
    for (int j = found; j > i; --j) swap_letters(cur, j - 1, trace);
  }
  w = std::move(cur);
}

bool trace_monoid_equal(const OperatorWord& a, const OperatorWord& b) {
  if (a.size() != b.size()) return false;
  try {
    OperatorWord w = a;
    reorder_to(w, b, nullptr);
    return true;
  } catch (const Error&) {
    return false;
  }
}

OperatorWord replay(const OperatorWord& initial, const RewriteTrace& trace) {
  OperatorWord w = initial;
  for (const auto& s : trace.steps) {
    if (s.rule == "swap") {
      if (s.asserted_pairing != 0) throw Error("replay: swap with nonzero pairing");
      swap_letters(w, s.position, nullptr);
    } else if (s.rule == "pentagon-forward") {
      apply_pentagon_forward(w, s.position, nullptr);
    } else if (s.rule == "pentagon-backward") {
      apply_pentagon_backward(w, s.position, nullptr);
    } else if (s.rule == "gauss-push-right") {
      gauss_push_right(w, s.position, nullptr);
    } else if (s.rule == "gauss-push-left") {
      gauss_push_left(w, s.position, nullptr);
    } else {
      throw Error("replay: unknown rule " + s.rule);
    }
  }
  return w;
}

FormSum conjugate_formsum_by_dilog(const FormSum& s, const SkewVector& u, bool forward) {
  const Rat split_val = forward ? 1 : -1;
  FormSum out;
  std::map<SkewVector, int> mergeable;
  for (const auto& x : s.terms()) {
    const Rat p = pair(u, x);
    if (p == 0) {
      out.insert(x);
    } else if (p == split_val) {
      out.insert(x);
      out.insert(x + u);
    } else if (p == -split_val) {
      mergeable[x] += 1;
    } else {
      throw Error("form-sum conjugation: term " + x.str() + " has pairing " +
                  rat_to_string(p) + " outside {0,+1,-1}");
    }
  }
  // Pair up {y, y+u} chains from their bottoms.
  while (!mergeable.empty()) {
    // A chain bottom: its predecessor y-u is absent.
    auto bottom = mergeable.end();
    for (auto it = mergeable.begin(); it != mergeable.end(); ++it) {
      SkewVector pred = it->first - u;
      if (!mergeable.count(pred)) {
        bottom = it;
        break;
      }
    }
    if (bottom == mergeable.end())
      throw Error("form-sum conjugation: cyclic merge chain");
    SkewVector y = bottom->first;
    int carry = 0;
    while (true) {
      auto it = mergeable.find(y);
      const int have = (it == mergeable.end()) ? 0 : it->second;
      if (it != mergeable.end()) mergeable.erase(it);
      const int unmatched = have - carry;  // copies of y needing a partner above
      if (unmatched < 0)
        throw Error("form-sum conjugation: term " + (y - u).str() +
                    " lacks its merge partner");
      for (int c = 0; c < unmatched; ++c) out.insert(y);
      carry = unmatched;
      if (carry == 0 && !mergeable.count(y + u)) break;
      y = y + u;
    }
    if (carry != 0)
      throw Error("form-sum conjugation: term lacks its merge partner at chain top");
  }
  return out;
}

FlipContext make_flip_context(int N, int legs) {
  FlipContext ctx{build_triangle(N), {}};
  std::vector<SpacePtr> parts(legs, ctx.tri.nabla);
  ctx.amb = direct_sum(parts);
  return ctx;
}

namespace {
std::pair<int, int> family_legs(BFamily fam) {
  switch (fam) {
    case BFamily::Legs12: return {0, 1};
    case BFamily::Legs23: return {1, 2};
    case BFamily::Legs13: return {0, 2};
  }
  throw Error("unreachable");
}
}  // namespace

Letter b_letter(const FlipContext& ctx, BFamily fam, int b, int r, int i) {
  const int n = ctx.n();
  if (!(1 <= i && i <= r && r <= b && b <= n))
    throw Error("b_letter indices out of range");
  auto [l1, l2] = family_legs(fam);
  SkewVector v = ctx.ne(l1, b - i + 1, b - r) + ctx.se(l2, n - b + i, n - b);
  if (fam == BFamily::Legs13) v += ctx.nef(1, b - i + 1);
  return dilog(std::move(v));
}

Letter k_letter(const FlipContext& ctx, int l1, int l2) {
  const auto weights = fundamental_weights(ctx.tri, WeightSide::NE);
  std::vector<GaussTerm> terms;
  for (int t = 1; t <= ctx.n(); ++t)
    terms.push_back({Rat(2), ctx.amb.inject(l1, weights[t - 1]), ctx.sef(l2, ctx.N() - t)});
  return gauss(std::move(terms));
}

Letter k_letter_alt(const FlipContext& ctx, int l1, int l2) {
  const auto weights = fundamental_weights(ctx.tri, WeightSide::SE);
  std::vector<GaussTerm> terms;
  for (int t = 1; t <= ctx.n(); ++t)
    terms.push_back({Rat(2), ctx.nef(l1, t), ctx.amb.inject(l2, weights[ctx.N() - t - 1])});
  return gauss(std::move(terms));
}

namespace {

OperatorWord flip_F(const FlipContext& ctx) {
  OperatorWord w;
  for (int r = 1; r <= ctx.n(); ++r)
    for (int b = r; b <= ctx.n(); ++b)
      for (int i = 1; i <= r; ++i) w.push_back(b_letter(ctx, BFamily::Legs12, b, r, i));
  return w;
}

OperatorWord flip_F3(const FlipContext& ctx) {
  const int n = ctx.n(), N = ctx.N();
  OperatorWord w;
  for (int r = 1; r <= n; ++r)
    for (int s = 1; s <= n; ++s)
      for (int k = 0; k <= s - 1; ++k) {
        const int kk = (n - r) - k;
        if (kk < 0 || kk > n - s) continue;
        w.push_back(dilog(ctx.ne(0, N - s, kk) + ctx.se(1, s, k)));
      }
  return w;
}

OperatorWord flip_Fdprime(const FlipContext& ctx) {
  const int n = ctx.n();
  OperatorWord w;
  for (int r = 1; r <= n; ++r)
    for (int b = r; b <= n; ++b)
      for (int i = 1; i <= r; ++i)
        w.push_back(dilog(-ctx.sw(0, b - i + 1, r - i) - ctx.nw(1, n - b + i, i - 1)));
  return w;
}

}  // namespace

OperatorWord flip_factors(const FlipContext& ctx, FlipVariant variant) {
  const int n = ctx.n(), N = ctx.N();
  switch (variant) {
    case FlipVariant::F:
      return flip_F(ctx);
    case FlipVariant::F3:
      return flip_F3(ctx);
    case FlipVariant::Fdprime:
      return flip_Fdprime(ctx);
    case FlipVariant::K:
      return {k_letter(ctx, 0, 1)};
    case FlipVariant::Ftilde: {
      OperatorWord w{k_letter(ctx, 0, 1)};
      OperatorWord f = flip_F(ctx);
      w.insert(w.end(), f.begin(), f.end());
      return w;
    }
    case FlipVariant::FtildeAlt: {
      OperatorWord w = flip_Fdprime(ctx);
      w.push_back(k_letter(ctx, 0, 1));
      return w;
    }
    case FlipVariant::TildeFPrime: {
      // bar-phi(bar(ne_{s,k}) (+) -nw_{N-s,(n-r)-k}) over (conj nabla, nabla).
      DirectSum amb = direct_sum({conjugate(ctx.tri.nabla), ctx.tri.nabla});
      OperatorWord w;
      for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s)
          for (int k = 0; k <= s - 1; ++k) {
            const int kk = (n - r) - k;
            if (kk < 0 || kk > n - s) continue;
            SkewVector v = amb.inject(0, transport(ne_vec(ctx.tri, s, k), amb.parts[0])) +
                           amb.inject(1, -nw_vec(ctx.tri, N - s, kk));
            w.push_back(dilog(std::move(v), /*conj=*/true));
          }
      return w;
    }
    case FlipVariant::TildeFDoublePrime: {
      DirectSum amb = direct_sum({conjugate(ctx.tri.nabla), ctx.tri.nabla});
      OperatorWord w;
      for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s)
          for (int k = 0; k <= s - 1; ++k) {
            const int kk = r - k - 1;
            if (kk < 0 || kk > n - s) continue;
            SkewVector v = amb.inject(0, transport(-sw_vec(ctx.tri, s, k), amb.parts[0])) +
                           amb.inject(1, se_vec(ctx.tri, N - s, kk));
            w.push_back(dilog(std::move(v), /*conj=*/true));
          }
      return w;
    }
    case FlipVariant::Dual: {
      // K-hat * F-hat with K-hat = Gbar(2 sum (-nw-weight_t) (x) (-sw_{N-t}))
      // and F-hat the bar-dilog word in -nw, -sw letters.
      OperatorWord w;
      std::vector<GaussTerm> terms;
      const auto inv = inverse_cartan(n);
      for (int t = 1; t <= n; ++t) {
        SkewVector nw_weight(ctx.tri.nabla);
        for (int u = 1; u <= n; ++u)
          nw_weight += inv[t - 1][u - 1] * nw_vec(ctx.tri, u, u);
        terms.push_back({Rat(2), ctx.amb.inject(0, -nw_weight),
                         ctx.amb.inject(1, -sw_vec(ctx.tri, N - t, N - t))});
      }
      w.push_back(gauss(std::move(terms), /*conj=*/true));
      for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s)
          for (int k = 0; k <= s - 1; ++k) {
            const int kk = (n - r) - k;
            if (kk < 0 || kk > n - s) continue;
            w.push_back(dilog(-ctx.nw(0, N - s, kk) - ctx.sw(1, s, k), /*conj=*/true));
          }
      return w;
    }
  }
  throw Error("unknown flip variant");
}

bool has_reduced_prefix(const LabeledBraidGraph& g, size_t budget) {
  const int m = g.strands();
  auto predicate = [m](const BraidWord& w) {
    std::vector<int> cur = w.letters;
    for (int s = 1; s <= m - 1; ++s) {
      int found = -1;
      for (size_t j = 0; j < cur.size(); ++j) {
        if (cur[j] != s) continue;
        bool movable = true;
        for (size_t k = 0; k < j && movable; ++k)
          movable = std::abs(cur[k] - s) >= 2;
        if (movable) {
          found = static_cast<int>(j);
          break;
        }
      }
      if (found < 0) return false;
      cur.erase(cur.begin() + found);
    }
    for (int l : cur)
      if (l == m - 1) return false;
    return true;
  };

  std::set<std::vector<int>> seen;
  std::deque<BraidWord> queue;
  BraidWord start = g.word().canonical();
  queue.push_back(start);
  seen.insert(start.letters);
  while (!queue.empty() && seen.size() <= budget) {
    BraidWord w = queue.front();
    queue.pop_front();
    if (predicate(w)) return true;
    for (const auto& next : word_mutation_moves(w)) {
      BraidWord c = next.canonical();
      if (seen.insert(c.letters).second) queue.push_back(c);
    }
  }
  return false;
}

OperatorWord dilog_product_expansion(const FlipContext& ctx, const LabeledBraidGraph& g1,
                                     const LabeledBraidGraph& g2) {
  if (g1.strands() != g2.strands())
    throw Error("dilog_product_expansion: strand counts differ");
  if (!has_reduced_prefix(g1) || !has_reduced_prefix(g2))
    throw Error("dilog_product_expansion: reduced-prefix hypothesis not established");
  const int m = g1.strands();
  auto paths1 = enumerate_paths(g1, 1, m);
  auto paths2 = enumerate_paths(g2, 1, m);
  OperatorWord w;
  // Lexical order with ties broken in the second factor; the smallest pair
  // is the rightmost letter, so emit in descending order.
  for (auto p1 = paths1.rbegin(); p1 != paths1.rend(); ++p1)
    for (auto p2 = paths2.rbegin(); p2 != paths2.rend(); ++p2)
      w.push_back(
          dilog(ctx.amb.inject(0, transport(p1->adjusted_weight(g1), ctx.amb.parts[0])) +
                ctx.amb.inject(1, transport(p2->adjusted_weight(g2), ctx.amb.parts[1]))));
  return w;
}

}  // namespace fgflip
