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
#include <utility>
#include <vector>

#include "fgflip/braidgraph.hpp"
#include "fgflip/triangle.hpp"

namespace fgflip {

/// One summand c * v (x) w of a Gaussian's tensor datum.
struct GaussTerm {
  Rat coeff;
  SkewVector v, w;
};

/// A letter of the operator-word calculus: a quantum dilogarithm phi(v),
/// its inverse, or a Gaussian with tensor datum sum_i c_i v_i (x) w_i whose
/// legs are mutually orthogonal.  `conj` marks bar-type letters (complex
/// conjugate functional calculus); they follow the same commutation rules.
struct Letter {
  enum class Kind { Dilog, DilogInv, Gauss };
  Kind kind = Kind::Dilog;
  SkewVector vec;
  std::vector<GaussTerm> tensor;
  bool conj = false;

  std::string str() const;
  friend bool operator==(const Letter&, const Letter&);
  friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
};

bool letter_less(const Letter& a, const Letter& b);

Letter dilog(SkewVector v, bool conj = false);
Letter dilog_inv(SkewVector v);
Letter gauss(std::vector<GaussTerm> terms, bool conj = false);

/// Ordered product of letters; the leftmost entry is the left factor
/// (applied last), matching the printed product convention.
using OperatorWord = std::vector<Letter>;

std::string word_str(const OperatorWord& w);

/// Adjoint (conjugation) action of a Gaussian on exponent vectors:
///   u |-> u + sum_i c_i [ (w_i,u) v_i + (v_i,u) w_i ]     (forward)
/// and with the opposite sign for the inverse.
SkewVector gauss_adjoint(const Letter& g, const SkewVector& u, bool inverse = false);

/// Dense matrix of the adjoint action over the ambient basis.
std::vector<std::vector<Rat>> gauss_adjoint_matrix(const Letter& g, bool inverse = false);

/// Tensor datum as a coefficient matrix over (basis x basis); two Gaussians
/// are equal as operators iff these agree.
std::map<std::pair<int, int>, Rat> gauss_tensor_coeffs(const Letter& g);

/// Exact commutation test: dilog pairs commute iff their vectors pair to
/// zero; a Gaussian commutes with a dilog iff its adjoint fixes the vector;
/// two Gaussians commute iff their adjoint matrices commute.
bool commutes(const Letter& a, const Letter& b);

/// Replayable proof log.  Every step stores the rule, the position it acted
/// at and the asserted precondition so that replay() can re-derive and
/// re-check the whole derivation from scratch.
struct TraceStep {
  std::string rule;  // "swap" | "pentagon-forward" | "pentagon-backward" | "gauss-push-left" | "gauss-push-right"
  int position = 0;
  Rat asserted_pairing;
  std::string note;
};

struct RewriteTrace {
  std::vector<TraceStep> steps;
  size_t pentagon_count() const;
  size_t swap_count() const;
};

/// Kashaev pentagon rewrite.  Forward: [phi(v), phi(w)] with (v,w) = 1
/// becomes [phi(w), phi(v+w), phi(v)].  Backward inverts it, checking that
/// the middle letter is the exact sum.  Throws with the offending pairing on
/// precondition failure.
void apply_pentagon_forward(OperatorWord& w, int pos, RewriteTrace* trace = nullptr);
void apply_pentagon_backward(OperatorWord& w, int pos, RewriteTrace* trace = nullptr);

/// Moves the Gaussian at `pos` one slot to the right (across a dilog, which
/// gets its vector conjugated), or the Gaussian at pos+1 to the left.
void gauss_push_right(OperatorWord& w, int pos, RewriteTrace* trace = nullptr);
void gauss_push_left(OperatorWord& w, int pos, RewriteTrace* trace = nullptr);

/// Swaps the commuting letters at pos, pos+1; throws if they do not commute.
void swap_letters(OperatorWord& w, int pos, RewriteTrace* trace = nullptr);

/// Reorders `w` into `target` by verified adjacent swaps of commuting
/// letters; throws when the words are not trace-equivalent.
void reorder_to(OperatorWord& w, const OperatorWord& target, RewriteTrace* trace = nullptr);

/// Equality modulo adjacent swaps of commuting letters.
bool trace_monoid_equal(const OperatorWord& a, const OperatorWord& b);

/// Replays a trace from `initial`, re-checking each precondition, and
/// returns the resulting word.
OperatorWord replay(const OperatorWord& initial, const RewriteTrace& trace);

/// Symbolic conjugation of a form sum by phi(u) (forward) or phi(u)^*
/// (reverse): pairing-0 terms are fixed, (u,x) = +1 terms split into
/// {x, x+u}, and matched pairs {y, y+u} with (u,y) = -1 merge to {y}
/// (signs exchanged in reverse).  Throws when a term has pairing outside
/// {0,+-1} or a mergeable term lacks its partner.
FormSum conjugate_formsum_by_dilog(const FormSum& s, const SkewVector& u, bool forward);

/// Shared setup for flip words: a direct sum of copies of the order-N
/// triangle space with injected distinguished vectors.
struct FlipContext {
  TriangleSpace tri;
  DirectSum amb;

  int n() const { return tri.n(); }
  int N() const { return tri.N; }
  SkewVector ne(int leg, int s, int k) const { return amb.inject(leg, ne_vec(tri, s, k)); }
  SkewVector se(int leg, int s, int k) const { return amb.inject(leg, se_vec(tri, s, k)); }
  SkewVector nw(int leg, int s, int k) const { return amb.inject(leg, nw_vec(tri, s, k)); }
  SkewVector sw(int leg, int s, int k) const { return amb.inject(leg, sw_vec(tri, s, k)); }
  SkewVector nef(int leg, int s) const { return amb.inject(leg, ne_full(tri, s)); }
  SkewVector sef(int leg, int s) const { return amb.inject(leg, se_full(tri, s)); }
};

FlipContext make_flip_context(int N, int legs);

/// Families of flip dilog letters over two chosen legs.
enum class BFamily { Legs12, Legs23, Legs13 };

/// B^{b,r,i} (or its three-leg variants): the dilog letter with vector
/// ne_{b-i+1,b-r} (+ ne_{b-i+1} on the middle leg for Legs13) + se_{n-b+i,n-b}.
Letter b_letter(const FlipContext& ctx, BFamily fam, int b, int r, int i);

/// The Gaussian K on legs (l1,l2): tensor 2 sum_t hat-varpi_t (x) se_{N-t}.
Letter k_letter(const FlipContext& ctx, int l1, int l2);
/// Alternative presentation 2 sum_t ne_t (x) se-side hat-varpi_{N-t}.
Letter k_letter_alt(const FlipContext& ctx, int l1, int l2);

enum class FlipVariant {
  F,                 // braided flip, canonical product order
  F3,                // braided flip, the index-substituted product order
  Fdprime,           // C^{b,r,i} factors (the K-on-the-right presentation)
  K,                 // the Gaussian alone
  Ftilde,            // K * F
  FtildeAlt,         // F'' * K
  TildeFPrime,       // contragredient flip, bar letters, first leg conjugate
  TildeFDoublePrime, // its K-on-the-right presentation
  Dual               // the dual flip K-hat * F-hat (bar letters)
};

/// The exact ordered letter list of the requested factorization, over legs
/// (0,1) of a two-leg ambient.
OperatorWord flip_factors(const FlipContext& ctx, FlipVariant variant);

/// Expansion of F-bar(Z_{Gamma1 x Gamma2}) as the ordered product of
/// phi(w_{p1} (+) w_{p2}) over path pairs (lexical order, smallest pair
/// rightmost).  Checks the reduced-prefix hypothesis on both graphs first.
OperatorWord dilog_product_expansion(const FlipContext& ctx,
                                     const LabeledBraidGraph& g1,
                                     const LabeledBraidGraph& g2);

/// Whether the graph's word can be brought by braid and Demazure moves to
/// sigma_1 sigma_2 ... sigma_{m-1} i' with i' free of sigma_{m-1}.
bool has_reduced_prefix(const LabeledBraidGraph& g, size_t budget = 100000);

}  // namespace fgflip
