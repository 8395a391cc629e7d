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

#include "fgflip/braidgraph.hpp"
#include "fgflip/wordalgebra.hpp"

namespace fgflip {

struct Report {
  bool ok = true;
  long long checks = 0;
  std::string detail;  // failure description, or a short success summary

  void fail(const std::string& what) {
    if (ok) {
      ok = false;
      detail = what;
    }
  }
};

/// Executes the algebraic pentagon proof for the braided flip on three legs:
/// builds F_[23] F_[12], runs the step schedule (interleave, forward
/// pentagons, regroup, backward pentagons, reshuffle) and finishes at
/// F_[12] F_[13] F_[23].  Every pentagon asserts its pairing and every
/// commutation swap asserts pairing zero.
Report verify_braided_pentagon(int N, RewriteTrace* trace = nullptr);

/// Independent bounded-breadth rewriting search from the left-hand side to
/// the right-hand side of the pentagon, over pentagon moves modulo
/// commutation.  Budget counts distinct words visited.
Report pentagon_bfs_oracle(int N, size_t budget = 1000000);

/// The Gaussian pentagon: conjugation identity K (E(se_s) (x) 1) K^* =
/// E(se_s (+) se_s), fixedness of the torus part, and equality of the
/// adjoint actions of K_23 K_12 and K_12 K_13 K_23 on the three-leg sum.
Report verify_k_pentagon(int N);

/// The multiplicative-unitary equation for K F: pushes the Gaussians
/// through the dilog words on three legs, asserting each transformed letter,
/// and discharges through the braided and Gaussian pentagons.
Report verify_mu_pentagon(int N, RewriteTrace* trace = nullptr);

/// Conjugating a partition function by the mutable face's dilog matches the
/// mutated graph's partition function, for one face and boundary pair.
Report verify_zmut_face(const LabeledBraidGraph& g, const FaceRef& face, int a, int b);

/// Sweep over every mutable face and boundary pair of the standard E- and
/// F-graphs of order N.
Report verify_zmut(int N);

/// Same sweep over colorings reached by a seeded random mutation walk from
/// the standard graphs (the walk steps keep the coloring valid, so this
/// exercises mutation on non-basis labellings).
Report verify_zmut_random(int N, unsigned seed, int walk_steps = 6);

/// Serre-type half-integrality: reduces the three-line E-subgraph around
/// column i to both bracketing words and checks the conjugated generators
/// become single exponentials with pairing 1/2.
Report verify_serre(int N, int i);

/// The factorized R-matrix word expands to the braided flip, modulo
/// commuting swaps.
Report verify_r_equals_f(int N);

/// Rank-one decomposition: the product of elementary factors over the
/// symplectic model reduces, by Gaussian pushes, to K times the braided
/// flip; includes the two vector identities behind it.
Report verify_rank_one_decomposition(int N);

/// The label-level symmetry maps: form (anti)isomorphisms, involutivity,
/// the composition identity, the antipode/rho relations and self-duality of
/// the flip word.
Report verify_symmetry_maps(int N);

}  // namespace fgflip
