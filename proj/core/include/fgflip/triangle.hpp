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

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fgflip/skewspace.hpp"

namespace fgflip {

/// Lattice point (a,b,c) with a+b+c = N, indexing the basis of the order-N
/// triangle space.
struct TriLabel {
  int a = 0, b = 0, c = 0;
  std::string str() const;
  friend bool operator==(const TriLabel&, const TriLabel&) = default;
  friend auto operator<=>(const TriLabel&, const TriLabel&) = default;
};

/// The order-N triangle space: basis e_{a,b,c}, pairings 1 along the three
/// cyclic adjacency patterns (1/2 when the common index is 0), together with
/// the distinguished label subsets and induced subspaces.
struct TriangleSpace {
  int N = 0;
  SpacePtr nabla;

  std::vector<TriLabel> cone;        // all of C_N, in construction order
  std::vector<TriLabel> snubbed;     // C'_N  (corners removed)
  std::vector<TriLabel> ne_cone;     // 1 <= a <= n
  std::vector<TriLabel> wne_cone;    // 1 <= a <= n, c > 0
  std::vector<TriLabel> se_cone;     // 1 <= b <= n
  std::vector<TriLabel> wse_cone;    // 1 <= b <= n, a > 0

  int n() const { return N - 1; }
  std::string label(const TriLabel& l) const { return l.str(); }
  SkewVector basis(const TriLabel& l) const { return basis_vector(nabla, l.str()); }
  bool in_cone(const TriLabel& l) const;

  /// Borel-type subspace bases, as ordered basis-vector lists.
  std::vector<SkewVector> borel_minus() const;   // span of ne_cone
  std::vector<SkewVector> borel_plus() const;    // span of se_cone
  std::vector<SkewVector> nilpotent_minus() const;
  std::vector<SkewVector> nilpotent_plus() const;
  std::vector<SkewVector> torus_minus() const;   // {ne_s}
  std::vector<SkewVector> torus_plus() const;    // {se_s}
};

TriangleSpace build_triangle(int N);

/// Sum of consecutive basis vectors from `from` to `to`; the two labels must
/// differ by k steps of one cyclic unit shift (one coordinate fixed).
SkewVector gfr(const TriangleSpace& tri, const TriLabel& from, const TriLabel& to);

SkewVector ne_vec(const TriangleSpace& tri, int s, int k);
SkewVector se_vec(const TriangleSpace& tri, int s, int k);
SkewVector nw_vec(const TriangleSpace& tri, int s, int k);
SkewVector sw_vec(const TriangleSpace& tri, int s, int k);
SkewVector ne_full(const TriangleSpace& tri, int s);   // ne_{s,s}
SkewVector se_full(const TriangleSpace& tri, int s);

/// All named vectors for the CLI: "ne(s,k)", "se(s)", ...
std::map<std::string, SkewVector> special_vectors(const TriangleSpace& tri);

enum class WeightSide { NE, SE };

/// Fundamental-weight vectors: hat-varpi_s = sum_t (B^{-1})_{st} (ne or se)_t
/// with B the A_n Cartan matrix.
std::vector<SkewVector> fundamental_weights(const TriangleSpace& tri, WeightSide side);

/// Inverse A_n Cartan matrix, exact: (B^{-1})_{ij} = min(i,j)(n+1-max(i,j))/(n+1).
std::vector<std::vector<Rat>> inverse_cartan(int n);

struct PairingTableReport {
  bool ok = true;
  long long checked = 0;
  std::string first_mismatch;  // empty when ok
};

/// Exhaustively compares the seven closed-form pairing families against
/// direct pairing computation, over all admissible index tuples.
PairingTableReport verify_pairing_tables(const TriangleSpace& tri);

/// Exact determinant of the pairing between the Borel bases (ne_cone rows,
/// se_cone columns); nonzero = nondegenerate.
Rat borel_nondegeneracy(const TriangleSpace& tri);

/// Sparse vector with polynomial-in-t coefficients, t = 1 + |hbar|^{-1}.
using TVector = std::map<std::string, TPoly>;

struct WeightExponents {
  TVector two_d_l;  // t * sum_{neC} a c e_{abc}
  TVector two_d_r;  // -t * sum_{neC} a b e_{abc}
};

TVector tvector_from(const SkewVector& v, const TPoly& scale);
TVector tvector_add(const TVector& a, const TVector& b);
bool tvector_equal(const TVector& a, const TVector& b);
TPoly tvector_pair(const TriangleSpace& tri, const TVector& a, const TVector& b);
std::string tvector_str(const TVector& v);

/// The invariant-weight exponent vectors 2 d_l and 2 d_r, computed from the
/// a*c / a*b closed forms; the ne/sw partial-sum forms are checked in tests.
WeightExponents weight_exponents(const TriangleSpace& tri);

}  // namespace fgflip
