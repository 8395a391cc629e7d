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

#include <cstdint>
#include <map>
#include <string>

#include "fgflip/triangle.hpp"

namespace fgflip {

/// n-th tetrahedral number, binom(n+2,3).
std::int64_t tetrahedral(int n);

/// Exponent of the modular element delta = E(exponent), as a t-polynomial
/// vector with t = 1 + |hbar|^{-1}: -2t * sum_s hat-varpi_s.  Verifies the
/// defining identity 2 d_r - 2 d_l = exponent and the group-likeness
/// pairings; throws on violation.
TVector modular_element_exponent(const TriangleSpace& tri);

struct ScalingData {
  std::int64_t tau = 0;   // tetrahedral number tau_n
  double beta = 0;        // sgn(hbar)(|hbar|^{1/2}+|hbar|^{-1/2})^2
  double nu = 0;          // e^{-2 pi beta tau}
  double pairing_error = 0;  // | |hbar (2 d_l, delta-exp)| - beta tau |
};

ScalingData scaling_constant(const TriangleSpace& tri, double hbar);

/// Unitary antipode on the ne-basis of the lower Borel: ne_{s,k} -> -sw_{s,k};
/// returned as the image table keyed by "s,k".  Involutivity is asserted.
std::map<std::string, SkewVector> unitary_antipode(const TriangleSpace& tri);

struct ScalingModularityData {
  TVector q_hat_exponent;       // (1+|hbar|^{-1}) sum hat-varpi^{ne}
  TVector q_exponent;           // -(1+|hbar|^{-1}) sum hat-varpi^{se}
  TVector scaling_generator;    // 2(1+|hbar|^{-1}) sum hat-varpi^{ne}
  bool flip_commutation = false;  // Q-hat (x) Q commutes with every flip letter
  bool duality_prefactor = false; // hbar-scaling sends the 1/hbar Gaussian to the hbar one
};

ScalingModularityData scaling_and_modularity(const TriangleSpace& tri, double hbar);

/// rho on the ne-basis (same basis map as the antipode), with the
/// d_l/d_r swap and skew-adjointness asserted.
std::map<std::string, SkewVector> rho_involution(const TriangleSpace& tri);

struct ModularReport {
  int N = 0;
  double hbar = 1.0;
  TVector two_d_l, two_d_r, delta_exponent;
  ScalingData scaling;
  ScalingModularityData modularity;
  std::map<std::string, SkewVector> antipode;
};

ModularReport modular_report(int N, double hbar);

}  // namespace fgflip
