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

#include <complex>
#include <string>
#include <vector>

namespace fgflip::qd {

/// Quadrature configuration for the dilogarithm integrals.
struct QDParams {
  double theta = 1.0;       // deformation parameter, > 0
  double tol = 1e-12;       // adaptive quadrature target
  double tail_tol = 1e-13;  // tail truncation budget
  double delta = 0.0;       // contour bump radius; 0 = min(pi, pi*theta)/8
  int bump_points = 64;     // Gauss-Legendre nodes on the semicircle

  double bump_radius() const;
  void validate() const;
};

/// Strip of holomorphy |Im z| < pi (1 + 1/theta).
double strip_half_width(double theta);
bool in_strip(double theta, std::complex<double> z);

/// W on the real line through the hyperbolic-gamma reduction
/// (constant + quadratic + real integral).
double W_real(const QDParams& p, double t);

/// W on the real line through the logarithmic integral form.
double W_real_log(const QDParams& p, double t);

struct DualEval {
  double value = 0;        // the hyperbolic-gamma route
  double discrepancy = 0;  // |route difference|
};

/// Evaluates both real-line formulas and reports their difference.
DualEval W_real_checked(const QDParams& p, double t);

/// W on the strip via the bumped contour.
std::complex<double> W_complex(const QDParams& p, std::complex<double> z);

/// chi = pi (theta + 1/theta) / 24.
double chi(double theta);

/// The quantum dilogarithm phi_hbar (hbar != 0), quantum exponential F_hbar
/// (r > 0) and the meromorphic-normalisation V_theta, all evaluated inside
/// the strip of the underlying W.
std::complex<double> phi(double hbar, std::complex<double> z);
std::complex<double> quantum_exp_F(double hbar, double r);
std::complex<double> V(const QDParams& p, std::complex<double> z);
std::complex<double> V(double theta, std::complex<double> z);

struct ResidualEntry {
  std::string name;
  double residual = 0;
  double tolerance = 0;
  bool pass() const { return residual <= tolerance; }
};

struct ResidualReport {
  std::vector<ResidualEntry> entries;
  bool all_pass() const;
  double max_residual() const;
};

/// The functional-equation battery at a fixed theta: dual-formula agreement,
/// unimodularity, the two shift equations, complex conjugation, modular
/// duality, the shifted-modulus value, F's continuity at zero, the value at
/// the origin, and the asymptotic flatness at -infinity.
ResidualReport check_functional_equations(const QDParams& p);

}  // namespace fgflip::qd
