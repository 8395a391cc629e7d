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

#include <cmath>

#include "fgflip/qdilog.hpp"

using namespace fgflip::qd;
using cplx = std::complex<double>;

namespace {
QDParams at(double theta) {
  QDParams p;
  p.theta = theta;
  return p;
}
constexpr double kPi = 3.14159265358979323846;
}  // namespace

TEST_CASE("value at the origin") {
  for (double theta : {1.0 / 3, 0.5, 1.0, 2.0, 3.0}) {
    const double expect = kPi * kPi / 12 * (theta + 1 / theta);
    CHECK(std::abs(W_real(at(theta), 0) - expect) < 1e-11);
    CHECK(std::abs(W_real_log(at(theta), 0) - expect) < 1e-10);
  }
}

TEST_CASE("the classical integral at theta = 1") {
  // int_0^inf log(1+1/s)/(1+s) ds = pi^2/6.
  CHECK(std::abs(W_real_log(at(1), 0) - kPi * kPi / 6) < 1e-10);
}

TEST_CASE("two formulas agree on a grid") {
  for (double theta : {1.0 / 3, 1.0, 2.0}) {
    for (double t = -10; t <= 10; t += 2.5) {
      DualEval d = W_real_checked(at(theta), t);
      INFO("theta=", theta, " t=", t, " disc=", d.discrepancy);
      CHECK(d.discrepancy < 1e-9);
    }
  }
}

TEST_CASE("vanishing at minus infinity") {
  CHECK(std::abs(W_real(at(1), -30)) < 1e-6);
  CHECK(std::abs(phi(1, cplx(-30, 0)) - 1.0) < 1e-6);
}

TEST_CASE("contour evaluation restricts to the real formula") {
  for (double theta : {0.5, 1.0, 2.0}) {
    for (double t : {-3.0, 0.0, 1.7}) {
      cplx w = W_complex(at(theta), cplx(t, 0));
      CHECK(std::abs(w.imag()) < 1e-10);
      CHECK(std::abs(w.real() - W_real(at(theta), t)) < 1e-8);
    }
  }
}

TEST_CASE("strip boundaries are enforced") {
  CHECK_THROWS(W_complex(at(1.0), cplx(0, 2 * kPi + 0.1)));
  CHECK_NOTHROW(W_complex(at(1.0), cplx(0, kPi)));
}

TEST_CASE("unimodularity on the real line") {
  for (double hbar : {0.5, 1.0, 2.0, -1.0})
    for (double t : {-4.0, 0.0, 3.0})
      CHECK(std::abs(std::abs(phi(hbar, cplx(t, 0))) - 1) < 1e-8);
}

TEST_CASE("quantum exponential near zero") {
  CHECK(std::abs(quantum_exp_F(0.5, 1e-8) - 1.0) < 1e-6);
  CHECK_THROWS(quantum_exp_F(0.5, -1.0));
}

TEST_CASE("V at the origin") {
  for (double theta : {0.5, 1.0, 2.0}) {
    const cplx expect = std::exp(cplx(0, -chi(theta)));
    CHECK(std::abs(V(theta, cplx(0, 0)) - expect) < 1e-8);
  }
}

TEST_CASE("functional equation battery at unit parameter") {
  ResidualReport rep = check_functional_equations(at(1));
  for (const auto& e : rep.entries) {
    INFO(e.name, " residual ", e.residual);
    CHECK(e.pass());
  }
}

TEST_CASE("phi duality") {
  // phi_{1/hbar}(z/hbar) = phi_hbar(z) on the real line.
  for (double hbar : {0.5, 2.0})
    for (double t : {-2.0, 1.0}) {
      CHECK(std::abs(phi(1 / hbar, cplx(t / hbar, 0)) - phi(hbar, cplx(t, 0))) < 1e-8);
    }
}

TEST_CASE("parameter validation") {
  QDParams p;
  p.theta = -1;
  CHECK_THROWS(W_real(p, 0));
  QDParams q;
  q.theta = 1;
  q.delta = 0.6;  // reaches the first pole at 0.5
  CHECK_THROWS(W_complex(q, cplx(0, 0)));
}
