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

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace fgflip {

using Rat = boost::multiprecision::cpp_rational;

/// Thrown on contract violations (mismatched spaces, bad indices, failed
/// rewrite preconditions).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    return Rat(boost::multiprecision::cpp_int(s));
  }
  boost::multiprecision::cpp_int num(s.substr(0, slash));
  boost::multiprecision::cpp_int den(s.substr(slash + 1));
  if (den == 0) throw Error("rational with zero denominator: " + s);
  return Rat(num, den);
}

/// Polynomial in one formal variable t over Q, used for coefficients that
/// are rational in t = 1 + |hbar|^{-1}.  Dense, low degree.
class TPoly {
 public:
  TPoly() = default;
  TPoly(const Rat& c) : coeff_{c} { trim(); }            // NOLINT(runtime/explicit)
  TPoly(int c) : coeff_{Rat(c)} { trim(); }              // NOLINT(runtime/explicit)
  static TPoly t(int degree = 1) {
    TPoly p;
    p.coeff_.assign(degree + 1, Rat(0));
    p.coeff_.back() = 1;
    return p;
  }

  bool is_zero() const { return coeff_.empty(); }
  int degree() const { return static_cast<int>(coeff_.size()) - 1; }
  Rat coeff(int d) const {
    return d >= 0 && d <= degree() ? coeff_[d] : Rat(0);
  }

  TPoly& operator+=(const TPoly& o) {
    if (coeff_.size() < o.coeff_.size()) coeff_.resize(o.coeff_.size(), Rat(0));
    for (size_t i = 0; i < o.coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
    trim();
    return *this;
  }
  TPoly& operator-=(const TPoly& o) {
    if (coeff_.size() < o.coeff_.size()) coeff_.resize(o.coeff_.size(), Rat(0));
    for (size_t i = 0; i < o.coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
    trim();
    return *this;
  }
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    TPoly out;
    out.coeff_.assign(a.coeff_.size() + b.coeff_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeff_.size(); ++i)
      for (size_t j = 0; j < b.coeff_.size(); ++j)
        out.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
    out.trim();
    return out;
  }
  TPoly operator-() const {
    TPoly out = *this;
    for (auto& c : out.coeff_) c = -c;
    return out;
  }
  friend bool operator==(const TPoly& a, const TPoly& b) {
    return a.coeff_ == b.coeff_;
  }

  double eval(double t) const {
    double acc = 0;
    for (size_t i = coeff_.size(); i-- > 0;)
      acc = acc * t + static_cast<double>(coeff_[i]);
    return acc;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
      if (coeff_[d] == 0) continue;
      if (!out.empty()) out += " + ";
      out += rat_to_string(coeff_[d]);
      if (d == 1) out += "*t";
      if (d > 1) out += "*t^" + std::to_string(d);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
  }
  std::vector<Rat> coeff_;  // coeff_[d] multiplies t^d
};

}  // namespace fgflip
