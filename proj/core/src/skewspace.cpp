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

#include "fgflip/skewspace.hpp"

#include <algorithm>

namespace fgflip {

namespace {

using Int = boost::multiprecision::cpp_int;

Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

/// Clear denominators row-uniformly so that elimination stays integral.
std::vector<std::vector<Int>> to_integer_matrix(const std::vector<std::vector<Rat>>& m) {
  std::vector<std::vector<Int>> out;
  out.reserve(m.size());
  Int den = 1;
  for (const auto& row : m)
    for (const auto& e : row) den = lcm_int(den, denominator(e));
  if (den == 0) den = 1;
  for (const auto& row : m) {
    std::vector<Int> r;
    r.reserve(row.size());
    for (const auto& e : row) r.push_back(numerator(e) * (den / denominator(e)));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

SkewSpace::SkewSpace(std::vector<std::string> labels, std::vector<std::vector<Rat>> form)
    : labels_(std::move(labels)), form_(std::move(form)) {
  const int n = static_cast<int>(labels_.size());
  if (static_cast<int>(form_.size()) != n)
    throw Error("pairing matrix row count does not match basis size");
  for (const auto& row : form_)
    if (static_cast<int>(row.size()) != n)
      throw Error("pairing matrix is not square");
  for (int i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[i], i).second)
      throw Error("duplicate basis label: " + labels_[i]);
    for (int j = 0; j <= i; ++j) {
      if (form_[i][j] != -form_[j][i])
        throw Error("pairing matrix is not antisymmetric at (" + labels_[i] +
                    "," + labels_[j] + ")");
    }
  }
}

int SkewSpace::index(const std::string& l) const {
  auto it = index_.find(l);
  if (it == index_.end()) throw Error("unknown basis label: " + l);
  return it->second;
}

Rat SkewVector::coeff(int basis_index) const {
  auto it = coeff_.find(basis_index);
  return it == coeff_.end() ? Rat(0) : it->second;
}

Rat SkewVector::coeff(const std::string& label) const {
  return coeff(space_->index(label));
}

void SkewVector::set_coeff(int basis_index, const Rat& value) {
  if (basis_index < 0 || basis_index >= space_->dim())
    throw Error("basis index out of range");
  if (value == 0)
    coeff_.erase(basis_index);
  else
    coeff_[basis_index] = value;
}

void SkewVector::add_coeff(int basis_index, const Rat& value) {
  set_coeff(basis_index, coeff(basis_index) + value);
}

void SkewVector::check_same_space(const SkewVector& o) const {
  if (space_ != o.space_)
    throw Error("operation on vectors from different skew spaces");
}

SkewVector& SkewVector::operator+=(const SkewVector& o) {
  check_same_space(o);
  for (const auto& [i, c] : o.coeff_) add_coeff(i, c);
  return *this;
}

SkewVector& SkewVector::operator-=(const SkewVector& o) {
  check_same_space(o);
  for (const auto& [i, c] : o.coeff_) add_coeff(i, -c);
  return *this;
}

SkewVector& SkewVector::operator*=(const Rat& c) {
  if (c == 0) {
    coeff_.clear();
    return *this;
  }
  for (auto& [i, v] : coeff_) v *= c;
  return *this;
}

SkewVector SkewVector::operator-() const {
  SkewVector out = *this;
  for (auto& [i, v] : out.coeff_) v = -v;
  return out;
}

bool operator==(const SkewVector& a, const SkewVector& b) {
  return a.space_ == b.space_ && a.coeff_ == b.coeff_;
}

bool operator<(const SkewVector& a, const SkewVector& b) {
  a.check_same_space(b);
  auto ia = a.coeff_.begin(), ib = b.coeff_.begin();
  for (; ia != a.coeff_.end() && ib != b.coeff_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ib != b.coeff_.end();
}

std::string SkewVector::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [i, c] : coeff_) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += rat_to_string(c) + "*";
    out += space_->label(i);
  }
  return out;
}

SpacePtr make_space(std::vector<std::string> labels, std::vector<std::vector<Rat>> form) {
  return std::make_shared<SkewSpace>(std::move(labels), std::move(form));
}

SpacePtr make_trivial_space(std::vector<std::string> labels) {
  const size_t n = labels.size();
  return make_space(std::move(labels),
                    std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, Rat(0))));
}

SkewVector basis_vector(const SpacePtr& space, const std::string& label) {
  SkewVector v(space);
  v.set_coeff(space->index(label), 1);
  return v;
}

SkewVector zero_vector(const SpacePtr& space) { return SkewVector(space); }

Rat pair(const SkewVector& v, const SkewVector& w) {
  if (v.space() != w.space())
    throw Error("pairing of vectors from different skew spaces");
  Rat acc = 0;
  for (const auto& [i, ci] : v.coeffs())
    for (const auto& [j, cj] : w.coeffs()) {
      const Rat& e = v.space()->form(i, j);
      if (e != 0) acc += ci * cj * e;
    }
  return acc;
}

namespace {

/// Fraction-free forward elimination (Bareiss).  Returns the echelon matrix
/// together with the pivot column of each pivot row.
struct Echelon {
  std::vector<std::vector<Int>> m;
  std::vector<int> pivot_col;  // size = rank
  int sign = 1;
};

Echelon bareiss(std::vector<std::vector<Int>> m) {
  Echelon ech;
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  Int prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      ech.sign = -ech.sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ech.pivot_col.push_back(c);
    ++r;
  }
  ech.m = std::move(m);
  return ech;
}

}  // namespace

std::vector<SkewVector> radical(const SpacePtr& space) {
  const int n = space->dim();
  Echelon ech = bareiss(to_integer_matrix(space->form_matrix()));
  const int rank = static_cast<int>(ech.pivot_col.size());

  std::vector<bool> is_pivot(n, false);
  for (int c : ech.pivot_col) is_pivot[c] = true;

  std::vector<SkewVector> basis;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    // Back-substitute the solution with x[free_col] = 1 (right null space of
    // the form; by antisymmetry this is also the left radical).
    std::vector<Rat> x(n, Rat(0));
    x[free_col] = 1;
    for (int p = rank - 1; p >= 0; --p) {
      int pc = ech.pivot_col[p];
      Rat acc = 0;
      for (int j = pc + 1; j < n; ++j)
        if (x[j] != 0) acc += Rat(ech.m[p][j]) * x[j];
      x[pc] = -acc / Rat(ech.m[p][pc]);
    }
    SkewVector v(space);
    for (int j = 0; j < n; ++j)
      if (x[j] != 0) v.set_coeff(j, x[j]);
    basis.push_back(std::move(v));
  }
  return basis;
}

int pairing_rank(const std::vector<SkewVector>& vectors) {
  std::vector<std::vector<Rat>> g(vectors.size(), std::vector<Rat>(vectors.size()));
  for (size_t i = 0; i < vectors.size(); ++i)
    for (size_t j = 0; j < vectors.size(); ++j) g[i][j] = pair(vectors[i], vectors[j]);
  return static_cast<int>(bareiss(to_integer_matrix(g)).pivot_col.size());
}

Rat pairing_determinant(const std::vector<SkewVector>& rows,
                        const std::vector<SkewVector>& cols) {
  if (rows.size() != cols.size())
    throw Error("pairing determinant needs equally many rows and columns");
  std::vector<std::vector<Rat>> g(rows.size(), std::vector<Rat>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) g[i][j] = pair(rows[i], cols[j]);
  return exact_determinant(std::move(g));
}

Rat exact_determinant(std::vector<std::vector<Rat>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  // Track the denominator scaling applied per matrix, then divide it out.
  Int den = 1;
  for (const auto& row : m)
    for (const auto& e : row) den = lcm_int(den, denominator(e));
  Echelon ech = bareiss(to_integer_matrix(m));
  if (static_cast<int>(ech.pivot_col.size()) < n) return 0;
  // For Bareiss, the last pivot equals the determinant of the integer matrix.
  Int det_int = ech.m[n - 1][ech.pivot_col[n - 1]] * ech.sign;
  Rat scale = 1;
  for (int i = 0; i < n; ++i) scale *= Rat(den);
  return Rat(det_int) / scale;
}

SkewVector DirectSum::inject(int part, const SkewVector& v) const {
  if (part < 0 || part >= static_cast<int>(parts.size()))
    throw Error("direct sum component index out of range");
  if (v.space() != parts[part])
    throw Error("vector does not belong to the requested summand");
  SkewVector out(space);
  for (const auto& [i, c] : v.coeffs()) out.set_coeff(offsets[part] + i, c);
  return out;
}

SkewVector DirectSum::component(int part, const SkewVector& v) const {
  if (v.space() != space) throw Error("vector does not belong to the direct sum");
  const int lo = offsets[part];
  const int hi = lo + parts[part]->dim();
  SkewVector out(parts[part]);
  for (const auto& [i, c] : v.coeffs())
    if (i >= lo && i < hi) out.set_coeff(i - lo, c);
  return out;
}

SkewVector DirectSum::inject_tuple(int first, const std::vector<SkewVector>& vs) const {
  SkewVector out(space);
  for (size_t k = 0; k < vs.size(); ++k) out += inject(first + static_cast<int>(k), vs[k]);
  return out;
}

DirectSum direct_sum(const std::vector<SpacePtr>& parts, const std::vector<CrossBlock>& cross) {
  DirectSum sum;
  sum.parts = parts;
  int total = 0;
  for (const auto& p : parts) {
    sum.offsets.push_back(total);
    total += p->dim();
  }
  std::vector<std::string> labels;
  labels.reserve(total);
  for (size_t k = 0; k < parts.size(); ++k)
    for (const auto& l : parts[k]->labels())
      labels.push_back("L" + std::to_string(k) + ":" + l);

  std::vector<std::vector<Rat>> form(total, std::vector<Rat>(total, Rat(0)));
  for (size_t k = 0; k < parts.size(); ++k) {
    const int off = sum.offsets[k];
    for (int i = 0; i < parts[k]->dim(); ++i)
      for (int j = 0; j < parts[k]->dim(); ++j) form[off + i][off + j] = parts[k]->form(i, j);
  }
  for (const auto& blk : cross) {
    if (blk.first == blk.second || blk.first < 0 || blk.second < 0 ||
        blk.first >= static_cast<int>(parts.size()) ||
        blk.second >= static_cast<int>(parts.size()))
      throw Error("cross block indices out of range");
    const int ni = parts[blk.first]->dim();
    const int nj = parts[blk.second]->dim();
    if (static_cast<int>(blk.pairing.size()) != ni)
      throw Error("cross block shape mismatch");
    for (const auto& row : blk.pairing)
      if (static_cast<int>(row.size()) != nj) throw Error("cross block shape mismatch");
    const int oi = sum.offsets[blk.first];
    const int oj = sum.offsets[blk.second];
    for (int i = 0; i < ni; ++i)
      for (int j = 0; j < nj; ++j) {
        form[oi + i][oj + j] = blk.pairing[i][j];
        form[oj + j][oi + i] = -blk.pairing[i][j];
      }
  }
  sum.space = make_space(std::move(labels), std::move(form));
  return sum;
}

SpacePtr conjugate(const SpacePtr& space) {
  std::vector<std::vector<Rat>> form = space->form_matrix();
  for (auto& row : form)
    for (auto& e : row) e = -e;
  return make_space(space->labels(), std::move(form));
}

SkewVector transport(const SkewVector& v, const SpacePtr& target) {
  SkewVector out(target);
  for (const auto& [i, c] : v.coeffs()) out.set_coeff(target->index(v.space()->label(i)), c);
  return out;
}

}  // namespace fgflip
