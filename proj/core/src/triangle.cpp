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

#include "fgflip/triangle.hpp"

#include <sstream>

namespace fgflip {

std::string TriLabel::str() const {
  std::ostringstream os;
  os << "e(" << a << "," << b << "," << c << ")";
  return os.str();
}

bool TriangleSpace::in_cone(const TriLabel& l) const {
  return l.a >= 0 && l.b >= 0 && l.c >= 0 && l.a + l.b + l.c == N;
}

namespace {

// The three positive adjacency steps of the triangle form:
//   e_{a,b,c} -> e_{a+1,b-1,c},  e_{a,b,c} -> e_{a,b+1,c-1},  e_{a,b,c} -> e_{a-1,b,c+1}.
// Pairing 1, or 1/2 when the coordinate common to both labels is 0.
Rat cone_pairing(const TriLabel& x, const TriLabel& y) {
  const int da = y.a - x.a, db = y.b - x.b, dc = y.c - x.c;
  int common;  // value of the coordinate the step keeps fixed
  if (da == 1 && db == -1 && dc == 0) common = x.c;
  else if (da == 0 && db == 1 && dc == -1) common = x.a;
  else if (da == -1 && db == 0 && dc == 1) common = x.b;
  else if (da == -1 && db == 1 && dc == 0) return -cone_pairing(y, x);
  else if (da == 0 && db == -1 && dc == 1) return -cone_pairing(y, x);
  else if (da == 1 && db == 0 && dc == -1) return -cone_pairing(y, x);
  else return 0;
  return common == 0 ? Rat(1, 2) : Rat(1);
}

}  // namespace

TriangleSpace build_triangle(int N) {
  if (N < 2) throw Error("triangle space requires N >= 2");
  TriangleSpace tri;
  tri.N = N;
  for (int a = N; a >= 0; --a)
    for (int b = N - a; b >= 0; --b) tri.cone.push_back({a, b, N - a - b});

  std::vector<std::string> labels;
  labels.reserve(tri.cone.size());
  for (const auto& l : tri.cone) labels.push_back(l.str());
  const int dim = static_cast<int>(tri.cone.size());
  std::vector<std::vector<Rat>> form(dim, std::vector<Rat>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) form[i][j] = cone_pairing(tri.cone[i], tri.cone[j]);
  tri.nabla = make_space(std::move(labels), std::move(form));

  const int n = N - 1;
  for (const auto& l : tri.cone) {
    const bool corner = (l.a == N) || (l.b == N) || (l.c == N);
    if (!corner) tri.snubbed.push_back(l);
    if (l.a >= 1 && l.a <= n) {
      tri.ne_cone.push_back(l);
      if (l.c > 0) tri.wne_cone.push_back(l);
    }
    if (l.b >= 1 && l.b <= n) {
      tri.se_cone.push_back(l);
      if (l.a > 0) tri.wse_cone.push_back(l);
    }
  }
  return tri;
}

std::vector<SkewVector> TriangleSpace::borel_minus() const {
  std::vector<SkewVector> out;
  for (const auto& l : ne_cone) out.push_back(basis(l));
  return out;
}
std::vector<SkewVector> TriangleSpace::borel_plus() const {
  std::vector<SkewVector> out;
  for (const auto& l : se_cone) out.push_back(basis(l));
  return out;
}
std::vector<SkewVector> TriangleSpace::nilpotent_minus() const {
  std::vector<SkewVector> out;
  for (const auto& l : wne_cone) out.push_back(basis(l));
  return out;
}
std::vector<SkewVector> TriangleSpace::nilpotent_plus() const {
  std::vector<SkewVector> out;
  for (const auto& l : wse_cone) out.push_back(basis(l));
  return out;
}
std::vector<SkewVector> TriangleSpace::torus_minus() const {
  std::vector<SkewVector> out;
  for (int s = 1; s <= n(); ++s) out.push_back(ne_full(*this, s));
  return out;
}
std::vector<SkewVector> TriangleSpace::torus_plus() const {
  std::vector<SkewVector> out;
  for (int s = 1; s <= n(); ++s) out.push_back(se_full(*this, s));
  return out;
}

SkewVector gfr(const TriangleSpace& tri, const TriLabel& from, const TriLabel& to) {
  const int da = to.a - from.a, db = to.b - from.b, dc = to.c - from.c;
  const int k = std::max({std::abs(da), std::abs(db), std::abs(dc)});
  if (k == 0) {
    if (!tri.in_cone(from)) throw Error("gfr: label outside the cone: " + from.str());
    return tri.basis(from);
  }
  if ((da != 0 && std::abs(da) != k) || (db != 0 && std::abs(db) != k) ||
      (dc != 0 && std::abs(dc) != k) || (da + db + dc) != 0 ||
      (da != 0 && db != 0 && dc != 0))
    throw Error("gfr: endpoints are not on a cyclic-shift line");
  const int sa = da / k, sb = db / k, sc = dc / k;
  SkewVector acc(tri.nabla);
  TriLabel cur = from;
  for (int j = 0; j <= k; ++j) {
    if (!tri.in_cone(cur)) throw Error("gfr: step leaves the cone at " + cur.str());
    acc += tri.basis(cur);
    cur = {cur.a + sa, cur.b + sb, cur.c + sc};
  }
  return acc;
}

namespace {
void check_sk(const TriangleSpace& tri, int s, int k) {
  if (!(0 <= k && k <= s && s <= tri.N))
    throw Error("vector index out of range: s=" + std::to_string(s) +
                " k=" + std::to_string(k));
}
}  // namespace

SkewVector ne_vec(const TriangleSpace& tri, int s, int k) {
  check_sk(tri, s, k);
  return gfr(tri, {tri.N - s, 0, s}, {tri.N - s, k, s - k});
}
SkewVector se_vec(const TriangleSpace& tri, int s, int k) {
  check_sk(tri, s, k);
  return gfr(tri, {s, tri.N - s, 0}, {s - k, tri.N - s, k});
}
SkewVector nw_vec(const TriangleSpace& tri, int s, int k) {
  check_sk(tri, s, k);
  return gfr(tri, {0, tri.N - s, s}, {k, tri.N - s, s - k});
}
SkewVector sw_vec(const TriangleSpace& tri, int s, int k) {
  check_sk(tri, s, k);
  return gfr(tri, {tri.N - s, s, 0}, {tri.N - s, s - k, k});
}
SkewVector ne_full(const TriangleSpace& tri, int s) { return ne_vec(tri, s, s); }
SkewVector se_full(const TriangleSpace& tri, int s) { return se_vec(tri, s, s); }

std::map<std::string, SkewVector> special_vectors(const TriangleSpace& tri) {
  std::map<std::string, SkewVector> out;
  auto name = [](const char* fam, int s, int k) {
    return std::string(fam) + "(" + std::to_string(s) + "," + std::to_string(k) + ")";
  };
  for (int s = 0; s <= tri.N; ++s)
    for (int k = 0; k <= s; ++k) {
      out[name("ne", s, k)] = ne_vec(tri, s, k);
      out[name("se", s, k)] = se_vec(tri, s, k);
      out[name("nw", s, k)] = nw_vec(tri, s, k);
      out[name("sw", s, k)] = sw_vec(tri, s, k);
    }
  for (int s = 0; s <= tri.N; ++s) {
    out["ne(" + std::to_string(s) + ")"] = ne_full(tri, s);
    out["se(" + std::to_string(s) + ")"] = se_full(tri, s);
  }
  const auto ne_w = fundamental_weights(tri, WeightSide::NE);
  const auto se_w = fundamental_weights(tri, WeightSide::SE);
  for (int s = 1; s <= tri.n(); ++s) {
    out["newt(" + std::to_string(s) + ")"] = ne_w[s - 1];
    out["sewt(" + std::to_string(s) + ")"] = se_w[s - 1];
  }
  return out;
}

std::vector<std::vector<Rat>> inverse_cartan(int n) {
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      inv[i - 1][j - 1] = Rat(std::min(i, j) * (n + 1 - std::max(i, j)), n + 1);
  return inv;
}

std::vector<SkewVector> fundamental_weights(const TriangleSpace& tri, WeightSide side) {
  const int n = tri.n();
  const auto inv = inverse_cartan(n);
  std::vector<SkewVector> out;
  out.reserve(n);
  for (int s = 1; s <= n; ++s) {
    SkewVector w(tri.nabla);
    for (int t = 1; t <= n; ++t) {
      SkewVector base = side == WeightSide::NE ? ne_full(tri, t) : se_full(tri, t);
      w += inv[s - 1][t - 1] * base;
    }
    out.push_back(std::move(w));
  }
  return out;
}

namespace {

// Closed forms of the seven pairing families, completed by antisymmetry.
// nil-nil: both indices partial (k < s, k' < s').
Rat same_nil(int s, int k, int sp, int kp) {
  if (sp == s) {
    if (kp > k) return 1;
    if (kp < k) return -1;
    return 0;
  }
  if (sp == s + 1) return kp <= k ? Rat(1, 2) : Rat(-1, 2);
  if (sp == s - 1) return kp < k ? Rat(1, 2) : Rat(-1, 2);
  return 0;
}

// (full_s, partial_{s',k'}).
Rat same_car(int s, int sp) {
  if (sp == s) return -1;
  if (std::abs(sp - s) == 1) return Rat(1, 2);
  return 0;
}

Rat diff_nil(int N, int s, int k, int sp, int kp) {
  const int n = N - 1;
  if (k + kp != s - 1) return 0;
  return Rat((k + sp == n ? 1 : 0) - (k + sp == N ? 1 : 0));
}

Rat diff_car(int N, int s, int sp) {
  if (sp == N - s) return 1;
  if (std::abs(sp - (N - s)) == 1) return Rat(-1, 2);
  return 0;
}

void mismatch(PairingTableReport* rep, const std::string& what) {
  if (rep->ok) {
    rep->ok = false;
    rep->first_mismatch = what;
  }
}

void check_one(PairingTableReport* rep, const std::string& family, const Rat& expected,
               const SkewVector& x, const SkewVector& y) {
  ++rep->checked;
  if (pair(x, y) != expected)
    mismatch(rep, family + ": (" + x.str() + ", " + y.str() + ") != " +
                      rat_to_string(expected));
}

}  // namespace

PairingTableReport verify_pairing_tables(const TriangleSpace& tri) {
  PairingTableReport rep;
  const int N = tri.N, n = tri.n();

  // (1) partial vs partial, ne and se alike.
  for (int s = 1; s <= n; ++s)
    for (int k = 0; k < s; ++k)
      for (int sp = 1; sp <= n; ++sp)
        for (int kp = 0; kp < sp; ++kp) {
          const Rat e = same_nil(s, k, sp, kp);
          check_one(&rep, "same-nil(ne)", e, ne_vec(tri, s, k), ne_vec(tri, sp, kp));
          check_one(&rep, "same-nil(se)", e, se_vec(tri, s, k), se_vec(tri, sp, kp));
        }

  // (2) full vs partial (same family), both orientations.
  for (int s = 0; s <= N; ++s)
    for (int sp = 1; sp <= n; ++sp)
      for (int kp = 0; kp < sp; ++kp) {
        const Rat e = same_car(s, sp);
        check_one(&rep, "same-car(ne)", e, ne_full(tri, s), ne_vec(tri, sp, kp));
        check_one(&rep, "same-car(se)", e, se_full(tri, s), se_vec(tri, sp, kp));
        check_one(&rep, "same-car(ne,swap)", -e, ne_vec(tri, sp, kp), ne_full(tri, s));
        check_one(&rep, "same-car(se,swap)", -e, se_vec(tri, sp, kp), se_full(tri, s));
      }

  // (3) full vs full vanish.
  for (int s = 0; s <= N; ++s)
    for (int t = 0; t <= N; ++t) {
      check_one(&rep, "vanishing(ne)", 0, ne_full(tri, s), ne_full(tri, t));
      check_one(&rep, "vanishing(se)", 0, se_full(tri, s), se_full(tri, t));
    }

  // (4) ne partial vs se partial.
  for (int s = 1; s <= n; ++s)
    for (int k = 0; k < s; ++k)
      for (int sp = 1; sp <= n; ++sp)
        for (int kp = 0; kp < sp; ++kp)
          check_one(&rep, "diff-nil", diff_nil(N, s, k, sp, kp), ne_vec(tri, s, k),
                    se_vec(tri, sp, kp));

  // (5) ne full vs se partial.
  for (int s = 0; s <= N; ++s)
    for (int sp = 1; sp <= n; ++sp)
      for (int kp = 0; kp < sp; ++kp)
        check_one(&rep, "diff-car", diff_car(N, s, sp), ne_full(tri, s),
                  se_vec(tri, sp, kp));

  // (6) ne partial vs se full vanish.
  for (int s = 1; s <= n; ++s)
    for (int k = 0; k < s; ++k)
      for (int sp = 0; sp <= N; ++sp)
        check_one(&rep, "diff-car-opp", 0, ne_vec(tri, s, k), se_full(tri, sp));

  // (7) ne full vs se full.
  for (int s = 1; s <= n; ++s)
    for (int t = 1; t <= n; ++t)
      check_one(&rep, "diff-cart", diff_car(N, s, t), ne_full(tri, s), se_full(tri, t));

  return rep;
}

Rat borel_nondegeneracy(const TriangleSpace& tri) {
  return pairing_determinant(tri.borel_minus(), tri.borel_plus());
}

TVector tvector_from(const SkewVector& v, const TPoly& scale) {
  TVector out;
  for (const auto& [i, c] : v.coeffs()) {
    TPoly p = TPoly(c) * scale;
    if (!p.is_zero()) out[v.space()->label(i)] = p;
  }
  return out;
}

TVector tvector_add(const TVector& a, const TVector& b) {
  TVector out = a;
  for (const auto& [l, p] : b) {
    auto it = out.find(l);
    if (it == out.end()) {
      out[l] = p;
    } else {
      it->second += p;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

bool tvector_equal(const TVector& a, const TVector& b) { return a == b; }

TPoly tvector_pair(const TriangleSpace& tri, const TVector& a, const TVector& b) {
  TPoly acc;
  for (const auto& [la, pa] : a)
    for (const auto& [lb, pb] : b) {
      const Rat& e = tri.nabla->form(tri.nabla->index(la), tri.nabla->index(lb));
      if (e != 0) acc += pa * pb * TPoly(e);
    }
  return acc;
}

std::string tvector_str(const TVector& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [l, p] : v) {
    if (!out.empty()) out += " + ";
    out += "(" + p.str() + ")*" + l;
  }
  return out;
}

WeightExponents weight_exponents(const TriangleSpace& tri) {
  WeightExponents w;
  SkewVector left(tri.nabla), right(tri.nabla);
  for (const auto& l : tri.ne_cone) {
    left += Rat(l.a * l.c) * tri.basis(l);
    right += Rat(l.a * l.b) * tri.basis(l);
  }
  w.two_d_l = tvector_from(left, TPoly::t());
  w.two_d_r = tvector_from(-right, TPoly::t());
  return w;
}

}  // namespace fgflip
