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

#include "fgflip/embedding.hpp"

#include <algorithm>

namespace fgflip {

std::string IIndex::str() const {
  if (in_I0()) return "i0(" + std::to_string(s) + ")";
  return "i1(" + std::to_string(s) + "," + std::to_string(k) + ")";
}

bool i_index_less(const IIndex& a, const IIndex& b) {
  if (a.in_I0() != b.in_I0()) return a.in_I0();
  if (a.in_I0()) return a.s < b.s;
  if (a.s - a.k != b.s - b.k) return a.s - a.k < b.s - b.k;
  return a.s > b.s;
}

std::vector<IIndex> i_order(int n) {
  std::vector<IIndex> idx;
  for (int s = 1; s <= n; ++s) idx.push_back({s, s});
  for (int s = 1; s <= n; ++s)
    for (int k = 0; k < s; ++k) idx.push_back({s, k});
  std::sort(idx.begin(), idx.end(), i_index_less);
  return idx;
}

TriLabel i_to_cone(int N, const IIndex& i) {
  return {N - i.s, i.k, i.s - i.k};
}

namespace {
std::string f_label(const IIndex& i) { return "f|" + i.str(); }
std::string w_label(const IIndex& i) { return "w|" + i.str(); }
}  // namespace

SkewVector EmbeddingVN::f(const IIndex& i) const { return basis_vector(vn, f_label(i)); }
SkewVector EmbeddingVN::w(const IIndex& i) const { return basis_vector(vn, w_label(i)); }

SkewVector EmbeddingVN::image_ne(int s, int k) const {
  auto it = ne_images.find(std::to_string(s) + "," + std::to_string(k));
  if (it == ne_images.end()) throw Error("image_ne: index out of range");
  return it->second;
}

SkewVector EmbeddingVN::image_weight(int s) const {
  auto it = weight_images.find(s);
  if (it == weight_images.end()) throw Error("image_weight: index out of range");
  return it->second;
}

SkewVector EmbeddingVN::image_se_full(int s) const {
  if (s < 1 || s > N - 1) throw Error("image_se_full: index out of range");
  return -f(IIndex{N - s, N - s});
}

SkewVector EmbeddingVN::embed(const TriangleSpace& tri, const SkewVector& v) const {
  // Split off the a = 0 part along se-full vectors, then rewrite the
  // remaining B^- part through ne partial sums:
  //   e_{a,b,c} = ne_{N-a,b} - ne_{N-a,b-1}   (a >= 1),
  //   ne_s      = sum_u B_{su} hat-varpi_u.
  const int n = tri.n();
  SkewVector rest = v;
  SkewVector out(vn);
  for (int s = 1; s <= n; ++s) {
    const TriLabel zero_a{0, tri.N - s, s};
    const Rat c = rest.coeff(zero_a.str());
    if (c != 0) {
      rest -= c * se_full(tri, s);
      out += c * image_se_full(s);
    }
  }
  auto image_ne_any = [&](int s, int k) {
    if (k < s) return image_ne(s, k);
    // ne_s = sum_u B_{su} hat-varpi_u with B the Cartan matrix.
    SkewVector acc(vn);
    for (int u = 1; u <= n; ++u) {
      int b = (u == s) ? 2 : (std::abs(u - s) == 1 ? -1 : 0);
      if (b != 0) acc += Rat(b) * image_weight(u);
    }
    return acc;
  };
  for (const auto& [idx, c] : rest.coeffs()) {
    const std::string& lbl = rest.space()->label(idx);
    TriLabel l{};
    if (sscanf(lbl.c_str(), "e(%d,%d,%d)", &l.a, &l.b, &l.c) != 3 || l.a < 1 || l.a > n)
      throw Error("embed: vector is not supported on the snubbed cone: " + lbl);
    const int s = tri.N - l.a;
    out += c * image_ne_any(s, l.b);
    if (l.b >= 1) out -= c * image_ne_any(s, l.b - 1);
  }
  return out;
}

EmbeddingVN embed_into_vn(const TriangleSpace& tri) {
  EmbeddingVN emb;
  emb.N = tri.N;
  const int n = tri.n();
  emb.order = i_order(n);

  std::vector<std::string> labels;
  const int dim = 2 * static_cast<int>(emb.order.size());
  std::vector<std::vector<Rat>> form(dim, std::vector<Rat>(dim, Rat(0)));
  for (size_t c = 0; c < emb.order.size(); ++c) {
    labels.push_back(f_label(emb.order[c]));
    labels.push_back(w_label(emb.order[c]));
    form[2 * c][2 * c + 1] = Rat(1, 2);
    form[2 * c + 1][2 * c] = Rat(-1, 2);
  }
  emb.vn = make_space(std::move(labels), std::move(form));

  // Triangle-space values of the basis attached to I.
  auto tri_vec = [&](const IIndex& i) {
    return i.in_I0() ? fundamental_weights(tri, WeightSide::NE)[i.s - 1]
                     : ne_vec(tri, i.s, i.k);
  };
  std::vector<SkewVector> values;
  values.reserve(emb.order.size());
  for (const auto& i : emb.order) values.push_back(tri_vec(i));

  // Solve by induction on the reverse order: the only unknown against an
  // already-solved j > i is the w_j coefficient, entering with weight -1/2.
  std::vector<SkewVector> solved(emb.order.size(), SkewVector(emb.vn));
  for (int pos = static_cast<int>(emb.order.size()) - 1; pos >= 0; --pos) {
    const IIndex& i = emb.order[pos];
    SkewVector x = i.in_I0() ? emb.w(i) : emb.f(i);
    for (size_t jpos = pos + 1; jpos < emb.order.size(); ++jpos) {
      const IIndex& j = emb.order[jpos];
      if (i.in_I0() && j.in_I0()) continue;  // those components must stay zero
      const Rat needed = pair(values[pos], values[jpos]);
      const Rat have = pair(x, solved[jpos]);
      const Rat c = -2 * (needed - have);
      if (c != 0) x += c * emb.w(j);
    }
    solved[pos] = std::move(x);
  }

  for (size_t pos = 0; pos < emb.order.size(); ++pos) {
    const IIndex& i = emb.order[pos];
    if (i.in_I0())
      emb.weight_images[i.s] = solved[pos];
    else
      emb.ne_images[std::to_string(i.s) + "," + std::to_string(i.k)] = solved[pos];
  }

  // Verification: the embedding preserves every pairing, including against
  // the se_s |-> -f_{N-s} extension.
  for (size_t p = 0; p < emb.order.size(); ++p)
    for (size_t q = 0; q < emb.order.size(); ++q)
      if (pair(solved[p], solved[q]) != pair(values[p], values[q]))
        throw Error("embedding does not preserve the pairing at (" +
                    emb.order[p].str() + "," + emb.order[q].str() + ")");
  for (int s = 1; s <= n; ++s) {
    const SkewVector se_img = emb.image_se_full(s);
    const SkewVector se_val = se_full(tri, s);
    for (size_t p = 0; p < emb.order.size(); ++p)
      if (pair(solved[p], se_img) != pair(values[p], se_val))
        throw Error("embedding extension breaks pairing with se_" + std::to_string(s));
    for (int t = 1; t <= n; ++t)
      if (pair(se_img, emb.image_se_full(t)) != pair(se_val, se_full(tri, t)))
        throw Error("embedding extension breaks se-se pairing");
  }
  return emb;
}

}  // namespace fgflip
