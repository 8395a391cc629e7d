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

#include "fgflip/braidgraph.hpp"

#include <algorithm>
#include <sstream>

namespace fgflip {

void BraidWord::validate() const {
  if (strands < 2) throw Error("braid word needs at least 2 strands");
  for (int l : letters)
    if (l < 1 || l > strands - 1)
      throw Error("braid letter out of range: " + std::to_string(l));
}

BraidWord BraidWord::canonical() const {
  BraidWord out = *this;
  out.validate();
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < out.letters.size(); ++i) {
      if (std::abs(out.letters[i] - out.letters[i + 1]) >= 2 &&
          out.letters[i] > out.letters[i + 1]) {
        std::swap(out.letters[i], out.letters[i + 1]);
        changed = true;
      }
    }
  }
  return out;
}

std::string FaceRef::str() const {
  return "face(strip=" + std::to_string(strip) + ",cell=" + std::to_string(cell) + ")";
}

LabeledBraidGraph::LabeledBraidGraph(BraidWord word, SpacePtr space)
    : word_(word.canonical()), space_(std::move(space)) {
  labels_.resize(word_.strands - 1);
  for (int j = 1; j <= word_.strands - 1; ++j)
    labels_[j - 1].resize(cell_count(j));
}

std::vector<int> LabeledBraidGraph::verticals(int strip) const {
  if (strip < 1 || strip > word_.strands - 1)
    throw Error("strip index out of range: " + std::to_string(strip));
  std::vector<int> out;
  for (size_t t = 0; t < word_.letters.size(); ++t)
    if (word_.letters[t] == strip) out.push_back(static_cast<int>(t));
  return out;
}

int LabeledBraidGraph::cell_count(int strip) const {
  return static_cast<int>(verticals(strip).size()) + 1;
}

const SkewVector& LabeledBraidGraph::label(const FaceRef& f) const {
  const SkewVector& v = labels_.at(f.strip - 1).at(f.cell);
  if (!v.space()) throw Error("face has no label: " + f.str());
  return v;
}

void LabeledBraidGraph::set_label(const FaceRef& f, SkewVector v) {
  labels_.at(f.strip - 1).at(f.cell) = std::move(v);
  colored_ = true;
}

std::vector<FaceRef> LabeledBraidGraph::faces() const {
  std::vector<FaceRef> out;
  for (int j = 1; j <= word_.strands - 1; ++j)
    for (int c = 0; c < cell_count(j); ++c) out.push_back({j, c});
  return out;
}

LabeledBraidGraph graph_from_word(const BraidWord& word, SpacePtr space) {
  return LabeledBraidGraph(word, std::move(space));
}

LabeledBraidGraph standard_graph(const TriangleSpace& tri, GraphFamily family) {
  const int N = tri.N, n = tri.n();
  BraidWord w;
  w.strands = N;
  if (family == GraphFamily::E) {
    for (int k = n; k >= 1; --k)
      for (int i = 1; i <= k; ++i) w.letters.push_back(i);
  } else {
    for (int k = n; k >= 1; --k)
      for (int i = n; i >= N - k; --i) w.letters.push_back(i);
  }
  LabeledBraidGraph g(w, tri.nabla);
  for (int strip = 1; strip <= n; ++strip) {
    const int cells = g.cell_count(strip);
    for (int c = 0; c < cells; ++c) {
      TriLabel l = family == GraphFamily::E
                       ? TriLabel{N - strip - c, strip, c}
                       : TriLabel{N - strip, c, strip - c};
      g.set_label({strip, c}, tri.basis(l));
    }
  }
  return g;
}

namespace {

struct Corner {
  int pos;
  bool red;  // red = sink of a vertical (bottom endpoint)
};

/// Corners on wire j, sorted by position: blue tops of strip-j verticals and
/// red bottoms of strip-(j-1) verticals.
std::vector<Corner> wire_corners(const LabeledBraidGraph& g, int j) {
  std::vector<Corner> out;
  if (j <= g.strands() - 1)
    for (int p : g.verticals(j)) out.push_back({p, false});
  if (j >= 2)
    for (int p : g.verticals(j - 1)) out.push_back({p, true});
  std::sort(out.begin(), out.end(), [](const Corner& a, const Corner& b) {
    return a.pos < b.pos;
  });
  return out;
}

int cell_at(const LabeledBraidGraph& g, int strip, int left_of_pos) {
  // Index of the cell of `strip` containing positions < left_of_pos closeby:
  // the number of verticals at positions < left_of_pos.
  int c = 0;
  for (int p : g.verticals(strip))
    if (p < left_of_pos) ++c;
  return c;
}

bool is_exempt(const LabeledBraidGraph& g, const FaceRef& f) {
  return g.exempt_faces().count(f) != 0;
}

struct EdgeCheck {
  FaceRef f, gface;
  Rat expected;
  const char* what;
};

}  // namespace

std::optional<std::string> coloring_violation(const LabeledBraidGraph& g) {
  const int m = g.strands();
  // Every non-exempt face carries a label; labels are linearly independent.
  std::vector<SkewVector> all_labels;
  for (const auto& f : g.faces()) {
    if (is_exempt(g, f)) continue;
    try {
      all_labels.push_back(g.label(f));
    } catch (const Error&) {
      return "unlabelled face " + f.str();
    }
    if (all_labels.back().is_zero()) return "zero label at " + f.str();
  }
  {
    // Rank of the coefficient matrix over the ambient basis.
    std::vector<std::vector<Rat>> rows;
    const int dim = all_labels.empty() ? 0 : all_labels[0].space()->dim();
    for (const auto& v : all_labels) {
      std::vector<Rat> row(dim, Rat(0));
      for (const auto& [i, c] : v.coeffs()) row[i] = c;
      rows.push_back(std::move(row));
    }
    std::vector<std::vector<Rat>> sq = rows;  // rank via Gram of rows
    std::vector<std::vector<Rat>> gram(rows.size(), std::vector<Rat>(rows.size()));
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < rows.size(); ++j) {
        Rat acc = 0;
        for (int k = 0; k < dim; ++k) acc += rows[i][k] * rows[j][k];
        gram[i][j] = acc;
      }
    if (!rows.empty() && exact_determinant(gram) == 0)
      return std::string("face labels are linearly dependent");
  }

  std::vector<EdgeCheck> checks;
  // Vertical edges: left and right cell pair to 1 (red lies to the right
  // when crossing eastwards).
  for (int strip = 1; strip <= m - 1; ++strip) {
    const int cells = g.cell_count(strip);
    for (int c = 0; c + 1 < cells; ++c)
      checks.push_back({{strip, c}, {strip, c + 1}, Rat(1), "vertical edge"});
  }
  // Horizontal edges on interior wires.
  for (int j = 2; j <= m - 1; ++j) {
    auto corners = wire_corners(g, j);
    if (corners.empty()) {
      checks.push_back({{j - 1, 0}, {j, 0}, Rat(0), "corner-free wire"});
      continue;
    }
    // Left boundary edge.
    checks.push_back({{j, 0}, {j - 1, 0},
                      corners.front().red ? Rat(1, 2) : Rat(-1, 2),
                      "left boundary edge"});
    // Right boundary edge.
    checks.push_back({{j - 1, g.cell_count(j - 1) - 1}, {j, g.cell_count(j) - 1},
                      corners.back().red ? Rat(1, 2) : Rat(-1, 2),
                      "right boundary edge"});
    for (size_t t = 0; t + 1 < corners.size(); ++t) {
      const Corner& c1 = corners[t];
      const Corner& c2 = corners[t + 1];
      FaceRef above{j - 1, cell_at(g, j - 1, c2.pos)};
      FaceRef below{j, cell_at(g, j, c2.pos)};
      if (c1.red == c2.red)
        checks.push_back({above, below, Rat(0), "same-color horizontal edge"});
      else if (c1.red)
        checks.push_back({above, below, Rat(1), "red-blue horizontal edge"});
      else
        checks.push_back({below, above, Rat(1), "blue-red horizontal edge"});
    }
  }
  for (const auto& ck : checks) {
    if (is_exempt(g, ck.f) || is_exempt(g, ck.gface)) continue;
    Rat got = pair(g.label(ck.f), g.label(ck.gface));
    if (got != ck.expected) {
      std::ostringstream os;
      os << ck.what << " between " << ck.f.str() << " and " << ck.gface.str()
         << ": pairing " << rat_to_string(got) << " != " << rat_to_string(ck.expected);
      return os.str();
    }
  }
  return std::nullopt;
}

bool coloring_valid(const LabeledBraidGraph& g) { return !coloring_violation(g); }

namespace {

/// Letters strictly between positions p1 < p3 whose strand lies in
/// [lo, hi]; returns their positions.
std::vector<int> blocking_between(const BraidWord& w, int p1, int p3, int lo, int hi) {
  std::vector<int> out;
  for (int t = p1 + 1; t < p3; ++t)
    if (w.letters[t] >= lo && w.letters[t] <= hi) out.push_back(t);
  return out;
}

struct PatternMatch {
  MoveKind kind;
  int p1, p2, p3;  // p2 = -1 for Demazure
};

std::optional<PatternMatch> match_pattern(const LabeledBraidGraph& g, const FaceRef& f,
                                          std::string* why) {
  const BraidWord& w = g.word();
  const int m = g.strands();
  const int s = f.strip;
  auto verts = g.verticals(s);
  if (f.cell < 1 || f.cell >= static_cast<int>(verts.size())) {
    if (why) *why = "face is not an interior cell of its strip";
    return std::nullopt;
  }
  const int p1 = verts[f.cell - 1];
  const int p3 = verts[f.cell];

  // Braid move with the face between the two outer letters on strip s and a
  // single middle letter one strip above (lower pattern) or below (upper).
  if (s >= 2) {
    auto blocking = blocking_between(w, p1, p3, std::max(1, s - 2),
                                     std::min(m - 1, s + 1));
    if (blocking.size() == 1 && w.letters[blocking[0]] == s - 1)
      return PatternMatch{MoveKind::BraidLower, p1, blocking[0], p3};
  }
  if (s <= m - 2) {
    auto blocking = blocking_between(w, p1, p3, std::max(1, s - 1),
                                     std::min(m - 1, s + 2));
    if (blocking.size() == 1 && w.letters[blocking[0]] == s + 1)
      return PatternMatch{MoveKind::BraidUpper, p1, blocking[0], p3};
  }
  if (s == 1 || s == m - 1) {
    auto blocking = blocking_between(w, p1, p3, std::max(1, s - 1),
                                     std::min(m - 1, s + 1));
    if (blocking.empty())
      return PatternMatch{s == 1 ? MoveKind::DemazureFirst : MoveKind::DemazureLast,
                          p1, -1, p3};
  }
  if (why)
    *why = "no braid or Demazure pattern matches at " + f.str() +
           " (letters between the bounding verticals do not commute out)";
  return std::nullopt;
}

void require_no_exempt_on_strip(const LabeledBraidGraph& g, int strip) {
  for (const auto& f : g.exempt_faces())
    if (f.strip == strip)
      throw Error("mutation would touch an exempt face on strip " +
                  std::to_string(strip));
}

}  // namespace

std::vector<Mutation> mutable_faces(const LabeledBraidGraph& g) {
  std::vector<Mutation> out;
  for (const auto& f : g.faces()) {
    auto m = match_pattern(g, f, nullptr);
    if (m) out.push_back({f, m->kind});
  }
  return out;
}

LabeledBraidGraph mutate(const LabeledBraidGraph& g, const FaceRef& face) {
  std::string why;
  auto m = match_pattern(g, face, &why);
  if (!m) throw Error("face not mutable: " + why);
  const int s = face.strip;
  const int c = face.cell;
  const SkewVector v = g.label(face);

  BraidWord nw = g.word();
  if (m->kind == MoveKind::BraidLower || m->kind == MoveKind::BraidUpper) {
    const int other = m->kind == MoveKind::BraidLower ? s - 1 : s + 1;
    require_no_exempt_on_strip(g, s);
    require_no_exempt_on_strip(g, other);
    nw.letters[m->p1] = other;
    nw.letters[m->p2] = s;
    nw.letters[m->p3] = other;
    LabeledBraidGraph out(nw, g.space());
    out.set_exempt(g.exempt_faces());
    // Unaffected strips keep their labels and cell numbering.
    for (int strip = 1; strip <= g.strands() - 1; ++strip) {
      if (strip == s || strip == other) continue;
      for (int cell = 0; cell < g.cell_count(strip); ++cell)
        out.set_label({strip, cell}, g.label({strip, cell}));
    }
    // d = cell index of the middle letter's strip left of p2.
    int d = 0;
    for (int p : g.verticals(other))
      if (p < m->p2) ++d;
    if (m->kind == MoveKind::BraidLower) {
      const SkewVector v1 = g.label({s - 1, d});
      const SkewVector v2 = g.label({s - 1, d + 1});
      const SkewVector v4 = g.label({s, c - 1});
      const SkewVector v3 = g.label({s, c + 1});
      // Strip s loses the face v; strip s-1 gains -v.
      for (int cell = 0; cell < c - 1; ++cell) out.set_label({s, cell}, g.label({s, cell}));
      out.set_label({s, c - 1}, v4);
      out.set_label({s, c}, v3 + v);
      for (int cell = c + 2; cell < g.cell_count(s); ++cell)
        out.set_label({s, cell - 1}, g.label({s, cell}));
      for (int cell = 0; cell < d; ++cell) out.set_label({s - 1, cell}, g.label({s - 1, cell}));
      out.set_label({s - 1, d}, v1 + v);
      out.set_label({s - 1, d + 1}, -v);
      out.set_label({s - 1, d + 2}, v2);
      for (int cell = d + 2; cell < g.cell_count(s - 1); ++cell)
        out.set_label({s - 1, cell + 1}, g.label({s - 1, cell}));
    } else {
      const SkewVector v4 = g.label({s + 1, d});
      const SkewVector v3 = g.label({s + 1, d + 1});
      const SkewVector v1 = g.label({s, c - 1});
      const SkewVector v2 = g.label({s, c + 1});
      for (int cell = 0; cell < c - 1; ++cell) out.set_label({s, cell}, g.label({s, cell}));
      out.set_label({s, c - 1}, v1);
      out.set_label({s, c}, v2 + v);
      for (int cell = c + 2; cell < g.cell_count(s); ++cell)
        out.set_label({s, cell - 1}, g.label({s, cell}));
      for (int cell = 0; cell < d; ++cell) out.set_label({s + 1, cell}, g.label({s + 1, cell}));
      out.set_label({s + 1, d}, v4 + v);
      out.set_label({s + 1, d + 1}, -v);
      out.set_label({s + 1, d + 2}, v3);
      for (int cell = d + 2; cell < g.cell_count(s + 1); ++cell)
        out.set_label({s + 1, cell + 1}, g.label({s + 1, cell}));
    }
    return out;
  }

  // Demazure: delete the right bounding vertical and merge v into the cell
  // on its right.
  require_no_exempt_on_strip(g, s);
  nw.letters.erase(nw.letters.begin() + m->p3);
  LabeledBraidGraph out(nw, g.space());
  std::set<FaceRef> exempt;
  for (const auto& f : g.exempt_faces())
    exempt.insert(f.strip == s && f.cell > c ? FaceRef{f.strip, f.cell - 1} : f);
  out.set_exempt(std::move(exempt));
  for (int strip = 1; strip <= g.strands() - 1; ++strip) {
    if (strip == s) continue;
    for (int cell = 0; cell < g.cell_count(strip); ++cell)
      out.set_label({strip, cell}, g.label({strip, cell}));
  }
  for (int cell = 0; cell < c; ++cell) out.set_label({s, cell}, g.label({s, cell}));
  out.set_label({s, c}, v + g.label({s, c + 1}));
  for (int cell = c + 2; cell < g.cell_count(s); ++cell)
    out.set_label({s, cell - 1}, g.label({s, cell}));
  return out;
}

LabeledBraidGraph merge_labels(const LabeledBraidGraph& g,
                               const std::vector<int>& deleted_positions) {
  std::set<int> deleted(deleted_positions.begin(), deleted_positions.end());
  for (int p : deleted)
    if (p < 0 || p >= static_cast<int>(g.word().letters.size()))
      throw Error("merge_labels: position out of range");
  BraidWord nw;
  nw.strands = g.strands();
  for (size_t t = 0; t < g.word().letters.size(); ++t)
    if (!deleted.count(static_cast<int>(t))) nw.letters.push_back(g.word().letters[t]);
  LabeledBraidGraph out(nw, g.space());

  std::set<FaceRef> exempt;
  for (int strip = 1; strip <= g.strands() - 1; ++strip) {
    auto verts = g.verticals(strip);
    // new_cell[k] = index of the merged cell containing old cell k.
    std::vector<int> new_cell(verts.size() + 1, 0);
    int cur = 0;
    for (size_t k = 0; k < verts.size(); ++k) {
      if (!deleted.count(verts[k])) ++cur;
      new_cell[k + 1] = cur;
    }
    std::vector<SkewVector> merged(cur + 1, SkewVector(g.space()));
    std::vector<bool> any(cur + 1, false);
    for (size_t k = 0; k <= verts.size(); ++k) {
      const FaceRef oldf{strip, static_cast<int>(k)};
      if (is_exempt(g, oldf)) {
        exempt.insert({strip, new_cell[k]});
        continue;
      }
      merged[new_cell[k]] += g.label(oldf);
      any[new_cell[k]] = true;
    }
    for (int k = 0; k <= cur; ++k)
      if (any[k]) out.set_label({strip, k}, merged[k]);
  }
  out.set_exempt(std::move(exempt));
  return out;
}

SkewVector GraphPath::adjusted_weight(const LabeledBraidGraph& g) const {
  SkewVector acc(g.space());
  for (size_t j = 0; j < descent.size(); ++j) {
    const int strip = from + static_cast<int>(j);
    for (int cell = 0; cell <= descent[j]; ++cell) acc += g.label({strip, cell});
  }
  return acc;
}

std::vector<GraphPath> enumerate_paths(const LabeledBraidGraph& g, int a, int b) {
  if (!(1 <= a && a < b && b <= g.strands()))
    throw Error("path boundaries out of range");
  std::vector<std::vector<int>> verts;
  for (int j = a; j <= b - 1; ++j) verts.push_back(g.verticals(j));

  std::vector<GraphPath> out;
  std::vector<int> choice(verts.size());
  // Depth-first in ascending position order per strip: emission order is the
  // lexical total order (descending earlier = smaller).
  auto rec = [&](auto&& self, size_t j, int min_pos) -> void {
    if (j == verts.size()) {
      GraphPath p;
      p.from = a;
      p.to = b;
      p.descent = choice;
      out.push_back(std::move(p));
      return;
    }
    for (size_t q = 0; q < verts[j].size(); ++q) {
      if (verts[j][q] <= min_pos) continue;
      choice[j] = static_cast<int>(q);
      self(self, j + 1, verts[j][q]);
    }
  };
  rec(rec, 0, -1);
  return out;
}

FormSum::FormSum(std::vector<SkewVector> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end());
}

void FormSum::insert(SkewVector v) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v);
  terms_.insert(it, std::move(v));
}

std::string FormSum::str() const {
  if (terms_.empty()) return "(empty)";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += "  [+]  ";
    out += "E(" + t.str() + ")";
  }
  return out;
}

FormSum partition_function(const LabeledBraidGraph& g, int a, int b) {
  FormSum z;
  for (const auto& p : enumerate_paths(g, a, b)) z.insert(p.adjusted_weight(g));
  return z;
}

LabeledBraidGraph subgraph_lines(const LabeledBraidGraph& g, int r, int s) {
  if (!(1 <= r && r < s && s <= g.strands()))
    throw Error("subgraph lines out of range");
  BraidWord nw;
  nw.strands = s - r + 1;
  std::vector<int> kept;  // original positions of kept letters
  for (size_t t = 0; t < g.word().letters.size(); ++t) {
    const int l = g.word().letters[t];
    if (l >= r && l <= s - 1) {
      nw.letters.push_back(l - r + 1);
      kept.push_back(static_cast<int>(t));
    }
  }
  LabeledBraidGraph out(nw, g.space());
  std::set<FaceRef> exempt;
  for (int strip = r; strip <= s - 1; ++strip) {
    for (int cell = 0; cell < g.cell_count(strip); ++cell) {
      const FaceRef oldf{strip, cell};
      const FaceRef newf{strip - r + 1, cell};
      if (is_exempt(g, oldf)) {
        exempt.insert(newf);
        continue;
      }
      out.set_label(newf, g.label(oldf));
    }
  }
  out.set_exempt(std::move(exempt));
  return out;
}

LabeledBraidGraph conditional_top_keep_only(const LabeledBraidGraph& g, int j) {
  auto verts = g.verticals(1);
  if (j < 1 || j > static_cast<int>(verts.size()))
    throw Error("conditional graph: no such top vertical");
  std::vector<int> del;
  for (size_t q = 0; q < verts.size(); ++q)
    if (static_cast<int>(q) != j - 1) del.push_back(verts[q]);
  return merge_labels(g, del);
}

LabeledBraidGraph conditional_top_drop_first(const LabeledBraidGraph& g) {
  auto verts = g.verticals(1);
  if (verts.empty()) throw Error("conditional graph: no top vertical to drop");
  return merge_labels(g, {verts[0]});
}

FormSum standard_generator(const TriangleSpace& tri, GraphFamily family, int r, int s) {
  return partition_function(standard_graph(tri, family), r, s);
}

std::vector<BraidWord> word_mutation_moves(const BraidWord& w) {
  LabeledBraidGraph g(w, nullptr);
  std::vector<BraidWord> out;
  for (const auto& f : g.faces()) {
    auto m = match_pattern(g, f, nullptr);
    if (!m) continue;
    BraidWord nw = g.word();
    if (m->kind == MoveKind::DemazureFirst || m->kind == MoveKind::DemazureLast) {
      nw.letters.erase(nw.letters.begin() + m->p3);
    } else {
      const int other = m->kind == MoveKind::BraidLower ? f.strip - 1 : f.strip + 1;
      nw.letters[m->p1] = other;
      nw.letters[m->p2] = f.strip;
      nw.letters[m->p3] = other;
    }
    out.push_back(std::move(nw));
  }
  return out;
}

SkewVector least_path_weight(const LabeledBraidGraph& g) {
  GraphPath p;
  p.from = 1;
  p.to = g.strands();
  int min_pos = -1;
  for (int strip = 1; strip <= g.strands() - 1; ++strip) {
    auto verts = g.verticals(strip);
    int chosen = -1;
    for (size_t q = 0; q < verts.size(); ++q)
      if (verts[q] > min_pos) {
        chosen = static_cast<int>(q);
        min_pos = verts[q];
        break;
      }
    if (chosen < 0) throw Error("no path from 1 to m");
    p.descent.push_back(chosen);
  }
  return p.adjusted_weight(g);
}

}  // namespace fgflip
