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

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fgflip/triangle.hpp"

namespace fgflip {

/// Positive braid word: letters are strand indices 1..strands-1, no inverses.
struct BraidWord {
  int strands = 0;
  std::vector<int> letters;

  void validate() const;
  /// Lexicographically least word reachable by commutation moves
  /// (adjacent swaps of letters at distance >= 2).  Two words present the
  /// same planar graph iff their canonical forms agree.
  BraidWord canonical() const;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Face address: the cell-th region of the strip between wires strip and
/// strip+1, counted from the left (cell 0 lies left of the first vertical).
struct FaceRef {
  int strip = 0;
  int cell = 0;
  friend bool operator==(const FaceRef&, const FaceRef&) = default;
  friend auto operator<=>(const FaceRef&, const FaceRef&) = default;
  std::string str() const;
};

/// Planar graph of a positive braid word with an optional face coloring.
/// The word is kept in canonical form; faces are addressed by (strip, cell),
/// which commutation normalisation never disturbs.
class LabeledBraidGraph {
 public:
  LabeledBraidGraph() = default;
  LabeledBraidGraph(BraidWord word, SpacePtr space);

  const BraidWord& word() const { return word_; }
  int strands() const { return word_.strands; }
  const SpacePtr& space() const { return space_; }
  bool colored() const { return colored_; }

  /// Word positions of the verticals on the given strip, increasing.
  std::vector<int> verticals(int strip) const;
  int cell_count(int strip) const;

  const SkewVector& label(const FaceRef& f) const;
  void set_label(const FaceRef& f, SkewVector v);
  std::vector<FaceRef> faces() const;

  /// Faces whose labels never enter any assertion (right padding of the
  /// doubled graphs).  Edges touching them are skipped by the validity check.
  const std::set<FaceRef>& exempt_faces() const { return exempt_; }
  void set_exempt(std::set<FaceRef> faces) { exempt_ = std::move(faces); }

 private:
  friend struct GraphOps;
  BraidWord word_;
  SpacePtr space_;
  bool colored_ = false;
  std::vector<std::vector<SkewVector>> labels_;  // labels_[strip-1][cell]
  std::set<FaceRef> exempt_;
};

LabeledBraidGraph graph_from_word(const BraidWord& word, SpacePtr space = nullptr);

enum class GraphFamily { E, F };

/// The standard colored graphs: family E along w_0 = (w_n, ..., w_1) with
/// w_k = (s_1..s_k) and e_{a,b,c} in the c-th cell of row b; family F along
/// the reversed decomposition with e_{a,b,c} in the b-th cell of row a.
LabeledBraidGraph standard_graph(const TriangleSpace& tri, GraphFamily family);

/// Checks the face-coloring conditions edge by edge on interior wires:
/// red-blue edges pair to 1 with the red vertex on the right, other corner
/// edges pair to 0, corner-boundary edges pair to +-1/2; labels must be
/// linearly independent.  Returns the first violated condition, if any.
std::optional<std::string> coloring_violation(const LabeledBraidGraph& g);
bool coloring_valid(const LabeledBraidGraph& g);

enum class MoveKind { BraidLower, BraidUpper, DemazureFirst, DemazureLast };

struct Mutation {
  FaceRef face;
  MoveKind kind;
};

/// All faces at which some move applies, with the move kind.
std::vector<Mutation> mutable_faces(const LabeledBraidGraph& g);

/// Applies the braid or Demazure move whose local pattern matches at the
/// face, transforming word and labels per the local rules.  Throws with the
/// failed pattern description when the face is not mutable.
LabeledBraidGraph mutate(const LabeledBraidGraph& g, const FaceRef& face);

/// Deletes the vertical edges at the given word positions and merges the
/// face labels across them.
LabeledBraidGraph merge_labels(const LabeledBraidGraph& g,
                               const std::vector<int>& deleted_positions);

/// Directed path from left boundary vertex a to right boundary vertex b,
/// recorded by the vertical (index among the strip's verticals) used to
/// descend each strip a..b-1.
struct GraphPath {
  int from = 0, to = 0;
  std::vector<int> descent;  // descent[j] = vertical index used on strip from+j

  /// Adjusted weight: sum of labels of all faces under the path, relative to
  /// the straight path along wire b.
  SkewVector adjusted_weight(const LabeledBraidGraph& g) const;
};

/// All directed paths a -> b, sorted by the lexical order (the path that
/// descends first at the first divergence is smaller).
std::vector<GraphPath> enumerate_paths(const LabeledBraidGraph& g, int a, int b);

/// Formal sum of exponentials, encoded by the multiset of exponent vectors.
/// Kept sorted in the canonical vector order.
class FormSum {
 public:
  FormSum() = default;
  explicit FormSum(std::vector<SkewVector> terms);
  const std::vector<SkewVector>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  void insert(SkewVector v);
  friend bool operator==(const FormSum&, const FormSum&) = default;
  std::string str() const;

 private:
  std::vector<SkewVector> terms_;
};

/// Partition function with boundary conditions (a,b): the multiset of
/// adjusted path weights.
FormSum partition_function(const LabeledBraidGraph& g, int a, int b);

/// The colored subgraph between horizontal lines r and s (strands renumbered
/// 1..s-r+1), as used by the standard generators E_{rs}, F_{rs}.
LabeledBraidGraph subgraph_lines(const LabeledBraidGraph& g, int r, int s);

/// Conditional standard-generator graphs: keep only the j-th top-row
/// vertical (E^{[j]}), only the leftmost (F^{[1]}), or drop the leftmost
/// (F^{>1}).  One-based j.
LabeledBraidGraph conditional_top_keep_only(const LabeledBraidGraph& g, int j);
LabeledBraidGraph conditional_top_drop_first(const LabeledBraidGraph& g);

/// Standard generator E_{rs} (family E) or F_{rs} (family F) as a form sum.
FormSum standard_generator(const TriangleSpace& tri, GraphFamily family, int r, int s);

/// Weight of the lexically smallest path 1 -> m; invariant under braid and
/// Demazure moves.
SkewVector least_path_weight(const LabeledBraidGraph& g);

/// All words reachable by a single braid or Demazure move (label-free).
std::vector<BraidWord> word_mutation_moves(const BraidWord& w);

}  // namespace fgflip
