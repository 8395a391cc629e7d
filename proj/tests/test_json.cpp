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

#include <random>

#include "fgflip/json_io.hpp"

using namespace fgflip;

TEST_CASE("rational strings") {
  CHECK(rat_to_string(Rat(1, 2)) == "1/2");
  CHECK(rat_to_string(Rat(-3)) == "-3");
  CHECK(rat_from_string("7/3") == Rat(7, 3));
  CHECK(rat_from_string("-5") == Rat(-5));
  CHECK_THROWS_AS(rat_from_string("1/0"), Error);
}

TEST_CASE("vector and space round trips on random data") {
  TriangleSpace tri = build_triangle(3);
  nlohmann::json js = to_json(*tri.nabla);
  SpacePtr back = space_from_json(js);
  CHECK(back->labels() == tri.nabla->labels());
  for (int i = 0; i < back->dim(); ++i)
    for (int j = 0; j < back->dim(); ++j) CHECK(back->form(i, j) == tri.nabla->form(i, j));

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  for (int t = 0; t < 25; ++t) {
    SkewVector v(tri.nabla);
    for (int i = 0; i < tri.nabla->dim(); ++i) {
      Rat c(num(rng), den(rng));
      if (c != 0 && num(rng) > 0) v.set_coeff(i, c);
    }
    SkewVector w = skewvector_from_json(to_json(v), tri.nabla);
    CHECK(w == v);
  }
}

TEST_CASE("graph serialization carries the schema and faces") {
  TriangleSpace tri = build_triangle(3);
  LabeledBraidGraph g = standard_graph(tri, GraphFamily::E);
  nlohmann::json js = to_json(g);
  CHECK(js.at("schema") == kSchemaTag);
  CHECK(js.at("strands") == 3);
  CHECK(js.at("faces").size() == g.faces().size());
  // Determinism: identical dumps.
  CHECK(js.dump() == to_json(g).dump());
}

TEST_CASE("form sums and reports serialize") {
  TriangleSpace tri = build_triangle(3);
  FormSum s = standard_generator(tri, GraphFamily::E, 1, 2);
  CHECK(to_json(s).at("terms").size() == s.size());

  ModularReport rep = modular_report(3, 1.0);
  nlohmann::json js = to_json(rep);
  CHECK(js.at("tau") == 4);
  CHECK(js.at("schema") == kSchemaTag);
}
