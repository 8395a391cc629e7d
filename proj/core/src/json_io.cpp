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

#include "fgflip/json_io.hpp"

namespace fgflip {

using nlohmann::json;

json to_json(const SkewVector& v) {
  json out = json::object();
  for (const auto& [i, c] : v.coeffs()) out[v.space()->label(i)] = rat_to_string(c);
  return out;
}

SkewVector skewvector_from_json(const json& j, const SpacePtr& space) {
  SkewVector v(space);
  for (auto it = j.begin(); it != j.end(); ++it)
    v.set_coeff(space->index(it.key()), rat_from_string(it.value().get<std::string>()));
  return v;
}

json to_json(const SkewSpace& s) {
  json pairing = json::array();
  for (int i = 0; i < s.dim(); ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < s.dim(); ++j2) row.push_back(rat_to_string(s.form(i, j2)));
    pairing.push_back(std::move(row));
  }
  return json{{"labels", s.labels()}, {"pairing", std::move(pairing)}};
}

SpacePtr space_from_json(const json& j) {
  std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
  std::vector<std::vector<Rat>> form;
  for (const auto& row : j.at("pairing")) {
    std::vector<Rat> r;
    for (const auto& e : row) r.push_back(rat_from_string(e.get<std::string>()));
    form.push_back(std::move(r));
  }
  return make_space(std::move(labels), std::move(form));
}

json to_json(const FormSum& s) {
  json terms = json::array();
  for (const auto& t : s.terms()) terms.push_back(to_json(t));
  return json{{"terms", std::move(terms)}};
}

json to_json(const LabeledBraidGraph& g) {
  json faces = json::array();
  for (const auto& f : g.faces()) {
    json jf{{"strip", f.strip}, {"cell", f.cell}};
    if (g.exempt_faces().count(f)) {
      jf["padding"] = true;
    } else if (g.colored()) {
      jf["label"] = to_json(g.label(f));
    }
    faces.push_back(std::move(jf));
  }
  json verticals = json::array();
  for (int strip = 1; strip <= g.strands() - 1; ++strip)
    for (int pos : g.verticals(strip))
      verticals.push_back(json{{"strip", strip}, {"position", pos}});
  return json{{"schema", kSchemaTag},
              {"strands", g.strands()},
              {"word", g.word().letters},
              {"verticals", std::move(verticals)},
              {"faces", std::move(faces)}};
}

json to_json(const TVector& v) {
  json out = json::object();
  for (const auto& [l, p] : v) out[l] = p.str();
  return out;
}

json to_json(const RewriteTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json js{{"rule", s.rule},
            {"position", s.position},
            {"pairing", rat_to_string(s.asserted_pairing)}};
    if (!s.note.empty()) js["note"] = s.note;
    steps.push_back(std::move(js));
  }
  return json{{"schema", kSchemaTag},
              {"steps", std::move(steps)},
              {"pentagons", t.pentagon_count()},
              {"swaps", t.swap_count()}};
}

json to_json(const qd::ResidualReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back(json{{"name", e.name},
                           {"residual", e.residual},
                           {"tolerance", e.tolerance},
                           {"pass", e.pass()}});
  return json{{"schema", kSchemaTag},
              {"entries", std::move(entries)},
              {"max_residual", r.max_residual()},
              {"pass", r.all_pass()}};
}

json to_json(const ModularReport& r) {
  json antipode = json::object();
  for (const auto& [k, v] : r.antipode) antipode[k] = to_json(v);
  return json{{"schema", kSchemaTag},
              {"N", r.N},
              {"hbar", r.hbar},
              {"two_d_l", to_json(r.two_d_l)},
              {"two_d_r", to_json(r.two_d_r)},
              {"delta_exponent", to_json(r.delta_exponent)},
              {"tau", r.scaling.tau},
              {"beta", r.scaling.beta},
              {"nu", r.scaling.nu},
              {"scaling_pairing_error", r.scaling.pairing_error},
              {"q_hat_exponent", to_json(r.modularity.q_hat_exponent)},
              {"q_exponent", to_json(r.modularity.q_exponent)},
              {"scaling_generator", to_json(r.modularity.scaling_generator)},
              {"flip_commutation", r.modularity.flip_commutation},
              {"antipode", std::move(antipode)}};
}

}  // namespace fgflip
