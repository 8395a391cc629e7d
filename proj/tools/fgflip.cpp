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

// Command line front end: triangle-space inspection, braid-graph
// operations, the verification suites, the numeric dilogarithm battery and
// the modular-data report.  Exit codes: 0 pass, 1 verification failure,
// 2 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <complex>
#include <iostream>

#include "fgflip/embedding.hpp"
#include "fgflip/json_io.hpp"
#include "fgflip/snake.hpp"
#include "fgflip/verifications.hpp"

using namespace fgflip;
using nlohmann::json;

namespace {

enum class Status { Pass, Fail, Usage };

struct RunReport {
  std::string command;
  Status status = Status::Pass;
  json payload;
  double wall_time = 0;
};

int emit(const RunReport& rep, const std::string& format) {
  const char* status_str = rep.status == Status::Pass   ? "pass"
                           : rep.status == Status::Fail ? "fail"
                                                        : "error";
  if (format == "json") {
    // Timing is reported in text mode only, keeping identical invocations
    // byte-identical here.
    json out{{"schema", kSchemaTag},
             {"command", rep.command},
             {"status", status_str},
             {"payload", rep.payload}};
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv" && rep.payload.contains("entries")) {
    std::cout << "name,residual,tolerance,pass\n";
    for (const auto& e : rep.payload.at("entries"))
      std::cout << e.at("name").get<std::string>() << ","
                << e.at("residual").get<double>() << ","
                << e.at("tolerance").get<double>() << ","
                << (e.at("pass").get<bool>() ? 1 : 0) << "\n";
  } else {
    std::cout << rep.command << ": " << status_str << " (" << rep.wall_time << "s)\n";
    if (!rep.payload.is_null()) std::cout << rep.payload.dump(2) << "\n";
  }
  switch (rep.status) {
    case Status::Pass: return 0;
    case Status::Fail: return 1;
    case Status::Usage: return 2;
  }
  return 2;
}

json report_json(const Report& rep) {
  return json{{"ok", rep.ok}, {"checks", rep.checks}, {"detail", rep.detail}};
}

json named_vectors_json(const TriangleSpace& tri) {
  json out = json::object();
  for (const auto& [name, vec] : special_vectors(tri)) out[name] = to_json(vec);
  return out;
}

std::complex<double> parse_complex(const std::string& s) {
  // "X", "X+iY", "X-iY"
  const auto ipos = s.find('i');
  if (ipos == std::string::npos) return {std::stod(s), 0.0};
  size_t sign = s.find_last_of("+-", ipos);
  if (sign == std::string::npos || sign == 0)
    throw CLI::ValidationError("--z", "expected X, X+iY or X-iY");
  double re = std::stod(s.substr(0, sign));
  std::string imag = s.substr(sign, ipos - sign) + s.substr(ipos + 1);
  double im = imag == "+" ? 1 : imag == "-" ? -1 : std::stod(imag);
  return {re, im};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum cluster flip toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  int N = 3;
  double hbar = 1.0, theta = 1.0;
  unsigned seed = 0;
  size_t budget = 1000000;

  // triangle
  auto* tri_cmd = app.add_subcommand("triangle", "triangle-space diagrams and vectors");
  bool tri_pairings = false, tri_vectors = false, tri_verify = false;
  tri_cmd->add_option("--N", N, "order of the triangle space")->required()->check(CLI::Range(2, 64));
  tri_cmd->add_flag("--pairings", tri_pairings, "emit the pairing matrix");
  tri_cmd->add_flag("--vectors", tri_vectors, "emit the named vectors");
  tri_cmd->add_flag("--verify", tri_verify, "run the pairing-law tables");

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "braid graph operations");
  graph_cmd->require_subcommand(1);
  auto* gbuild = graph_cmd->add_subcommand("build", "build the graph of a braid word");
  int strands = 2;
  std::vector<int> word_letters;
  gbuild->add_option("--strands", strands, "strand count")->required()->check(CLI::Range(2, 64));
  gbuild->add_option("--word", word_letters, "letters of the positive word")->required();
  auto* gmut = graph_cmd->add_subcommand("mutate", "mutate a standard graph at a face");
  std::string family = "E";
  int strip = 1, cell = 1;
  gmut->add_option("--N", N, "order")->required()->check(CLI::Range(2, 16));
  gmut->add_option("--family", family)->check(CLI::IsMember({"E", "F"}));
  gmut->add_option("--strip", strip)->required();
  gmut->add_option("--cell", cell)->required();
  auto* gpart = graph_cmd->add_subcommand("partition", "partition function of a standard graph");
  int from = 1, to = 2;
  gpart->add_option("--N", N, "order")->required()->check(CLI::Range(2, 16));
  gpart->add_option("--from", from)->required();
  gpart->add_option("--to", to)->required();
  gpart->add_option("--family", family)->check(CLI::IsMember({"E", "F"}));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "executable verifications");
  verify_cmd->require_subcommand(1);
  auto* vpent = verify_cmd->add_subcommand("pentagon", "braided pentagon derivation");
  vpent->add_option("--N", N)->required()->check(CLI::Range(2, 8));
  bool with_oracle = false;
  vpent->add_flag("--oracle", with_oracle, "also run the bounded rewriting search");
  vpent->add_option("--budget", budget, "search node budget");
  auto* vmu = verify_cmd->add_subcommand("mu", "multiplicative-unitary equation");
  vmu->add_option("--N", N)->required()->check(CLI::Range(2, 6));
  auto* vzmut = verify_cmd->add_subcommand("zmut", "mutation-conjugation sweep");
  vzmut->add_option("--N", N)->required()->check(CLI::Range(2, 8));
  vzmut->add_option("--seed", seed, "seed for the randomised walk sweep");
  auto* vserre = verify_cmd->add_subcommand("serre", "half-pairing of bracketed generators");
  vserre->add_option("--N", N)->required()->check(CLI::Range(3, 9));
  auto* vreqf = verify_cmd->add_subcommand("r-eq-f", "R factorization equals the flip");
  vreqf->add_option("--N", N)->required()->check(CLI::Range(2, 4));
  auto* vdec = verify_cmd->add_subcommand("decomposition", "rank-one decomposition");
  vdec->add_option("--N", N)->required()->check(CLI::Range(2, 5));
  auto* vsym = verify_cmd->add_subcommand("symmetry", "label-level symmetry maps");
  vsym->add_option("--N", N)->required()->check(CLI::Range(2, 6));

  // snake
  auto* snake_cmd = app.add_subcommand("snake", "doubled-word snake reduction");
  snake_cmd->add_option("--N", N, "order (rank is N-1)")->required()->check(CLI::Range(2, 10));

  // qdilog
  auto* qd_cmd = app.add_subcommand("qdilog", "quantum dilogarithm numerics");
  qd_cmd->require_subcommand(1);
  auto* qeval = qd_cmd->add_subcommand("eval", "evaluate W, phi and V at a point");
  std::string zstr = "0";
  qeval->add_option("--theta", theta, "deformation parameter")->required()->check(CLI::PositiveNumber);
  qeval->add_option("--z", zstr, "evaluation point X or X+iY");
  auto* qcheck = qd_cmd->add_subcommand("check", "functional-equation battery");
  qcheck->add_option("--theta", theta)->required()->check(CLI::PositiveNumber);
  std::string qsuite = "all";
  qcheck->add_option("--suite", qsuite, "battery selection")->check(CLI::IsMember({"all"}));

  // modular
  auto* mod_cmd = app.add_subcommand("modular", "closed-form modular data");
  mod_cmd->add_option("--N", N)->required()->check(CLI::Range(2, 12));
  mod_cmd->add_option("--hbar", hbar, "deformation parameter")
      ->check(CLI::Number)
      ->capture_default_str();

  // suite
  auto* suite_cmd = app.add_subcommand("suite", "bundled verification runs");
  std::string level = "quick";
  suite_cmd->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));
  suite_cmd->add_option("--budget", budget, "search node budget");
  suite_cmd->add_option("--seed", seed, "seed for randomised sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  RunReport rep;
  for (int i = 0; i < argc; ++i) rep.command += std::string(i ? " " : "") + argv[i];
  const auto started = std::chrono::steady_clock::now();
  auto finish = [&]() {
    rep.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return emit(rep, format);
  };
  auto from_report = [&](const Report& r) {
    rep.status = r.ok ? Status::Pass : Status::Fail;
    rep.payload = report_json(r);
    return finish();
  };

  try {
    if (*tri_cmd) {
      TriangleSpace tri = build_triangle(N);
      json payload;
      if (tri_pairings) payload["space"] = to_json(*tri.nabla);
      if (tri_vectors) payload["vectors"] = named_vectors_json(tri);
      if (tri_verify) {
        auto table = verify_pairing_tables(tri);
        payload["tables"] = json{{"ok", table.ok},
                                 {"checked", table.checked},
                                 {"first_mismatch", table.first_mismatch}};
        payload["borel_determinant"] = rat_to_string(borel_nondegeneracy(tri));
        if (!table.ok) rep.status = Status::Fail;
      }
      if (payload.is_null())
        payload["nodes"] = tri.cone.size();
      rep.payload = std::move(payload);
      return finish();
    }

    if (*gbuild) {
      LabeledBraidGraph g = graph_from_word(BraidWord{strands, word_letters});
      rep.payload = to_json(g);
      return finish();
    }
    if (*gmut) {
      TriangleSpace tri = build_triangle(N);
      LabeledBraidGraph g = standard_graph(
          tri, family == "E" ? GraphFamily::E : GraphFamily::F);
      LabeledBraidGraph m = mutate(g, FaceRef{strip, cell});
      rep.payload = json{{"before", to_json(g)}, {"after", to_json(m)}};
      return finish();
    }
    if (*gpart) {
      TriangleSpace tri = build_triangle(N);
      FormSum z = standard_generator(
          tri, family == "E" ? GraphFamily::E : GraphFamily::F, from, to);
      rep.payload = to_json(z);
      return finish();
    }

    if (*vpent) {
      RewriteTrace trace;
      Report r = verify_braided_pentagon(N, &trace);
      if (r.ok && with_oracle) {
        Report o = pentagon_bfs_oracle(N, budget);
        r.ok = o.ok;
        r.detail += "; oracle: " + o.detail;
      }
      rep.status = r.ok ? Status::Pass : Status::Fail;
      rep.payload = report_json(r);
      rep.payload["trace"] = to_json(trace);
      return finish();
    }
    if (*vmu) return from_report(verify_mu_pentagon(N));
    if (*vzmut) {
      Report r = verify_zmut(N);
      if (r.ok) {
        Report rnd = verify_zmut_random(N, seed);
        r.checks += rnd.checks;
        if (!rnd.ok) r = rnd;
      }
      return from_report(r);
    }
    if (*vserre) {
      Report all;
      for (int i = 2; i <= N - 1 && all.ok; ++i) {
        Report r = verify_serre(N, i);
        all.checks += r.checks;
        if (!r.ok) all = r;
      }
      if (all.ok) all.detail = "both generator pairs are 1/2-paired for every column";
      return from_report(all);
    }
    if (*vreqf) return from_report(verify_r_equals_f(N));
    if (*vdec) return from_report(verify_rank_one_decomposition(N));
    if (*vsym) return from_report(verify_symmetry_maps(N));

    if (*snake_cmd) {
      SnakeReduction red = snake_reduce_doubled(N - 1);
      rep.status = red.reached_target ? Status::Pass : Status::Fail;
      json sched = json::array();
      for (const auto& s : red.schedule)
        sched.push_back(json{{"k", s.k}, {"l", s.l}, {"demazure", s.demazure}});
      rep.payload = json{{"reached_target", red.reached_target},
                         {"failure", red.failure},
                         {"schedule", std::move(sched)}};
      return finish();
    }

    if (*qeval) {
      qd::QDParams p;
      p.theta = theta;
      std::complex<double> z = parse_complex(zstr);
      std::complex<double> w =
          z.imag() == 0 ? std::complex<double>(qd::W_real(p, z.real()), 0)
                        : qd::W_complex(p, z);
      std::complex<double> v = qd::V(p, z);
      std::complex<double> ph = qd::phi(1 / theta, z);
      rep.payload = json{{"theta", theta},
                         {"z", {z.real(), z.imag()}},
                         {"W", {w.real(), w.imag()}},
                         {"V", {v.real(), v.imag()}},
                         {"phi", {ph.real(), ph.imag()}}};
      if (z.imag() == 0) {
        qd::DualEval dual = qd::W_real_checked(p, z.real());
        rep.payload["W_route_discrepancy"] = dual.discrepancy;
      }
      return finish();
    }
    if (*qcheck) {
      qd::QDParams p;
      p.theta = theta;
      qd::ResidualReport r = qd::check_functional_equations(p);
      rep.status = r.all_pass() ? Status::Pass : Status::Fail;
      rep.payload = to_json(r);
      return finish();
    }

    if (*mod_cmd) {
      if (hbar == 0) throw Error("--hbar must be nonzero");
      ModularReport r = modular_report(N, hbar);
      rep.payload = to_json(r);
      if (format == "text") {
        std::cout << "order N = " << r.N << ", hbar = " << r.hbar << "\n"
                  << "  tau = " << r.scaling.tau << ", beta = " << r.scaling.beta
                  << ", nu = " << r.scaling.nu << "\n"
                  << "  2 d_l = " << tvector_str(r.two_d_l) << "\n"
                  << "  2 d_r = " << tvector_str(r.two_d_r) << "\n"
                  << "  delta exponent = " << tvector_str(r.delta_exponent) << "\n"
                  << "  scaling pairing error = " << r.scaling.pairing_error << "\n";
      }
      rep.status = r.scaling.pairing_error < 1e-12 && r.modularity.flip_commutation
                       ? Status::Pass
                       : Status::Fail;
      return finish();
    }

    if (*suite_cmd) {
      const bool full = level == "full";
      json results = json::array();
      bool ok = true;
      auto run = [&](const std::string& name, const Report& r) {
        results.push_back(json{{"name", name}, {"ok", r.ok}, {"detail", r.detail}});
        ok = ok && r.ok;
      };
      for (int order = 2; order <= (full ? 6 : 3); ++order) {
        auto t = verify_pairing_tables(build_triangle(order));
        Report r;
        r.ok = t.ok;
        r.detail = t.first_mismatch;
        run("pairing-tables order " + std::to_string(order), r);
      }
      for (int order = 2; order <= (full ? 4 : 3); ++order)
        run("pentagon order " + std::to_string(order), verify_braided_pentagon(order));
      for (int order = 2; order <= 3; ++order) {
        run("mu order " + std::to_string(order), verify_mu_pentagon(order));
        run("r-eq-f order " + std::to_string(order), verify_r_equals_f(order));
        run("decomposition order " + std::to_string(order),
            verify_rank_one_decomposition(order));
        run("symmetry order " + std::to_string(order), verify_symmetry_maps(order));
      }
      for (int order = 2; order <= (full ? 4 : 3); ++order) {
        run("zmut order " + std::to_string(order), verify_zmut(order));
        run("zmut random order " + std::to_string(order), verify_zmut_random(order, seed));
      }
      if (full)
        for (int order = 2; order <= 3; ++order)
          run("pentagon oracle order " + std::to_string(order),
              pentagon_bfs_oracle(order, budget));
      for (int rank = 1; rank <= (full ? 5 : 3); ++rank) {
        SnakeReduction red = snake_reduce_doubled(rank);
        Report r;
        r.ok = red.reached_target;
        r.detail = red.failure;
        run("snake rank " + std::to_string(rank), r);
      }
      {
        qd::QDParams p;
        p.theta = full ? 0.5 : 1.0;
        qd::ResidualReport r = qd::check_functional_equations(p);
        Report rr;
        rr.ok = r.all_pass();
        rr.detail = "max residual " + std::to_string(r.max_residual());
        run("qdilog battery", rr);
        if (full)
          for (double th : {1.0 / 3, 1.0, 2.0, 3.0}) {
            p.theta = th;
            qd::ResidualReport r2 = qd::check_functional_equations(p);
            Report rr2;
            rr2.ok = r2.all_pass();
            rr2.detail = "max residual " + std::to_string(r2.max_residual());
            run("qdilog battery theta " + std::to_string(th), rr2);
          }
      }
      rep.status = ok ? Status::Pass : Status::Fail;
      rep.payload = json{{"level", level}, {"results", std::move(results)}};
      return finish();
    }
  } catch (const Error& e) {
    rep.status = Status::Fail;
    rep.payload = json{{"error", e.what()}};
    return finish();
  } catch (const std::exception& e) {
    rep.status = Status::Usage;
    rep.payload = json{{"error", e.what()}};
    return finish();
  }
  return 2;
}
