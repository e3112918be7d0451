// Copyright 2026 The aamsim authors
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

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "aam/expectation.hpp"
#include "aam/noninvasive.hpp"
#include "aam/oscillator.hpp"
#include "aam/rng.hpp"
#include "common.hpp"
#include "json_util.hpp"

namespace aamcli {
namespace {

nlohmann::json table_json(const aam::JointProbabilityTable& t) {
  auto conditional = [&t](int q1, int q2) {
    const double m = t.marginal_first(q1);
    return m > 0.0 ? t(q1, q2) / m : 0.0;
  };
  return nlohmann::json{
      {"p", {{t(0, 0), t(0, 1)}, {t(1, 0), t(1, 1)}}},
      {"marginal_q1", {t.marginal_first(0), t.marginal_first(1)}},
      {"marginal_q2", {t(0, 0) + t(1, 0), t(0, 1) + t(1, 1)}},
      {"conditional_q2_given_q1",
       {{conditional(0, 0), conditional(0, 1)},
        {conditional(1, 0), conditional(1, 1)}}},
      {"conditional_entropy_bits", aam::conditional_entropy(t)}};
}

nlohmann::json moussa_json(const aam::MoussaResult& r) {
  return nlohmann::json{
      {"value", {{"re", r.value.real()}, {"im", r.value.imag()}}},
      {"ancilla_readout",
       {{"sx", r.ancilla_readout.first}, {"sy", r.ancilla_readout.second}}},
      {"circuit",
       aam::detail::parse_json(aam::circuit_to_json(r.circuit_used),
                               "circuit")}};
}

}  // namespace

void register_elgi(CLI::App& app, Registry& reg) {
  struct Params {
    std::string theta_grid = "0:pi/2:256";
    int n = 3;
    std::string method = "cnot";
  };
  auto p = std::make_shared<Params>();
  Command& cmd = reg.add(
      app, "elgi",
      "Entropic Leggett-Garg deficit D_n over a total-rotation sweep");
  cmd.bind("--theta-grid", p->theta_grid,
           "total rotation between first and last measurement, "
           "start:end:count (radians; pi fractions accepted)");
  cmd.bind("--n", p->n, "number of sequential measurements (count, >= 2)");
  cmd.bind("--method", p->method,
           "first-measurement realization: cnot | inrm | projective");
  cmd.on_run([p, &reg](const Artifacts& art) {
    const std::vector<double> grid = parse_grid(p->theta_grid);
    const aam::MeasurementMethod method =
        aam::measurement_method_from_name(p->method);
    std::vector<std::string> rows(grid.size());
    parallel_for(long(grid.size()), reg.global.threads, [&](long i) {
      aam::ElgiConfig cfg;
      cfg.n = p->n;
      cfg.theta = grid[size_t(i)];
      rows[size_t(i)] =
          fmt(cfg.theta) + "," + fmt(aam::elgi_deficit(cfg, method)) + "," +
          fmt(aam::elgi_deficit_closed_form(cfg.theta, p->n));
    });
    art.csv({}, "theta,D3_circuit,D3_closed_form", rows);
    art.recipe({"title: entropic Leggett-Garg deficit",
                "file: " + art.csv_name(),
                "x: theta [rad]",
                "y: deficit [bits]",
                "series: theta vs D3_circuit",
                "series: theta vs D3_closed_form",
                "hline: 0  # macrorealist bound",
                "vline: " + fmt(M_PI / 4) + "  # pi/4, expected minimum"});
  });
}

void register_inrm(CLI::App& app, Registry& reg) {
  struct Params {
    std::string theta = "pi/4";
    std::string state = "mixed";
  };
  auto p = std::make_shared<Params>();
  Command& cmd = reg.add(
      app, "inrm",
      "Two-time joint probabilities via ancilla copy, negative-result runs "
      "and the projective reference");
  cmd.bind("--theta", p->theta,
           "x-rotation angle between the two measurements (radians; pi "
           "fractions accepted)");
  cmd.bind("--state", p->state,
           "initial system state: mixed | zero | one | plus | random, or a "
           "matrix JSON file");
  cmd.on_run([p, &reg](const Artifacts& art) {
    const double theta = parse_angle(p->theta);
    const aam::DensityMatrix rho = make_state(p->state, 1, reg.global.seed);
    const aam::UnitaryMatrix u(aam::rot_x(theta));
    nlohmann::json methods;
    double max_dev = 0.0;
    aam::JointProbabilityTable first;
    bool have_first = false;
    for (const auto m :
         {aam::MeasurementMethod::cnot, aam::MeasurementMethod::inrm,
          aam::MeasurementMethod::projective}) {
      const aam::JointProbabilityTable t = aam::joint_probabilities(rho, u, m);
      methods[aam::measurement_method_name(m)] = table_json(t);
      if (!have_first) {
        first = t;
        have_first = true;
      } else {
        for (int q1 = 0; q1 < 2; ++q1)
          for (int q2 = 0; q2 < 2; ++q2)
            max_dev = std::max(max_dev,
                               std::abs(t(q1, q2) - first(q1, q2)));
      }
    }
    art.json_result({{"theta", theta},
                     {"methods", methods},
                     {"max_method_deviation", max_dev}});
  });
}

void register_moussa(CLI::App& app, Registry& reg) {
  struct Params {
    std::string op = "unitary";
    std::string operator1;
    std::string operator2;
    std::string state = "zero";
  };
  auto p = std::make_shared<Params>();
  Command& cmd = reg.add(
      app, "moussa",
      "Interferometric expectation values from a |+>-ancilla circuit");
  cmd.bind("--op", p->op,
           "quantity: unitary (tr rho U) | hermitian (<A>, A^2=1) | "
           "projector (<P>) | diagonal (<A_diag>) | joint (tr rho V U)");
  cmd.bind("--operator", p->operator1,
           "target operator: preset x | y | z | h, or a matrix JSON file");
  cmd.bind("--operator2", p->operator2,
           "second operator V for --op joint (same grammar)");
  cmd.bind("--state", p->state,
           "system state: zero | one | plus | ghz | mixed | random, or a "
           "matrix JSON file");
  cmd.on_run([p, &reg](const Artifacts& art) {
    if (p->operator1.empty())
      throw std::invalid_argument("moussa needs --operator");
    const aam::Matrix a = make_operator(p->operator1);
    const aam::DensityMatrix rho = make_state(
        p->state, aam::qubit_count_for_dim(a.rows()), reg.global.seed);
    nlohmann::json payload{{"operation", p->op}};
    if (p->op == "unitary") {
      payload.update(moussa_json(aam::expect_unitary(rho,
                                                     aam::UnitaryMatrix(a))));
    } else if (p->op == "hermitian") {
      const double v =
          aam::expect_hermitian_unitary(rho, aam::HermitianObservable(a));
      payload["value"] = {{"re", v}, {"im", 0.0}};
    } else if (p->op == "projector") {
      const double v = aam::expect_projector(rho, aam::HermitianObservable(a));
      payload["value"] = {{"re", v}, {"im", 0.0}};
    } else if (p->op == "diagonal") {
      const double v =
          aam::expect_diagonal_hermitian(rho, aam::HermitianObservable(a));
      payload["value"] = {{"re", v}, {"im", 0.0}};
    } else if (p->op == "joint") {
      if (p->operator2.empty())
        throw std::invalid_argument("--op joint needs --operator2");
      const aam::Matrix b = make_operator(p->operator2);
      payload.update(moussa_json(aam::joint_expect(
          rho, aam::UnitaryMatrix(a), aam::UnitaryMatrix(b))));
    } else {
      throw std::invalid_argument("unknown --op '" + p->op + "'");
    }
    art.json_result(std::move(payload));
  });
}

void register_fcf(CLI::App& app, Registry& reg) {
  struct Params {
    std::string b_grid = "0:3:121";
    int levels = 4;
    int n = 0;
    int m_max = -1;
    std::string route = "direct";
  };
  auto p = std::make_shared<Params>();
  Command& cmd = reg.add(
      app, "fcf",
      "Franck-Condon factors of a displaced truncated oscillator, with the "
      "infinite-dimensional analytic reference");
  cmd.bind("--b-grid", p->b_grid,
           "displacement sweep start:end:count (dimensionless, units of the "
           "oscillator length)");
  cmd.bind("--levels", p->levels,
           "oscillator truncation dimension d (count; power of two for the "
           "circuit route)");
  cmd.bind("--n", p->n, "initial level in the displaced well (count)");
  cmd.bind("--m-max", p->m_max,
           "highest final level emitted (count; -1 means d-1)");
  cmd.bind("--route", p->route,
           "truncated-route evaluator: direct | circuit");
  cmd.on_run([p, &reg](const Artifacts& art) {
    const std::vector<double> grid = parse_grid(p->b_grid);
    const aam::FcfRoute route = aam::fcf_route_from_name(p->route);
    const aam::TruncatedOscillator osc = aam::make_oscillator(p->levels);
    const int m_max = p->m_max < 0 ? p->levels - 1 : p->m_max;
    if (m_max >= p->levels)
      throw std::invalid_argument("--m-max must stay below --levels");
    const long per_b = long(m_max) + 1;
    std::vector<std::string> rows(grid.size() * size_t(per_b));
    parallel_for(long(rows.size()), reg.global.threads, [&](long i) {
      const double b = grid[size_t(i / per_b)];
      const int m = int(i % per_b);
      rows[size_t(i)] = fmt(b) + "," + fmt(m) + "," + fmt(p->n) + "," +
                        fmt(aam::fcf(osc, m, p->n, b, route)) + "," +
                        fmt(aam::fcf_analytic_oracle(m, p->n, b));
    });
    const std::string forbidden =
        "classically forbidden onsets: b = 2 (n = 0), b = 1+sqrt(3) = " +
        fmt(1.0 + std::sqrt(3.0)) + " (n = 1)";
    art.csv({"markers: " + forbidden}, "b,m,n,fcf_truncated,fcf_analytic",
            rows);
    art.recipe({"title: Franck-Condon factors f_mn(b)",
                "file: " + art.csv_name(),
                "x: b [dimensionless]",
                "y: fcf [probability]",
                "series: b vs fcf_truncated, grouped by m",
                "series: b vs fcf_analytic, grouped by m",
                "vline: 2  # classically forbidden onset for n = 0",
                "vline: " + fmt(1.0 + std::sqrt(3.0)) +
                    "  # 1+sqrt(3), onset for n = 1"});
  });
}

void register_contextuality(CLI::App& app, Registry& reg) {
  struct Params {
    std::string l_list = "0,1,2,3";
    std::string beta_grid = "0:pi:41";
    std::string eta_grid = "0:pi:41";
  };
  auto p = std::make_shared<Params>();
  Command& cmd = reg.add(
      app, "contextuality",
      "I = <AB>+<BC>+<CD>-<AD> surfaces over the observable angles, per "
      "oscillator level");
  cmd.bind("--l-list", p->l_list,
           "oscillator levels, comma list of 0..3 (counts)");
  cmd.bind("--beta-grid", p->beta_grid,
           "beta sweep start:end:count (radians; pi fractions accepted)");
  cmd.bind("--eta-grid", p->eta_grid,
           "eta sweep start:end:count (radians; pi fractions accepted)");
  cmd.on_run([p, &reg](const Artifacts& art) {
    const std::vector<double> ls = parse_list(p->l_list);
    const std::vector<double> betas = parse_grid(p->beta_grid);
    const std::vector<double> etas = parse_grid(p->eta_grid);
    std::vector<int> levels;
    for (double l : ls) {
      if (l != std::floor(l) || l < 0 || l > 3)
        throw std::invalid_argument("--l-list entries must be integers 0..3");
      levels.push_back(int(l));
    }
    const long per_l = long(betas.size()) * long(etas.size());
    std::vector<std::string> rows(size_t(per_l) * levels.size());
    parallel_for(long(rows.size()), reg.global.threads, [&](long i) {
      const int l = levels[size_t(i / per_l)];
      const long r = i % per_l;
      const double beta = betas[size_t(r / long(etas.size()))];
      const double eta = etas[size_t(r % long(etas.size()))];
      rows[size_t(i)] = fmt(l) + "," + fmt(beta) + "," + fmt(eta) + "," +
                        fmt(aam::contextuality_I(l, beta, eta));
    });
    art.csv({}, "l,beta,eta,I", rows);
    art.recipe({"title: contextuality witness I(beta, eta)",
                "file: " + art.csv_name(),
                "x: beta [rad]", "y: eta [rad]", "z: I [dimensionless]",
                "surface: beta, eta vs I, one panel per l",
                "plane: 2  # noncontextual bound",
                "plane: " + fmt(2.0 * std::sqrt(2.0)) + "  # quantum bound"});
  });
}

}  // namespace aamcli
