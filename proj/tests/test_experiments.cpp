// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <map>
#include <string>

#include "coarray/experiments.hpp"

using namespace coarray;
using json = nlohmann::json;

namespace {

std::map<std::string, double> row_map(const ResultTable& t, std::size_t row) {
  std::map<std::string, double> m;
  for (std::size_t c = 0; c < t.columns.size(); ++c) m[t.columns[c]] = t.rows[row][c];
  return m;
}

}  // namespace

TEST_CASE("percentile_nearest_rank") {
  std::vector<double> v{5.0, 1.0, 3.0, 2.0, 4.0};
  CHECK(percentile_nearest_rank(v, 50.0) == 3.0);
  CHECK(percentile_nearest_rank(v, 5.0) == 1.0);
  CHECK(percentile_nearest_rank(v, 95.0) == 5.0);
  CHECK(percentile_nearest_rank(v, 100.0) == 5.0);
  CHECK(percentile_nearest_rank({7.0}, 50.0) == 7.0);
}

TEST_CASE("experiment config parsing and validation") {
  json j{{"kind", "altmin-sweep"},
         {"n_list", {5, 7}},
         {"q_list", {1, 2}},
         {"trials", 4},
         {"seed", 9},
         {"geometry", {{"kind", "ula"}}}};
  ExperimentConfig cfg = experiment_config_from_json(j);
  CHECK(cfg.kind == ExperimentKind::AltminSweep);
  CHECK(cfg.n_list == std::vector<int>{5, 7});
  CHECK(cfg.trials == 4);
  CHECK(cfg.seed == 9);
  CHECK(cfg.geometry.kind == "ula");

  CHECK_THROWS(experiment_config_from_json(json{{"kind", "no-such-sweep"}}));
  CHECK_THROWS(experiment_config_from_json(
      json{{"kind", "altmin-sweep"}, {"trials", 0}}));
  CHECK_THROWS(experiment_config_from_json(
      json{{"kind", "altmin-sweep"}, {"q_list", json::array()}}));
}

TEST_CASE("altmin sweep phase transition rows") {
  json j{{"kind", "altmin-sweep"},
         {"geometry", {{"kind", "ula"}}},
         {"n_list", {11}},
         {"q_list", {1}},
         {"trials", 20},
         {"seed", 3}};
  ResultTable t = run_experiment(experiment_config_from_json(j));
  REQUIRE(t.rows.size() == 1);
  auto row = row_map(t, 0);
  CHECK(row["n"] == 11);
  CHECK(row["q"] == 1);
  CHECK(row["bound"] == 1);
  CHECK(row["failed"] == 0);
  CHECK(row["median"] <= 1e-3);
  CHECK(row["p5"] <= row["median"]);
  CHECK(row["median"] <= row["p95"]);

  // below the bound the error stays high
  json jm{{"kind", "altmin-sweep"},
          {"geometry", {{"kind", "mra"}}},
          {"n_list", {7}},
          {"q_list", {1, 2}},
          {"trials", 20},
          {"seed", 3}};
  ResultTable tm = run_experiment(experiment_config_from_json(jm));
  REQUIRE(tm.rows.size() == 2);
  CHECK(row_map(tm, 0)["median"] >= 1e-1);
  CHECK(row_map(tm, 1)["median"] <= 1e-3);
  CHECK(row_map(tm, 1)["bound"] == 2);
}

TEST_CASE("csv output is deterministic and thread-count independent") {
  json j{{"kind", "greedy-sweep"},
         {"geometry", {{"kind", "mra"}}},
         {"n_list", {5}},
         {"q_list", {1, 2}},
         {"b_list", {3}},
         {"m_list", {2}},
         {"trials", 4},
         {"seed", 11}};
  ExperimentConfig one = experiment_config_from_json(j);
  one.threads = 1;
  ExperimentConfig four = experiment_config_from_json(j);
  four.threads = 4;
  std::string csv1 = run_experiment(one).to_csv();
  std::string csv4 = run_experiment(four).to_csv();
  CHECK(csv1 == csv4);
  CHECK(csv1 == run_experiment(one).to_csv());
  CHECK(csv1.find("n,q,") == 0);
}

TEST_CASE("b-sweep carries the quantized closed-form baseline") {
  json j{{"kind", "b-sweep"},
         {"geometry", {{"kind", "mra"}}},
         {"n_list", {5}},
         {"q_list", {2}},
         {"b_list", {1, 5}},
         {"m_list", {2}},
         {"trials", 6},
         {"seed", 2}};
  ResultTable t = run_experiment(experiment_config_from_json(j));
  REQUIRE(t.rows.size() == 2);
  auto low = row_map(t, 0), high = row_map(t, 1);
  CHECK(low["b"] == 1);
  CHECK(high["b"] == 5);
  REQUIRE(low.count("baseline_median") == 1);
  // the quantized-Theorem-1 baseline improves with more bits
  CHECK(high["baseline_median"] <= low["baseline_median"]);
}

TEST_CASE("psf-plot emits desired and realized traces") {
  json j{{"kind", "psf-plot"},
         {"geometry", {{"kind", "mra"}}},
         {"n_list", {5}},
         {"q_list", {4}},
         {"b_list", {5}},
         {"m_list", {2}},
         {"target", {{"kind", "chebyshev"}, {"attenuation_db", 30.0}}},
         {"seed", 1}};
  ResultTable t = run_experiment(experiment_config_from_json(j));
  REQUIRE(t.rows.size() >= 101);
  auto row = row_map(t, 0);
  REQUIRE(row.count("u") == 1);
  REQUIRE(row.count("desired_abs") == 1);
  REQUIRE(row.count("realized_abs") == 1);
  double max_dev = 0.0, peak = 0.0;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    auto m = row_map(t, r);
    max_dev = std::max(max_dev, std::abs(m["desired_abs"] - m["realized_abs"]));
    peak = std::max(peak, m["desired_abs"]);
  }
  CHECK(max_dev <= 0.2 * peak);  // realized PSF tracks the desired one
}

TEST_CASE("closedform-verify reports exactness") {
  json j{{"kind", "closedform-verify"}, {"trials", 25}, {"seed", 8}};
  ResultTable t = run_experiment(experiment_config_from_json(j));
  REQUIRE(t.rows.size() == 1);
  auto row = row_map(t, 0);
  CHECK(row["failed"] == 0);
  CHECK(row["q_exact"] == 1);
  CHECK(row["thm1_max_err"] <= 1e-10);
  CHECK(row["thm2_max_err"] <= 1e-10);
  CHECK(row["thm3_max_err"] <= 1e-10);
  CHECK(row["thm4_max_err"] <= 1e-10);
  CHECK(row["lemma3_max_err"] <= 1e-10);
}

TEST_CASE("tradeoff sweep closed-form discontinuities at continuous phases") {
  // with B = infinity the exact constructions drop to the digital error at
  // Q = rank (M = 2) and Q = 4 rank (M = 1)
  json j{{"kind", "tradeoff-sweep"},
         {"geometry", {{"kind", "mra"}}},
         {"n_list", {7}},
         {"q_list", {1, 2, 7, 8}},
         {"b_list", {0}},
         {"m_list", {2, 1}},
         {"trials", 10},
         {"seed", 21}};
  ResultTable t = run_experiment(experiment_config_from_json(j));
  std::map<std::pair<int, int>, double> med;  // (m, q) -> median
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    auto m = row_map(t, r);
    med[{int(m["m"]), int(m["q"])}] = m["median"];
  }
  CHECK(med[{2, 1}] >= 1e-1);
  CHECK(med[{2, 2}] <= 1e-6);
  CHECK(med[{1, 7}] >= 1e-1);
  CHECK(med[{1, 8}] <= 1e-6);
}
