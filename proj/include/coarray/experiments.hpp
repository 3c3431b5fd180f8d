// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coarray/geometry.hpp"
#include "coarray/hybrid.hpp"
#include "coarray/steering.hpp"

namespace coarray {

enum class ExperimentKind {
  AltminSweep,    // digital error over N x Q grids
  GreedySweep,    // hybrid error over Q x N at fixed B, M
  BSweep,         // error vs B per Q, with the quantized closed-form baseline
  PsfPlot,        // realized vs desired PSF traces on a dense angle grid
  TradeoffSweep,  // error vs Q per M at a list of bit depths
  PlanarImaging,  // 2-D per-pixel imaging run
  ClosedformVerify
};

ExperimentKind experiment_kind_from_string(const std::string& s);
std::string to_string(ExperimentKind kind);

struct GeometrySpec {
  std::string kind = "mra";  // ula | mra | ura | boundary | custom
  int n = 7;                 // element count (linear) or side (planar)
  std::vector<LatticePoint> positions;  // custom only
  int dim = 1;

  ArrayGeometry build() const;
  ArrayGeometry build(int n_override) const;
};

struct TargetConfig {
  std::string kind = "stochastic";  // stochastic | rect | triangular | hann | chebyshev
  double attenuation_db = 40.0;
  bool steer = false;  // steer deterministic windows across trials
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::AltminSweep;
  GeometrySpec geometry;
  TargetConfig target;
  std::vector<int> n_list;  // geometry sizes (empty: geometry.n only)
  std::vector<int> q_list{1};
  std::vector<int> b_list;  // 0 = continuous phases
  std::vector<int> m_list{2};
  int trials = 20;
  std::uint64_t seed = 1;
  SolverConfig solver;
  int refine_k_max = 10;
  int threads = 0;  // 0: COARRAY_THREADS or hardware
  std::string out;

  // planar-imaging only
  int planar_side = 8;
  int grid_side = 64;
  double sigma2 = 1.0;
  double scatterer_u = 0.25;
  double scatterer_w = -0.125;
  int rough_k = 0;
  double cheb_db = 40.0;
};

ExperimentConfig experiment_config_from_json(const nlohmann::json& j);

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Fixed %.12g formatting; byte-identical for identical inputs.
  std::string to_csv() const;
};

/// Nearest-rank percentile on a copy of the samples (p in [0, 100]).
double percentile_nearest_rank(std::vector<double> samples, double p);

ResultTable run_experiment(const ExperimentConfig& cfg);

}  // namespace coarray
