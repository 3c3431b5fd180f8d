// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "coarray/experiments.hpp"
#include "coarray/hybrid.hpp"
#include "coarray/imaging.hpp"
#include "coarray/io.hpp"
#include "coarray/parallel.hpp"

namespace {

using coarray::json;

constexpr int kExitOk = 0;
constexpr int kExitBadConfig = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitVerifyFailed = 3;

struct CommonOpts {
  std::string config;
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 0;
  bool has_seed = false;
  int threads = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool config_required = true) {
  auto* c = cmd->add_option("--config", opts.config, "JSON config file");
  if (config_required) c->required();
  cmd->add_option("--out", opts.out, "output path override");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--seed", opts.seed, "master seed override")
      ->each([&](const std::string&) { opts.has_seed = true; });
  cmd->add_option("--threads", opts.threads, "worker threads (0: COARRAY_THREADS or hardware)");
}

coarray::QuantizationSpec bits_from_json(const json& j) {
  if (!j.contains("b") || j.at("b").is_null() || j.at("b").get<int>() <= 0)
    return coarray::QuantizationSpec::infinite();
  return coarray::QuantizationSpec::finite(j.at("b").get<int>());
}

coarray::SolverConfig solver_from_json(const json& j) {
  coarray::SolverConfig cfg;
  if (!j.contains("solver")) return cfg;
  const json& s = j.at("solver");
  cfg.k_max = s.value("k_max", cfg.k_max);
  cfg.eps_max = s.value("eps_max", cfg.eps_max);
  cfg.eps_rel = s.value("eps_rel", cfg.eps_rel);
  cfg.alpha = s.value("alpha", cfg.alpha);
  return cfg;
}

coarray::TargetSpec target_from_config(const json& j, const coarray::SumCoarray& ca,
                                       std::uint64_t seed) {
  if (!j.contains("target")) return coarray::target_stochastic(ca.n_sigma(), seed);
  const json& t = j.at("target");
  if (t.contains("values")) return coarray::target_from_json(t);
  std::string kind = t.value("kind", std::string("stochastic"));
  if (kind == "stochastic") return coarray::target_stochastic(ca.n_sigma(), seed);
  coarray::WindowKind wk;
  if (kind == "rect") {
    wk = coarray::WindowKind::Rect;
  } else if (kind == "triangular") {
    wk = coarray::WindowKind::Triangular;
  } else if (kind == "hann") {
    wk = coarray::WindowKind::Hann;
  } else if (kind == "chebyshev") {
    wk = coarray::WindowKind::Chebyshev;
  } else {
    throw std::invalid_argument("unknown target kind: " + kind);
  }
  coarray::TargetSpec spec =
      coarray::target_window(wk, ca.n_sigma(), t.value("attenuation_db", 40.0));
  if (t.contains("steer_u")) {
    coarray::Direction dir{t.at("steer_u").get<double>(), t.value("steer_w", 0.0)};
    spec = coarray::steer_target(spec, ca, dir);
  }
  return spec;
}

bool phases_on_lattice(const coarray::RMat& phases, const coarray::QuantizationSpec& bits) {
  if (!bits.is_finite()) return true;
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    double p = phases.data()[i];
    if (coarray::quantize_phase(p, bits) != p) return false;
  }
  return true;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text;
}

json table_to_json(const coarray::ResultTable& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json r;
    for (std::size_t c = 0; c < table.columns.size(); ++c) r[table.columns[c]] = row[c];
    rows.push_back(r);
  }
  return rows;
}

void emit_table(const coarray::ResultTable& table, const CommonOpts& opts) {
  if (opts.format == "json") {
    write_text(opts.out, table_to_json(table).dump(2) + "\n");
  } else {
    write_text(opts.out, table.to_csv());
  }
}

int run_solve(const CommonOpts& opts) {
  json cfg = coarray::read_json_file(opts.config);
  coarray::ArrayGeometry tx = coarray::geometry_from_json(cfg.at("geometry"));
  coarray::ArrayGeometry rx =
      cfg.contains("rx_geometry") ? coarray::geometry_from_json(cfg.at("rx_geometry")) : tx;
  coarray::SumCoarray ca = coarray::sum_coarray(tx, rx);
  coarray::PsfOperator op(coarray::selection_matrix(tx, rx, ca));
  std::uint64_t seed = opts.has_seed ? opts.seed : cfg.value("seed", std::uint64_t{1});
  coarray::TargetSpec target = target_from_config(cfg, ca, seed);

  int q = cfg.value("q", 1);
  std::string arch = cfg.value("architecture", std::string("hybrid"));
  std::string out = !opts.out.empty() ? opts.out : cfg.value("out", std::string("bank.json"));
  coarray::SolverConfig solver = solver_from_json(cfg);
  solver.seed = seed;

  json bank_json;
  double err;
  if (arch == "digital") {
    coarray::AltminResult r = coarray::altmin(op, target.values, q, solver);
    err = std::sqrt(r.final_error) / target.values.norm();
    bank_json = coarray::digital_bank_to_json(r.bank);
  } else if (arch == "hybrid" || arch == "analog") {
    int m = arch == "analog" ? 1 : cfg.value("m", 2);
    coarray::GreedyConfig gcfg;
    gcfg.altmin = solver;
    if (cfg.contains("solver")) gcfg.refine_k_max = cfg.at("solver").value("refine_k_max", 10);
    coarray::GreedyResult r =
        coarray::greedy_main(op, target.values, m, m, bits_from_json(cfg), q, gcfg);
    err = std::sqrt(r.final_error) / target.values.norm();
    if (!phases_on_lattice(r.bank.ft_phase, r.bank.bits) ||
        !phases_on_lattice(r.bank.fr_phase, r.bank.bits))
      throw std::runtime_error("solved bank has off-lattice phases");
    bank_json = coarray::hybrid_bank_to_json(r.bank);
  } else {
    throw std::invalid_argument("unknown architecture: " + arch);
  }
  bank_json["relative_error"] = err;
  bank_json["geometry"] = coarray::geometry_to_json(tx);
  coarray::write_json_file(out, bank_json);
  std::fprintf(stderr, "solve: q=%d relative_error=%.3e -> %s\n", q, err, out.c_str());
  return kExitOk;
}

coarray::DigitalBank load_any_bank(const json& j) {
  if (j.value("kind", std::string()) == "hybrid")
    return coarray::hybrid_bank_from_json(j).collapse();
  return coarray::digital_bank_from_json(j);
}

int run_psf(const CommonOpts& opts) {
  json cfg = coarray::read_json_file(opts.config);
  json bank_json = cfg.contains("bank_file")
                       ? coarray::read_json_file(cfg.at("bank_file").get<std::string>())
                       : cfg.at("bank");
  coarray::ArrayGeometry tx = coarray::geometry_from_json(
      cfg.contains("geometry") ? cfg.at("geometry") : bank_json.at("geometry"));
  coarray::ArrayGeometry rx =
      cfg.contains("rx_geometry") ? coarray::geometry_from_json(cfg.at("rx_geometry")) : tx;
  coarray::DigitalBank bank = load_any_bank(bank_json);
  coarray::SumCoarray ca = coarray::sum_coarray(tx, rx);
  coarray::SelectionMatrix sel = coarray::selection_matrix(tx, rx, ca);

  int points = cfg.value("points", 501);
  coarray::DirectionGrid grid = coarray::uniform_sine_grid(points);
  coarray::CMat a_sigma = coarray::coarray_steering(ca, grid);
  coarray::CVec w_sigma = coarray::coarray_weights(bank.effective(), sel);
  coarray::CVec psf = a_sigma.transpose() * w_sigma;

  coarray::ResultTable table;
  table.columns = {"u", "psf_abs", "psf_re", "psf_im"};
  for (int v = 0; v < grid.count(); ++v)
    table.rows.push_back(
        {grid.directions[v].u, std::abs(psf[v]), psf[v].real(), psf[v].imag()});
  emit_table(table, opts);
  return kExitOk;
}

int run_image(const CommonOpts& opts) {
  json cfg = coarray::read_json_file(opts.config);
  json bank_json = cfg.contains("bank_file")
                       ? coarray::read_json_file(cfg.at("bank_file").get<std::string>())
                       : cfg.at("bank");
  coarray::ArrayGeometry tx = coarray::geometry_from_json(
      cfg.contains("geometry") ? cfg.at("geometry") : bank_json.at("geometry"));
  coarray::ArrayGeometry rx =
      cfg.contains("rx_geometry") ? coarray::geometry_from_json(cfg.at("rx_geometry")) : tx;
  coarray::DigitalBank bank = load_any_bank(bank_json);
  coarray::Scene scene = coarray::scene_from_json(
      cfg.contains("scene_file")
          ? coarray::read_json_file(cfg.at("scene_file").get<std::string>())
          : cfg.at("scene"));
  std::uint64_t seed = opts.has_seed ? opts.seed : cfg.value("seed", std::uint64_t{1});

  coarray::ImagingConfig icfg;
  icfg.threads = coarray::resolve_threads(opts.threads);
  coarray::ImageResult image;
  int rows, cols;
  if (tx.dim == 2) {
    int side = cfg.value("grid", 64);
    image = coarray::form_image(tx, rx, bank, scene, coarray::planar_grid(side), seed, icfg);
    rows = cols = side;
  } else {
    int points = cfg.value("grid", 256);
    image = coarray::form_image(tx, rx, bank, scene, coarray::uniform_sine_grid(points), seed,
                                icfg);
    rows = 1;
    cols = points;
  }
  std::string out = !opts.out.empty() ? opts.out : cfg.value("out", std::string("image"));
  coarray::write_image_binary(out + ".bin", image, rows, cols);
  coarray::write_image_db_csv(out + "_db.csv", image, rows, cols);
  std::fprintf(stderr, "image: %dx%d pixels -> %s{.bin,_db.csv}\n", rows, cols, out.c_str());
  return kExitOk;
}

int run_experiment_cmd(const CommonOpts& opts) {
  json j = coarray::read_json_file(opts.config);
  coarray::ExperimentConfig cfg = coarray::experiment_config_from_json(j);
  if (opts.has_seed) cfg.seed = opts.seed;
  if (opts.threads > 0) cfg.threads = opts.threads;
  if (!opts.out.empty()) cfg.out = opts.out;
  coarray::ResultTable table = coarray::run_experiment(cfg);
  CommonOpts emit = opts;
  emit.out = cfg.out;
  emit_table(table, emit);
  return kExitOk;
}

int run_verify(const CommonOpts& opts) {
  coarray::ExperimentConfig cfg;
  cfg.kind = coarray::ExperimentKind::ClosedformVerify;
  cfg.trials = 50;
  cfg.seed = opts.has_seed ? opts.seed : 7;
  coarray::ResultTable table = coarray::run_experiment(cfg);
  const auto& row = table.rows.front();
  bool ok = row[1] == 0.0 && row[7] == 1.0;
  for (int c = 2; c <= 6; ++c) ok = ok && row[c] <= 1e-10;

  // quantizer and selection-matrix invariants on a fixed spot check
  coarray::ArrayGeometry g = coarray::make_mra(7);
  coarray::SumCoarray ca = coarray::sum_coarray(g, g);
  coarray::SelectionMatrix sel = coarray::selection_matrix(g, g, ca);
  coarray::DirectionGrid grid = coarray::uniform_sine_grid(64);
  coarray::CMat a_eff = coarray::effective_steering(coarray::steering_matrix(g, grid),
                                                    coarray::steering_matrix(g, grid));
  coarray::CMat a_sigma = coarray::coarray_steering(ca, grid);
  coarray::CMat lifted(a_eff.rows(), a_eff.cols());
  for (int m = 0; m < sel.n_cols(); ++m) lifted.row(m) = a_sigma.row(sel.row_of_col[m]);
  ok = ok && (a_eff - lifted).norm() <= 1e-10 * a_eff.norm();
  coarray::QuantizationSpec b3 = coarray::QuantizationSpec::finite(3);
  for (int i = 0; i < 100; ++i) {
    double p = -10.0 + 0.2 * i;
    double q1 = coarray::quantize_phase(p, b3);
    ok = ok && coarray::quantize_phase(q1, b3) == q1;
  }

  if (!opts.out.empty()) emit_table(table, opts);
  std::fprintf(stderr, "verify: %s\n", ok ? "all checks passed" : "FAILED");
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse-array beamforming weight synthesis and imaging"};
  app.require_subcommand(1);

  CommonOpts solve_opts, psf_opts, image_opts, exp_opts, verify_opts;
  add_common(app.add_subcommand("solve", "design one weight bank"), solve_opts);
  add_common(app.add_subcommand("psf", "evaluate a bank's point spread function"), psf_opts);
  add_common(app.add_subcommand("image", "simulate an image from a bank and scene"), image_opts);
  add_common(app.add_subcommand("experiment", "run a config-driven sweep"), exp_opts);
  add_common(app.add_subcommand("verify", "closed-form and invariant self-checks"), verify_opts,
             false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("solve")) return run_solve(solve_opts);
    if (app.got_subcommand("psf")) return run_psf(psf_opts);
    if (app.got_subcommand("image")) return run_image(image_opts);
    if (app.got_subcommand("experiment")) return run_experiment_cmd(exp_opts);
    if (app.got_subcommand("verify")) return run_verify(verify_opts);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBadConfig;
  } catch (const nlohmann::json::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBadConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  }
  return kExitBadConfig;
}
