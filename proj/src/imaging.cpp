// SPDX-License-Identifier: Apache-2.0
#include "coarray/imaging.hpp"

#include <cmath>
#include <atomic>
#include <random>
#include <stdexcept>

#include "coarray/parallel.hpp"

namespace coarray {

namespace {

CVec draw_noise(int n, double sigma2, std::uint64_t seed) {
  CVec out(n);
  if (sigma2 == 0.0) {
    out.setZero();
    return out;
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, std::sqrt(sigma2 / 2.0));
  for (int i = 0; i < n; ++i) {
    double re = gauss(rng);
    double im = gauss(rng);
    out[i] = cxd(re, im);
  }
  return out;
}

// Steer a broadside weight vector: per-element phase ramp exp(-j pi d . dir).
CVec steer_weights(const CVec& w, const ArrayGeometry& geom, const Direction& dir) {
  CVec out(w.size());
  RVec x = geom.coords_x();
  RVec z = geom.coords_z();
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    double phase = -kPi * x[i] * dir.u;
    if (geom.dim == 2) phase -= kPi * z[i] * dir.w;
    out[i] = w[i] * std::polar(1.0, phase);
  }
  return out;
}

struct PixelKernel {
  CMat at;  // N_t x K steering at scene scatterers
  CMat ar;  // N_r x K

  // Signal term: sum_k gamma_k (a_t,k^T w_t)(a_r,k^T w_r).
  cxd signal(const Scene& scene, const CVec& wt, const CVec& wr) const {
    if (scene.k() == 0) return 0.0;
    CVec bt = at.transpose() * wt;
    CVec br = ar.transpose() * wr;
    return (scene.gamma.array() * bt.array() * br.array()).sum();
  }
};

cxd measure_kernel(const PixelKernel& kern, const Scene& scene, const CVec& wt,
                   const CVec& wr, std::uint64_t seed) {
  cxd y = kern.signal(scene, wt, wr);
  if (scene.sigma2 > 0.0) {
    CVec n = draw_noise(static_cast<int>(wr.size()), scene.sigma2, seed);
    y += wr.cwiseProduct(n).sum();  // w_r^T n, no conjugation
  }
  return y;
}

DigitalBank prepare_bank(DigitalBank bank, const ImagingConfig& cfg) {
  if (cfg.normalize_tx) normalize_tx(bank);
  if (cfg.tx_power != 1.0) bank.wt *= std::sqrt(cfg.tx_power);
  return bank;
}

}  // namespace

Scene scene_rough_surface(const std::vector<Direction>& directions, std::uint64_t seed,
                          double sigma2) {
  Scene scene;
  scene.directions = directions;
  scene.sigma2 = sigma2;
  const int k = static_cast<int>(directions.size());
  scene.gamma = CVec::Zero(k);
  if (k == 0) return scene;
  std::mt19937_64 rng(seed);
  const double mean = 1.0 / std::sqrt(2.0 * k);
  std::normal_distribution<double> gauss(0.0, std::sqrt(1.0 / (4.0 * k)));
  for (int i = 0; i < k; ++i) scene.gamma[i] = cxd(mean + gauss(rng), gauss(rng));
  return scene;
}

cxd measure(const ArrayGeometry& tx, const ArrayGeometry& rx, const Scene& scene,
            const CVec& wt, const CVec& wr, const Direction& dir, std::uint64_t seed,
            GainPattern gain) {
  (void)dir;
  if (wt.size() != tx.size() || wr.size() != rx.size())
    throw std::invalid_argument("weight lengths must match the array sizes");
  PixelKernel kern;
  DirectionGrid pts{scene.directions, tx.dim};
  kern.at = steering_matrix(tx, pts, gain);
  kern.ar = steering_matrix(rx, pts, gain);
  return measure_kernel(kern, scene, wt, wr, seed);
}

ImageResult form_image(const ArrayGeometry& tx, const ArrayGeometry& rx,
                       const DigitalBank& bank, const Scene& scene, const DirectionGrid& grid,
                       std::uint64_t seed, const ImagingConfig& cfg) {
  DigitalBank base = prepare_bank(bank, cfg);
  const int q = base.q();
  ImageResult res;
  res.grid = grid;
  res.q = q;
  res.values = CVec::Zero(grid.count());

  PixelKernel kern;
  DirectionGrid pts{scene.directions, tx.dim};
  kern.at = steering_matrix(tx, pts, cfg.gain);
  kern.ar = steering_matrix(rx, pts, cfg.gain);

  parallel_for(grid.count(), cfg.threads, [&](int p) {
    const Direction& dir = grid.directions[p];
    cxd acc = 0.0;
    for (int j = 0; j < q; ++j) {
      CVec wt = steer_weights(base.wt.col(j), tx, dir);
      CVec wr = steer_weights(base.wr.col(j), rx, dir);
      std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(p) * q + j);
      acc += measure_kernel(kern, scene, wt, wr, s);
    }
    res.values[p] = acc;
  });
  return res;
}

ImageResult form_image(const ArrayGeometry& tx, const ArrayGeometry& rx,
                       const PixelBankSolver& solver, const Scene& scene,
                       const DirectionGrid& grid, std::uint64_t seed, const ImagingConfig& cfg) {
  if (!solver) throw std::invalid_argument("missing per-pixel bank solver");
  ImageResult res;
  res.grid = grid;
  res.values = CVec::Zero(grid.count());
  res.q = 0;

  PixelKernel kern;
  DirectionGrid pts{scene.directions, tx.dim};
  kern.at = steering_matrix(tx, pts, cfg.gain);
  kern.ar = steering_matrix(rx, pts, cfg.gain);

  std::atomic<int> q_seen{0};
  parallel_for(grid.count(), cfg.threads, [&](int p) {
    const Direction& dir = grid.directions[p];
    DigitalBank bank = prepare_bank(solver(p, dir), cfg);
    if (bank.wt.rows() != tx.size() || bank.wr.rows() != rx.size())
      throw std::invalid_argument("per-pixel bank shape mismatch");
    int q = bank.q();
    q_seen.store(q);
    cxd acc = 0.0;
    for (int j = 0; j < q; ++j) {
      std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(p) * q + j);
      acc += measure_kernel(kern, scene, bank.wt.col(j), bank.wr.col(j), s);
    }
    res.values[p] = acc;
  });
  res.q = q_seen.load();
  return res;
}

}  // namespace coarray
