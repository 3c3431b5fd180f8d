// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "coarray/imaging.hpp"

using namespace coarray;

namespace {

CVec random_cvec(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  CVec v(n);
  for (int i = 0; i < n; ++i) v[i] = cxd(g(rng), g(rng));
  return v;
}

}  // namespace

TEST_CASE("scene_rough_surface statistics and determinism") {
  const int k = 100000;
  std::vector<Direction> dirs(k);
  Scene scene = scene_rough_surface(dirs, 42);
  REQUIRE(scene.k() == k);
  CHECK(scene.sigma2 == 1.0);

  double mean = 1.0 / std::sqrt(2.0 * k);
  double se = std::sqrt(1.0 / (4.0 * k)) / std::sqrt(double(k));
  cxd emp = scene.gamma.mean();
  CHECK(std::abs(emp.real() - mean) <= 3 * se);
  CHECK(std::abs(emp.imag()) <= 3 * se);
  // E|gamma|^2 = 1/K
  CHECK(scene.gamma.squaredNorm() / k == doctest::Approx(1.0 / k).epsilon(0.1));

  Scene again = scene_rough_surface(dirs, 42);
  CHECK((again.gamma - scene.gamma).norm() == 0.0);

  Scene empty = scene_rough_surface({}, 1);
  CHECK(empty.k() == 0);
}

TEST_CASE("measure examples") {
  ArrayGeometry g = make_ula(5);
  Direction v = Direction::from_azimuth(0.4);

  // conjugate-matched unit weights on a unit scatterer: coherent sum N_t N_r
  Scene scene;
  scene.sigma2 = 0.0;
  scene.directions.push_back(v);
  scene.gamma = CVec::Ones(1);
  CVec a = steering_vector(g, v);
  cxd y = measure(g, g, scene, a.conjugate(), a.conjugate(), v, 7);
  CHECK(std::abs(y - cxd(25.0, 0.0)) < 1e-10);

  // zero reflectivity, zero noise
  Scene dark = scene;
  dark.gamma = CVec::Zero(1);
  CHECK(std::abs(measure(g, g, dark, a, a, v, 7)) == 0.0);

  // linearity in gamma
  Scene twice = scene;
  twice.gamma *= 2.0;
  CHECK(std::abs(measure(g, g, twice, a, a, v, 7) - 2.0 * measure(g, g, scene, a, a, v, 7)) <
        1e-12);

  // same seed reproduces the same noisy draw, different seeds differ
  Scene noisy = scene;
  noisy.sigma2 = 1.0;
  CHECK(measure(g, g, noisy, a, a, v, 11) == measure(g, g, noisy, a, a, v, 11));
  CHECK(measure(g, g, noisy, a, a, v, 11) != measure(g, g, noisy, a, a, v, 12));

  CHECK_THROWS(measure(g, g, scene, CVec::Ones(3), a, v, 7));
}

TEST_CASE("noiseless image of a unit scatterer samples the PSF") {
  ArrayGeometry g = make_mra(5);
  SumCoarray ca = sum_coarray(g, g);
  SelectionMatrix sel = selection_matrix(g, g, ca);

  DigitalBank bank;
  bank.wt = random_cvec(5, 21);
  bank.wr = random_cvec(5, 22);

  Direction v = Direction::from_azimuth(0.25);
  Scene scene;
  scene.sigma2 = 0.0;
  scene.directions.push_back(v);
  scene.gamma = CVec::Ones(1);

  DirectionGrid grid = uniform_sine_grid(41);
  ImagingConfig cfg;
  cfg.normalize_tx = false;
  ImageResult img = form_image(g, g, bank, scene, grid, 3, cfg);
  REQUIRE(img.values.size() == 41);
  CHECK(img.q == 1);

  // oracle: the co-array PSF evaluated at the shifted coordinate v - u
  CVec w_sigma = coarray_weights(bank.effective(), sel);
  DirectionGrid shifted;
  shifted.dim = 1;
  for (const auto& d : grid.directions) shifted.directions.push_back({v.u - d.u, 0.0});
  CMat a_sigma = coarray_steering(ca, shifted);
  CVec expect = a_sigma.transpose() * w_sigma;
  CHECK((img.values - expect).norm() <= 1e-10 * expect.norm());
}

TEST_CASE("empty scene noise variance matches sigma2 sum ||w_r||^2") {
  ArrayGeometry g = make_ula(4);
  DigitalBank bank;
  bank.wt = CMat::Ones(4, 2);
  bank.wr = CMat::Zero(4, 2);
  bank.wr.col(0) = random_cvec(4, 31);
  bank.wr.col(1) = random_cvec(4, 32);

  Scene scene;  // K = 0, pure noise
  scene.sigma2 = 1.0;

  DirectionGrid grid = uniform_sine_grid(4001);
  ImagingConfig cfg;
  cfg.normalize_tx = false;
  ImageResult img = form_image(g, g, bank, scene, grid, 17, cfg);
  double emp = img.values.squaredNorm() / grid.count();
  double expect = scene.sigma2 * bank.wr.squaredNorm();
  CHECK(emp == doctest::Approx(expect).epsilon(0.1));
}

TEST_CASE("image addition linearity with matched noise seeds") {
  ArrayGeometry g = make_ula(4);
  // split a 3-component bank into two zero-padded halves so the per-(pixel,
  // component) noise seeds of the union run are reproduced exactly
  DigitalBank full;
  full.wt = CMat(4, 3);
  full.wr = CMat(4, 3);
  for (int j = 0; j < 3; ++j) {
    full.wt.col(j) = random_cvec(4, 40 + j);
    full.wr.col(j) = random_cvec(4, 50 + j);
  }
  DigitalBank first = full, second = full;
  first.wt.col(2).setZero();
  first.wr.col(2).setZero();
  second.wt.leftCols(2).setZero();
  second.wr.leftCols(2).setZero();

  Scene scene;
  scene.sigma2 = 1.0;
  scene.directions.push_back(Direction::from_azimuth(0.2));
  scene.gamma = CVec::Ones(1);

  DirectionGrid grid = uniform_sine_grid(33);
  ImagingConfig cfg;
  cfg.normalize_tx = false;
  ImageResult a = form_image(g, g, full, scene, grid, 5, cfg);
  ImageResult b = form_image(g, g, first, scene, grid, 5, cfg);
  ImageResult c = form_image(g, g, second, scene, grid, 5, cfg);
  CHECK((a.values - b.values - c.values).norm() <= 1e-12 * a.values.norm());
}

TEST_CASE("per-pixel solver path matches the fixed-bank path at broadside") {
  ArrayGeometry g = make_ula(3);
  DigitalBank bank;
  bank.wt = random_cvec(3, 61);
  bank.wr = random_cvec(3, 62);

  Scene scene;
  scene.sigma2 = 0.5;
  scene.directions.push_back(Direction::from_azimuth(-0.3));
  scene.gamma = CVec::Ones(1);

  DirectionGrid grid = uniform_sine_grid(15);
  ImagingConfig cfg;
  cfg.normalize_tx = false;
  ImageResult fixed = form_image(g, g, bank, scene, grid, 9, cfg);
  // solver that replicates the steering of the fixed-bank path
  PixelBankSolver solver = [&](int, const Direction& dir) {
    DigitalBank b = bank;
    RVec x = g.coords_x();
    for (int i = 0; i < 3; ++i) {
      cxd ramp = std::polar(1.0, -kPi * x[i] * dir.u);
      b.wt.row(i) *= ramp;
      b.wr.row(i) *= ramp;
    }
    return b;
  };
  ImageResult solved = form_image(g, g, solver, scene, grid, 9, cfg);
  CHECK((fixed.values - solved.values).norm() <= 1e-12 * fixed.values.norm());

  CHECK_THROWS(form_image(g, g, PixelBankSolver(), scene, grid, 9, cfg));
}

TEST_CASE("imaging is deterministic across thread counts") {
  ArrayGeometry g = make_mra(4);
  DigitalBank bank;
  bank.wt = random_cvec(4, 71);
  bank.wr = random_cvec(4, 72);
  Scene scene;
  scene.sigma2 = 1.0;
  scene.directions.push_back(Direction::from_azimuth(0.1));
  scene.gamma = CVec::Ones(1);
  DirectionGrid grid = uniform_sine_grid(64);

  ImagingConfig one;
  one.threads = 1;
  ImagingConfig four;
  four.threads = 4;
  ImageResult a = form_image(g, g, bank, scene, grid, 13, one);
  ImageResult b = form_image(g, g, bank, scene, grid, 13, four);
  CHECK((a.values - b.values).norm() == 0.0);
}
