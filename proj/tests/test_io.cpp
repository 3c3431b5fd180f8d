// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "coarray/io.hpp"

using namespace coarray;

namespace {

CMat random_cmat(int rows, int cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  CMat m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = cxd(g(rng), g(rng));
  return m;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/coarray_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("geometry json round trip") {
  for (auto g : {make_ula(4), make_mra(7), make_boundary(3)}) {
    ArrayGeometry back = geometry_from_json(geometry_to_json(g));
    CHECK(back.positions == g.positions);
    CHECK(back.dim == g.dim);
    CHECK(back.label == g.label);
  }
  CHECK_THROWS(geometry_from_json(json{{"label", "ula"}}));  // no positions
}

TEST_CASE("grid and target json round trips") {
  DirectionGrid grid = uniform_sine_grid(9);
  DirectionGrid back = grid_from_json(grid_to_json(grid));
  REQUIRE(back.count() == 9);
  for (int i = 0; i < 9; ++i) CHECK(back.directions[i].u == grid.directions[i].u);

  TargetSpec t = target_stochastic(13, 3);
  TargetSpec tb = target_from_json(target_to_json(t));
  CHECK(tb.domain == t.domain);
  CHECK((tb.values - t.values).norm() == 0.0);
}

TEST_CASE("digital bank json round trip") {
  DigitalBank bank;
  bank.wt = random_cmat(5, 3, 1);
  bank.wr = random_cmat(4, 3, 2);
  DigitalBank back = digital_bank_from_json(digital_bank_to_json(bank));
  CHECK((back.wt - bank.wt).norm() == 0.0);
  CHECK((back.wr - bank.wr).norm() == 0.0);
}

TEST_CASE("hybrid bank json round trip is bit-exact for finite B") {
  CMat w = random_cmat(5, 5, 7);
  HybridBank h = thm2_hybrid_1bit(w);
  json j = hybrid_bank_to_json(h);
  // finite depths serialize integer lattice indices
  CHECK(j.at("bits").get<int>() == 1);
  HybridBank back = hybrid_bank_from_json(j);
  CHECK((back.ft_phase - h.ft_phase).cwiseAbs().maxCoeff() == 0.0);
  CHECK((back.fr_phase - h.fr_phase).cwiseAbs().maxCoeff() == 0.0);
  CHECK((back.ct - h.ct).norm() == 0.0);
  CHECK((back.cr - h.cr).norm() == 0.0);
  CHECK(back.m_t == h.m_t);
  CHECK(back.bits.bits == 1);

  // continuous phases round trip as raw doubles
  HybridBank cont = thm1_hybrid_cont(svd_factorize(w, 2));
  HybridBank cb = hybrid_bank_from_json(hybrid_bank_to_json(cont));
  CHECK_FALSE(cb.bits.is_finite());
  CHECK((cb.ft_phase - cont.ft_phase).cwiseAbs().maxCoeff() == 0.0);
  CHECK((cb.effective() - cont.effective()).norm() == 0.0);
}

TEST_CASE("scene json round trip") {
  Scene scene;
  scene.sigma2 = 0.25;
  scene.directions = {{0.1, -0.2}, {0.3, 0.4}};
  scene.gamma = random_cmat(2, 1, 9).col(0);
  Scene back = scene_from_json(scene_to_json(scene));
  CHECK(back.sigma2 == scene.sigma2);
  REQUIRE(back.k() == 2);
  CHECK(back.directions[1].u == scene.directions[1].u);
  CHECK(back.directions[1].w == scene.directions[1].w);
  CHECK((back.gamma - scene.gamma).norm() == 0.0);
}

TEST_CASE("json file io") {
  TempFile f("roundtrip.json");
  json j = geometry_to_json(make_mra(6));
  write_json_file(f.path, j);
  CHECK(read_json_file(f.path) == j);
  CHECK_THROWS(read_json_file("/tmp/coarray_test_does_not_exist.json"));
}

TEST_CASE("error trace csv format") {
  TempFile f("trace.csv");
  write_error_trace_csv(f.path, {1.0, 0.25, 0.03125});
  std::ifstream in(f.path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "iteration,squared_error");
  std::getline(in, line);
  CHECK(line == "1,1");  // iterations are 1-based
  int rows = 1;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 3);
}

TEST_CASE("image binary and dB csv outputs") {
  ImageResult img;
  img.grid = uniform_sine_grid(4);
  img.values = CVec(4);
  img.values << cxd(1, 0), cxd(0, 0.5), cxd(0.25, 0), cxd(0, 0);
  img.q = 1;

  TempFile bin("image.bin");
  write_image_binary(bin.path, img, 2, 2);
  std::ifstream in(bin.path, std::ios::binary);
  std::int32_t rows = 0, cols = 0;
  in.read(reinterpret_cast<char*>(&rows), 4);
  in.read(reinterpret_cast<char*>(&cols), 4);
  CHECK(rows == 2);
  CHECK(cols == 2);
  double re = 0, im = 0;
  in.read(reinterpret_cast<char*>(&re), 8);
  in.read(reinterpret_cast<char*>(&im), 8);
  CHECK(re == 1.0);
  CHECK(im == 0.0);

  TempFile csv("image_db.csv");
  write_image_db_csv(csv.path, img, 2, 2);
  std::ifstream cin(csv.path);
  std::string l1, l2;
  std::getline(cin, l1);
  std::getline(cin, l2);
  // peak-normalized: first pixel 0 dB; -6.02 dB; -12.04 dB; floor -60 dB
  std::stringstream row1(l1);
  double a = 0, b = 0;
  char comma = 0;
  row1 >> a >> comma >> b;
  CHECK(a == doctest::Approx(0.0));
  CHECK(b == doctest::Approx(-6.0206).epsilon(1e-3));
  std::stringstream row2(l2);
  row2 >> a >> comma >> b;
  CHECK(a == doctest::Approx(-12.0412).epsilon(1e-3));
  CHECK(b == doctest::Approx(-60.0));
}
