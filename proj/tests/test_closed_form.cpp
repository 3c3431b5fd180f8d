// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "coarray/closed_form.hpp"

using namespace coarray;

namespace {

CMat random_cmat(int rows, int cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  CMat m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = cxd(g(rng), g(rng));
  return m;
}

CVec random_cvec(int n, unsigned seed) { return random_cmat(n, 1, seed).col(0); }

CVec two_phasor_apply(const RMat& phases, const CVec& c) {
  CVec out = CVec::Zero(phases.rows());
  for (int m = 0; m < phases.cols(); ++m)
    for (int n = 0; n < phases.rows(); ++n)
      out[n] += c[m] * std::exp(cxd(0.0, phases(n, m)));
  return out;
}

}  // namespace

TEST_CASE("lemma1_factor hand examples") {
  CVec w(2);
  w << cxd(1, 0), cxd(0, 1);
  TwoPhasorFactor f = lemma1_factor(w);
  CHECK(f.phases(0, 0) == doctest::Approx(0.0));
  CHECK(f.phases(0, 1) == doctest::Approx(0.0));
  CHECK(f.phases(1, 0) == doctest::Approx(kPi / 2));
  CHECK(f.phases(1, 1) == doctest::Approx(kPi / 2));
  CHECK(std::abs(f.c[0] - cxd(0.5, 0)) < 1e-15);
  CHECK(std::abs(f.c[1] - cxd(0.5, 0)) < 1e-15);
  CHECK((two_phasor_apply(f.phases, f.c) - w).norm() < 1e-14);

  CVec w2(2);
  w2 << cxd(2, 0), cxd(1, 0);
  TwoPhasorFactor f2 = lemma1_factor(w2);
  CHECK(std::abs(f2.phases(1, 0)) == doctest::Approx(kPi / 3));
  CHECK(std::abs(f2.phases(1, 1)) == doctest::Approx(kPi / 3));
  CHECK(f2.phases(1, 0) == doctest::Approx(-f2.phases(1, 1)));
  CHECK((two_phasor_apply(f2.phases, f2.c) - w2).norm() < 1e-14);
}

TEST_CASE("lemma1_factor is exact for random vectors") {
  for (int s = 0; s < 50; ++s) {
    CVec w = random_cvec(1 + s % 9, 100 + s);
    TwoPhasorFactor f = lemma1_factor(w);
    CHECK((two_phasor_apply(f.phases, f.c) - w).norm() <= 1e-12 * w.norm());
    CHECK(std::abs(f.c[0]) == doctest::Approx(w.cwiseAbs().maxCoeff() / 2));
  }
}

TEST_CASE("lemma1_general feasibility and exactness") {
  CVec w(2);
  w << cxd(1, 0), cxd(1, 0);
  auto feasible = lemma1_general(w, cxd(1, 0), cxd(0.5, 0));
  REQUIRE(feasible.has_value());
  CVec c(2);
  c << cxd(1, 0), cxd(0.5, 0);
  CHECK((two_phasor_apply(*feasible, c) - w).norm() < 1e-12);

  CVec bad(2);
  bad << cxd(1, 0), cxd(0.1, 0);
  CHECK_FALSE(lemma1_general(bad, cxd(1, 0), cxd(0.5, 0)).has_value());

  // c1 = c2 = ||w||_inf / 2 reduces to lemma1_factor
  CVec w3 = random_cvec(5, 7);
  cxd half = w3.cwiseAbs().maxCoeff() / 2.0;
  auto same = lemma1_general(w3, half, half);
  REQUIRE(same.has_value());
  CVec ch(2);
  ch << half, half;
  CHECK((two_phasor_apply(*same, ch) - w3).norm() < 1e-12 * w3.norm());
}

TEST_CASE("lemma1_general feasibility region property") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> unif(0.0, 2.0);
  int feasible_seen = 0, infeasible_seen = 0;
  for (int t = 0; t < 400; ++t) {
    CVec w = random_cvec(4, 2000 + t);
    cxd c1 = std::polar(unif(rng), unif(rng));
    cxd c2 = std::polar(unif(rng), unif(rng));
    double hi = w.cwiseAbs().maxCoeff(), lo = w.cwiseAbs().minCoeff();
    bool cond = std::abs(c1) + std::abs(c2) >= hi &&
                std::abs(std::abs(c1) - std::abs(c2)) <= lo;
    auto res = lemma1_general(w, c1, c2);
    CHECK(res.has_value() == cond);
    if (res) {
      CVec c(2);
      c << c1, c2;
      CHECK((two_phasor_apply(*res, c) - w).norm() < 1e-10 * w.norm());
      ++feasible_seen;
    } else {
      ++infeasible_seen;
    }
  }
  CHECK(feasible_seen > 20);
  CHECK(infeasible_seen > 20);
}

TEST_CASE("lemma2_analog") {
  CVec w(2);
  w << cxd(1, 0), cxd(-1, 0);
  AnalogFactor f = lemma2_analog(w);
  CHECK(std::abs(f.c - cxd(1, 0)) < 1e-15);
  CHECK(f.value == doctest::Approx(0.0));
  CHECK(std::exp(cxd(0, f.phases[1])).real() == doctest::Approx(-1.0));

  CVec w2(2);
  w2 << cxd(2, 0), cxd(0, 0);
  AnalogFactor f2 = lemma2_analog(w2);
  CHECK(std::abs(f2.c) == doctest::Approx(1.0));
  CHECK(f2.value == doctest::Approx(2.0));

  CVec w3 = CVec::Ones(3);
  CHECK(lemma2_analog(w3).value == doctest::Approx(0.0));

  // optimal value law over random vectors
  for (int s = 0; s < 100; ++s) {
    CVec w4 = random_cvec(2 + s % 7, 300 + s);
    AnalogFactor f4 = lemma2_analog(w4);
    double expect =
        w4.squaredNorm() - std::pow(w4.cwiseAbs().sum(), 2) / double(w4.size());
    CHECK(f4.value == doctest::Approx(expect).epsilon(1e-12));
    // achieved error matches the claimed optimum
    CVec achieved(w4.size());
    for (int n = 0; n < w4.size(); ++n)
      achieved[n] = f4.c * std::exp(cxd(0, f4.phases[n]));
    CHECK((w4 - achieved).squaredNorm() == doctest::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("thm1_hybrid_cont") {
  CMat w1 = random_cvec(7, 1) * random_cvec(7, 2).transpose();
  HybridBank h1 = thm1_hybrid_cont(svd_factorize(w1));
  CHECK(h1.q() == 1);
  CHECK(h1.m_t == 2);
  CHECK(h1.m_r == 2);
  CHECK_FALSE(h1.bits.is_finite());
  CHECK((h1.effective() - w1).norm() <= 1e-12 * w1.norm());

  CMat w3 = random_cmat(7, 3, 3) * random_cmat(3, 7, 4);
  HybridBank h3 = thm1_hybrid_cont(svd_factorize(w3, 3));
  CHECK(h3.q() == 3);
  CHECK((h3.effective() - w3).norm() <= 1e-12 * w3.norm());
}

TEST_CASE("thm2_hybrid_1bit") {
  CMat w1(1, 1);
  w1 << cxd(3, 0);
  HybridBank h1 = thm2_hybrid_1bit(w1);
  CHECK(h1.q() == 1);
  CHECK((h1.effective() - w1).norm() < 1e-14);

  CMat ones = CMat::Ones(2, 2);
  HybridBank h4 = thm2_hybrid_1bit(ones);
  CHECK(h4.q() == 4);
  CHECK((h4.effective() - ones).norm() < 1e-12);

  CMat w = random_cmat(3, 2, 5);
  HybridBank h = thm2_hybrid_1bit(w);
  CHECK(h.q() == 6);
  CHECK(h.bits.bits == 1);
  CHECK((h.effective() - w).norm() <= 1e-12 * w.norm());
  for (Eigen::Index i = 0; i < h.ft_phase.size(); ++i) {
    double p = h.ft_phase.data()[i];
    CHECK((std::abs(p) < 1e-14 || std::abs(p - kPi) < 1e-14));
  }
}

TEST_CASE("lemma3_flatten index maps and identity") {
  // M = 1 input: identity transform
  CMat w1 = random_cvec(4, 11) * random_cvec(4, 12).transpose();
  HybridBank analog;
  analog.m_t = analog.m_r = 1;
  analog.ft_phase = RMat::Zero(4, 1);
  analog.fr_phase = RMat::Zero(4, 1);
  analog.ct = CMat::Ones(1, 1);
  analog.cr = CMat::Ones(1, 1);
  HybridBank same = lemma3_flatten(analog);
  CHECK(same.q() == 1);
  CHECK((same.effective() - analog.effective()).norm() < 1e-14);

  // M_t = M_r = 2, Q = 1: flattened images enumerate (m_r, m_t) pairs with
  // m_t fast, per the 0-based index map q -> (q / 4, (q % 4) / 2, (q % 4) % 2)
  CMat w = random_cmat(5, 5, 13);
  HybridBank h = thm1_hybrid_cont(svd_factorize(w, 1));
  HybridBank flat = lemma3_flatten(h);
  CHECK(flat.q() == 4);
  CHECK(flat.m_t == 1);
  CHECK(flat.m_r == 1);
  for (int q = 0; q < 4; ++q) {
    int m_r = (q % 4) / 2, m_t = (q % 4) % 2;
    CHECK((flat.ft_phase.col(q) - h.ft_phase.col(m_t)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((flat.fr_phase.col(q) - h.fr_phase.col(m_r)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(std::abs(flat.ct(0, q) - h.ct(m_t, 0)) < 1e-15);
    CHECK(std::abs(flat.cr(0, q) - h.cr(m_r, 0)) < 1e-15);
  }
  CHECK((flat.effective() - h.effective()).norm() <= 1e-12 * h.effective().norm());
}

TEST_CASE("thm3_analog_cont") {
  CMat w1 = random_cvec(6, 21) * random_cvec(6, 22).transpose();
  HybridBank a1 = thm3_analog_cont(svd_factorize(w1));
  CHECK(a1.q() == 4);
  CHECK(a1.m_t == 1);
  CHECK(a1.m_r == 1);
  CHECK((a1.effective() - w1).norm() <= 1e-12 * w1.norm());

  CMat w2 = random_cmat(5, 2, 23) * random_cmat(2, 5, 24);
  HybridBank a2 = thm3_analog_cont(svd_factorize(w2, 2));
  CHECK(a2.q() == 8);
  CHECK((a2.effective() - w2).norm() <= 1e-12 * w2.norm());
}

TEST_CASE("thm4_analog_1bit") {
  CMat w1(1, 1);
  w1 << cxd(4, 0);
  HybridBank a1 = thm4_analog_1bit(w1);
  CHECK(a1.q() == 4);
  CHECK(std::abs(a1.effective()(0, 0) - cxd(4, 0)) < 1e-12);

  CMat w2 = random_cmat(2, 1, 31);
  HybridBank a2 = thm4_analog_1bit(w2);
  CHECK(a2.q() == 8);
  CHECK((a2.effective() - w2).norm() <= 1e-12 * w2.norm());

  CMat w = random_cmat(3, 3, 32);
  HybridBank a = thm4_analog_1bit(w);
  CHECK(a.q() == 36);
  CHECK(a.bits.bits == 1);
  CHECK((a.effective() - w).norm() <= 1e-12 * w.norm());
  CMat ft = a.ft(), fr = a.fr();
  for (Eigen::Index i = 0; i < ft.size(); ++i) {
    CHECK(std::abs(ft.data()[i].imag()) < 1e-14);
    CHECK(std::abs(std::abs(ft.data()[i].real()) - 1.0) < 1e-14);
  }
  for (Eigen::Index i = 0; i < fr.size(); ++i)
    CHECK(std::abs(std::abs(fr.data()[i].real()) - 1.0) < 1e-14);
}

TEST_CASE("table III Q accounting") {
  CMat w = random_cmat(6, 4, 77) * random_cmat(4, 5, 78);  // rank 4, 6x5
  DigitalBank d = svd_factorize(w, 4);
  CHECK(thm1_hybrid_cont(d).q() == 4);
  CHECK(thm2_hybrid_1bit(w).q() == 30);
  CHECK(thm3_analog_cont(d).q() == 16);
  CHECK(thm4_analog_1bit(w).q() == 120);
}

TEST_CASE("remark1_merge") {
  CVec w = random_cvec(5, 81);
  TwoPhasorFactor f = lemma1_factor(w);
  auto merged = remark1_merge(f.phases, f.c);
  REQUIRE(merged.has_value());
  CHECK(merged->phases.size() == 10);
  CHECK((merged->effective_w - w).norm() < 1e-12 * w.norm());

  CVec bad(2);
  bad << cxd(1, 0), cxd(2, 0);
  CHECK_FALSE(remark1_merge(f.phases, bad).has_value());

  // M = 1 input is trivially eligible
  RMat one = RMat::Zero(3, 1);
  CVec c1(1);
  c1 << cxd(2, 1);
  auto m1 = remark1_merge(one, c1);
  REQUIRE(m1.has_value());
  CHECK((m1->effective_w - CVec::Constant(3, cxd(2, 1))).norm() < 1e-14);
}
