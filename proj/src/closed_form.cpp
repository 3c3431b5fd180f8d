// SPDX-License-Identifier: Apache-2.0
#include "coarray/closed_form.hpp"

#include <cmath>
#include <stdexcept>

namespace coarray {

namespace {

RMat phases_to_unit(const RMat& phases, CMat& out) {
  out.resize(phases.rows(), phases.cols());
  for (Eigen::Index j = 0; j < phases.cols(); ++j)
    for (Eigen::Index i = 0; i < phases.rows(); ++i)
      out(i, j) = std::polar(1.0, phases(i, j));
  return phases;
}

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

}  // namespace

CMat HybridBank::ft() const {
  CMat f;
  phases_to_unit(ft_phase, f);
  return f;
}

CMat HybridBank::fr() const {
  CMat f;
  phases_to_unit(fr_phase, f);
  return f;
}

DigitalBank HybridBank::collapse() const {
  DigitalBank bank;
  bank.wt = CMat::Zero(n_t(), q());
  bank.wr = CMat::Zero(n_r(), q());
  CMat f_t = ft(), f_r = fr();
  for (int j = 0; j < q(); ++j) {
    bank.wt.col(j) = f_t.middleCols(static_cast<Eigen::Index>(j) * m_t, m_t) * ct.col(j);
    bank.wr.col(j) = f_r.middleCols(static_cast<Eigen::Index>(j) * m_r, m_r) * cr.col(j);
  }
  return bank;
}

CMat HybridBank::effective() const { return collapse().effective(); }

TwoPhasorFactor lemma1_factor(const CVec& w) {
  const Eigen::Index n = w.size();
  TwoPhasorFactor out;
  out.phases = RMat::Zero(n, 2);
  double winf = w.cwiseAbs().maxCoeff();
  if (winf == 0.0) {
    out.c = CVec::Zero(2);
    return out;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    double ang = std::arg(w[i]);
    double delta = std::acos(clamp01(std::abs(w[i]) / winf));
    out.phases(i, 0) = ang + delta;
    out.phases(i, 1) = ang - delta;
  }
  out.c = CVec::Constant(2, cxd(winf / 2.0, 0.0));
  return out;
}

std::optional<RMat> lemma1_general(const CVec& w, cxd c1, cxd c2) {
  double m1 = std::abs(c1), m2 = std::abs(c2);
  bool swapped = false;
  if (m1 < m2) {
    std::swap(c1, c2);
    std::swap(m1, m2);
    swapped = true;
  }
  RVec mags = w.cwiseAbs();
  if (m1 + m2 < mags.maxCoeff() - 1e-15) return std::nullopt;
  if (m1 - m2 > mags.minCoeff() + 1e-15) return std::nullopt;
  const Eigen::Index n = w.size();
  RMat phases(n, 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    double wm = mags[i];
    if (wm == 0.0) {
      // requires |c1| == |c2|; opposing phasors cancel
      phases(i, 0) = -std::arg(c1);
      phases(i, 1) = kPi - std::arg(c2);
      continue;
    }
    double cos1 = (wm * wm + m1 * m1 - m2 * m2) / (2.0 * wm * m1);
    double cos2 = (wm * wm + m2 * m2 - m1 * m1) / (2.0 * wm * m2);
    double ang = std::arg(w[i]);
    phases(i, 0) = ang - std::arg(c1) + std::acos(std::min(1.0, std::max(-1.0, cos1)));
    phases(i, 1) = ang - std::arg(c2) - std::acos(std::min(1.0, std::max(-1.0, cos2)));
  }
  if (swapped) {
    phases.col(0).swap(phases.col(1));
  }
  return phases;
}

AnalogFactor lemma2_analog(const CVec& w) {
  const Eigen::Index n = w.size();
  AnalogFactor out;
  out.phases = RVec::Zero(n);
  if (w.norm() == 0.0) {
    out.c = 0.0;
    out.value = 0.0;
    return out;
  }
  for (Eigen::Index i = 0; i < n; ++i) out.phases[i] = std::arg(w[i]);
  double l1 = w.cwiseAbs().sum();
  out.c = cxd(l1 / n, 0.0);
  out.value = w.squaredNorm() - l1 * l1 / n;
  return out;
}

HybridBank thm1_hybrid_cont(const DigitalBank& bank) {
  const int q = bank.q();
  HybridBank hb;
  hb.m_t = 2;
  hb.m_r = 2;
  hb.bits = QuantizationSpec::infinite();
  hb.ft_phase = RMat::Zero(bank.wt.rows(), 2 * q);
  hb.fr_phase = RMat::Zero(bank.wr.rows(), 2 * q);
  hb.ct = CMat::Zero(2, q);
  hb.cr = CMat::Zero(2, q);
  for (int j = 0; j < q; ++j) {
    TwoPhasorFactor t = lemma1_factor(bank.wt.col(j));
    TwoPhasorFactor r = lemma1_factor(bank.wr.col(j));
    hb.ft_phase.middleCols(2 * j, 2) = t.phases;
    hb.fr_phase.middleCols(2 * j, 2) = r.phases;
    hb.ct.col(j) = t.c;
    hb.cr.col(j) = r.c;
  }
  return hb;
}

HybridBank thm2_hybrid_1bit(const CMat& w) {
  const int n_r = static_cast<int>(w.rows());
  const int n_t = static_cast<int>(w.cols());
  const int q = n_r * n_t;
  HybridBank hb;
  hb.m_t = 2;
  hb.m_r = 2;
  hb.bits = QuantizationSpec::finite(1);
  hb.ft_phase = RMat::Zero(n_t, 2 * q);
  hb.fr_phase = RMat::Zero(n_r, 2 * q);
  hb.ct = CMat::Zero(2, q);
  hb.cr = CMat::Zero(2, q);
  for (int j = 0; j < q; ++j) {
    int r = j % n_r;
    int t = j / n_r;
    // columns [1, 2 e_n - 1]: second column has phase pi off the unit entry
    hb.ft_phase.col(2 * j + 1).setConstant(kPi);
    hb.ft_phase(t, 2 * j + 1) = 0.0;
    hb.fr_phase.col(2 * j + 1).setConstant(kPi);
    hb.fr_phase(r, 2 * j + 1) = 0.0;
    cxd half_sqrt = std::sqrt(w(r, t)) / 2.0;  // principal branch
    hb.ct.col(j).setConstant(half_sqrt);
    hb.cr.col(j).setConstant(half_sqrt);
  }
  return hb;
}

HybridBank lemma3_flatten(const HybridBank& bank) {
  const int q_in = bank.q();
  const int mm = bank.m_r * bank.m_t;
  HybridBank out;
  out.m_t = 1;
  out.m_r = 1;
  out.bits = bank.bits;
  const int q_out = q_in * mm;
  out.ft_phase = RMat::Zero(bank.n_t(), q_out);
  out.fr_phase = RMat::Zero(bank.n_r(), q_out);
  out.ct = CMat::Zero(1, q_out);
  out.cr = CMat::Zero(1, q_out);
  for (int j = 0; j < q_out; ++j) {
    int qt = j / mm;
    int rem = j % mm;
    int mr = rem / bank.m_t;
    int mt = rem % bank.m_t;
    out.ft_phase.col(j) = bank.ft_phase.col(static_cast<Eigen::Index>(qt) * bank.m_t + mt);
    out.fr_phase.col(j) = bank.fr_phase.col(static_cast<Eigen::Index>(qt) * bank.m_r + mr);
    out.ct(0, j) = bank.ct(mt, qt);
    out.cr(0, j) = bank.cr(mr, qt);
  }
  return out;
}

HybridBank thm3_analog_cont(const DigitalBank& bank) {
  return lemma3_flatten(thm1_hybrid_cont(bank));
}

HybridBank thm4_analog_1bit(const CMat& w) {
  return lemma3_flatten(thm2_hybrid_1bit(w));
}

std::optional<MergedAnalog> remark1_merge(const RMat& f_phases, const CVec& c) {
  if (c.size() != f_phases.cols())
    throw std::invalid_argument("digital weight length must match phase-matrix columns");
  const Eigen::Index m = c.size();
  for (Eigen::Index i = 1; i < m; ++i)
    if (std::abs(c[i] - c[0]) > 1e-14 * std::max(1.0, std::abs(c[0]))) return std::nullopt;
  MergedAnalog out;
  out.phases = RVec(f_phases.size());
  for (Eigen::Index j = 0; j < f_phases.cols(); ++j)
    out.phases.segment(j * f_phases.rows(), f_phases.rows()) = f_phases.col(j);
  out.c = m > 0 ? c[0] : cxd(0.0, 0.0);
  CMat f(f_phases.rows(), f_phases.cols());
  phases_to_unit(f_phases, f);
  out.effective_w = out.c * (f * CVec::Ones(m));
  return out;
}

}  // namespace coarray
