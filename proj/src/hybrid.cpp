// SPDX-License-Identifier: Apache-2.0
#include "coarray/hybrid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace coarray {

namespace {

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

CMat unit(const RMat& phases) {
  CMat f(phases.rows(), phases.cols());
  for (Eigen::Index j = 0; j < phases.cols(); ++j)
    for (Eigen::Index i = 0; i < phases.rows(); ++i) f(i, j) = std::polar(1.0, phases(i, j));
  return f;
}

// A^T ((W_t kron 1^T_{M_r}) kr F_r): column j = w_{t, j / M_r} kron f_{r,j}.
CMat lhs_update_cr(const PsfOperator& op, const CMat& wt_cur, const CMat& fr, int m_r) {
  const Eigen::Index k = fr.cols();
  CMat lt(op.n_t(), k);
  for (Eigen::Index j = 0; j < k; ++j) lt.col(j) = wt_cur.col(j / m_r);
  return op.project_kr(lt, fr);
}

// A^T (F_t kr (W_r kron 1^T_{M_t})): column j = f_{t,j} kron w_{r, j / M_t}.
CMat lhs_update_ct(const PsfOperator& op, const CMat& wr_cur, const CMat& ft, int m_t) {
  const Eigen::Index k = ft.cols();
  CMat rr(op.n_r(), k);
  for (Eigen::Index j = 0; j < k; ++j) rr.col(j) = wr_cur.col(j / m_t);
  return op.project_kr(ft, rr);
}

}  // namespace

GreedySubResult greedy_sub(const CVec& w, int m, const QuantizationSpec& bits, double alpha) {
  if (m < 1) throw std::invalid_argument("front-end count must be positive");
  const Eigen::Index n = w.size();
  GreedySubResult res;
  res.f_phase = RMat::Zero(n, m);
  res.c = CVec::Zero(m);
  if (w.norm() == 0.0) return res;  // degenerate: zero phases, zero weights

  CVec residual = w;
  CMat f = CMat::Ones(n, 0);
  for (int pair = 0; pair < m / 2; ++pair) {
    double rinf = residual.cwiseAbs().maxCoeff();
    RMat phi(n, 2);
    if (rinf == 0.0) {
      phi.setZero();
    } else {
      for (Eigen::Index i = 0; i < n; ++i) {
        double ang = std::arg(residual[i]);
        double delta = std::acos(clamp01(std::abs(residual[i]) / rinf));
        phi(i, 0) = ang + delta;
        phi(i, 1) = ang - delta;
      }
    }
    phi = quantize_phase(phi, bits);
    res.f_phase.middleCols(2 * pair, 2) = phi;
    f.conservativeResize(n, 2 * (pair + 1));
    f.rightCols(2) = unit(phi);
    res.c.head(f.cols()) = lstsq_regularized(f, w, alpha);
    residual = w - f * res.c.head(f.cols());
  }
  if (m % 2 == 1) {
    RVec phi(n);
    for (Eigen::Index i = 0; i < n; ++i) phi[i] = std::arg(residual[i]);
    RMat q = quantize_phase(phi, bits);
    res.f_phase.col(m - 1) = q;
    CMat full = unit(res.f_phase);
    res.c = lstsq_regularized(full, w, alpha);
  }
  return res;
}

double refine_digital(const PsfOperator& op, const CVec& target, HybridBank& bank,
                      int k_max, double eps_max, double alpha) {
  const int q = bank.q();
  CMat ft = bank.ft(), fr = bank.fr();
  double err = std::numeric_limits<double>::infinity();
  for (int k = 0; k < k_max && err > eps_max; ++k) {
    CMat wt_cur(bank.n_t(), q);
    for (int j = 0; j < q; ++j)
      wt_cur.col(j) = ft.middleCols(static_cast<Eigen::Index>(j) * bank.m_t, bank.m_t) * bank.ct.col(j);
    CVec vcr = lstsq_regularized(lhs_update_cr(op, wt_cur, fr, bank.m_r), target, alpha);
    bank.cr = Eigen::Map<CMat>(vcr.data(), bank.m_r, q);

    CMat wr_cur(bank.n_r(), q);
    for (int j = 0; j < q; ++j)
      wr_cur.col(j) = fr.middleCols(static_cast<Eigen::Index>(j) * bank.m_r, bank.m_r) * bank.cr.col(j);
    CVec vct = lstsq_regularized(lhs_update_ct(op, wr_cur, ft, bank.m_t), target, alpha);
    bank.ct = Eigen::Map<CMat>(vct.data(), bank.m_t, q);

    DigitalBank collapsed = bank.collapse();
    err = (target - op.realized(collapsed.wt, collapsed.wr)).squaredNorm();
  }
  return err;
}

GreedyResult greedy_main(const PsfOperator& op, const CVec& target, int m_t, int m_r,
                         const QuantizationSpec& bits, int q, const GreedyConfig& cfg) {
  if (q < 1) throw std::invalid_argument("component count must be positive");
  if (m_t < 1 || m_r < 1) throw std::invalid_argument("front-end counts must be positive");
  const double eps_max = cfg.altmin.effective_eps(target);

  GreedyResult res;
  HybridBank& bank = res.bank;
  bank.m_t = m_t;
  bank.m_r = m_r;
  bank.bits = bits;
  bank.ft_phase = RMat::Zero(op.n_t(), 0);
  bank.fr_phase = RMat::Zero(op.n_r(), 0);
  bank.ct = CMat::Zero(m_t, 0);
  bank.cr = CMat::Zero(m_r, 0);

  CVec residual = target;
  double err = residual.squaredNorm();
  for (int comp = 0; comp < q && err > eps_max; ++comp) {
    AltminResult digital = altmin(op, residual, 1, cfg.altmin);
    GreedySubResult gt = greedy_sub(digital.bank.wt.col(0), m_t, bits, cfg.altmin.alpha);
    GreedySubResult gr = greedy_sub(digital.bank.wr.col(0), m_r, bits, cfg.altmin.alpha);

    bank.ft_phase.conservativeResize(Eigen::NoChange, bank.ft_phase.cols() + m_t);
    bank.ft_phase.rightCols(m_t) = gt.f_phase;
    bank.fr_phase.conservativeResize(Eigen::NoChange, bank.fr_phase.cols() + m_r);
    bank.fr_phase.rightCols(m_r) = gr.f_phase;
    bank.ct.conservativeResize(Eigen::NoChange, bank.ct.cols() + 1);
    bank.ct.rightCols(1) = gt.c;
    bank.cr.conservativeResize(Eigen::NoChange, bank.cr.cols() + 1);
    bank.cr.rightCols(1) = gr.c;

    err = refine_digital(op, target, bank, cfg.refine_k_max, eps_max, cfg.altmin.alpha);
    DigitalBank collapsed = bank.collapse();
    residual = target - op.realized(collapsed.wt, collapsed.wr);
    err = residual.squaredNorm();
    res.error_trace.push_back(err);
  }
  res.final_error = err;
  return res;
}

MinQResult min_q_search(const PsfOperator& op, const CVec& target, int m_t, int m_r,
                        const QuantizationSpec& bits, double eps_max, int q_lo, int q_hi,
                        const GreedyConfig& cfg) {
  if (q_lo < 1 || q_hi < q_lo) throw std::invalid_argument("empty component range");
  MinQResult res;
  auto evaluate = [&](int q) -> std::pair<double, HybridBank> {
    GreedyResult g = greedy_main(op, target, m_t, m_r, bits, q, cfg);
    res.evaluated.emplace_back(q, g.final_error);
    return {g.final_error, std::move(g.bank)};
  };

  int lo = q_lo, hi = q_hi;
  auto [err_hi, bank_hi] = evaluate(q_hi);
  if (err_hi > eps_max) {
    // the idealized objective is non-increasing in Q, so the range is infeasible
    return res;
  }
  int best_q = q_hi;
  HybridBank best_bank = std::move(bank_hi);
  hi = q_hi - 1;
  while (lo <= hi) {
    int mid = lo + (hi - lo) / 2;
    auto [err, bank] = evaluate(mid);
    if (err <= eps_max) {
      best_q = mid;
      best_bank = std::move(bank);
      hi = mid - 1;
    } else {
      lo = mid + 1;
    }
  }
  // realized greedy errors may be non-monotone; verify by scanning upward
  // from the smallest untested q below the bisection result
  std::sort(res.evaluated.begin(), res.evaluated.end());
  bool monotone = true;
  for (size_t i = 1; i < res.evaluated.size(); ++i)
    if (res.evaluated[i].second > res.evaluated[i - 1].second * (1.0 + 1e-9) + 1e-18)
      monotone = false;
  if (!monotone) {
    res.used_linear_scan = true;
    for (int q = q_lo; q < best_q; ++q) {
      GreedyResult g = greedy_main(op, target, m_t, m_r, bits, q, cfg);
      res.evaluated.emplace_back(q, g.final_error);
      if (g.final_error <= eps_max) {
        best_q = q;
        best_bank = std::move(g.bank);
        break;
      }
    }
  }
  res.q_min = best_q;
  res.bank = std::move(best_bank);
  return res;
}

int normalize_tx(HybridBank& bank) {
  int skipped = 0;
  CMat ft = bank.ft();
  for (int j = 0; j < bank.q(); ++j) {
    CVec wt = ft.middleCols(static_cast<Eigen::Index>(j) * bank.m_t, bank.m_t) * bank.ct.col(j);
    double s = wt.cwiseAbs().maxCoeff();
    if (s == 0.0) {
      ++skipped;
      continue;
    }
    bank.ct.col(j) /= s;
    bank.cr.col(j) *= s;
  }
  return skipped;
}

HybridBank quantized_thm1(const PsfOperator& op, const CVec& target, const DigitalBank& digital,
                          const QuantizationSpec& bits, int k_max, double alpha) {
  HybridBank bank = thm1_hybrid_cont(digital);
  bank.bits = bits;
  bank.ft_phase = quantize_phase(bank.ft_phase, bits);
  bank.fr_phase = quantize_phase(bank.fr_phase, bits);
  refine_digital(op, target, bank, k_max, 0.0, alpha);
  return bank;
}

}  // namespace coarray
