// SPDX-License-Identifier: Apache-2.0
#include "coarray/digital.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace coarray {

PsfOperator::PsfOperator(CMat a_eff, int n_t, int n_r)
    : dense_(true), a_eff_(std::move(a_eff)), n_t_(n_t), n_r_(n_r) {
  if (a_eff_.rows() != static_cast<Eigen::Index>(n_t) * n_r)
    throw std::invalid_argument("effective steering matrix must have N_t N_r rows");
}

PsfOperator::PsfOperator(SelectionMatrix sel)
    : dense_(false), sel_(std::move(sel)), n_t_(sel_.n_tx), n_r_(sel_.n_rx) {}

Eigen::Index PsfOperator::out_size() const {
  return dense_ ? a_eff_.cols() : sel_.n_rows;
}

CMat PsfOperator::project_kr(const CMat& lt, const CMat& rr) const {
  if (lt.cols() != rr.cols() || lt.rows() != n_t_ || rr.rows() != n_r_)
    throw std::invalid_argument("Kronecker factor shapes mismatch");
  const Eigen::Index k = lt.cols();
  if (dense_) {
    CMat cols(static_cast<Eigen::Index>(n_t_) * n_r_, k);
    for (Eigen::Index j = 0; j < k; ++j)
      for (int t = 0; t < n_t_; ++t)
        cols.col(j).segment(static_cast<Eigen::Index>(t) * n_r_, n_r_) = lt(t, j) * rr.col(j);
    return a_eff_.transpose() * cols;
  }
  CMat out = CMat::Zero(sel_.n_rows, k);
  for (int t = 0; t < n_t_; ++t) {
    for (int r = 0; r < n_r_; ++r) {
      const int row = sel_.row_of_col[t * n_r_ + r];
      for (Eigen::Index j = 0; j < k; ++j) out(row, j) += lt(t, j) * rr(r, j);
    }
  }
  return out;
}

CVec PsfOperator::realized(const CMat& wt, const CMat& wr) const {
  return project_kr(wt, wr) * CVec::Ones(wt.cols());
}

CMat PsfOperator::spectral_matrix(const CVec& target) const {
  if (target.size() != out_size())
    throw std::invalid_argument("target length mismatch");
  CMat w = CMat::Zero(n_r_, n_t_);
  if (dense_) {
    for (Eigen::Index v = 0; v < a_eff_.cols(); ++v) {
      Eigen::Map<const CMat> col(a_eff_.col(v).data(), n_r_, n_t_);
      w += target[v] * col;
    }
    return w;
  }
  for (int t = 0; t < n_t_; ++t)
    for (int r = 0; r < n_r_; ++r) w(r, t) += target[sel_.row_of_col[t * n_r_ + r]];
  return w;
}

DigitalBank spectral_init(const PsfOperator& op, const CVec& target, int q) {
  if (q < 1 || q > std::min(op.n_t(), op.n_r()))
    throw std::invalid_argument("component count out of range for spectral init");
  CMat w = op.spectral_matrix(target);
  DigitalBank bank;
  if (w.norm() == 0.0) {
    bank.wt = CMat::Zero(op.n_t(), q);
    bank.wr = CMat::Zero(op.n_r(), q);
    return bank;
  }
  TruncatedSvd svd = svd_truncated(w, q);
  bank.wt = svd.v.conjugate();
  bank.wr = CMat::Zero(op.n_r(), q);
  return bank;
}

namespace {

// A^T (W_t kron I_{N_r}): columns indexed by (j, r) pairs, column
// j*N_r + r = w_{t,j} kron e_r, matching the column-major vec(W_r).
CMat lhs_update_wr(const PsfOperator& op, const CMat& wt) {
  const int q = static_cast<int>(wt.cols());
  const int nr = op.n_r();
  CMat lt(op.n_t(), static_cast<Eigen::Index>(q) * nr);
  CMat rr = CMat::Zero(nr, static_cast<Eigen::Index>(q) * nr);
  for (int j = 0; j < q; ++j) {
    for (int r = 0; r < nr; ++r) {
      lt.col(static_cast<Eigen::Index>(j) * nr + r) = wt.col(j);
      rr(r, static_cast<Eigen::Index>(j) * nr + r) = 1.0;
    }
  }
  return op.project_kr(lt, rr);
}

// A^T (I_{N_t} kron W_r): column t*Q + j = e_t kron w_{r,j}, matching the
// column-major vec of the Q x N_t matrix W_t^T.
CMat lhs_update_wt(const PsfOperator& op, const CMat& wr) {
  const int q = static_cast<int>(wr.cols());
  const int nt = op.n_t();
  CMat lt = CMat::Zero(nt, static_cast<Eigen::Index>(q) * nt);
  CMat rr(op.n_r(), static_cast<Eigen::Index>(q) * nt);
  for (int t = 0; t < nt; ++t) {
    for (int j = 0; j < q; ++j) {
      lt(t, static_cast<Eigen::Index>(t) * q + j) = 1.0;
      rr.col(static_cast<Eigen::Index>(t) * q + j) = wr.col(j);
    }
  }
  return op.project_kr(lt, rr);
}

}  // namespace

AltminResult altmin(const PsfOperator& op, const CVec& target, int q, const SolverConfig& cfg) {
  if (q < 1) throw std::invalid_argument("component count must be positive");
  if (cfg.k_max < 1) throw std::invalid_argument("k_max must be positive");
  const double eps_max = cfg.effective_eps(target);

  AltminResult res;
  res.bank = spectral_init(op, target, std::min({q, op.n_t(), op.n_r()}));
  if (res.bank.q() < q) {
    // widen with zero columns; the first LS step fills them
    CMat wt = CMat::Zero(op.n_t(), q);
    wt.leftCols(res.bank.q()) = res.bank.wt;
    res.bank.wt = wt;
    res.bank.wr = CMat::Zero(op.n_r(), q);
  }

  double err = std::numeric_limits<double>::infinity();
  for (int k = 0; k < cfg.k_max && err > eps_max; ++k) {
    CVec vr = lstsq_regularized(lhs_update_wr(op, res.bank.wt), target, cfg.alpha);
    res.bank.wr = Eigen::Map<CMat>(vr.data(), op.n_r(), q);
    CVec vt = lstsq_regularized(lhs_update_wt(op, res.bank.wr), target, cfg.alpha);
    res.bank.wt = Eigen::Map<CMat>(vt.data(), q, op.n_t()).transpose();
    err = (target - op.realized(res.bank.wt, res.bank.wr)).squaredNorm();
    res.error_trace.push_back(err);
  }
  res.final_error = err;
  return res;
}

DigitalBank svd_factorize(const CMat& w, int q) {
  int qmax = static_cast<int>(std::min(w.rows(), w.cols()));
  if (q < 1 && q >= 0) throw std::invalid_argument("component count out of range");
  if (q > qmax) throw std::invalid_argument("component count out of range");
  if (q < 0) {
    // default: numerical rank
    TruncatedSvd full = svd_truncated(w, qmax);
    double tol = std::max(w.rows(), w.cols()) *
                 std::numeric_limits<double>::epsilon() * full.sigma[0];
    q = 0;
    for (int i = 0; i < qmax; ++i)
      if (full.sigma[i] > tol) ++q;
    q = std::max(q, 1);
  }
  TruncatedSvd svd = svd_truncated(w, q);
  DigitalBank bank;
  bank.wr = svd.u * svd.sigma.asDiagonal();
  bank.wt = svd.v.conjugate();
  return bank;
}

int normalize_tx(DigitalBank& bank) {
  int skipped = 0;
  for (int j = 0; j < bank.q(); ++j) {
    double s = bank.wt.col(j).cwiseAbs().maxCoeff();
    if (s == 0.0) {
      ++skipped;
      continue;
    }
    bank.wt.col(j) /= s;
    bank.wr.col(j) *= s;
  }
  return skipped;
}

}  // namespace coarray
