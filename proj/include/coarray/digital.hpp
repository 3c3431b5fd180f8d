// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "coarray/geometry.hpp"
#include "coarray/numerics.hpp"
#include "coarray/steering.hpp"
#include "coarray/types.hpp"

namespace coarray {

/// Maps vec(W) (Kronecker index, W of shape N_r x N_t) to the response
/// domain: either A^T vec(W) for a dense effective steering matrix, or
/// Upsilon vec(W) when solving in the co-array domain. All solver algebra
/// reduces to projecting column-wise Kronecker products l_k kron r_k, which
/// the co-array backend evaluates sparsely.
class PsfOperator {
 public:
  /// Dense backend: a_eff has shape N_t N_r x V.
  PsfOperator(CMat a_eff, int n_t, int n_r);
  /// Sparse co-array backend (A replaced by Upsilon^T).
  explicit PsfOperator(SelectionMatrix sel);

  int n_t() const { return n_t_; }
  int n_r() const { return n_r_; }
  Eigen::Index out_size() const;

  /// Columns k of the result: A^T (l_k kron r_k). lt is N_t x K, rr is N_r x K.
  CMat project_kr(const CMat& lt, const CMat& rr) const;

  /// A^T vec(W_r W_t^T) = sum_q A^T (w_{t,q} kron w_{r,q}).
  CVec realized(const CMat& wt, const CMat& wr) const;

  /// sum_v psi_v mat_{N_r x N_t}(A_{:,v}).
  CMat spectral_matrix(const CVec& target) const;

 private:
  bool dense_ = false;
  CMat a_eff_;         // dense backend
  SelectionMatrix sel_;  // co-array backend
  int n_t_ = 0;
  int n_r_ = 0;
};

/// Per-component-image fully digital weights (columns).
struct DigitalBank {
  CMat wt;  // N_t x Q
  CMat wr;  // N_r x Q

  int q() const { return static_cast<int>(wt.cols()); }
  CMat effective() const { return wr * wt.transpose(); }
};

struct SolverConfig {
  int k_max = 100;
  double eps_max = 0.0;        // absolute squared-error tolerance
  double eps_rel = 1e-16;      // used as eps_max = eps_rel * ||target||^2 when eps_max == 0
  double alpha = 1e-9;         // diagonal loading
  std::uint64_t seed = 0;

  double effective_eps(const CVec& target) const {
    return eps_max > 0 ? eps_max : eps_rel * target.squaredNorm();
  }
};

struct AltminResult {
  DigitalBank bank;
  std::vector<double> error_trace;  // squared error per iteration
  double final_error = 0.0;         // squared error
};

/// Spectral initialization: W from the target back-projection, W_t from the
/// conjugated top-q right singular vectors.
DigitalBank spectral_init(const PsfOperator& op, const CVec& target, int q);

/// Alternating least squares for the rank-Q co-array weight matrix.
AltminResult altmin(const PsfOperator& op, const CVec& target, int q, const SolverConfig& cfg);

/// W_r = U Sigma, W_t = conj(V) from the truncated SVD, so W_r W_t^T = W.
DigitalBank svd_factorize(const CMat& w, int q = -1);

/// Per image: w_r *= ||w_t||_inf, w_t /= ||w_t||_inf. Zero Tx columns are
/// skipped; returns the number of skipped columns.
int normalize_tx(DigitalBank& bank);

}  // namespace coarray
