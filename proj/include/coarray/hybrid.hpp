// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "coarray/closed_form.hpp"
#include "coarray/digital.hpp"

namespace coarray {

struct GreedySubResult {
  RMat f_phase;  // N x M
  CVec c;        // M
};

/// Greedy two-phasor decomposition of a single weight vector: repeated
/// quantized Lemma-1 steps on the residual, least squares over all columns
/// so far; an odd final column uses the quantized single-phasor solution.
GreedySubResult greedy_sub(const CVec& w, int m, const QuantizationSpec& bits,
                           double alpha = 1e-9);

struct GreedyResult {
  HybridBank bank;
  std::vector<double> error_trace;  // squared residual after each component
  double final_error = 0.0;
};

struct GreedyConfig {
  SolverConfig altmin;     // outer single-component digital solves
  int refine_k_max = 10;   // inner digital-weight refinement iterations
};

/// Greedy hybrid design: per component, a rank-1 digital solve on the
/// residual, per-side quantized decomposition, then joint refinement of all
/// digital weights with the analog phases fixed.
GreedyResult greedy_main(const PsfOperator& op, const CVec& target, int m_t, int m_r,
                         const QuantizationSpec& bits, int q, const GreedyConfig& cfg);

/// Alternating least squares over the digital weight matrices C_r, C_t with
/// the analog phase matrices fixed. Returns the updated bank (in place) and
/// the final squared error.
double refine_digital(const PsfOperator& op, const CVec& target, HybridBank& bank,
                      int k_max, double eps_max, double alpha);

struct MinQResult {
  int q_min = -1;  // -1: infeasible in range
  std::optional<HybridBank> bank;
  std::vector<std::pair<int, double>> evaluated;  // (q, squared error)
  bool used_linear_scan = false;
};

/// Smallest Q in [q_lo, q_hi] whose greedy error is <= eps_max; bisection on
/// the error curve with a linear-scan fallback when non-monotone.
MinQResult min_q_search(const PsfOperator& op, const CVec& target, int m_t, int m_r,
                        const QuantizationSpec& bits, double eps_max, int q_lo, int q_hi,
                        const GreedyConfig& cfg);

/// Per image: c_r *= ||F_t c_t||_inf, c_t /= same; saturates the transmit
/// amplifiers without changing the component image.
int normalize_tx(HybridBank& bank);

/// Theorem-1 factorization of a digital bank with phases quantized to the
/// given depth, digital weights refit by alternating least squares.
HybridBank quantized_thm1(const PsfOperator& op, const CVec& target, const DigitalBank& digital,
                          const QuantizationSpec& bits, int k_max, double alpha);

}  // namespace coarray
