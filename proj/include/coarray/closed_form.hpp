// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "coarray/digital.hpp"
#include "coarray/numerics.hpp"
#include "coarray/types.hpp"

namespace coarray {

/// Hybrid/analog beamformer bank. Analog phases are stored as real phase
/// matrices (the complex entries are exp(j phase), unit modulus by
/// construction); finite bit depths keep every phase on the quantizer lattice.
struct HybridBank {
  RMat ft_phase;  // N_t x (M_t Q)
  RMat fr_phase;  // N_r x (M_r Q)
  CMat ct;        // M_t x Q
  CMat cr;        // M_r x Q
  int m_t = 0;
  int m_r = 0;
  QuantizationSpec bits = QuantizationSpec::infinite();

  int q() const { return static_cast<int>(ct.cols()); }
  int n_t() const { return static_cast<int>(ft_phase.rows()); }
  int n_r() const { return static_cast<int>(fr_phase.rows()); }

  CMat ft() const;  // unit-modulus N_t x (M_t Q)
  CMat fr() const;

  /// Per-image collapsed weights W_x columns F_{x,q} c_{x,q}.
  DigitalBank collapse() const;
  /// Effective co-array weight matrix W = sum_q F_{r,q} c_{r,q} c_{t,q}^T F_{t,q}^T.
  CMat effective() const;
};

struct TwoPhasorFactor {
  RMat phases;  // N x 2
  CVec c;       // length 2
};

/// Exact two-front-end decomposition w = F c with equal-magnitude digital
/// weights c = (||w||_inf / 2) 1_2.
TwoPhasorFactor lemma1_factor(const CVec& w);

/// Generalized two-phasor decomposition for given digital weights c1, c2;
/// feasible iff |c1|+|c2| >= max|w_n| and ||c1|-|c2|| <= min|w_n|.
std::optional<RMat> lemma1_general(const CVec& w, cxd c1, cxd c2);

struct AnalogFactor {
  RVec phases;  // N
  cxd c;
  double value;  // achieved squared error ||w - c f||^2
};

/// Single-front-end least squares: f = exp(j angle(w)), c = ||w||_1 / N;
/// optimal value ||w||_2^2 - ||w||_1^2 / N.
AnalogFactor lemma2_analog(const CVec& w);

/// Hybrid bank with M = 2, continuous phases, Q preserved (exact).
HybridBank thm1_hybrid_cont(const DigitalBank& bank);

/// Hybrid bank with M = 2, 1-bit phases, Q = N_r N_t (exact).
HybridBank thm2_hybrid_1bit(const CMat& w);

/// Expands each hybrid image into M_r M_t rank-1 analog images (M = 1).
HybridBank lemma3_flatten(const HybridBank& bank);

/// Analog bank with continuous phases, Q quadrupled (exact).
HybridBank thm3_analog_cont(const DigitalBank& bank);

/// Analog bank with 1-bit phases, Q = 4 N_r N_t, entries in {+1, -1} (exact).
HybridBank thm4_analog_1bit(const CMat& w);

struct MergedAnalog {
  RVec phases;  // N*M phase shifters on a single front end
  cxd c;
  CVec effective_w;  // c * (F 1_M)
};

/// Single-front-end re-wiring of a uniform-digital-weight image (Remark-style
/// architectural merge). Fails if the digital vector is not c * 1_M.
std::optional<MergedAnalog> remark1_merge(const RMat& f_phases, const CVec& c);

}  // namespace coarray
