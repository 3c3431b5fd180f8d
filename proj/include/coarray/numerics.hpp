// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "coarray/types.hpp"

namespace coarray {

/// Uniform phase-shifter bit depth. bits < 0 means continuous phases.
struct QuantizationSpec {
  int bits = -1;

  static QuantizationSpec infinite() { return QuantizationSpec{-1}; }
  static QuantizationSpec finite(int b);

  bool is_finite() const { return bits >= 1; }
  /// Lattice step 2*pi / 2^bits (finite only).
  double step() const;
  int levels() const { return 1 << bits; }
};

/// Projects phases onto the uniform lattice {0, 2pi/2^B, ...}:
/// (pi/2^(B-1)) * round((2^(B-1)/pi) * psi) mod 2pi, elementwise.
/// Ties round half away from zero. Identity for continuous phases.
RMat quantize_phase(const RMat& phases, const QuantizationSpec& spec);
double quantize_phase(double phase, const QuantizationSpec& spec);

/// Diagonally loaded pseudo-inverse (X^H X + alpha I)^-1 X^H.
/// alpha = 0 requires full column rank and falls back to the exact
/// pseudo-inverse; a rank-deficient system raises an error.
CMat pinv_regularized(const CMat& x, double alpha);

/// Solves min ||X b - y|| with diagonal loading, without forming the inverse.
CVec lstsq_regularized(const CMat& x, const CVec& y, double alpha);

struct TruncatedSvd {
  CMat u;       // rows x q
  RVec sigma;   // q, descending
  CMat v;       // cols x q
};

/// Top-q singular triplets. Deterministic sign convention: the first
/// nonzero component of each left singular vector is made real-positive.
TruncatedSvd svd_truncated(const CMat& x, int q);

}  // namespace coarray
