// SPDX-License-Identifier: Apache-2.0
#include "coarray/numerics.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace coarray {

QuantizationSpec QuantizationSpec::finite(int b) {
  if (b < 1) throw std::invalid_argument("bit depth must be >= 1");
  if (b > 62) throw std::invalid_argument("bit depth too large");
  return QuantizationSpec{b};
}

double QuantizationSpec::step() const {
  if (!is_finite()) throw std::logic_error("continuous spec has no lattice step");
  return 2.0 * kPi / std::ldexp(1.0, bits);
}

double quantize_phase(double phase, const QuantizationSpec& spec) {
  if (!spec.is_finite()) return phase;
  if (!std::isfinite(phase)) throw std::invalid_argument("phase must be finite");
  double scale = std::ldexp(1.0, spec.bits - 1) / kPi;  // 2^(B-1)/pi
  long long levels = 1LL << spec.bits;
  long long k = std::llround(phase * scale);  // ties away from zero
  k = ((k % levels) + levels) % levels;
  return static_cast<double>(k) * (kPi / std::ldexp(1.0, spec.bits - 1));
}

RMat quantize_phase(const RMat& phases, const QuantizationSpec& spec) {
  if (!spec.is_finite()) return phases;
  RMat out(phases.rows(), phases.cols());
  for (Eigen::Index j = 0; j < phases.cols(); ++j)
    for (Eigen::Index i = 0; i < phases.rows(); ++i)
      out(i, j) = quantize_phase(phases(i, j), spec);
  return out;
}

CMat pinv_regularized(const CMat& x, double alpha) {
  if (alpha < 0) throw std::invalid_argument("diagonal loading must be nonnegative");
  if (alpha == 0.0) {
    Eigen::JacobiSVD<CMat> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
    double tol = 1e-13 * std::max<double>(1.0, svd.singularValues()[0]) *
                 std::max(x.rows(), x.cols());
    if (svd.rank() < x.cols() &&
        (x.rows() < x.cols() || svd.singularValues().minCoeff() < tol))
      throw std::runtime_error("rank-deficient system with alpha = 0; set alpha > 0");
    RVec inv = svd.singularValues().head(svd.rank()).cwiseInverse();
    return svd.matrixV().leftCols(svd.rank()) * inv.asDiagonal() *
           svd.matrixU().leftCols(svd.rank()).adjoint();
  }
  CMat gram = x.adjoint() * x;
  gram.diagonal().array() += alpha;
  Eigen::LLT<CMat> llt(gram);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("diagonally loaded normal equations are not positive definite");
  return llt.solve(x.adjoint());
}

CVec lstsq_regularized(const CMat& x, const CVec& y, double alpha) {
  if (alpha == 0.0) return pinv_regularized(x, 0.0) * y;
  CMat gram = x.adjoint() * x;
  gram.diagonal().array() += alpha;
  Eigen::LLT<CMat> llt(gram);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("diagonally loaded normal equations are not positive definite");
  return llt.solve(x.adjoint() * y);
}

TruncatedSvd svd_truncated(const CMat& x, int q) {
  if (q < 1 || q > std::min(x.rows(), x.cols()))
    throw std::invalid_argument("truncation rank out of range");
  Eigen::JacobiSVD<CMat> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  TruncatedSvd out;
  out.u = svd.matrixU().leftCols(q);
  out.sigma = svd.singularValues().head(q);
  out.v = svd.matrixV().leftCols(q);
  // fix the unitary phase ambiguity per singular triplet
  for (int j = 0; j < q; ++j) {
    for (Eigen::Index i = 0; i < out.u.rows(); ++i) {
      double mag = std::abs(out.u(i, j));
      if (mag > 1e-12) {
        cxd rot = std::conj(out.u(i, j)) / mag;
        out.u.col(j) *= rot;
        out.v.col(j) *= rot;
        break;
      }
    }
  }
  return out;
}

}  // namespace coarray
