// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "coarray/geometry.hpp"
#include "coarray/types.hpp"

namespace coarray {

/// Scan/scatterer direction in reduced coordinates:
///   1-D: u = sin(phi), w unused.
///   2-D: u = sin(phi) sin(theta), w = cos(theta).
struct Direction {
  double u = 0.0;
  double w = 0.0;

  static Direction from_azimuth(double phi);
  static Direction from_angles(double phi, double theta);
};

enum class GainPattern { Omni, Sinusoidal };

struct DirectionGrid {
  std::vector<Direction> directions;
  int dim = 1;

  int count() const { return static_cast<int>(directions.size()); }
};

/// V azimuth samples uniform in sin(phi) over [-1, 1].
DirectionGrid uniform_sine_grid(int v);
/// side x side grid uniform in (sin phi sin theta, cos theta) over [-1,1]^2.
DirectionGrid planar_grid(int side);

/// Per-element response. 1-D: exp(j pi d u). 2-D sinusoidal gain:
/// sqrt(max(0, 1 - u^2 - w^2)) * exp(j pi (d_x u + d_z w)).
CVec steering_vector(const ArrayGeometry& geom, const Direction& dir,
                     GainPattern gain = GainPattern::Omni);

/// N x V steering matrix of one aperture.
CMat steering_matrix(const ArrayGeometry& geom, const DirectionGrid& grid,
                     GainPattern gain = GainPattern::Omni);

/// Khatri-Rao product: column v = a_t(v) kron a_r(v), shape N_t N_r x V.
CMat effective_steering(const CMat& at, const CMat& ar);

/// Steering rows indexed by the sum co-array support (virtual positions).
CMat coarray_steering(const SumCoarray& ca, const DirectionGrid& grid,
                      GainPattern gain = GainPattern::Omni);

/// psi = A^T vec(W) with W of shape N_r x N_t, column-major vectorization.
CVec psf_eval(const CMat& w, const CMat& a_eff);

/// w_Sigma = Upsilon vec(W).
CVec coarray_weights(const CMat& w, const SelectionMatrix& sel);

/// Right inverse of the selection map: an N_r x N_t matrix W with
/// Upsilon vec(W) = w_sigma, spreading each weight evenly across the
/// multiplicity positions of its co-array point.
CMat spread_coarray_weights(const CVec& w_sigma, const SelectionMatrix& sel,
                            const SumCoarray& ca);

/// Desired response: either a co-array weight vector (indexed by a
/// SumCoarray support) or a sampled PSF (indexed by a DirectionGrid).
struct TargetSpec {
  CVec values;
  enum class Domain { Coarray, Psf } domain = Domain::Coarray;
};

/// i.i.d. entries sqrt(r) e^{j phi}, r ~ U(0,1), phi ~ U(0, 2pi).
TargetSpec target_stochastic(int n_sigma, std::uint64_t seed);

enum class WindowKind { Rect, Triangular, Hann, Chebyshev };

/// Real nonnegative symmetric window, peak-normalized. Chebyshev uses the
/// standard closed form with the given sidelobe attenuation in dB.
TargetSpec target_window(WindowKind kind, int n_sigma, double attenuation_db = 30.0);

RVec chebyshev_window(int n, double attenuation_db);

/// Multiplies the co-array weights entrywise by exp(-j pi d_Sigma . dir) so
/// the PSF main lobe lands on the steer direction.
TargetSpec steer_target(const TargetSpec& spec, const SumCoarray& ca, const Direction& dir);

/// ||target - achieved||_2 / ||target||_2.
double relative_error(const CVec& target, const CVec& achieved);

}  // namespace coarray
