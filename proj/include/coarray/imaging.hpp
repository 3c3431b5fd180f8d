// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "coarray/digital.hpp"
#include "coarray/geometry.hpp"
#include "coarray/steering.hpp"

namespace coarray {

/// Far-field scattering scene: K point scatterers with complex reflectivities
/// plus white circular Gaussian measurement noise of variance sigma2.
struct Scene {
  std::vector<Direction> directions;
  CVec gamma;
  double sigma2 = 1.0;

  int k() const { return static_cast<int>(gamma.size()); }
};

/// Rough-surface reflectivities at the given scatterer directions:
/// gamma_k ~ CN(1/sqrt(2K), 1/(2K)), so E|gamma_k|^2 = 1/K.
Scene scene_rough_surface(const std::vector<Direction>& directions, std::uint64_t seed,
                          double sigma2 = 1.0);

/// One transmission: y = w_r^T A_r diag(gamma) A_t^T w_t + w_r^T n with a
/// fresh noise draw n ~ CN(0, sigma2 I) seeded by `seed`.
cxd measure(const ArrayGeometry& tx, const ArrayGeometry& rx, const Scene& scene,
            const CVec& wt, const CVec& wr, const Direction& dir, std::uint64_t seed,
            GainPattern gain = GainPattern::Omni);

struct ImageResult {
  DirectionGrid grid;
  CVec values;  // one complex pixel per grid direction
  int q = 0;    // component images summed per pixel
};

struct ImagingConfig {
  GainPattern gain = GainPattern::Omni;
  double tx_power = 1.0;     // per-component transmit power scale
  bool normalize_tx = true;  // saturate the Tx amplifiers before measuring
  int threads = 1;
};

/// Image with one broadside bank reused at every pixel; the weights are
/// steered by conjugate per-element phase ramps (continuous-phase reuse).
ImageResult form_image(const ArrayGeometry& tx, const ArrayGeometry& rx,
                       const DigitalBank& bank, const Scene& scene, const DirectionGrid& grid,
                       std::uint64_t seed, const ImagingConfig& cfg = {});

/// Image with a caller-supplied bank per pixel (finite phase-shifter depths
/// force a fresh design at every scan direction). The solver must be safe to
/// call concurrently when cfg.threads > 1.
using PixelBankSolver = std::function<DigitalBank(int pixel, const Direction& dir)>;
ImageResult form_image(const ArrayGeometry& tx, const ArrayGeometry& rx,
                       const PixelBankSolver& solver, const Scene& scene,
                       const DirectionGrid& grid, std::uint64_t seed,
                       const ImagingConfig& cfg = {});

}  // namespace coarray
