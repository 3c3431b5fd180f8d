// SPDX-License-Identifier: Apache-2.0
#include "coarray/steering.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace coarray {

Direction Direction::from_azimuth(double phi) {
  if (phi < -kPi / 2 - 1e-12 || phi > kPi / 2 + 1e-12)
    throw std::invalid_argument("azimuth must lie in [-pi/2, pi/2]");
  return Direction{std::sin(phi), 0.0};
}

Direction Direction::from_angles(double phi, double theta) {
  if (phi < -kPi / 2 - 1e-12 || phi > kPi / 2 + 1e-12)
    throw std::invalid_argument("azimuth must lie in [-pi/2, pi/2]");
  if (theta < -1e-12 || theta > kPi + 1e-12)
    throw std::invalid_argument("elevation must lie in [0, pi]");
  return Direction{std::sin(phi) * std::sin(theta), std::cos(theta)};
}

DirectionGrid uniform_sine_grid(int v) {
  if (v < 1) throw std::invalid_argument("grid must have at least one direction");
  DirectionGrid grid;
  grid.dim = 1;
  grid.directions.reserve(v);
  for (int i = 0; i < v; ++i) {
    double u = (v == 1) ? 0.0 : -1.0 + 2.0 * i / (v - 1);
    grid.directions.push_back(Direction{u, 0.0});
  }
  return grid;
}

DirectionGrid planar_grid(int side) {
  if (side < 1) throw std::invalid_argument("grid side must be positive");
  DirectionGrid grid;
  grid.dim = 2;
  grid.directions.reserve(static_cast<size_t>(side) * side);
  // w (elevation coordinate) is the fast index, matching column-major images
  for (int i = 0; i < side; ++i) {
    double u = (side == 1) ? 0.0 : -1.0 + 2.0 * i / (side - 1);
    for (int k = 0; k < side; ++k) {
      double w = (side == 1) ? 0.0 : -1.0 + 2.0 * k / (side - 1);
      grid.directions.push_back(Direction{u, w});
    }
  }
  return grid;
}

CVec steering_vector(const ArrayGeometry& geom, const Direction& dir, GainPattern gain) {
  const int n = geom.size();
  CVec a(n);
  if (geom.dim == 1) {
    for (int i = 0; i < n; ++i)
      a[i] = std::polar(1.0, kPi * geom.positions[i][0] * dir.u);
    if (gain == GainPattern::Sinusoidal)
      throw std::invalid_argument("sinusoidal gain pattern applies to planar arrays");
    return a;
  }
  double g = 1.0;
  if (gain == GainPattern::Sinusoidal)
    g = std::sqrt(std::max(0.0, 1.0 - dir.u * dir.u - dir.w * dir.w));
  for (int i = 0; i < n; ++i)
    a[i] = g * std::polar(1.0, kPi * (geom.positions[i][0] * dir.u +
                                      geom.positions[i][1] * dir.w));
  return a;
}

CMat steering_matrix(const ArrayGeometry& geom, const DirectionGrid& grid, GainPattern gain) {
  CMat a(geom.size(), grid.count());
  for (int v = 0; v < grid.count(); ++v)
    a.col(v) = steering_vector(geom, grid.directions[v], gain);
  return a;
}

CMat effective_steering(const CMat& at, const CMat& ar) {
  if (at.cols() != ar.cols())
    throw std::invalid_argument("Tx and Rx steering matrices must share the direction grid");
  const Eigen::Index nt = at.rows(), nr = ar.rows(), v = at.cols();
  CMat a(nt * nr, v);
  for (Eigen::Index j = 0; j < v; ++j)
    for (Eigen::Index t = 0; t < nt; ++t)
      a.col(j).segment(t * nr, nr) = at(t, j) * ar.col(j);
  return a;
}

CMat coarray_steering(const SumCoarray& ca, const DirectionGrid& grid, GainPattern gain) {
  // same phase law as steering_vector, applied at the virtual positions;
  // the sinusoidal gain enters squared (one factor per aperture)
  const int n = ca.n_sigma();
  CMat a(n, grid.count());
  for (int v = 0; v < grid.count(); ++v) {
    const Direction& dir = grid.directions[v];
    double g = 1.0;
    if (gain == GainPattern::Sinusoidal)
      g = std::max(0.0, 1.0 - dir.u * dir.u - dir.w * dir.w);
    for (int i = 0; i < n; ++i)
      a(i, v) = g * std::polar(1.0, kPi * (ca.support[i][0] * dir.u +
                                           ca.support[i][1] * dir.w));
  }
  return a;
}

CVec psf_eval(const CMat& w, const CMat& a_eff) {
  if (w.size() != a_eff.rows())
    throw std::invalid_argument("vec(W) length must match the effective steering matrix");
  Eigen::Map<const CVec> vec_w(w.data(), w.size());
  return a_eff.transpose() * vec_w;
}

CVec coarray_weights(const CMat& w, const SelectionMatrix& sel) { return sel.apply(w); }

CMat spread_coarray_weights(const CVec& w_sigma, const SelectionMatrix& sel,
                            const SumCoarray& ca) {
  if (w_sigma.size() != sel.n_rows || sel.n_rows != ca.n_sigma())
    throw std::invalid_argument("co-array weight length mismatch");
  CMat w(sel.n_rx, sel.n_tx);
  for (int t = 0; t < sel.n_tx; ++t)
    for (int r = 0; r < sel.n_rx; ++r) {
      int row = sel.row_of_col[t * sel.n_rx + r];
      w(r, t) = w_sigma[row] / static_cast<double>(ca.multiplicity[row]);
    }
  return w;
}

TargetSpec target_stochastic(int n_sigma, std::uint64_t seed) {
  if (n_sigma < 1) throw std::invalid_argument("target length must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  TargetSpec spec;
  spec.domain = TargetSpec::Domain::Coarray;
  spec.values.resize(n_sigma);
  for (int i = 0; i < n_sigma; ++i) {
    double r = unif(rng);
    double phi = 2.0 * kPi * unif(rng);
    spec.values[i] = std::polar(std::sqrt(r), phi);
  }
  return spec;
}

namespace {

double cheb_poly(int n, double x) {
  if (std::abs(x) <= 1.0) return std::cos(n * std::acos(x));
  return std::cosh(n * std::acosh(std::abs(x))) * ((x < 0 && n % 2) ? -1.0 : 1.0);
}

}  // namespace

RVec chebyshev_window(int n, double attenuation_db) {
  if (attenuation_db <= 0) throw std::invalid_argument("attenuation must be positive dB");
  if (n == 1) return RVec::Ones(1);
  double tg = std::pow(10.0, attenuation_db / 20.0);
  double x0 = std::cosh(std::acosh(tg) / (n - 1));
  RVec w(n);
  double center = (n - 1) / 2.0;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double m = i - center;
    double sum = 0.0;
    for (int k = 1; k <= (n - 1) / 2; ++k)
      sum += cheb_poly(n - 1, x0 * std::cos(kPi * k / n)) * std::cos(2.0 * m * kPi * k / n);
    w[i] = tg + 2.0 * sum;
    w[n - 1 - i] = w[i];
  }
  w /= w.maxCoeff();
  return w;
}

TargetSpec target_window(WindowKind kind, int n_sigma, double attenuation_db) {
  if (n_sigma < 1) throw std::invalid_argument("window length must be positive");
  RVec w(n_sigma);
  switch (kind) {
    case WindowKind::Rect:
      w.setOnes();
      break;
    case WindowKind::Triangular: {
      double half = (n_sigma + 1) / 2.0;
      double center = (n_sigma - 1) / 2.0;
      for (int i = 0; i < n_sigma; ++i) w[i] = (half - std::abs(i - center)) / half;
      break;
    }
    case WindowKind::Hann: {
      if (n_sigma == 1) {
        w[0] = 1.0;
      } else {
        for (int i = 0; i < n_sigma; ++i)
          w[i] = 0.5 * (1.0 - std::cos(2.0 * kPi * i / (n_sigma - 1)));
      }
      break;
    }
    case WindowKind::Chebyshev:
      w = chebyshev_window(n_sigma, attenuation_db);
      break;
  }
  TargetSpec spec;
  spec.domain = TargetSpec::Domain::Coarray;
  spec.values = w.cast<cxd>();
  return spec;
}

TargetSpec steer_target(const TargetSpec& spec, const SumCoarray& ca, const Direction& dir) {
  if (spec.values.size() != ca.n_sigma())
    throw std::invalid_argument("target length must match the sum co-array");
  TargetSpec out = spec;
  for (int i = 0; i < ca.n_sigma(); ++i)
    out.values[i] *= std::polar(1.0, -kPi * (ca.support[i][0] * dir.u +
                                             ca.support[i][1] * dir.w));
  return out;
}

double relative_error(const CVec& target, const CVec& achieved) {
  if (target.size() != achieved.size())
    throw std::invalid_argument("target and achieved responses differ in length");
  double denom = target.norm();
  if (denom == 0.0) throw std::invalid_argument("target has zero norm");
  return (target - achieved).norm() / denom;
}

}  // namespace coarray
