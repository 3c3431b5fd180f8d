// SPDX-License-Identifier: Apache-2.0
#include "coarray/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace coarray {

std::string to_string(ArrayLabel label) {
  switch (label) {
    case ArrayLabel::ULA: return "ULA";
    case ArrayLabel::MRA: return "MRA";
    case ArrayLabel::URA: return "URA";
    case ArrayLabel::BoundaryArray: return "BoundaryArray";
    case ArrayLabel::Custom: return "Custom";
  }
  return "Custom";
}

ArrayLabel array_label_from_string(const std::string& s) {
  if (s == "ULA") return ArrayLabel::ULA;
  if (s == "MRA") return ArrayLabel::MRA;
  if (s == "URA") return ArrayLabel::URA;
  if (s == "BoundaryArray") return ArrayLabel::BoundaryArray;
  if (s == "Custom") return ArrayLabel::Custom;
  throw std::invalid_argument("unknown array label: " + s);
}

RVec ArrayGeometry::coords_x() const {
  RVec x(size());
  for (int i = 0; i < size(); ++i) x[i] = positions[i][0];
  return x;
}

RVec ArrayGeometry::coords_z() const {
  RVec z(size());
  for (int i = 0; i < size(); ++i) z[i] = positions[i][1];
  return z;
}

namespace {

void check_distinct(const std::vector<LatticePoint>& positions) {
  std::set<LatticePoint> seen(positions.begin(), positions.end());
  if (seen.size() != positions.size())
    throw std::invalid_argument("array positions must be pairwise distinct");
}

}  // namespace

ArrayGeometry make_custom(std::vector<LatticePoint> positions, int dim) {
  if (positions.empty()) throw std::invalid_argument("array must be nonempty");
  if (dim != 1 && dim != 2) throw std::invalid_argument("dim must be 1 or 2");
  check_distinct(positions);
  return ArrayGeometry{std::move(positions), dim, ArrayLabel::Custom};
}

ArrayGeometry make_custom_1d(const std::vector<int>& positions) {
  std::vector<LatticePoint> pts;
  pts.reserve(positions.size());
  for (int p : positions) pts.push_back({p, 0});
  return make_custom(std::move(pts), 1);
}

ArrayGeometry make_ula(int n) {
  if (n < 1) throw std::invalid_argument("ULA size must be positive");
  std::vector<LatticePoint> pts;
  int offset = n / 2;  // even n: -n/2 .. n/2-1
  for (int i = 0; i < n; ++i) pts.push_back({i - offset, 0});
  return ArrayGeometry{std::move(pts), 1, ArrayLabel::ULA};
}

ArrayGeometry make_mra(int n) {
  // Extremal restricted additive 2-bases (contiguous sum co-array with the
  // largest aperture per element count), verified by exhaustive search.
  static const std::vector<std::vector<int>> table = {
      {0},
      {0, 1},
      {0, 1, 2},
      {0, 1, 3, 4},
      {0, 1, 3, 5, 6},
      {0, 1, 3, 5, 7, 8},
      {0, 1, 3, 5, 7, 9, 10},
      {0, 1, 2, 5, 8, 11, 12, 13},
      {0, 1, 2, 5, 8, 11, 14, 15, 16},
      {0, 1, 3, 4, 9, 11, 16, 17, 19, 20},
  };
  if (n < 1 || n > static_cast<int>(table.size()))
    throw std::invalid_argument("MRA catalog covers 1 <= n <= 10; use a Custom geometry");
  const auto& base = table[n - 1];
  int aperture = base.back();
  int offset = (aperture + 1) / 2;  // matches the even-n ULA convention
  std::vector<LatticePoint> pts;
  for (int p : base) pts.push_back({p - offset, 0});
  return ArrayGeometry{std::move(pts), 1, ArrayLabel::MRA};
}

ArrayGeometry make_ura(int side) {
  if (side < 1) throw std::invalid_argument("URA side must be positive");
  std::vector<LatticePoint> pts;
  int offset = (side + 1) / 2;
  for (int x = 0; x <= side; ++x)
    for (int z = 0; z <= side; ++z) pts.push_back({x - offset, z - offset});
  return ArrayGeometry{std::move(pts), 2, ArrayLabel::URA};
}

ArrayGeometry make_boundary(int side) {
  if (side < 1) throw std::invalid_argument("boundary array side must be positive");
  std::vector<LatticePoint> pts;
  int offset = (side + 1) / 2;
  for (int x = 0; x <= side; ++x)
    for (int z = 0; z <= side; ++z)
      if (x == 0 || x == side || z == 0 || z == side) pts.push_back({x - offset, z - offset});
  return ArrayGeometry{std::move(pts), 2, ArrayLabel::BoundaryArray};
}

SumCoarray sum_coarray(const ArrayGeometry& tx, const ArrayGeometry& rx) {
  if (tx.positions.empty() || rx.positions.empty())
    throw std::invalid_argument("geometries must be nonempty");
  if (tx.dim != rx.dim)
    throw std::invalid_argument("Tx and Rx geometries must have the same dimensionality");
  std::map<LatticePoint, int> counts;
  for (const auto& dt : tx.positions)
    for (const auto& dr : rx.positions) counts[{dt[0] + dr[0], dt[1] + dr[1]}] += 1;
  SumCoarray ca;
  ca.dim = tx.dim;
  ca.n_tx = tx.size();
  ca.n_rx = rx.size();
  for (const auto& [pt, c] : counts) {
    ca.support.push_back(pt);
    ca.multiplicity.push_back(c);
  }
  return ca;
}

RMat SelectionMatrix::to_dense() const {
  RMat m = RMat::Zero(n_rows, n_cols());
  for (int c = 0; c < n_cols(); ++c) m(row_of_col[c], c) = 1.0;
  return m;
}

CVec SelectionMatrix::apply(const CMat& w) const {
  if (w.rows() != n_rx || w.cols() != n_tx)
    throw std::invalid_argument("weight matrix must be N_r x N_t");
  CVec out = CVec::Zero(n_rows);
  for (int t = 0; t < n_tx; ++t)
    for (int r = 0; r < n_rx; ++r) out[row_of_col[t * n_rx + r]] += w(r, t);
  return out;
}

CVec SelectionMatrix::apply_adjoint(const CVec& y) const {
  if (y.size() != n_rows) throw std::invalid_argument("co-array vector length mismatch");
  CVec out(n_cols());
  for (int c = 0; c < n_cols(); ++c) out[c] = y[row_of_col[c]];
  return out;
}

SelectionMatrix selection_matrix(const ArrayGeometry& tx, const ArrayGeometry& rx,
                                 const SumCoarray& ca) {
  if (ca.n_tx != tx.size() || ca.n_rx != rx.size() || ca.dim != tx.dim)
    throw std::invalid_argument("sum co-array is inconsistent with the given geometries");
  std::map<LatticePoint, int> row_of_point;
  for (int n = 0; n < ca.n_sigma(); ++n) row_of_point[ca.support[n]] = n;
  SelectionMatrix sel;
  sel.n_rows = ca.n_sigma();
  sel.n_tx = tx.size();
  sel.n_rx = rx.size();
  sel.row_of_col.resize(sel.n_cols());
  for (int t = 0; t < sel.n_tx; ++t) {
    for (int r = 0; r < sel.n_rx; ++r) {
      LatticePoint p{tx.positions[t][0] + rx.positions[r][0],
                     tx.positions[t][1] + rx.positions[r][1]};
      auto it = row_of_point.find(p);
      if (it == row_of_point.end())
        throw std::invalid_argument("sum co-array does not cover all Tx/Rx pairs");
      sel.row_of_col[t * sel.n_rx + r] = it->second;
    }
  }
  return sel;
}

int q_lower_bound(int n_t, int n_r, int n_sigma) {
  if (n_sigma > n_t * n_r)
    throw std::invalid_argument("n_sigma cannot exceed n_t * n_r");
  double s = n_t + n_r;
  double disc = s * s - 4.0 * n_sigma;
  double q = (s - std::sqrt(disc)) / 2.0;
  return static_cast<int>(std::ceil(q - 1e-12));
}

}  // namespace coarray
