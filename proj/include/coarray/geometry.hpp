// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <vector>

#include "coarray/types.hpp"

namespace coarray {

/// Integer lattice point in units of half a wavelength. 1-D geometries use
/// only the x coordinate (z = 0).
using LatticePoint = std::array<int, 2>;

enum class ArrayLabel { ULA, MRA, URA, BoundaryArray, Custom };

std::string to_string(ArrayLabel label);
ArrayLabel array_label_from_string(const std::string& s);

/// Element positions of a Tx or Rx aperture on the integer lattice
/// (unit spacing = lambda/2). Positions are pairwise distinct.
struct ArrayGeometry {
  std::vector<LatticePoint> positions;
  int dim = 1;  // 1 or 2
  ArrayLabel label = ArrayLabel::Custom;

  int size() const { return static_cast<int>(positions.size()); }

  /// x coordinates as a vector (and z for dim == 2).
  RVec coords_x() const;
  RVec coords_z() const;
};

ArrayGeometry make_custom(std::vector<LatticePoint> positions, int dim);
ArrayGeometry make_custom_1d(const std::vector<int>& positions);

/// n contiguous positions centered at the origin; even n uses -n/2 .. n/2-1.
ArrayGeometry make_ula(int n);

/// Linear minimum-redundancy array (largest contiguous sum co-array for the
/// given element count). Catalog covers n <= 10.
ArrayGeometry make_mra(int n);

/// Full (side+1)^2 planar grid with the given side length in unit spacings.
ArrayGeometry make_ura(int side);

/// Perimeter points of the (side+1)^2 grid; sum-co-array equivalent to the
/// URA of the same side.
ArrayGeometry make_boundary(int side);

/// Virtual sum co-array: distinct pairwise sums of Tx and Rx positions,
/// sorted lexicographically ascending, with per-point multiplicities.
struct SumCoarray {
  std::vector<LatticePoint> support;
  std::vector<int> multiplicity;
  int dim = 1;
  int n_tx = 0;
  int n_rx = 0;

  int n_sigma() const { return static_cast<int>(support.size()); }
};

SumCoarray sum_coarray(const ArrayGeometry& tx, const ArrayGeometry& rx);

/// Binary map from the N_t*N_r virtual Kronecker elements to the N_Sigma
/// sum co-array positions. Column m (0-based) corresponds to the Tx/Rx pair
/// (t = m / N_r, r = m % N_r); each column has exactly one nonzero row.
struct SelectionMatrix {
  std::vector<int> row_of_col;  // length n_tx * n_rx
  int n_rows = 0;               // N_Sigma
  int n_tx = 0;
  int n_rx = 0;

  int n_cols() const { return n_tx * n_rx; }
  RMat to_dense() const;

  /// w_Sigma = Upsilon vec(W), with W of shape N_r x N_t (column-major vec).
  CVec apply(const CMat& w) const;

  /// Upsilon^T y: expands a co-array-indexed vector to the Kronecker index.
  CVec apply_adjoint(const CVec& y) const;
};

SelectionMatrix selection_matrix(const ArrayGeometry& tx, const ArrayGeometry& rx,
                                 const SumCoarray& ca);

/// Lower bound on the number of component images needed to realize an
/// arbitrary co-array weight vector: ceil((Nt+Nr-sqrt((Nt+Nr)^2-4*Ns))/2).
int q_lower_bound(int n_t, int n_r, int n_sigma);

}  // namespace coarray
