// Copyright 2026 The Mixtura Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MIXTURA_NUMERICS_HPP
#define MIXTURA_NUMERICS_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace mixtura {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Absolute/relative tolerance pair used by every approximate comparison.
struct Tolerance {
    double abs = 1e-10;
    double rel = 1e-10;

    /// Threshold against a reference scale (typically a norm).
    double at(double scale) const {
        return abs + rel * scale;
    }
};

inline constexpr double kDefaultSchmidtCutoff = 1e-12;

/// Conjugate transpose.
inline Matrix dagger(const Matrix &m) {
    return m.adjoint();
}

/// Kronecker product. Joint row index is i * b.rows() + k (left factor is
/// the slow index), matching the bipartite index convention used throughout.
Matrix tensor(const Matrix &a, const Matrix &b);

/// Throws InvariantViolation if any entry is NaN or Inf.
void require_finite(const Matrix &m, const char *what);

/// Multiplies v by a unit phase so its first component of magnitude > tol_abs
/// is real and positive. Zero vectors are returned unchanged.
CVector fix_phase(const CVector &v, double tol_abs = 1e-10);

struct EigResult {
    RVector values;  // descending
    Matrix vectors;  // orthonormal columns, values(j) <-> vectors.col(j)
};

/// Spectral decomposition of a Hermitian matrix. Eigenvalues are sorted
/// descending; eigenvectors are phase-fixed, and within a degenerate cluster
/// ordered lexicographically by (-|v_0|, -|v_1|, ...).
/// Throws NotHermitian if ||m - dagger(m)|| exceeds the tolerance.
EigResult eig_hermitian(const Matrix &m, const Tolerance &tol = {});

struct SvdResult {
    Matrix left;       // orthonormal columns
    RVector singulars; // descending, >= 0
    Matrix right;      // orthonormal columns; m = left * diag(singulars) * dagger(right)
};

/// Thin SVD with left singular vectors phase-fixed (the compensating phase is
/// pushed into the right factor so the reconstruction is preserved).
SvdResult svd(const Matrix &m, const Tolerance &tol = {});

/// Extends a set of orthonormal columns to a full orthonormal basis of the
/// ambient space, drawing completion vectors from the standard basis in order.
/// Returns a square unitary matrix whose first columns are the inputs.
Matrix complete_basis(const std::vector<CVector> &columns, Index dim,
                      double tol_abs = 1e-10);

/// Residual of ||a - e^{i theta} b|| minimized over the unit phase theta.
/// States are rays; this is the ray distance between two vectors.
double phase_invariant_distance(const CVector &a, const CVector &b);

} // namespace mixtura

#endif
