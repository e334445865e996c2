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

#include "mixtura/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mixtura/errors.hpp"

namespace mixtura {

Matrix tensor(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

void require_finite(const Matrix &m, const char *what) {
    if (!m.allFinite()) {
        throw InvariantViolation(std::string(what) +
                                 " contains a non-finite entry");
    }
}

CVector fix_phase(const CVector &v, double tol_abs) {
    for (Index i = 0; i < v.size(); ++i) {
        double mag = std::abs(v(i));
        if (mag > tol_abs) {
            return v * (std::conj(v(i)) / mag);
        }
    }
    return v;
}

namespace {

// Lexicographic order on component magnitudes, largest first.
bool magnitude_less(const CVector &a, const CVector &b) {
    for (Index i = 0; i < a.size(); ++i) {
        double da = std::abs(a(i));
        double db = std::abs(b(i));
        if (std::abs(da - db) > 1e-12) {
            return da > db;
        }
    }
    return false;
}

} // namespace

EigResult eig_hermitian(const Matrix &m, const Tolerance &tol) {
    require_finite(m, "eig_hermitian input");
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("eig_hermitian requires a square matrix");
    }
    double asym = (m - m.adjoint()).norm();
    if (asym > tol.at(m.norm())) {
        throw NotHermitian("asymmetry norm " + std::to_string(asym));
    }

    Eigen::SelfAdjointEigenSolver<Matrix> solver((m + m.adjoint()) / 2.0);
    Index n = m.rows();

    EigResult out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    // Eigen returns ascending order.
    for (Index j = 0; j < n; ++j) {
        out.values(j) = solver.eigenvalues()(n - 1 - j);
        out.vectors.col(j) =
            fix_phase(solver.eigenvectors().col(n - 1 - j), tol.abs);
    }

    // Reorder within degenerate clusters for determinism.
    double scale = n > 0 ? std::abs(out.values(0)) : 0.0;
    double cluster_tol = std::max(tol.abs, tol.rel * scale);
    Index start = 0;
    while (start < n) {
        Index end = start + 1;
        while (end < n &&
               std::abs(out.values(end) - out.values(start)) <= cluster_tol) {
            ++end;
        }
        if (end - start > 1) {
            std::vector<CVector> cluster;
            for (Index j = start; j < end; ++j) {
                cluster.push_back(out.vectors.col(j));
            }
            std::stable_sort(cluster.begin(), cluster.end(), magnitude_less);
            for (Index j = start; j < end; ++j) {
                out.vectors.col(j) = cluster[static_cast<size_t>(j - start)];
            }
        }
        start = end;
    }
    return out;
}

SvdResult svd(const Matrix &m, const Tolerance &tol) {
    require_finite(m, "svd input");
    Eigen::JacobiSVD<Matrix> solver(m,
                                    Eigen::ComputeThinU | Eigen::ComputeThinV);

    SvdResult out;
    out.singulars = solver.singularValues();
    out.left = solver.matrixU();
    out.right = solver.matrixV();

    // Phase-fix U; the same phase must multiply the matching V column to keep
    // U * diag(s) * dagger(V) invariant.
    for (Index j = 0; j < out.left.cols(); ++j) {
        CVector u = out.left.col(j);
        for (Index i = 0; i < u.size(); ++i) {
            double mag = std::abs(u(i));
            if (mag > tol.abs) {
                Complex phase = std::conj(u(i)) / mag;
                out.left.col(j) *= phase;
                out.right.col(j) *= phase;
                break;
            }
        }
    }
    return out;
}

Matrix complete_basis(const std::vector<CVector> &columns, Index dim,
                      double tol_abs) {
    Matrix basis(dim, dim);
    Index count = 0;
    for (const auto &c : columns) {
        if (c.size() != dim) {
            throw DimensionMismatch("complete_basis column of wrong dimension");
        }
        if (count >= dim) {
            throw DimensionMismatch("complete_basis given too many columns");
        }
        CVector v = c;
        // Re-orthonormalize against what we already have; inputs are assumed
        // close to orthonormal.
        for (Index j = 0; j < count; ++j) {
            v -= basis.col(j).dot(v) * basis.col(j);
        }
        double norm = v.norm();
        if (norm < 0.5) {
            throw InvariantViolation(
                "complete_basis input columns are not independent");
        }
        basis.col(count++) = v / norm;
    }
    for (Index e = 0; e < dim && count < dim; ++e) {
        CVector v = CVector::Zero(dim);
        v(e) = 1.0;
        for (Index j = 0; j < count; ++j) {
            v -= basis.col(j).dot(v) * basis.col(j);
        }
        double norm = v.norm();
        if (norm > std::max(tol_abs, 1e-8)) {
            basis.col(count++) = fix_phase(v / norm, tol_abs);
        }
    }
    if (count < dim) {
        throw InvariantViolation("complete_basis failed to span the space");
    }
    return basis;
}

double phase_invariant_distance(const CVector &a, const CVector &b) {
    // The minimizing phase is the argument of <b|a>; applying it and
    // differencing directly avoids the sqrt(eps) cancellation floor of the
    // closed-form ||a||^2 + ||b||^2 - 2|<a|b>|.
    Complex overlap = b.dot(a);
    double mag = std::abs(overlap);
    Complex phase = mag > 0 ? overlap / mag : Complex(1.0, 0.0);
    return (a - phase * b).norm();
}

} // namespace mixtura
