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

#include "mixtura/scenarios.hpp"

#include <cmath>
#include <limits>

#include "mixtura/errors.hpp"

namespace mixtura {

namespace {

void require_orthonormal(const std::vector<Ket> &kets, const Tolerance &tol,
                         const char *what) {
    for (size_t i = 0; i < kets.size(); ++i) {
        for (size_t j = i; j < kets.size(); ++j) {
            Complex overlap = kets[i].inner(kets[j]);
            double expected = i == j ? 1.0 : 0.0;
            if (std::abs(overlap - expected) > tol.abs + tol.rel) {
                throw InvariantViolation(std::string(what) +
                                         " is not an orthonormal set");
            }
        }
    }
}

void require_weights(const std::vector<double> &w, const char *what) {
    double sum = 0.0;
    for (double x : w) {
        if (!(x > 0.0)) {
            throw WeightsNotNormalized(std::string(what) +
                                       " has a non-positive weight");
        }
        sum += x;
    }
    if (std::abs(sum - 1.0) > kNormalizationSlack) {
        throw WeightsNotNormalized(std::string(what) + " weights sum to " +
                                   std::to_string(sum));
    }
}

} // namespace

PreparationModel::PreparationModel(std::vector<PreparationEntry> entries)
    : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw WeightsNotNormalized("preparation model is empty");
    }
    double sum = 0.0;
    for (const auto &e : entries_) {
        if (e.alpha.dim() != entries_.front().alpha.dim() ||
            e.eta.dim() != entries_.front().eta.dim()) {
            throw DimensionMismatch(
                "preparation entries of unequal dimensions");
        }
        sum += std::norm(e.gamma);
    }
    if (std::abs(sum - 1.0) > kNormalizationSlack) {
        throw NotNormalized("preparation amplitudes have squared sum " +
                            std::to_string(sum));
    }
}

const char *verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pure:
            return "Pure";
        case Verdict::ImproperMixture:
            return "ImproperMixture";
        case Verdict::PureCompositeContradictsMixedClaim:
            return "PureCompositeContradictsMixedClaim";
    }
    return "Unknown";
}

Ket combine_indistinguishable(const std::vector<Complex> &amplitudes,
                              const std::vector<Ket> &kets, double cutoff) {
    if (amplitudes.size() != kets.size() || kets.empty()) {
        throw DimensionMismatch(
            "amplitude and ket lists must be equal-length and non-empty");
    }
    CVector sum = CVector::Zero(kets.front().dim());
    for (size_t s = 0; s < kets.size(); ++s) {
        if (kets[s].dim() != sum.size()) {
            throw DimensionMismatch("kets of unequal dimension");
        }
        sum += amplitudes[s] * kets[s].amps();
    }
    double norm = sum.norm();
    if (norm <= cutoff) {
        throw ZeroVector("amplitudes cancel; combined vector has norm " +
                         std::to_string(norm));
    }
    return Ket(sum / norm);
}

DensityOperator combine_distinguishable(const std::vector<double> &weights,
                                        const std::vector<Ket> &kets,
                                        const Tolerance &tol) {
    if (weights.size() != kets.size() || kets.empty()) {
        throw DimensionMismatch(
            "weight and ket lists must be equal-length and non-empty");
    }
    require_weights(weights, "combine_distinguishable");
    Index d = kets.front().dim();
    Matrix sum = Matrix::Zero(d, d);
    for (size_t s = 0; s < kets.size(); ++s) {
        if (kets[s].dim() != d) {
            throw DimensionMismatch("kets of unequal dimension");
        }
        sum += weights[s] * (kets[s].amps() * kets[s].amps().adjoint());
    }
    return DensityOperator(std::move(sum), tol);
}

Matrix schmidt_diagonal_coefficients(const std::vector<double> &a) {
    require_weights(a, "schmidt_diagonal_coefficients");
    Index n = static_cast<Index>(a.size());
    Matrix psi = Matrix::Zero(n, n);
    for (Index j = 0; j < n; ++j) {
        psi(j, j) = std::sqrt(a[static_cast<size_t>(j)]);
    }
    return psi;
}

ScenarioReport despagnat_scenario(const std::vector<Ket> &u_basis,
                                  const std::vector<Ket> &v_basis,
                                  const std::vector<double> &a,
                                  const std::vector<double> &b,
                                  const Matrix &psi_coeffs,
                                  const Tolerance &tol) {
    if (u_basis.size() != a.size() || v_basis.size() != b.size() ||
        psi_coeffs.rows() != static_cast<Index>(a.size()) ||
        psi_coeffs.cols() != static_cast<Index>(b.size())) {
        throw DimensionMismatch("bases, weights and coefficients disagree");
    }
    require_orthonormal(u_basis, tol, "u basis");
    require_orthonormal(v_basis, tol, "v basis");
    require_weights(a, "a");
    require_weights(b, "b");
    for (const auto *w : {&a, &b}) {
        for (size_t i = 0; i < w->size(); ++i) {
            for (size_t j = i + 1; j < w->size(); ++j) {
                if (std::abs((*w)[i] - (*w)[j]) <= tol.abs + tol.rel) {
                    throw DegenerateWeights(
                        "weights " + std::to_string((*w)[i]) + " and " +
                        std::to_string((*w)[j]) + " coincide");
                }
            }
        }
    }
    if (std::abs(psi_coeffs.norm() - 1.0) > kNormalizationSlack) {
        throw NotNormalized("psi coefficients are not normalized");
    }

    Index du = u_basis.front().dim();
    Index dv = v_basis.front().dim();
    BipartiteDims dims{du, dv};

    // Pure reconstruction P = |Psi><Psi| with Psi = sum_jk psi_jk |u_j v_k>.
    CVector joint = CVector::Zero(dims.joint());
    for (size_t j = 0; j < a.size(); ++j) {
        for (size_t k = 0; k < b.size(); ++k) {
            Complex amp = psi_coeffs(static_cast<Index>(j),
                                     static_cast<Index>(k));
            for (Index i = 0; i < du; ++i) {
                for (Index l = 0; l < dv; ++l) {
                    joint(i * dv + l) +=
                        amp * u_basis[j].amps()(i) * v_basis[k].amps()(l);
                }
            }
        }
    }
    Matrix pure = joint * joint.adjoint();

    // Naive mixture M = sum_jk a_j b_k |u_j v_k><u_j v_k|.
    Matrix naive = Matrix::Zero(dims.joint(), dims.joint());
    for (size_t j = 0; j < a.size(); ++j) {
        for (size_t k = 0; k < b.size(); ++k) {
            CVector uv = CVector::Zero(dims.joint());
            for (Index i = 0; i < du; ++i) {
                for (Index l = 0; l < dv; ++l) {
                    uv(i * dv + l) =
                        u_basis[j].amps()(i) * v_basis[k].amps()(l);
                }
            }
            naive += a[j] * b[k] * (uv * uv.adjoint());
        }
    }

    Matrix target_a = Matrix::Zero(du, du);
    for (size_t j = 0; j < a.size(); ++j) {
        target_a += a[j] * (u_basis[j].amps() * u_basis[j].amps().adjoint());
    }
    Matrix target_b = Matrix::Zero(dv, dv);
    for (size_t k = 0; k < b.size(); ++k) {
        target_b += b[k] * (v_basis[k].amps() * v_basis[k].amps().adjoint());
    }

    Matrix pure_marg_a = partial_trace_matrix(pure, dims, Keep::A);
    Matrix pure_marg_b = partial_trace_matrix(pure, dims, Keep::B);
    double marg_a_err = (pure_marg_a - target_a).norm();
    double marg_b_err = (pure_marg_b - target_b).norm();
    if (marg_a_err > tol.abs + tol.rel || marg_b_err > tol.abs + tol.rel) {
        throw MarginalMismatch(
            "psi coefficients do not reproduce the claimed marginals "
            "(residuals " +
            std::to_string(marg_a_err) + ", " + std::to_string(marg_b_err) +
            ")");
    }

    DensityOperator mixture(naive, tol);
    DensityOperator reconstruction(pure, tol);
    double purity_naive = purity(mixture);
    double purity_pure = purity(reconstruction);

    ScenarioReport report;
    report.states.emplace_back("naive_mixture", mixture.matrix());
    report.states.emplace_back("pure_state", reconstruction.matrix());
    report.states.emplace_back("marginal_A", pure_marg_a);
    report.states.emplace_back("marginal_B", pure_marg_b);
    report.findings.emplace_back("purity_naive_mixture", purity_naive);
    report.findings.emplace_back("purity_pure_state", purity_pure);
    report.findings.emplace_back(
        "naive_marginal_residual_A",
        (partial_trace_matrix(naive, dims, Keep::A) - target_a).norm());
    report.findings.emplace_back(
        "naive_marginal_residual_B",
        (partial_trace_matrix(naive, dims, Keep::B) - target_b).norm());
    report.findings.emplace_back("pure_marginal_residual_A", marg_a_err);
    report.findings.emplace_back("pure_marginal_residual_B", marg_b_err);
    report.verdict = purity_naive < 1.0 - (tol.abs + tol.rel)
                         ? Verdict::PureCompositeContradictsMixedClaim
                         : Verdict::Pure;
    return report;
}

ScenarioReport prepare_with_environment(const PreparationModel &model,
                                        const Tolerance &tol) {
    Index ds = model.system_dim();
    Index de = model.environment_dim();
    BipartiteDims dims{ds, de};

    CVector joint = CVector::Zero(dims.joint());
    for (const auto &entry : model.entries()) {
        for (Index i = 0; i < ds; ++i) {
            for (Index k = 0; k < de; ++k) {
                joint(i * de + k) +=
                    entry.gamma * entry.alpha.amps()(i) * entry.eta.amps()(k);
            }
        }
    }
    double norm = joint.norm();
    if (norm <= kDefaultSchmidtCutoff) {
        throw ZeroVector("preparation amplitudes cancel");
    }
    joint /= norm;

    double min_overlap = 1.0;
    const auto &entries = model.entries();
    for (size_t i = 0; i < entries.size(); ++i) {
        for (size_t j = i + 1; j < entries.size(); ++j) {
            min_overlap = std::min(
                min_overlap, std::abs(entries[i].eta.inner(entries[j].eta)));
        }
    }
    bool collinear = min_overlap >= kCollinearityThreshold;

    DensityOperator rho_s(partial_trace_matrix(joint * joint.adjoint(), dims,
                                               Keep::A),
                          tol);
    bool pure = is_pure(rho_s, tol);

    ScenarioReport report;
    report.states.emplace_back("rho_S", rho_s.matrix());
    report.states.emplace_back("joint_ket", joint);
    report.findings.emplace_back("purity_rho_S", purity(rho_s));
    report.findings.emplace_back("joint_norm_before_renormalization", norm);
    report.findings.emplace_back("min_environment_overlap", min_overlap);
    report.findings.emplace_back("environments_collinear",
                                 collinear ? 1.0 : 0.0);
    report.verdict = pure ? Verdict::Pure : Verdict::ImproperMixture;
    return report;
}

ScenarioReport premeasurement(const std::vector<Complex> &system_amps,
                              const std::vector<Ket> &pointer_basis,
                              const Tolerance &tol) {
    Index n = static_cast<Index>(system_amps.size());
    if (pointer_basis.size() != system_amps.size() || system_amps.empty()) {
        throw DimensionMismatch(
            "system amplitudes and pointer basis must have the same count");
    }
    require_orthonormal(pointer_basis, tol, "pointer basis");
    double mass = 0.0;
    for (const auto &c : system_amps) {
        mass += std::norm(c);
    }
    if (std::abs(mass - 1.0) > kNormalizationSlack) {
        throw NotNormalized("system amplitudes have squared sum " +
                            std::to_string(mass));
    }

    Index dm = pointer_basis.front().dim();
    if (dm < n) {
        throw DimensionMismatch("pointer space too small for " +
                                std::to_string(n) + " outcomes");
    }
    BipartiteDims dims{n, dm};

    CVector joint = CVector::Zero(dims.joint());
    for (Index s = 0; s < n; ++s) {
        for (Index k = 0; k < dm; ++k) {
            joint(s * dm + k) = system_amps[static_cast<size_t>(s)] *
                                pointer_basis[static_cast<size_t>(s)].amps()(k);
        }
    }
    DensityOperator rho_s(partial_trace_matrix(joint * joint.adjoint(), dims,
                                               Keep::A),
                          tol);

    // The appropriate mixture of distinguishable alternatives; drop exact
    // zero-weight outcomes.
    std::vector<double> weights;
    std::vector<Ket> outcomes;
    for (Index s = 0; s < n; ++s) {
        double w = std::norm(system_amps[static_cast<size_t>(s)]);
        if (w > 0.0) {
            weights.push_back(w);
            outcomes.push_back(Ket::standard_basis(n, s));
        }
    }
    DensityOperator landau = combine_distinguishable(weights, outcomes, tol);

    double max_offdiag = 0.0;
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            if (i != j) {
                max_offdiag =
                    std::max(max_offdiag, std::abs(rho_s.matrix()(i, j)));
            }
        }
    }

    ScenarioReport report;
    report.states.emplace_back("rho_S", rho_s.matrix());
    report.states.emplace_back("landau_mixture", landau.matrix());
    report.findings.emplace_back("purity_rho_S", purity(rho_s));
    report.findings.emplace_back("mixture_residual",
                                 (rho_s.matrix() - landau.matrix()).norm());
    report.findings.emplace_back("max_offdiagonal", max_offdiag);
    report.verdict = is_pure(rho_s, tol) ? Verdict::Pure
                                         : Verdict::ImproperMixture;
    return report;
}

} // namespace mixtura
