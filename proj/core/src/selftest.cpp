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

#include "mixtura/selftest.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "mixtura/decompositions.hpp"
#include "mixtura/errors.hpp"
#include "mixtura/random_states.hpp"
#include "mixtura/scenarios.hpp"
#include "mixtura/states.hpp"

namespace mixtura {

namespace {

/// Per-suite bookkeeping: record residuals, fail on the first violated bound.
struct Recorder {
    SuiteResult result;

    explicit Recorder(std::string name) {
        result.name = std::move(name);
        result.passed = true;
        result.trials = 0;
        result.worst_residual = 0.0;
    }

    void residual(double value, double bound, const std::string &what) {
        result.worst_residual = std::max(result.worst_residual, value);
        if (!(value <= bound) && result.passed) {
            result.passed = false;
            result.detail = what + " residual " + std::to_string(value) +
                            " exceeds " + std::to_string(bound);
        }
    }

    void check(bool ok, const std::string &what) {
        if (!ok && result.passed) {
            result.passed = false;
            result.detail = what;
        }
    }

    template <class Fn>
    void expect_throw(const char *code, Fn &&fn, const std::string &what) {
        try {
            fn();
            check(false, what + ": expected " + code);
        } catch (const Error &e) {
            check(e.code() == code,
                  what + ": expected " + code + ", got " + e.code());
        }
    }
};

// Oracle partial trace going through explicit basis-ket quadratic forms
// rather than joint-index arithmetic.
Matrix oracle_partial_trace(const Matrix &joint, const BipartiteDims &dims,
                            Keep keep) {
    Index d_kept = keep == Keep::A ? dims.dimA : dims.dimB;
    Index d_gone = keep == Keep::A ? dims.dimB : dims.dimA;
    Matrix out = Matrix::Zero(d_kept, d_kept);
    for (Index i = 0; i < d_kept; ++i) {
        for (Index j = 0; j < d_kept; ++j) {
            Matrix ei = Matrix::Zero(d_kept, 1);
            Matrix ej = Matrix::Zero(d_kept, 1);
            ei(i, 0) = 1.0;
            ej(j, 0) = 1.0;
            for (Index k = 0; k < d_gone; ++k) {
                Matrix ek = Matrix::Zero(d_gone, 1);
                ek(k, 0) = 1.0;
                Matrix bra = keep == Keep::A ? tensor(ei, ek) : tensor(ek, ei);
                Matrix ket = keep == Keep::A ? tensor(ej, ek) : tensor(ek, ej);
                out(i, j) += (bra.adjoint() * joint * ket)(0, 0);
            }
        }
    }
    return out;
}

SuiteResult suite_partial_trace(StateSampler &sampler) {
    Recorder rec("partial_trace_oracle");
    for (int t = 0; t < 500; ++t) {
        BipartiteDims dims{sampler.index(2, 4), sampler.index(2, 5)};
        DensityOperator rho = sampler.density(dims.joint(), dims.joint());
        for (Keep keep : {Keep::A, Keep::B}) {
            Matrix fast = partial_trace_matrix(rho.matrix(), dims, keep);
            Matrix slow = oracle_partial_trace(rho.matrix(), dims, keep);
            rec.residual((fast - slow).cwiseAbs().maxCoeff(), 1e-12,
                         "entrywise oracle mismatch");
        }
        ++rec.result.trials;
    }
    return rec.result;
}

SuiteResult suite_schmidt(StateSampler &sampler) {
    Recorder rec("schmidt_round_trip");
    for (int t = 0; t < 500; ++t) {
        BipartiteDims dims{sampler.index(2, 4), sampler.index(2, 5)};
        Ket psi = sampler.ket(dims.joint());
        SchmidtDecomposition sd = schmidt(psi, dims);

        CVector rebuilt = CVector::Zero(dims.joint());
        for (Index s = 0; s < sd.rank(); ++s) {
            for (Index i = 0; i < dims.dimA; ++i) {
                for (Index k = 0; k < dims.dimB; ++k) {
                    rebuilt(i * dims.dimB + k) += sd.coeffs(s) *
                                                  sd.left[s].amps()(i) *
                                                  sd.right[s].amps()(k);
                }
            }
        }
        rec.residual((psi.amps() - rebuilt).norm(), 1e-10,
                     "Schmidt reconstruction");

        auto marginal = partial_trace(projector(psi), dims, Keep::A);
        auto eig = eig_hermitian(marginal.matrix());
        double worst = 0.0;
        for (Index s = 0; s < eig.values.size(); ++s) {
            double coeff2 =
                s < sd.rank() ? sd.coeffs(s) * sd.coeffs(s) : 0.0;
            worst = std::max(worst, std::abs(coeff2 - eig.values(s)));
        }
        rec.residual(worst, 1e-10, "coeff^2 vs marginal spectrum");
        ++rec.result.trials;
    }
    return rec.result;
}

SuiteResult suite_purify(StateSampler &sampler) {
    Recorder rec("purification");
    for (int t = 0; t < 500; ++t) {
        Index d = sampler.index(2, 6);
        Index rank = sampler.index(1, d);
        DensityOperator rho = sampler.density(d, rank);
        Purification pure = purify(rho);
        auto recovered = partial_trace(projector(pure.psi), pure.dims, Keep::A);
        rec.residual((recovered.matrix() - rho.matrix()).norm(), 1e-10,
                     "purify round trip");
        rec.check(pure.dims.dimB <= d, "ancilla larger than system");
        ++rec.result.trials;
    }
    return rec.result;
}

SuiteResult suite_lemma_unitary(StateSampler &sampler) {
    Recorder rec("ghjw_lemma");
    for (int t = 0; t < 200; ++t) {
        BipartiteDims dims{sampler.index(2, 4), sampler.index(2, 4)};
        Ket psi = sampler.ket(dims.joint());

        // Equal marginals by construction: rotate the B side.
        Matrix rotation = sampler.unitary(dims.dimB);
        Ket phi(tensor(Matrix::Identity(dims.dimA, dims.dimA),
                       rotation.adjoint()) *
                psi.amps());

        Matrix u = lemma_unitary(psi, phi, dims);
        rec.residual((u.adjoint() * u -
                      Matrix::Identity(dims.dimB, dims.dimB))
                         .norm(),
                     1e-10, "unitarity");
        CVector mapped =
            tensor(Matrix::Identity(dims.dimA, dims.dimA), u) * phi.amps();
        rec.residual(phase_invariant_distance(psi.amps(), mapped), 1e-9,
                     "(I (x) U) phi vs psi");
        ++rec.result.trials;
    }

    // Mismatched marginals must be rejected.
    for (int t = 0; t < 20; ++t) {
        BipartiteDims dims{sampler.index(2, 4), sampler.index(2, 4)};
        Ket psi = sampler.ket(dims.joint());
        Ket phi = sampler.ket(dims.joint());
        Matrix ma = partial_trace_matrix(projector(psi).matrix(), dims,
                                         Keep::A);
        Matrix mb = partial_trace_matrix(projector(phi).matrix(), dims,
                                         Keep::A);
        if ((ma - mb).norm() < 1e-6) {
            continue; // astronomically unlikely; not a mismatch case
        }
        rec.expect_throw(
            "MarginalsDiffer",
            [&] { (void)lemma_unitary(psi, phi, dims); },
            "independent random pair");
    }
    return rec.result;
}

// A decomposition of rho generated by a unitary acting on (sqrt(w_1), ...,
// sqrt(w_r), 0, ...): members phi_j with f_j phi_j = sum_s sqrt(w_s)
// conj(u_js) |p_s>. Always mixes back to rho.
Ensemble rotated_decomposition(const DensityOperator &rho, Index members,
                               StateSampler &sampler) {
    auto eig = eig_hermitian(rho.matrix());
    Index rank = 0;
    while (rank < eig.values.size() && eig.values(rank) > 1e-10) {
        ++rank;
    }
    Matrix u = sampler.unitary(members);
    std::vector<EnsembleEntry> entries;
    for (Index j = 0; j < members; ++j) {
        CVector vec = CVector::Zero(rho.dim());
        for (Index s = 0; s < std::min(rank, members); ++s) {
            vec += std::sqrt(eig.values(s)) * std::conj(u(j, s)) *
                   eig.vectors.col(s);
        }
        double f = vec.squaredNorm();
        if (f < 1e-6) {
            throw ZeroVector("degenerate member"); // caller resamples
        }
        entries.push_back({f, Ket(vec / std::sqrt(f))});
    }
    return Ensemble(std::move(entries));
}

SuiteResult suite_ghjw_steer(StateSampler &sampler) {
    Recorder rec("ghjw_steering");
    int done = 0;
    while (done < 200) {
        Index d = sampler.index(2, 4);
        Index rank = sampler.index(2, d);
        DensityOperator rho = sampler.density(d, rank);
        Purification pure = purify(rho);

        Ensemble target = [&]() -> Ensemble {
            for (;;) {
                try {
                    return rotated_decomposition(rho, pure.dims.dimB,
                                                 sampler);
                } catch (const Error &) {
                    // near-duplicate or vanishing member; resample
                }
            }
        }();

        SteeringResult steered = ghjw_steer(pure.psi, pure.dims, target);
        rec.residual(steered.reconstruction_error, 1e-9, "reconstruction");

        double basis_err = 0.0;
        for (size_t i = 0; i < steered.ancilla_basis.size(); ++i) {
            for (size_t j = 0; j < steered.ancilla_basis.size(); ++j) {
                Complex overlap = steered.ancilla_basis[i].inner(
                    steered.ancilla_basis[j]);
                basis_err = std::max(
                    basis_err, std::abs(overlap - (i == j ? 1.0 : 0.0)));
            }
        }
        rec.residual(basis_err, 1e-10, "ancilla basis orthonormality");

        // Weight recovery: the amplitude <phi_j (x) c_j | Psi> must square
        // to f_j.
        double weight_err = 0.0;
        for (size_t j = 0; j < target.entries().size(); ++j) {
            CVector probe = CVector::Zero(pure.dims.joint());
            for (Index i = 0; i < pure.dims.dimA; ++i) {
                for (Index k = 0; k < pure.dims.dimB; ++k) {
                    probe(i * pure.dims.dimB + k) =
                        target.entries()[j].ket.amps()(i) *
                        steered.ancilla_basis[j].amps()(k);
                }
            }
            double recovered = std::norm(probe.dot(pure.psi.amps()));
            weight_err = std::max(
                weight_err, std::abs(recovered - target.entries()[j].weight));
        }
        rec.residual(weight_err, 1e-9, "weight recovery");
        ++rec.result.trials;
        ++done;
    }

    // A target that does not mix to the marginal.
    for (int t = 0; t < 20; ++t) {
        Index d = sampler.index(2, 4);
        DensityOperator rho = sampler.density(d, d);
        Purification pure = purify(rho);
        std::vector<double> w = sampler.weights(2, 0.2);
        Ensemble bogus({{w[0], sampler.ket(d)}, {w[1], sampler.ket(d)}});
        Matrix mix = convex_mix(bogus).matrix();
        Matrix marginal = partial_trace_matrix(projector(pure.psi).matrix(),
                                               pure.dims, Keep::A);
        if ((mix - marginal).norm() < 1e-6) {
            continue;
        }
        rec.expect_throw(
            "NotADecomposition",
            [&] { (void)ghjw_steer(pure.psi, pure.dims, bogus); },
            "bogus target");
    }

    // More members than dim H_B.
    for (int t = 0; t < 20; ++t) {
        Index d = sampler.index(2, 4);
        Index rank = sampler.index(2, d);
        DensityOperator rho = sampler.density(d, rank);
        Purification pure = purify(rho);
        try {
            Ensemble big = rotated_decomposition(rho, pure.dims.dimB + 1,
                                                 sampler);
            rec.expect_throw(
                "AncillaTooSmall",
                [&] { (void)ghjw_steer(pure.psi, pure.dims, big); },
                "oversized decomposition");
        } catch (const Error &) {
            // degenerate sample; skip
        }
    }
    return rec.result;
}

SuiteResult suite_despagnat() {
    Recorder rec("hughes_reconstruction");
    std::vector<double> a{0.6, 0.4};
    std::vector<Ket> basis{Ket::standard_basis(2, 0),
                           Ket::standard_basis(2, 1)};
    ScenarioReport report = despagnat_scenario(
        basis, basis, a, a, schmidt_diagonal_coefficients(a));

    auto finding = [&](const std::string &label) {
        for (const auto &[name, value] : report.findings) {
            if (name == label) {
                return value;
            }
        }
        return std::numeric_limits<double>::quiet_NaN();
    };

    // Purity of the naive four-state mixture is sum (a_j b_k)^2.
    double expected = 0.0;
    for (double aj : a) {
        for (double bk : a) {
            expected += aj * bk * aj * bk;
        }
    }
    rec.residual(std::abs(finding("purity_naive_mixture") - expected), 1e-12,
                 "naive purity");
    rec.residual(std::abs(finding("purity_pure_state") - 1.0), 1e-12,
                 "pure purity");
    rec.residual(finding("naive_marginal_residual_A"), 1e-10,
                 "naive marginal A");
    rec.residual(finding("naive_marginal_residual_B"), 1e-10,
                 "naive marginal B");
    rec.residual(finding("pure_marginal_residual_A"), 1e-10,
                 "pure marginal A");
    rec.residual(finding("pure_marginal_residual_B"), 1e-10,
                 "pure marginal B");
    rec.check(report.verdict == Verdict::PureCompositeContradictsMixedClaim,
              "verdict should be PureCompositeContradictsMixedClaim");
    rec.result.trials = 1;
    return rec.result;
}

Ket bounded_overlap_ket(StateSampler &sampler, const std::vector<Ket> &others,
                        Index dim, double max_overlap) {
    for (;;) {
        Ket candidate = sampler.ket(dim);
        bool ok = true;
        for (const auto &other : others) {
            ok = ok && std::abs(candidate.inner(other)) <= max_overlap;
        }
        if (ok) {
            return candidate;
        }
    }
}

SuiteResult suite_preparation(StateSampler &sampler) {
    Recorder rec("preparation_dichotomy");
    for (int t = 0; t < 200; ++t) {
        Index count = sampler.index(2, 3);
        Index ds = sampler.index(count, 5);
        Index de = sampler.index(2, 4);
        std::vector<double> w =
            sampler.weights(count, t % 2 == 0 ? 0.0 : 0.05);

        std::vector<PreparationEntry> entries;
        if (t % 2 == 0) {
            // Collinear environments: all eta equal up to phase.
            Ket eta0 = sampler.ket(de);
            for (Index s = 0; s < count; ++s) {
                Complex phase =
                    std::polar(1.0, sampler.uniform(0.0, 6.283185));
                entries.push_back({std::sqrt(w[static_cast<size_t>(s)]) *
                                       std::polar(1.0, sampler.uniform(
                                                           0.0, 6.283185)),
                                   sampler.ket(ds), Ket(phase * eta0.amps())});
            }
            ScenarioReport report =
                prepare_with_environment(PreparationModel(entries));
            rec.check(report.verdict == Verdict::Pure,
                      "collinear case should be Pure");
            rec.residual(1.0 - report.findings[0].second, 1e-9,
                         "1 - purity, collinear case");
        } else {
            // Distinguishing environments with overlap capped at 0.99 and
            // well-separated system outputs.
            std::vector<Ket> alphas;
            std::vector<Ket> etas;
            for (Index s = 0; s < count; ++s) {
                alphas.push_back(
                    bounded_overlap_ket(sampler, alphas, ds, 0.9));
                etas.push_back(bounded_overlap_ket(sampler, etas, de, 0.99));
            }
            for (Index s = 0; s < count; ++s) {
                entries.push_back({std::sqrt(w[static_cast<size_t>(s)]),
                                   alphas[static_cast<size_t>(s)],
                                   etas[static_cast<size_t>(s)]});
            }
            ScenarioReport report =
                prepare_with_environment(PreparationModel(entries));
            rec.check(report.verdict == Verdict::ImproperMixture,
                      "non-collinear case should be ImproperMixture");
            rec.check(report.findings[0].second < 1.0 - 1e-6,
                      "non-collinear purity too close to 1");
        }
        ++rec.result.trials;
    }
    return rec.result;
}

SuiteResult suite_premeasurement(StateSampler &sampler) {
    Recorder rec("premeasurement_decoherence");
    for (int t = 0; t < 200; ++t) {
        Index n = sampler.index(2, 6);
        Index dm = n + sampler.index(0, 2);
        CVector amps = sampler.ket_vector(n);
        std::vector<Complex> c(amps.data(), amps.data() + n);

        Matrix pointer = sampler.unitary(dm);
        std::vector<Ket> basis;
        for (Index s = 0; s < n; ++s) {
            basis.emplace_back(pointer.col(s));
        }

        ScenarioReport report = premeasurement(c, basis);
        double residual = std::numeric_limits<double>::quiet_NaN();
        for (const auto &[label, value] : report.findings) {
            if (label == "mixture_residual") {
                residual = value;
            }
        }
        rec.residual(residual, 1e-12, "rho_S vs distinguishable mixture");
        ++rec.result.trials;
    }
    return rec.result;
}

} // namespace

std::vector<SuiteResult> run_selftest(uint64_t seed) {
    StateSampler sampler(seed);
    std::vector<SuiteResult> results;
    results.push_back(suite_partial_trace(sampler));
    results.push_back(suite_schmidt(sampler));
    results.push_back(suite_purify(sampler));
    results.push_back(suite_lemma_unitary(sampler));
    results.push_back(suite_ghjw_steer(sampler));
    results.push_back(suite_despagnat());
    results.push_back(suite_preparation(sampler));
    results.push_back(suite_premeasurement(sampler));
    return results;
}

} // namespace mixtura
