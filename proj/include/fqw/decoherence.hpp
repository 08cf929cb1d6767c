// Copyright 2026 The fqwalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file decoherence.hpp
 * @brief Measure of decoherence D = sup ‖ρ_out − ρ_in‖ for the depolarizing channel.
 *
 * Closed forms for distinguishable particles and for fermions, and a seeded
 * random-search estimate of the supremum that checks them.
 */

#pragma once

#include "fqw/basis.hpp"
#include "fqw/evolution.hpp"
#include "fqw/types.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

namespace fqw {

namespace detail {

inline void check_decoherence_args(int n_nodes, double gamma, double t) {
    if (n_nodes < 2)
        throw InvalidConfig("decoherence measures require n_nodes >= 2");
    NoiseParams{gamma}.validate();
    check_time(t);
}

} // namespace detail

/// (1 − e^{−Γt})(1 − 1/N²)
inline double d_distinguishable(int n_nodes, double gamma, double t) {
    detail::check_decoherence_args(n_nodes, gamma, t);
    const double n2 = static_cast<double>(n_nodes) * n_nodes;
    return -std::expm1(-gamma * t) * (1.0 - 1.0 / n2);
}

/// (1 − e^{−Γt})(1 − 2/(N² − N))
inline double d_fermionic(int n_nodes, double gamma, double t) {
    detail::check_decoherence_args(n_nodes, gamma, t);
    const double n = n_nodes;
    return -std::expm1(-gamma * t) * (1.0 - 2.0 / (n * n - n));
}

struct DecoherenceReport {
    double gamma;
    double t;
    double d_dist;
    double d_fermi;
};

inline DecoherenceReport decoherence_report(int n_nodes, double gamma, double t) {
    return {gamma, t, d_distinguishable(n_nodes, gamma, t), d_fermionic(n_nodes, gamma, t)};
}

/// max |x| over spec(X) for Hermitian X.
inline double operator_norm(const CMatrix& hermitian) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian, Eigen::EigenvaluesOnly);
    const RVector& ev = es.eigenvalues();
    return ev.size() == 0 ? 0.0 : std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
}

/// ‖a − b‖ for factored densities sharing a spin factor: ‖(Δcoord) ⊗ ρs‖ = ‖Δcoord‖·‖ρs‖.
inline double operator_norm_distance(const FullDensity& a, const FullDensity& b) {
    if (a.n_nodes() != b.n_nodes())
        throw DimensionMismatch("densities disagree on n_nodes");
    if (detail::max_abs(a.spin() - b.spin()) > 0.0)
        return operator_norm(a.materialize() - b.materialize());
    return operator_norm(a.coord() - b.coord()) * operator_norm(a.spin());
}

/// ‖depolarize(ρ_in) − ρ_in‖ for the pure fermionic input coord ⊗ |↑↑⟩.
inline double depolarizing_deviation(int n_nodes, const CVector& coord, double gamma, double t) {
    detail::check_decoherence_args(n_nodes, gamma, t);
    const FullDensity in = FullDensity::pure_product(n_nodes, coord, SpinTriplet::up_up());
    const FullDensity out = detail::mix_toward(in, maximally_mixed_coord(n_nodes), gamma, t);
    return operator_norm_distance(out, in);
}

/// Unit-norm antisymmetric coordinate vector from a complex Gaussian ω (Haar-distributed on the subspace).
template <class Rng>
CVector random_antisymmetric_coord(int n_nodes, Rng& rng) {
    std::normal_distribution<double> g;
    CMatrix m(n_nodes, n_nodes);
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            m(r, c) = cplx(g(rng), g(rng));
    const CMatrix a = m - m.transpose();
    CVector v(static_cast<Eigen::Index>(n_nodes) * n_nodes);
    for (int i = 0; i < n_nodes; ++i)
        for (int j = 0; j < n_nodes; ++j)
            v(i * n_nodes + j) = a(i, j);
    return v / v.norm();
}

/**
 * Largest ‖ρ_out − ρ_in‖ over `samples` random pure antisymmetric coordinate
 * inputs (spin fixed to |↑↑⟩, on which the channel acts trivially).
 * Deterministic for a given seed.
 */
inline double empirical_sup_norm(int n_nodes, double gamma, double t, int samples, std::uint64_t seed) {
    detail::check_decoherence_args(n_nodes, gamma, t);
    if (samples < 1)
        throw InvalidConfig("samples must be >= 1");
    std::mt19937_64 rng(seed);
    const CMatrix rho_m = maximally_mixed_coord(n_nodes);
    const double shrink = -std::expm1(-gamma * t);
    double best = 0.0;
    for (int s = 0; s < samples; ++s) {
        const CVector v = random_antisymmetric_coord(n_nodes, rng);
        const CMatrix rho_in = v * v.adjoint();
        // depolarize(ρ_in) − ρ_in = (1 − e^{−Γt})(ρ_M − ρ_in), spin factor |↑↑⟩⟨↑↑| has norm 1
        best = std::max(best, shrink * operator_norm(rho_m - rho_in));
    }
    return best;
}

/// Same search for distinguishable particles: random pure states on all of
/// coordinate space, depolarized toward I/N².
inline double empirical_sup_norm_distinguishable(int n_nodes, double gamma, double t, int samples,
                                                 std::uint64_t seed) {
    detail::check_decoherence_args(n_nodes, gamma, t);
    if (samples < 1)
        throw InvalidConfig("samples must be >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    const Eigen::Index d = static_cast<Eigen::Index>(n_nodes) * n_nodes;
    const CMatrix mixed = CMatrix::Identity(d, d) / static_cast<double>(d);
    const double shrink = -std::expm1(-gamma * t);
    double best = 0.0;
    for (int s = 0; s < samples; ++s) {
        CVector v(d);
        for (Eigen::Index k = 0; k < d; ++k)
            v(k) = cplx(g(rng), g(rng));
        v /= v.norm();
        best = std::max(best, shrink * operator_norm(mixed - v * v.adjoint()));
    }
    return best;
}

} // namespace fqw
