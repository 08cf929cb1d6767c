// Copyright 2026 The fqwalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file entanglement.hpp
 * @brief Fermionic entanglement diagnostics for two-particle states.
 *
 * The single-particle reduced density matrix ρ₁ is normalized to unit trace.
 * With that convention a single Slater determinant has ρ₁ spectrum {1/2, 1/2},
 * S_vN(ρ₁) = ln 2 and S_L(ρ₁) = 1/2, and the mixed-state witnesses
 *
 *   E_vN(ρ) = S_vN(ρ₁) − S_vN(ρ) − ln 2
 *   E_L(ρ)  = S_L(ρ₁) − S_L(ρ) − 1/2 = Tr ρ² − Tr ρ₁² − 1/2
 *
 * are positive only for entangled states (the converse does not hold).
 */

#pragma once

#include "fqw/evolution.hpp"
#include "fqw/types.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <numbers>

namespace fqw {

inline constexpr double eigenvalue_clamp = 1e-8;

/// Eigenvalues of a Hermitian matrix, ascending; values in (−1e-8, 0) are set to 0.
inline RVector clamped_spectrum(const CMatrix& m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw NumericContract("eigenvalue computation failed");
    RVector ev = es.eigenvalues();
    if (ev.size() > 0 && ev.minCoeff() < -eigenvalue_clamp)
        throw NumericContract("density matrix has an eigenvalue below -1e-8");
    return ev.cwiseMax(0.0);
}

/// −Σ λ ln λ in nats, 0·ln 0 ≡ 0.
inline double von_neumann_entropy(const CMatrix& m) {
    double s = 0.0;
    for (double l : clamped_spectrum(m))
        if (l > 0.0)
            s -= l * std::log(l);
    return s;
}

/// Tr(m²) for Hermitian m.
inline double purity(const CMatrix& m) { return m.squaredNorm(); }

/// 1 − Tr(m²)
inline double linear_entropy(const CMatrix& m) { return 1.0 - purity(m); }

// Factored states: S(A ⊗ B) = S(A) + S(B), Tr(A ⊗ B)² = Tr A² · Tr B².
inline double von_neumann_entropy(const FullDensity& rho) {
    return von_neumann_entropy(rho.coord()) + von_neumann_entropy(rho.spin());
}
inline double purity(const FullDensity& rho) { return purity(rho.coord()) * purity(rho.spin()); }
inline double linear_entropy(const FullDensity& rho) { return 1.0 - purity(rho); }

// ----------------------------------------------------------------------------
// Reduced density matrices
// ----------------------------------------------------------------------------

struct ReducedDensity {
    CMatrix matrix;            ///< 2N × 2N over orbitals 2·site + spin, unit trace
    bool from_pure_state;      ///< purity criteria apply only when true
};

/// Tr over the second factor of a (d·d) × (d·d) particle-major matrix.
inline CMatrix partial_trace_second(const CMatrix& m, Eigen::Index d) {
    if (m.rows() != d * d || m.cols() != d * d)
        throw DimensionMismatch("matrix is not (d*d) x (d*d)");
    CMatrix out = CMatrix::Zero(d, d);
    for (Eigen::Index a = 0; a < d; ++a)
        for (Eigen::Index b = 0; b < d; ++b)
            for (Eigen::Index c = 0; c < d; ++c)
                out(a, b) += m(a * d + c, b * d + c);
    return out;
}

/// Tr over the first factor of a (d·d) × (d·d) particle-major matrix.
inline CMatrix partial_trace_first(const CMatrix& m, Eigen::Index d) {
    if (m.rows() != d * d || m.cols() != d * d)
        throw DimensionMismatch("matrix is not (d*d) x (d*d)");
    CMatrix out = CMatrix::Zero(d, d);
    for (Eigen::Index a = 0; a < d; ++a)
        for (Eigen::Index b = 0; b < d; ++b)
            for (Eigen::Index c = 0; c < d; ++c)
                out(a, b) += m(c * d + a, c * d + b);
    return out;
}

namespace detail {

inline CMatrix unit_trace(CMatrix m) {
    const cplx tr = m.trace();
    if (std::abs(tr) < 1e-14)
        throw NumericContract("reduced density matrix has zero trace");
    return m / tr.real();
}

} // namespace detail

/// Permute to (site₁, spin₁, site₂, spin₂), trace out particle 2, renormalize.
inline ReducedDensity reduce_single_particle(const FullDensity& rho, const CycleConfig& cfg) {
    if (rho.n_nodes() != cfg.n_nodes())
        throw DimensionMismatch("density and config disagree on n_nodes");
    const CMatrix r1 = partial_trace_second(rho.materialize_particle_major(), cfg.orbital_dim());
    return {detail::unit_trace(r1), std::abs(purity(rho) - 1.0) < 1e-9};
}

/// ρ₁ = Ψ Ψ† = 2 ω ω† for a pure state.
inline ReducedDensity reduce_single_particle(const PureTwoFermionState& state) {
    const CMatrix psi = state.amplitudes();
    return {detail::unit_trace(psi * psi.adjoint()), true};
}

// ----------------------------------------------------------------------------
// Witnesses
// ----------------------------------------------------------------------------

inline double witness_e_vn(const FullDensity& rho, const CycleConfig& cfg) {
    const ReducedDensity r1 = reduce_single_particle(rho, cfg);
    return von_neumann_entropy(r1.matrix) - von_neumann_entropy(rho) - std::numbers::ln2;
}

struct LinearWitnessForms {
    double entropy_form;  ///< S_L(ρ₁) − S_L(ρ) − 1/2
    double purity_form;   ///< Tr ρ² − Tr ρ₁² − 1/2
};

inline LinearWitnessForms linear_witness_forms(const FullDensity& rho, const ReducedDensity& r1) {
    return {linear_entropy(r1.matrix) - linear_entropy(rho) - 0.5, purity(rho) - purity(r1.matrix) - 0.5};
}

/// E_L, with both algebraic forms required to agree within 1e-12.
inline double witness_e_l(const FullDensity& rho, const CycleConfig& cfg) {
    const LinearWitnessForms f = linear_witness_forms(rho, reduce_single_particle(rho, cfg));
    if (std::abs(f.entropy_form - f.purity_form) > 1e-12)
        throw NumericContract("the two forms of the linear-entropy witness disagree");
    return f.entropy_form;
}

struct EntanglementRecord {
    double t = 0.0;
    double s_vn_r1 = 0.0;
    double s_l_r1 = 0.0;
    double s_vn_rho = 0.0;
    double s_l_rho = 0.0;
    double e_vn = 0.0;
    double e_l = 0.0;
};

/// All entropies and both witnesses from one reduction of ρ.
inline EntanglementRecord entanglement_record(const FullDensity& rho, const CycleConfig& cfg, double t = 0.0) {
    const ReducedDensity r1 = reduce_single_particle(rho, cfg);
    EntanglementRecord rec;
    rec.t = t;
    rec.s_vn_r1 = von_neumann_entropy(r1.matrix);
    rec.s_l_r1 = linear_entropy(r1.matrix);
    rec.s_vn_rho = von_neumann_entropy(rho);
    rec.s_l_rho = linear_entropy(rho);
    rec.e_vn = rec.s_vn_r1 - rec.s_vn_rho - std::numbers::ln2;
    rec.e_l = rec.s_l_r1 - rec.s_l_rho - 0.5;
    return rec;
}

// ----------------------------------------------------------------------------
// Pure-state criteria
// ----------------------------------------------------------------------------

/// Number of Slater determinants: rank(ω)/2 with singular values above 1e-10 counted.
inline int slater_rank(const PureTwoFermionState& state) {
    Eigen::JacobiSVD<CMatrix> svd(state.omega());
    const RVector& sv = svd.singularValues();
    int rank = 0;
    for (double s : sv)
        if (s > 1e-10)
            ++rank;
    if (rank % 2 != 0)
        throw NumericContract("odd numerical rank of omega: antisymmetry is broken");
    return rank / 2;
}

enum class PurityVerdict { separable_pure, entangled, inconclusive };

inline const char* to_string(PurityVerdict v) {
    switch (v) {
    case PurityVerdict::separable_pure: return "separable-pure";
    case PurityVerdict::entangled: return "entangled";
    case PurityVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

/**
 * Two-fermion purity criterion: Tr ρ₁² = 1/2 ⇔ Slater rank one, and
 * 1/d ≤ Tr ρ₁² < 1/2 ⇔ entangled, with d = 2N. Returns inconclusive for
 * ρ₁ reduced from a mixed state, where the criterion says nothing.
 */
inline PurityVerdict purity_verdict(const ReducedDensity& r1, const CycleConfig& cfg) {
    if (r1.matrix.rows() != cfg.orbital_dim())
        throw DimensionMismatch("reduced density has wrong dimension");
    if (!r1.from_pure_state)
        return PurityVerdict::inconclusive;
    constexpr double tol = 1e-9;
    const double p = purity(r1.matrix);
    const double lower = 1.0 / static_cast<double>(cfg.orbital_dim());
    if (p < lower - tol || p > 0.5 + tol)
        throw NumericContract("Tr rho1^2 = " + std::to_string(p) + " outside [1/d, 1/2]");
    return std::abs(p - 0.5) <= tol ? PurityVerdict::separable_pure : PurityVerdict::entangled;
}

} // namespace fqw
