// Copyright 2026 The fqwalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file basis.hpp
 * @brief Cycle-graph configuration space for two particles.
 *
 * Coordinate kets |i, j⟩ (particle 1 on node i, particle 2 on node j) are
 * stored row-major, |i, j⟩ ↦ i·N + j. The spin space of two spin-½ particles
 * is ordered |σ₁σ₂⟩ ↦ 2σ₁ + σ₂ with σ = 0 for ↑ and σ = 1 for ↓.
 */

#pragma once

#include "fqw/types.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace fqw {

/// Graph size N and tunneling amplitude Ω (ħ = 1).
class CycleConfig {
public:
    CycleConfig(int n_nodes, double omega) : n_nodes_(n_nodes), omega_(omega) {
        if (n_nodes < 2)
            throw InvalidConfig("n_nodes must be >= 2, got " + std::to_string(n_nodes));
        if (!(omega > 0.0) || !std::isfinite(omega))
            throw InvalidConfig("omega must be a finite positive number");
    }

    [[nodiscard]] int n_nodes() const noexcept { return n_nodes_; }
    [[nodiscard]] double omega() const noexcept { return omega_; }

    /// Coordinate-space dimension N².
    [[nodiscard]] Eigen::Index coord_dim() const noexcept {
        return static_cast<Eigen::Index>(n_nodes_) * n_nodes_;
    }
    /// Single-particle (site ⊗ spin) dimension 2N.
    [[nodiscard]] Eigen::Index orbital_dim() const noexcept { return 2 * static_cast<Eigen::Index>(n_nodes_); }

    void require_nodes(int minimum, const char* what) const {
        if (n_nodes_ < minimum)
            throw InvalidConfig(std::string(what) + " requires n_nodes >= " + std::to_string(minimum) +
                                ", got " + std::to_string(n_nodes_));
    }

    friend bool operator==(const CycleConfig&, const CycleConfig&) = default;

private:
    int n_nodes_;
    double omega_;
};

/// Row-major index map for |i, j⟩.
class ConfigBasis {
public:
    explicit ConfigBasis(int n_nodes) : n_(n_nodes) {}

    [[nodiscard]] int n_nodes() const noexcept { return n_; }
    [[nodiscard]] Eigen::Index dimension() const noexcept { return static_cast<Eigen::Index>(n_) * n_; }

    [[nodiscard]] Eigen::Index index(int i, int j) const {
        check_node(i);
        check_node(j);
        return static_cast<Eigen::Index>(i) * n_ + j;
    }

    [[nodiscard]] std::pair<int, int> coords(Eigen::Index flat) const {
        if (flat < 0 || flat >= dimension())
            throw InvalidConfig("flat index out of range");
        return {static_cast<int>(flat / n_), static_cast<int>(flat % n_)};
    }

    [[nodiscard]] int succ(int i) const noexcept { return (i + 1) % n_; }

    void check_node(int i) const {
        if (i < 0 || i >= n_)
            throw InvalidConfig("node index " + std::to_string(i) + " outside [0, " + std::to_string(n_) + ")");
    }

private:
    int n_;
};

inline ConfigBasis build_basis(const CycleConfig& cfg) { return ConfigBasis(cfg.n_nodes()); }

/// Total-spin-one state α|↓↓⟩ + β|↑↑⟩ + γ(|↓↑⟩ + |↑↓⟩)/√2 with unit norm.
class SpinTriplet {
public:
    SpinTriplet(cplx alpha, cplx beta, cplx gamma) : alpha_(alpha), beta_(beta), gamma_(gamma) {
        const double norm2 = std::norm(alpha) + std::norm(beta) + std::norm(gamma);
        if (std::abs(norm2 - 1.0) > 1e-12)
            throw NumericContract("triplet amplitudes must satisfy |a|^2+|b|^2+|g|^2 = 1, got " +
                                  std::to_string(norm2));
    }

    static SpinTriplet up_up() { return {0.0, 1.0, 0.0}; }
    static SpinTriplet down_down() { return {1.0, 0.0, 0.0}; }
    static SpinTriplet triplet_zero() { return {0.0, 0.0, 1.0}; }

    [[nodiscard]] cplx alpha() const noexcept { return alpha_; }
    [[nodiscard]] cplx beta() const noexcept { return beta_; }
    [[nodiscard]] cplx gamma() const noexcept { return gamma_; }

    /// Amplitudes in the |σ₁σ₂⟩ ↦ 2σ₁ + σ₂ basis: (↑↑, ↑↓, ↓↑, ↓↓).
    [[nodiscard]] CVector vector() const {
        CVector v(4);
        const double r = 1.0 / std::sqrt(2.0);
        v << beta_, gamma_ * r, gamma_ * r, alpha_;
        return v;
    }

    [[nodiscard]] CMatrix density() const {
        const CVector v = vector();
        return v * v.adjoint();
    }

private:
    cplx alpha_;
    cplx beta_;
    cplx gamma_;
};

/// Permutation |i, j⟩ ↦ |j, i⟩ on coordinate space.
inline CMatrix swap_operator(int n_nodes) {
    const ConfigBasis basis(n_nodes);
    CMatrix s = CMatrix::Zero(basis.dimension(), basis.dimension());
    for (int i = 0; i < n_nodes; ++i)
        for (int j = 0; j < n_nodes; ++j)
            s(basis.index(j, i), basis.index(i, j)) = 1.0;
    return s;
}

inline CMatrix swap_operator(const CycleConfig& cfg) { return swap_operator(cfg.n_nodes()); }

/// (I − SWAP)/2, the projector onto the antisymmetric coordinate subspace.
inline CMatrix antisymmetric_projector(int n_nodes) {
    const Eigen::Index d = static_cast<Eigen::Index>(n_nodes) * n_nodes;
    return 0.5 * (CMatrix::Identity(d, d) - swap_operator(n_nodes));
}

inline CMatrix antisymmetric_projector(const CycleConfig& cfg) { return antisymmetric_projector(cfg.n_nodes()); }

/// Two-particle swap on the spin space, |σ₁σ₂⟩ ↦ |σ₂σ₁⟩.
inline CMatrix spin_swap() {
    CMatrix s = CMatrix::Zero(4, 4);
    s(0, 0) = 1.0;
    s(1, 2) = 1.0;
    s(2, 1) = 1.0;
    s(3, 3) = 1.0;
    return s;
}

/// (|i,j⟩ − |j,i⟩)/√2 as a coordinate vector.
inline CVector antisymmetric_pair(int n_nodes, int i, int j) {
    const ConfigBasis basis(n_nodes);
    if (i == j)
        throw InvalidConfig("antisymmetric pair needs two distinct nodes");
    CVector v = CVector::Zero(basis.dimension());
    const double r = 1.0 / std::sqrt(2.0);
    v(basis.index(i, j)) = r;
    v(basis.index(j, i)) = -r;
    return v;
}

/**
 * Maximally mixed antisymmetric coordinate state
 *
 *   ρ_M = 1/(N² − N) Σ_{j=1}^{N−1} Σ_{i<j} (|i,j⟩ − |j,i⟩)(⟨i,j| − ⟨j,i|).
 *
 * Requires only N >= 2, so it does not take a CycleConfig.
 */
inline CMatrix maximally_mixed_coord(int n_nodes) {
    if (n_nodes < 2)
        throw InvalidConfig("maximally mixed state requires n_nodes >= 2");
    const ConfigBasis basis(n_nodes);
    CMatrix rho = CMatrix::Zero(basis.dimension(), basis.dimension());
    const double w = 1.0 / (static_cast<double>(n_nodes) * n_nodes - n_nodes);
    for (int j = 1; j < n_nodes; ++j) {
        for (int i = 0; i < j; ++i) {
            const auto ij = basis.index(i, j);
            const auto ji = basis.index(j, i);
            rho(ij, ij) += w;
            rho(ji, ji) += w;
            rho(ij, ji) -= w;
            rho(ji, ij) -= w;
        }
    }
    return rho;
}

inline CMatrix maximally_mixed_coord(const CycleConfig& cfg) { return maximally_mixed_coord(cfg.n_nodes()); }

/// A = (N² − N)/√2 · ρ_M; ρ = A ρ' A† antisymmetrizes a distinguishable-particle state.
inline CMatrix antisymmetrizer(int n_nodes) {
    const double n = n_nodes;
    return ((n * n - n) / std::sqrt(2.0)) * maximally_mixed_coord(n_nodes);
}

inline CMatrix antisymmetrizer(const CycleConfig& cfg) { return antisymmetrizer(cfg.n_nodes()); }

} // namespace fqw
