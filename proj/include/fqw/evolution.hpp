// Copyright 2026 The fqwalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file evolution.hpp
 * @brief Exact unitary and depolarized evolution of two-fermion states.
 *
 * States are kept in factored form ρ = ρ_coord ⊗ ρ_spin: the Hamiltonian acts
 * on coordinates only and the noise channel replaces only the coordinate
 * factor, so spin and coordinates never become correlated. Time evolution
 * uses a cached eigendecomposition, so every sample is evaluated in closed
 * form with no stepping error.
 */

#pragma once

#include "fqw/basis.hpp"
#include "fqw/hamiltonian.hpp"
#include "fqw/types.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace fqw {

// ----------------------------------------------------------------------------
// Pure states
// ----------------------------------------------------------------------------

/**
 * Pure two-fermion state ψ = Σ_{m,k} ω_mk f†_m f†_k |0⟩ over the 2N
 * single-particle orbitals m = 2·site + spin. ω is antisymmetric and
 * normalized as 2 Tr(ω ω†) = 1, so the first-quantized wavefunction is
 * Ψ_mk = √2 ω_mk.
 */
class PureTwoFermionState {
public:
    PureTwoFermionState(int n_nodes, CMatrix omega_matrix) : n_nodes_(n_nodes), omega_(std::move(omega_matrix)) {
        const Eigen::Index d = 2 * static_cast<Eigen::Index>(n_nodes);
        if (omega_.rows() != d || omega_.cols() != d)
            throw DimensionMismatch("omega matrix must be " + std::to_string(d) + "x" + std::to_string(d));
        const CMatrix transposed = omega_.transpose();
        if (detail::max_abs(omega_ + transposed) > 1e-12)
            throw NumericContract("omega matrix is not antisymmetric");
        omega_ = 0.5 * (omega_ - transposed);
        const double norm = 2.0 * (omega_ * omega_.adjoint()).trace().real();
        if (std::abs(norm - 1.0) > 1e-12)
            throw NumericContract("pure state violates 2 Tr(omega omega^dagger) = 1 (got " + std::to_string(norm) + ")");
    }

    /// Coordinate vector (antisymmetric, unit norm, length N²) times a spin triplet.
    static PureTwoFermionState from_product(int n_nodes, const CVector& coord, const SpinTriplet& spin) {
        const ConfigBasis basis(n_nodes);
        if (coord.size() != basis.dimension())
            throw DimensionMismatch("coordinate vector has wrong length");
        const CVector chi = spin.vector();
        const double r = 1.0 / std::sqrt(2.0);
        CMatrix w = CMatrix::Zero(2 * n_nodes, 2 * n_nodes);
        for (int i = 0; i < n_nodes; ++i)
            for (int j = 0; j < n_nodes; ++j)
                for (int s1 = 0; s1 < 2; ++s1)
                    for (int s2 = 0; s2 < 2; ++s2)
                        w(2 * i + s1, 2 * j + s2) = r * coord(basis.index(i, j)) * chi(2 * s1 + s2);
        return {n_nodes, std::move(w)};
    }

    /// Single Slater determinant f†_a f†_b |0⟩ (normalized).
    static PureTwoFermionState determinant(int n_nodes, int a, int b) {
        const int d = 2 * n_nodes;
        if (a == b || a < 0 || b < 0 || a >= d || b >= d)
            throw InvalidConfig("determinant needs two distinct orbitals in [0, 2N)");
        CMatrix w = CMatrix::Zero(d, d);
        w(a, b) = 0.5;
        w(b, a) = -0.5;
        return {n_nodes, std::move(w)};
    }

    [[nodiscard]] int n_nodes() const noexcept { return n_nodes_; }
    [[nodiscard]] const CMatrix& omega() const noexcept { return omega_; }

    /// First-quantized amplitudes Ψ_mk = ⟨m, k|ψ⟩, unit Frobenius norm.
    [[nodiscard]] CMatrix amplitudes() const { return std::sqrt(2.0) * omega_; }

private:
    int n_nodes_;
    CMatrix omega_;
};

// ----------------------------------------------------------------------------
// Mixed states
// ----------------------------------------------------------------------------

namespace detail {

inline void check_density(const CMatrix& rho, const char* what, double tol = 1e-10) {
    if (hermiticity_defect(rho) > tol)
        throw NumericContract(std::string(what) + " is not Hermitian");
    if (std::abs(rho.trace() - 1.0) > tol)
        throw NumericContract(std::string(what) + " does not have unit trace");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-8)
        throw NumericContract(std::string(what) + " has a negative eigenvalue below -1e-8");
}

} // namespace detail

/**
 * Two-particle density matrix stored as coordinate ⊗ spin.
 *
 * The coordinate factor is N² × N² (row-major |i, j⟩), the spin factor 4 × 4
 * (|σ₁σ₂⟩). Materialized forms are available in the natural order
 * (site₁, site₂, spin₁, spin₂) and in the particle-major order
 * (site₁, spin₁, site₂, spin₂) used for partial traces.
 */
class FullDensity {
public:
    FullDensity(int n_nodes, CMatrix coord, CMatrix spin)
        : n_nodes_(n_nodes), coord_(std::move(coord)), spin_(std::move(spin)) {
        const Eigen::Index d = static_cast<Eigen::Index>(n_nodes) * n_nodes;
        if (coord_.rows() != d || coord_.cols() != d)
            throw DimensionMismatch("coordinate factor must be N^2 x N^2");
        if (spin_.rows() != 4 || spin_.cols() != 4)
            throw DimensionMismatch("spin factor must be 4 x 4");
    }

    static FullDensity pure_product(int n_nodes, const CVector& coord, const SpinTriplet& spin) {
        if (coord.size() != static_cast<Eigen::Index>(n_nodes) * n_nodes)
            throw DimensionMismatch("coordinate vector has wrong length");
        return {n_nodes, coord * coord.adjoint(), spin.density()};
    }

    [[nodiscard]] int n_nodes() const noexcept { return n_nodes_; }
    [[nodiscard]] const CMatrix& coord() const noexcept { return coord_; }
    [[nodiscard]] const CMatrix& spin() const noexcept { return spin_; }

    /// Dense (site₁, site₂, spin₁, spin₂) matrix, i.e. coord ⊗ spin.
    [[nodiscard]] CMatrix materialize() const {
        const Eigen::Index dc = coord_.rows();
        CMatrix full(4 * dc, 4 * dc);
        for (Eigen::Index r = 0; r < dc; ++r)
            for (Eigen::Index c = 0; c < dc; ++c)
                full.block<4, 4>(4 * r, 4 * c) = coord_(r, c) * spin_;
        return full;
    }

    /// Dense matrix with rows/columns indexed by (2i + σ₁)·2N + (2j + σ₂).
    [[nodiscard]] CMatrix materialize_particle_major() const {
        const int n = n_nodes_;
        const Eigen::Index d = 2 * static_cast<Eigen::Index>(n);
        CMatrix full(d * d, d * d);
        auto pm = [d](int i, int s1, int j, int s2) { return (2 * i + s1) * d + (2 * j + s2); };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        const cplx c = coord_(i * n + j, k * n + l);
                        for (int s1 = 0; s1 < 2; ++s1)
                            for (int s2 = 0; s2 < 2; ++s2)
                                for (int t1 = 0; t1 < 2; ++t1)
                                    for (int t2 = 0; t2 < 2; ++t2)
                                        full(pm(i, s1, j, s2), pm(k, t1, l, t2)) = c * spin_(2 * s1 + s2, 2 * t1 + t2);
                    }
        return full;
    }

    /// Checks every density invariant; throws NumericContract on violation.
    void validate(double tol = 1e-10) const {
        detail::check_density(coord_, "coordinate density", tol);
        detail::check_density(spin_, "spin density", tol);
        const CMatrix p = antisymmetric_projector(n_nodes_);
        if (detail::max_abs(p * coord_ * p - coord_) > tol)
            throw NumericContract("coordinate density leaves the antisymmetric subspace");
        const CMatrix sw = spin_swap();
        if (detail::max_abs(sw * spin_ - spin_) > tol || detail::max_abs(spin_ * sw - spin_) > tol)
            throw NumericContract("spin density leaves the triplet subspace");
    }

private:
    int n_nodes_;
    CMatrix coord_;
    CMatrix spin_;
};

/// |Ψ⟩⟨Ψ| in particle-major order for an arbitrary (possibly non-product) pure state.
inline CMatrix pure_density_particle_major(const PureTwoFermionState& state) {
    const CMatrix psi = state.amplitudes();
    // Row-major flattening: index m·2N + k.
    const Eigen::Index d = psi.rows();
    CVector v(d * d);
    for (Eigen::Index m = 0; m < d; ++m)
        for (Eigen::Index k = 0; k < d; ++k)
            v(m * d + k) = psi(m, k);
    return v * v.adjoint();
}

// ----------------------------------------------------------------------------
// Propagation
// ----------------------------------------------------------------------------

/// Cached Hermitian eigendecomposition H = V Λ V†, giving U(t) = V e^{−iΛt} V†.
class Propagator {
public:
    explicit Propagator(const CMatrix& h) {
        if (h.rows() != h.cols())
            throw DimensionMismatch("hamiltonian must be square");
        if (detail::hermiticity_defect(h) > 1e-12)
            throw NumericContract("hamiltonian is not Hermitian");
        Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
        if (es.info() != Eigen::Success)
            throw NumericContract("eigendecomposition failed");
        values_ = es.eigenvalues();
        vectors_ = es.eigenvectors();
        const CMatrix rebuilt = vectors_ * values_.cast<cplx>().asDiagonal() * vectors_.adjoint();
        if (detail::max_abs(rebuilt - h) > 1e-10)
            throw NumericContract("eigendecomposition reconstruction error exceeds 1e-10");
    }

    explicit Propagator(const Hamiltonian& h) : Propagator(h.matrix) {}

    [[nodiscard]] const RVector& eigenvalues() const noexcept { return values_; }
    [[nodiscard]] const CMatrix& eigenvectors() const noexcept { return vectors_; }
    [[nodiscard]] Eigen::Index dimension() const noexcept { return values_.size(); }

    [[nodiscard]] CMatrix unitary(double t) const {
        return vectors_ * phases(t).asDiagonal() * vectors_.adjoint();
    }

    [[nodiscard]] CVector apply(const CVector& psi, double t) const {
        check_dim(psi.size());
        return vectors_ * (phases(t).asDiagonal() * (vectors_.adjoint() * psi));
    }

    /// U(t) ρ U(t)†
    [[nodiscard]] CMatrix conjugate(const CMatrix& rho, double t) const {
        check_dim(rho.rows());
        const CVector ph = phases(t);
        CMatrix m = vectors_.adjoint() * rho * vectors_;
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            for (Eigen::Index r = 0; r < m.rows(); ++r)
                m(r, c) *= ph(r) * std::conj(ph(c));
        return vectors_ * m * vectors_.adjoint();
    }

private:
    [[nodiscard]] CVector phases(double t) const {
        CVector ph(values_.size());
        for (Eigen::Index k = 0; k < values_.size(); ++k)
            ph(k) = std::polar(1.0, -values_(k) * t);
        return ph;
    }

    void check_dim(Eigen::Index n) const {
        if (n != values_.size())
            throw DimensionMismatch("operand dimension does not match propagator");
    }

    RVector values_;
    CMatrix vectors_;
};

inline Propagator make_propagator(const Hamiltonian& h) { return Propagator(h); }

/// Coordinate part evolves under U(t); the spin part is untouched.
inline PureTwoFermionState evolve_pure(const PureTwoFermionState& state, const Propagator& u, double t) {
    const int n = state.n_nodes();
    const Eigen::Index dc = static_cast<Eigen::Index>(n) * n;
    if (u.dimension() != dc)
        throw DimensionMismatch("propagator does not act on this state's coordinate space");
    const CMatrix w = state.omega();
    CMatrix out(w.rows(), w.cols());
    CVector block(dc);
    for (int s1 = 0; s1 < 2; ++s1) {
        for (int s2 = 0; s2 < 2; ++s2) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    block(i * n + j) = w(2 * i + s1, 2 * j + s2);
            const CVector moved = u.apply(block, t);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    out(2 * i + s1, 2 * j + s2) = moved(i * n + j);
        }
    }
    // Round-off in U(t) is far below the 1e-12 antisymmetry/normalization gate.
    return {n, std::move(out)};
}

// ----------------------------------------------------------------------------
// Depolarizing noise
// ----------------------------------------------------------------------------

struct NoiseParams {
    double gamma = 0.0;

    void validate() const {
        if (!(gamma >= 0.0) || !std::isfinite(gamma))
            throw InvalidNoise("relaxation rate gamma must be finite and >= 0");
    }
};

namespace detail {

inline void check_time(double t) {
    if (!(t >= 0.0) || !std::isfinite(t))
        throw InvalidNoise("evolution time must be finite and >= 0");
}

inline FullDensity mix_toward(const FullDensity& rho0, const CMatrix& rho_m, double gamma, double t) {
    const double keep = std::exp(-gamma * t);
    // Tr_coord(ρc ⊗ ρs) = Tr(ρc)·ρs, so the mixture factors as
    // [e^{−Γt} ρc + (1 − e^{−Γt}) Tr(ρc) ρ_M] ⊗ ρs.
    CMatrix coord = keep * rho0.coord() + ((1.0 - keep) * rho0.coord().trace()) * rho_m;
    return {rho0.n_nodes(), std::move(coord), rho0.spin()};
}

} // namespace detail

/// ρ(t) = e^{−Γt} ρ(0) + (1 − e^{−Γt}) ρ_M ⊗ ρ_spin
inline FullDensity depolarize(const FullDensity& rho0, const NoiseParams& noise, double t, const CycleConfig& cfg) {
    noise.validate();
    detail::check_time(t);
    if (rho0.n_nodes() != cfg.n_nodes())
        throw DimensionMismatch("density and config disagree on n_nodes");
    return detail::mix_toward(rho0, maximally_mixed_coord(cfg), noise.gamma, t);
}

/**
 * Closed-form noisy evolution
 *
 *   ρ(t) = U(t) [e^{−Γt} ρ(0) + (1 − e^{−Γt}) ρ_M ⊗ ρ_spin] U(t)†,
 *
 * with the propagator and ρ_M cached so repeated sampling is cheap.
 */
class NoisyEvolution {
public:
    NoisyEvolution(const CycleConfig& cfg, const Hamiltonian& h, NoiseParams noise)
        : cfg_(cfg), noise_(noise), propagator_(h), rho_m_(maximally_mixed_coord(cfg)) {
        noise_.validate();
        if (h.n_nodes != cfg.n_nodes() || h.dimension() != cfg.coord_dim())
            throw DimensionMismatch("hamiltonian is not a two-particle operator for this config");
    }

    [[nodiscard]] const CycleConfig& config() const noexcept { return cfg_; }
    [[nodiscard]] const NoiseParams& noise() const noexcept { return noise_; }
    [[nodiscard]] const Propagator& propagator() const noexcept { return propagator_; }

    [[nodiscard]] FullDensity operator()(const FullDensity& rho0, double t) const {
        detail::check_time(t);
        if (rho0.n_nodes() != cfg_.n_nodes())
            throw DimensionMismatch("density and config disagree on n_nodes");
        const FullDensity mixed = detail::mix_toward(rho0, rho_m_, noise_.gamma, t);
        return {cfg_.n_nodes(), propagator_.conjugate(mixed.coord(), t), mixed.spin()};
    }

private:
    CycleConfig cfg_;
    NoiseParams noise_;
    Propagator propagator_;
    CMatrix rho_m_;
};

inline FullDensity evolve_noisy(const FullDensity& rho0, const Hamiltonian& h, const NoiseParams& noise, double t) {
    const CycleConfig cfg(h.n_nodes, h.omega);
    return NoisyEvolution(cfg, h, noise)(rho0, t);
}

// ----------------------------------------------------------------------------
// Observables and trajectories
// ----------------------------------------------------------------------------

/// n_i = Tr[ρ_coord (|i⟩⟨i| ⊗ I + I ⊗ |i⟩⟨i|)], summing to 2.
inline RVector charge_density(const FullDensity& rho, const CycleConfig& cfg) {
    const int n = cfg.n_nodes();
    if (rho.n_nodes() != n)
        throw DimensionMismatch("density and config disagree on n_nodes");
    const CMatrix& c = rho.coord();
    RVector dens = RVector::Zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double p = c(i * n + j, i * n + j).real();
            dens(i) += p;
            dens(j) += p;
        }
    return dens;
}

/// t_k = k·dt for k = 0 .. floor(t_max/dt), with a 1e-9 slack on the ratio.
inline std::vector<double> sample_times(double t_max, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw InvalidConfig("dt must be > 0");
    if (!(t_max >= dt) || !std::isfinite(t_max))
        throw InvalidConfig("t_max must be >= dt");
    const auto count = static_cast<std::size_t>(std::floor(t_max / dt + 1e-9)) + 1;
    std::vector<double> ts(count);
    for (std::size_t k = 0; k < count; ++k)
        ts[k] = static_cast<double>(k) * dt;
    return ts;
}

struct TrajectoryRecord {
    std::vector<double> times;
    std::vector<RVector> densities;
};

inline TrajectoryRecord run_trajectory(const CycleConfig& cfg, const Hamiltonian& h, const FullDensity& initial,
                                       const NoiseParams& noise, double t_max, double dt) {
    const NoisyEvolution evolve(cfg, h, noise);
    TrajectoryRecord rec;
    rec.times = sample_times(t_max, dt);
    rec.densities.reserve(rec.times.size());
    for (double t : rec.times)
        rec.densities.push_back(charge_density(evolve(initial, t), cfg));
    return rec;
}

} // namespace fqw
