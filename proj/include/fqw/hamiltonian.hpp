// Copyright 2026 The fqwalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file hamiltonian.hpp
 * @brief Hopping Hamiltonians on the cycle graph.
 *
 * Three flavors share one representation: the single-particle circulant,
 * the free two-particle walk, and the two-particle walk with hard-core
 * Coulomb exclusion (no two electrons on the same or adjacent nodes).
 */

#pragma once

#include "fqw/basis.hpp"
#include "fqw/types.hpp"

#include <algorithm>
#include <utility>

namespace fqw {

enum class HamiltonianFlavor { single, free, interacting };

struct Hamiltonian {
    CMatrix matrix;
    HamiltonianFlavor flavor;
    double omega;
    int n_nodes;

    [[nodiscard]] Eigen::Index dimension() const noexcept { return matrix.rows(); }
};

/// min((i − j) mod N, (j − i) mod N)
[[nodiscard]] constexpr int cyclic_distance(int i, int j, int n_nodes) noexcept {
    const int d = ((i - j) % n_nodes + n_nodes) % n_nodes;
    return std::min(d, n_nodes - d);
}

/// Configuration |i, j⟩ is allowed under Coulomb exclusion iff the electrons are at least two nodes apart.
[[nodiscard]] constexpr bool is_allowed(int i, int j, int n_nodes) noexcept {
    return cyclic_distance(i, j, n_nodes) >= 2;
}

inline Hamiltonian build_single_particle(const CycleConfig& cfg) {
    cfg.require_nodes(3, "single-particle hamiltonian");
    const int n = cfg.n_nodes();
    CMatrix h = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const int k = (i + 1) % n;
        h(i, k) = cfg.omega();
        h(k, i) = cfg.omega();
    }
    return {std::move(h), HamiltonianFlavor::single, cfg.omega(), n};
}

namespace detail {

template <class Keep>
CMatrix two_particle_hopping(const CycleConfig& cfg, Keep keep) {
    const ConfigBasis basis = build_basis(cfg);
    const int n = cfg.n_nodes();
    CMatrix h = CMatrix::Zero(basis.dimension(), basis.dimension());
    auto link = [&](int i, int j, int a, int b) {
        if (!keep(i, j) || !keep(a, b))
            return;
        const auto from = basis.index(i, j);
        const auto to = basis.index(a, b);
        h(to, from) = cfg.omega();
        h(from, to) = cfg.omega();
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            link(i, j, basis.succ(i), j);  // first particle i -> i+1
            link(i, j, i, basis.succ(j));  // second particle j -> j+1
        }
    }
    return h;
}

} // namespace detail

/// Non-interacting two-particle hopping on coordinate space (N² × N²).
inline Hamiltonian build_free(const CycleConfig& cfg) {
    cfg.require_nodes(3, "free hamiltonian");
    return {detail::two_particle_hopping(cfg, [](int, int) { return true; }), HamiltonianFlavor::free,
            cfg.omega(), cfg.n_nodes()};
}

/// Hopping restricted to moves whose both endpoints are allowed configurations.
/// For N = 4 every hop touches a forbidden configuration and H = 0.
inline Hamiltonian build_interacting(const CycleConfig& cfg) {
    cfg.require_nodes(3, "interacting hamiltonian");
    const int n = cfg.n_nodes();
    return {detail::two_particle_hopping(cfg, [n](int i, int j) { return is_allowed(i, j, n); }),
            HamiltonianFlavor::interacting, cfg.omega(), n};
}

inline Hamiltonian build_two_particle(const CycleConfig& cfg, bool interacting) {
    return interacting ? build_interacting(cfg) : build_free(cfg);
}

} // namespace fqw
