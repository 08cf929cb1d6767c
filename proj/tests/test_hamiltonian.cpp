// Copyright 2026 The fqwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "fqw/hamiltonian.hpp"

#include <catch_amalgamated.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

using namespace fqw;
using Catch::Matchers::WithinAbs;

namespace {

CMatrix kron(const CMatrix& a, const CMatrix& b)
{
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c)
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    return out;
}

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

} // namespace

TEST_CASE("cyclic distance", "[hamiltonian]")
{
    CHECK(cyclic_distance(0, 4, 8) == 4);
    CHECK(cyclic_distance(0, 7, 8) == 1);
    CHECK(cyclic_distance(3, 3, 8) == 0);
    CHECK(cyclic_distance(7, 0, 8) == 1);
    CHECK(cyclic_distance(1, 6, 8) == 3);
    CHECK(is_allowed(0, 2, 8));
    CHECK_FALSE(is_allowed(1, 2, 8));
}

TEST_CASE("single-particle circulant", "[hamiltonian]")
{
    const CycleConfig cfg(4, 0.1);
    const Hamiltonian h = build_single_particle(cfg);
    CHECK(h.flavor == HamiltonianFlavor::single);
    REQUIRE(h.dimension() == 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const bool adjacent = cyclic_distance(i, j, 4) == 1;
            CHECK(h.matrix(i, j) == cplx(adjacent ? 0.1 : 0.0));
        }
        CHECK_THAT(h.matrix.row(i).sum().real(), WithinAbs(0.2, 1e-15));
    }
    CHECK_THROWS_AS(build_single_particle(CycleConfig(2, 0.1)), InvalidConfig);
}

TEST_CASE("single-particle spectrum is 2*omega*cos(2 pi k / N)", "[hamiltonian]")
{
    for (int n : {3, 4, 5, 8, 11}) {
        const double omega = 0.37;
        const Hamiltonian h = build_single_particle(CycleConfig(n, omega));
        Eigen::SelfAdjointEigenSolver<CMatrix> es(h.matrix, Eigen::EigenvaluesOnly);
        std::vector<double> closed;
        for (int k = 0; k < n; ++k)
            closed.push_back(2.0 * omega * std::cos(2.0 * std::numbers::pi * k / n));
        std::sort(closed.begin(), closed.end());
        for (int k = 0; k < n; ++k)
            CHECK_THAT(es.eigenvalues()(k), WithinAbs(closed[static_cast<std::size_t>(k)], 1e-12));
    }
}

TEST_CASE("free two-particle hamiltonian", "[hamiltonian]")
{
    const CycleConfig cfg(4, 0.1);
    const Hamiltonian h = build_free(cfg);
    REQUIRE(h.dimension() == 16);
    CHECK(max_abs(h.matrix - h.matrix.adjoint()) == 0.0);
    for (Eigen::Index r = 0; r < 16; ++r) {
        CHECK(h.matrix(r, r) == cplx(0.0));
        int neighbours = 0;
        for (Eigen::Index c = 0; c < 16; ++c)
            if (h.matrix(r, c) != cplx(0.0)) {
                CHECK(h.matrix(r, c) == cplx(0.1));
                ++neighbours;
            }
        CHECK(neighbours == 4);
    }
    const CMatrix s = swap_operator(cfg);
    CHECK(max_abs(s * h.matrix * s - h.matrix) == 0.0);
    const CMatrix p = antisymmetric_projector(cfg);
    const CMatrix q = CMatrix::Identity(16, 16) - p;
    CHECK(max_abs(p * h.matrix * q) < 1e-15);
    CHECK_THROWS_AS(build_free(CycleConfig(2, 0.1)), InvalidConfig);
}

TEST_CASE("free hamiltonian equals H1 x I + I x H1 for N = 3..10", "[hamiltonian][property]")
{
    for (int n = 3; n <= 10; ++n) {
        const CycleConfig cfg(n, 0.25);
        const CMatrix h1 = build_single_particle(cfg).matrix;
        const CMatrix id = CMatrix::Identity(n, n);
        const CMatrix oracle = kron(h1, id) + kron(id, h1);
        const CMatrix h = build_free(cfg).matrix;
        CHECK(max_abs(h - oracle) == 0.0);

        const CMatrix hi = build_interacting(cfg).matrix;
        for (Eigen::Index r = 0; r < hi.rows(); ++r)
            for (Eigen::Index c = 0; c < hi.cols(); ++c)
                if (hi(r, c) != cplx(0.0))
                    CHECK(hi(r, c) == h(r, c));

        const CMatrix s = swap_operator(n);
        const CMatrix p = antisymmetric_projector(n);
        CHECK(max_abs(s * hi * s - hi) == 0.0);
        CHECK(max_abs(p * hi - hi * p) < 1e-15);
        CHECK(max_abs(p * h - h * p) < 1e-15);
        CHECK(max_abs(hi - hi.adjoint()) == 0.0);
    }
}

TEST_CASE("interacting hamiltonian exclusions", "[hamiltonian]")
{
    const int n = 8;
    const Hamiltonian h = build_interacting(CycleConfig(n, 0.3));
    auto at = [&](int i, int j, int k, int l) { return h.matrix(i * n + j, k * n + l); };
    CHECK(at(0, 4, 1, 4) == cplx(0.3));
    CHECK(at(1, 4, 0, 4) == cplx(0.3));
    CHECK(at(0, 2, 1, 2) == cplx(0.0));
    CHECK(at(0, 5, 7, 5) == cplx(0.3));
    CHECK(at(0, 3, 0, 2) == cplx(0.3));
    CHECK(at(0, 2, 0, 1) == cplx(0.0));
    CHECK(at(3, 5, 4, 5) == cplx(0.0));
}

TEST_CASE("interacting hamiltonian vanishes for N = 4", "[hamiltonian]")
{
    // Exhaustive enumeration: every hop from an allowed configuration lands on
    // a configuration at distance 1.
    const int n = 4;
    int allowed_hops = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (cyclic_distance(i, j, n) < 2)
                continue;
            for (int step : {1, n - 1}) {
                if (cyclic_distance((i + step) % n, j, n) >= 2)
                    ++allowed_hops;
                if (cyclic_distance(i, (j + step) % n, n) >= 2)
                    ++allowed_hops;
            }
        }
    REQUIRE(allowed_hops == 0);
    CHECK(build_interacting(CycleConfig(n, 0.1)).matrix.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("endpoint-validity rule equals the literal index-exclusion sum", "[hamiltonian]")
{
    // Literal reading: hop terms for i -> i+1 kept when j is not in {i, i-1, i+1, i+2}.
    for (int n = 5; n <= 10; ++n) {
        const double omega = 0.3;
        CMatrix literal = CMatrix::Zero(n * n, n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const int up = (i + 1) % n;
                if (j == i || j == (i + n - 1) % n || j == up || j == (i + 2) % n)
                    continue;
                literal(up * n + j, i * n + j) = omega;  // |x_{i+1}, y_j><x_i, y_j|
                literal(i * n + j, up * n + j) = omega;
                literal(j * n + up, j * n + i) = omega;  // |x_j, y_{i+1}><x_j, y_i|
                literal(j * n + i, j * n + up) = omega;
            }
        CHECK(max_abs(literal - build_interacting(CycleConfig(n, omega)).matrix) == 0.0);
    }
}
