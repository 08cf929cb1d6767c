// Copyright 2026 The fqwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "fqw/entanglement.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace fqw;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double ln2 = std::numbers::ln2;

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

RVector sorted_spectrum(const CMatrix& m)
{
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

FullDensity separable_example() { return FullDensity::pure_product(4, antisymmetric_pair(4, 0, 2), SpinTriplet::up_up()); }
FullDensity entangled_example()
{
    return FullDensity::pure_product(4, antisymmetric_pair(4, 0, 2), SpinTriplet::triplet_zero());
}

CVector random_vector(Eigen::Index d, std::mt19937_64& rng)
{
    std::normal_distribution<double> g;
    CVector v(d);
    for (Eigen::Index k = 0; k < d; ++k)
        v(k) = cplx(g(rng), g(rng));
    return v;
}

CMatrix normalized_omega(CMatrix w)
{
    const double n = 2.0 * (w * w.adjoint()).trace().real();
    return w / std::sqrt(n);
}

/// Random pure two-fermion state; rank one (u ∧ v) when `determinant` is set.
PureTwoFermionState random_pure(int n_nodes, bool determinant, std::mt19937_64& rng)
{
    const Eigen::Index d = 2 * n_nodes;
    if (determinant) {
        const CVector u = random_vector(d, rng), v = random_vector(d, rng);
        const CMatrix w = u * v.transpose() - v * u.transpose();
        return {n_nodes, normalized_omega(w)};
    }
    CMatrix m(d, d);
    for (Eigen::Index c = 0; c < d; ++c)
        m.col(c) = random_vector(d, rng);
    return {n_nodes, normalized_omega(m - m.transpose())};
}

/// Random mixed state in the model's factored class.
FullDensity random_density(int n_nodes, std::mt19937_64& rng)
{
    const Eigen::Index dc = static_cast<Eigen::Index>(n_nodes) * n_nodes;
    const CMatrix p = antisymmetric_projector(n_nodes);
    std::uniform_int_distribution<int> terms(1, 4);
    std::uniform_real_distribution<double> w(0.0, 1.0);
    CMatrix coord = CMatrix::Zero(dc, dc);
    const int k = terms(rng);
    for (int t = 0; t < k; ++t) {
        CVector v = p * random_vector(dc, rng);
        v.normalize();
        coord += w(rng) * v * v.adjoint();
    }
    coord /= coord.trace().real();
    // triplet-supported spin density: mixture of two random triplets
    CMatrix spin = CMatrix::Zero(4, 4);
    for (int t = 0; t < 2; ++t) {
        CVector a = random_vector(3, rng);
        a.normalize();
        spin += w(rng) * SpinTriplet(a(0), a(1), a(2)).density();
    }
    spin /= spin.trace().real();
    return {n_nodes, coord, spin};
}

} // namespace

TEST_CASE("entropy primitives", "[entanglement]")
{
    CMatrix pure = CMatrix::Zero(3, 3);
    pure(1, 1) = 1.0;
    CHECK_THAT(von_neumann_entropy(pure), WithinAbs(0.0, 1e-15));
    CHECK_THAT(linear_entropy(pure), WithinAbs(0.0, 1e-15));

    for (int k : {1, 2, 5, 9}) {
        CMatrix mixed = CMatrix::Zero(12, 12);
        mixed.topLeftCorner(k, k) = CMatrix::Identity(k, k) / double(k);
        CHECK_THAT(von_neumann_entropy(mixed), WithinAbs(std::log(double(k)), 1e-12));
        CHECK_THAT(linear_entropy(mixed), WithinAbs(1.0 - 1.0 / k, 1e-12));
    }

    CHECK_THAT(von_neumann_entropy(maximally_mixed_coord(4)), WithinAbs(std::log(6.0), 1e-12));

    CMatrix slightly_negative = CMatrix::Zero(2, 2);
    slightly_negative(0, 0) = 1.0 + 1e-9;
    slightly_negative(1, 1) = -1e-9;
    CHECK_NOTHROW(von_neumann_entropy(slightly_negative));
    slightly_negative(1, 1) = -1e-6;
    CHECK_THROWS_AS(von_neumann_entropy(slightly_negative), NumericContract);
}

TEST_CASE("separable spot example", "[entanglement]")
{
    const CycleConfig cfg(4, 0.1);
    const FullDensity rho = separable_example();
    const ReducedDensity r1 = reduce_single_particle(rho, cfg);
    const RVector ev = sorted_spectrum(r1.matrix);
    CHECK_THAT(ev(7), WithinAbs(0.5, 1e-12));
    CHECK_THAT(ev(6), WithinAbs(0.5, 1e-12));
    CHECK(ev.head(6).cwiseAbs().maxCoeff() < 1e-12);

    CHECK_THAT(von_neumann_entropy(r1.matrix), WithinAbs(ln2, 1e-9));
    CHECK_THAT(linear_entropy(r1.matrix), WithinAbs(0.5, 1e-9));
    CHECK_THAT(witness_e_vn(rho, cfg), WithinAbs(0.0, 1e-9));
    CHECK_THAT(witness_e_l(rho, cfg), WithinAbs(0.0, 1e-9));

    const auto psi = PureTwoFermionState::from_product(4, antisymmetric_pair(4, 0, 2), SpinTriplet::up_up());
    CHECK(slater_rank(psi) == 1);
    CHECK(purity_verdict(reduce_single_particle(psi), cfg) == PurityVerdict::separable_pure);
}

TEST_CASE("entangled spot example", "[entanglement]")
{
    const CycleConfig cfg(4, 0.1);
    const FullDensity rho = entangled_example();
    const ReducedDensity r1 = reduce_single_particle(rho, cfg);
    const RVector ev = sorted_spectrum(r1.matrix);
    for (int k = 4; k < 8; ++k)
        CHECK_THAT(ev(k), WithinAbs(0.25, 1e-12));
    CHECK(ev.head(4).cwiseAbs().maxCoeff() < 1e-12);

    CHECK_THAT(von_neumann_entropy(r1.matrix), WithinAbs(2.0 * ln2, 1e-9));
    // 1 − 4·(1/4)²; the printed "ln 2" is inconsistent with E_L = 1/4.
    CHECK_THAT(linear_entropy(r1.matrix), WithinAbs(0.75, 1e-9));
    CHECK_THAT(witness_e_vn(rho, cfg), WithinAbs(ln2, 1e-9));
    CHECK_THAT(witness_e_l(rho, cfg), WithinAbs(0.25, 1e-9));

    const auto psi = PureTwoFermionState::from_product(4, antisymmetric_pair(4, 0, 2), SpinTriplet::triplet_zero());
    CHECK(slater_rank(psi) == 2);
    CHECK(purity_verdict(reduce_single_particle(psi), cfg) == PurityVerdict::entangled);
}

TEST_CASE("spin state polarized along x is separable", "[entanglement]")
{
    // (|↓↓⟩ + |↑↑⟩ + |↓↑⟩ + |↑↓⟩)/2 = |→→⟩
    const CycleConfig cfg(4, 0.1);
    const SpinTriplet xx(0.5, 0.5, 1.0 / std::sqrt(2.0));
    const auto rho = FullDensity::pure_product(4, antisymmetric_pair(4, 0, 2), xx);
    CHECK_THAT(witness_e_vn(rho, cfg), WithinAbs(0.0, 1e-9));
    CHECK_THAT(witness_e_l(rho, cfg), WithinAbs(0.0, 1e-9));
    CHECK(slater_rank(PureTwoFermionState::from_product(4, antisymmetric_pair(4, 0, 2), xx)) == 1);
}

TEST_CASE("tracing either particle gives the same rho1", "[entanglement]")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        const FullDensity rho = random_density(4, rng);
        const CMatrix m = rho.materialize_particle_major();
        CHECK(max_abs(partial_trace_first(m, 8) - partial_trace_second(m, 8)) < 1e-13);
    }
    CHECK_THROWS_AS(partial_trace_second(CMatrix::Zero(5, 5), 2), DimensionMismatch);
}

TEST_CASE("pure-state rho1 shortcut matches the partial trace", "[entanglement]")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const auto psi = random_pure(3, trial % 2 == 0, rng);
        const CMatrix by_trace = partial_trace_second(pure_density_particle_major(psi), 6);
        CHECK(max_abs(reduce_single_particle(psi).matrix - by_trace) < 1e-13);
    }
}

TEST_CASE("factored entropies match the materialized matrix", "[entanglement]")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 6; ++trial) {
        const FullDensity rho = random_density(3, rng);
        const CMatrix full = rho.materialize();
        CHECK_THAT(von_neumann_entropy(rho), WithinAbs(von_neumann_entropy(full), 1e-10));
        CHECK_THAT(linear_entropy(rho), WithinAbs(linear_entropy(full), 1e-12));
    }
}

TEST_CASE("maximally mixed coordinates with polarized spin", "[entanglement]")
{
    // Brute-force oracle: build ρ element by element and trace particle 2 by explicit loops.
    const int n = 4;
    const CycleConfig cfg(n, 0.1);
    const CMatrix rm = maximally_mixed_coord(n);
    const int d = 2 * n;
    CMatrix r1 = CMatrix::Zero(d, d);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j)
                r1(2 * i, 2 * k) += rm(i * n + j, k * n + j);  // only σ = ↑ survives
    Eigen::SelfAdjointEigenSolver<CMatrix> es(r1, Eigen::EigenvaluesOnly);
    double s1 = 0.0;
    for (double l : es.eigenvalues())
        if (l > 1e-15)
            s1 -= l * std::log(l);
    const double oracle = s1 - std::log(6.0) - ln2;
    REQUIRE_THAT(oracle, WithinAbs(-1.0986122886681098, 1e-12));  // ln 4 − ln 6 − ln 2 = −ln 3

    const FullDensity rho(n, rm, SpinTriplet::up_up().density());
    CHECK_THAT(witness_e_vn(rho, cfg), WithinAbs(-1.0986122886681098, 1e-12));
    CHECK(purity_verdict(reduce_single_particle(rho, cfg), cfg) == PurityVerdict::inconclusive);
}

TEST_CASE("linear witness forms agree on random densities", "[entanglement][property]")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + trial % 4;
        const CycleConfig cfg(n, 0.2);
        const FullDensity rho = random_density(n, rng);
        const LinearWitnessForms f = linear_witness_forms(rho, reduce_single_particle(rho, cfg));
        CHECK_THAT(f.entropy_form, WithinAbs(f.purity_form, 1e-12));
        CHECK_NOTHROW(witness_e_l(rho, cfg));
    }
}

TEST_CASE("entanglement record is consistent with its components", "[entanglement]")
{
    std::mt19937_64 rng(4);
    const CycleConfig cfg(5, 0.2);
    for (int trial = 0; trial < 10; ++trial) {
        const FullDensity rho = random_density(5, rng);
        const EntanglementRecord r = entanglement_record(rho, cfg, 1.5);
        CHECK(r.t == 1.5);
        CHECK_THAT(r.e_vn, WithinAbs(r.s_vn_r1 - r.s_vn_rho - ln2, 1e-12));
        CHECK_THAT(r.e_l, WithinAbs(r.s_l_r1 - r.s_l_rho - 0.5, 1e-12));
        CHECK_THAT(r.e_vn, WithinAbs(witness_e_vn(rho, cfg), 1e-12));
        CHECK_THAT(r.e_l, WithinAbs(witness_e_l(rho, cfg), 1e-12));
    }
}

TEST_CASE("Slater rank of single determinants", "[entanglement]")
{
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            if (a != b)
                CHECK(slater_rank(PureTwoFermionState::determinant(4, a, b)) == 1);
}

TEST_CASE("purity verdict thresholds", "[entanglement]")
{
    const CycleConfig cfg(4, 0.1);
    auto diag = [](std::initializer_list<double> values) {
        CMatrix m = CMatrix::Zero(8, 8);
        int k = 0;
        for (double v : values)
            m(k, k) = v, ++k;
        return ReducedDensity{m, true};
    };
    CHECK(purity_verdict(diag({0.5, 0.5}), cfg) == PurityVerdict::separable_pure);
    CHECK(purity_verdict(diag({0.25, 0.25, 0.25, 0.25}), cfg) == PurityVerdict::entangled);
    // Tr ρ₁² = 1/2 − 2ε + 6ε² ≈ 1/2 − 1e-12
    const double eps = 5e-13;
    CHECK(purity_verdict(diag({0.5 - eps, 0.5 - eps, 2 * eps}), cfg) == PurityVerdict::separable_pure);
    CHECK(purity_verdict(diag({0.125, 0.125, 0.125, 0.125, 0.125, 0.125, 0.125, 0.125}), cfg) ==
          PurityVerdict::entangled);
    CHECK_THROWS_AS(purity_verdict(diag({1.0}), cfg), NumericContract);
    CHECK_THROWS_AS(purity_verdict(diag({0.01, 0.01}), cfg), NumericContract);
    CHECK_THROWS_AS(purity_verdict(diag({0.5, 0.5}), CycleConfig(5, 0.1)), DimensionMismatch);
    CHECK(purity_verdict(ReducedDensity{diag({0.5, 0.5}).matrix, false}, cfg) == PurityVerdict::inconclusive);
}

TEST_CASE("pure-state criteria agree on random states", "[entanglement][property]")
{
    std::mt19937_64 rng(2024);
    int rank_one = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + trial % 5;
        const CycleConfig cfg(n, 0.1);
        const auto psi = random_pure(n, trial % 2 == 0, rng);
        const ReducedDensity r1 = reduce_single_particle(psi);
        const int rank = slater_rank(psi);
        const bool by_vn = std::abs(von_neumann_entropy(r1.matrix) - ln2) < 1e-9;
        const bool by_lin = std::abs(linear_entropy(r1.matrix) - 0.5) < 1e-9;
        CHECK((rank == 1) == by_vn);
        CHECK((rank == 1) == by_lin);
        CHECK((rank == 1) == (purity_verdict(r1, cfg) == PurityVerdict::separable_pure));
        rank_one += rank == 1;

        // eigenvalues of ρ₁ come in equal pairs
        const RVector ev = sorted_spectrum(r1.matrix);
        for (Eigen::Index k = 0; k + 1 < ev.size(); k += 2)
            CHECK_THAT(ev(k), WithinAbs(ev(k + 1), 1e-10));
    }
    CHECK(rank_one == 50);
}

TEST_CASE("witnesses reduce to rho1 entropies on pure states", "[entanglement][property]")
{
    const CycleConfig cfg(6, 0.3);
    const NoisyEvolution evolve(cfg, build_interacting(cfg), {});
    const auto rho0 = FullDensity::pure_product(6, antisymmetric_pair(6, 0, 3), SpinTriplet::up_up());
    for (double t : {0.0, 2.0, 5.0, 13.0}) {
        const FullDensity rho = evolve(rho0, t);
        const ReducedDensity r1 = reduce_single_particle(rho, cfg);
        CHECK_THAT(witness_e_vn(rho, cfg), WithinAbs(von_neumann_entropy(r1.matrix) - ln2, 1e-9));
        CHECK_THAT(witness_e_l(rho, cfg), WithinAbs(linear_entropy(r1.matrix) - 0.5, 1e-12));
        CHECK(r1.from_pure_state);
        CHECK(witness_e_vn(rho, cfg) > -1e-9);
    }
}
