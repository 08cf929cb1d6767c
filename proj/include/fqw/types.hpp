// Copyright 2026 The fqwalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file types.hpp
 * @brief Scalar/matrix aliases and the error hierarchy shared by all modules.
 */

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace fqw {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr cplx I_unit{0.0, 1.0};

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// CycleConfig invariant violated (too few nodes, non-positive Ω, bad node index).
class InvalidConfig : public Error {
public:
    using Error::Error;
};

/// Negative relaxation rate or negative evolution time.
class InvalidNoise : public Error {
public:
    using Error::Error;
};

/// A numerical contract failed: non-Hermitian input, eigenvalue below the
/// clamp tolerance, odd rank of an antisymmetric matrix, broken normalization.
class NumericContract : public Error {
public:
    using Error::Error;
};

/// Operands built for different node counts or of the wrong shape.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

namespace detail {

inline double max_abs(const CMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double hermiticity_defect(const CMatrix& m) {
    return max_abs(m - m.adjoint());
}

} // namespace detail

} // namespace fqw
