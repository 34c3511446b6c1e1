/**
 * @file classical.hpp
 * @brief The undeformed operators on Clifford-valued polynomials: Dirac,
 * Euler, Gamma, Laplace, all acting term-wise.
 */
#pragma once

#include "qcliff/cliffpoly.hpp"

namespace qcliff {

/// Dirac operator -sum_j e_j d/dx_j (left multiplication by the generators).
CliffordPolynomial dirac(const CliffordPolynomial& p);

/// Euler operator sum_j x_j d/dx_j: scales each homogeneous term by its degree.
CliffordPolynomial euler(const CliffordPolynomial& p);

/// Gamma operator x_vec Dirac - Euler (the angular, bivector-valued part).
CliffordPolynomial gamma_op(const CliffordPolynomial& p);

/// Laplace operator, computed as minus the square of the Dirac operator.
CliffordPolynomial laplace(const CliffordPolynomial& p);

/// Plain partial derivative d/dx_j (1-based index).
CliffordPolynomial partial(const CliffordPolynomial& p, int j);

} // namespace qcliff
