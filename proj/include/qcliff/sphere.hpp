/**
 * @file sphere.hpp
 * @brief Exact integration of polynomials over the unit sphere S^{m-1}.
 *
 * Values carry the formal unit omega (the total surface area); every identity
 * verified downstream is omega-homogeneous, so omega never needs a numeric
 * value. The omega-normalized moment of x^alpha is 0 when any alpha_i is odd
 * and prod_i (alpha_i - 1)!! / (m (m+2) ... (m+|alpha|-2)) otherwise.
 */
#pragma once

#include "qcliff/cliffpoly.hpp"

namespace qcliff {

/// Value carrying an explicit power of the sphere-area unit omega.
struct SphereValue {
    QRational coeff;
    int omega_power = 1;

    friend bool operator==(const SphereValue&, const SphereValue&) = default;
};

/// omega-normalized moment of a single monomial.
QRational monomial_moment(const Monomial& mono, int m);

/// Integral over S^{m-1}; the result is the coefficient of omega
/// (Clifford-valued, since blade coefficients pass through).
CliffordElement sphere_integral(const CliffordPolynomial& p);

/// Inner product <f|g> = integral of [bar(f) g]_0 over the sphere,
/// returned as the coefficient of omega.
QRational sphere_inner(const CliffordPolynomial& f, const CliffordPolynomial& g);

} // namespace qcliff
