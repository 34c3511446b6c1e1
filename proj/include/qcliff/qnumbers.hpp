/**
 * @file qnumbers.hpp
 * @brief q-numbers, q-factorials, q-binomials and q-Gamma ratios in Q(q).
 *
 * [u]_q = (q^u - 1)/(q - 1). Q denotes q^2 throughout; half-integer arguments
 * of base-Q quantities stay inside Q(q) because (q^{2u} - 1)/(q^2 - 1) is a
 * rational function of q whenever 2u is an integer.
 */
#pragma once

#include "qcliff/qrational.hpp"

namespace qcliff {

/// [u]_q for any integer u; [0]_q = 0, negative u gives a Laurent value.
QRational qnum(long long u);

/// (q^e - 1)/(q^b - 1) = [e/b]_{q^b}; exact for any integers e, b with b != 0.
QRational qnum_scaled(long long e, int b);

/// [u]_Q with Q = q^2, u integer.
inline QRational qnum_Q(long long u) { return qnum_scaled(2 * u, 2); }
/// [u]_Q with u = two_u/2 a half-integer.
inline QRational qnum_Q_half(long long two_u) { return qnum_scaled(two_u, 2); }

/// [k]_q! ; throws std::invalid_argument for negative k.
QRational qfactorial(int k);
/// [k]_Q!
QRational qfactorial_Q(int k);

/// Gaussian binomial [n choose k]_q; throws unless 0 <= k <= n.
QRational qbinomial(int n, int k);
/// [n choose k]_Q
QRational qbinomial_Q(int n, int k);

enum class QBase { q, Q };

/// Gamma_base(t+j)/Gamma_base(t) = prod_{s=0}^{j-1} [t+s]_base with t = two_t/2.
/// Base q requires an integer t (even two_t); base Q accepts half-integers.
QRational qgamma_ratio(int two_t, int j, QBase base);

/// Gamma_q(t) for 0 < q0 < 1 by the truncated infinite product
/// (relative tail below 1e-14); throws at nonpositive-integer poles.
double qgamma_numeric(double t, double q0);

/// q-deformation of u evaluated numerically: (q0^u - 1)/(q0 - 1).
double qnum_numeric(double u, double q0);

} // namespace qcliff
