#include "qcliff/qnumbers.hpp"

#include <cmath>
#include <stdexcept>

namespace qcliff {

QRational qnum(long long u) {
    if (u == 0) return QRational();
    if (u > 0) {
        // 1 + q + ... + q^{u-1}
        IntPoly p;
        p.c.assign(static_cast<std::size_t>(u), BigInt(1));
        return QRational(LaurentPoly(0, std::move(p)), IntPoly::one());
    }
    // [u]_q = -q^u (1 + q + ... + q^{|u|-1})
    IntPoly p;
    p.c.assign(static_cast<std::size_t>(-u), BigInt(-1));
    return QRational(LaurentPoly(static_cast<int>(u), std::move(p)), IntPoly::one());
}

QRational qnum_scaled(long long e, int b) {
    if (b == 0) throw std::invalid_argument("qnum_scaled: zero base exponent");
    // (q^e - 1)/(q^b - 1)
    LaurentPoly num = sub(LaurentPoly::monomial(1, static_cast<int>(e)), LaurentPoly::constant(1));
    LaurentPoly den = sub(LaurentPoly::monomial(1, b), LaurentPoly::constant(1));
    if (num.is_zero()) return QRational();
    return QRational(std::move(num), std::move(den));
}

QRational qfactorial(int k) {
    if (k < 0) throw std::invalid_argument("qfactorial: negative argument");
    QRational r(1);
    for (int i = 2; i <= k; ++i) r *= qnum(i);
    return r;
}

QRational qfactorial_Q(int k) {
    if (k < 0) throw std::invalid_argument("qfactorial_Q: negative argument");
    QRational r(1);
    for (int i = 2; i <= k; ++i) r *= qnum_Q(i);
    return r;
}

QRational qbinomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("qbinomial: need 0 <= k <= n");
    k = std::min(k, n - k);
    QRational r(1);
    for (int i = 0; i < k; ++i) r *= qnum(n - i);
    return r / qfactorial(k);
}

QRational qbinomial_Q(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("qbinomial_Q: need 0 <= k <= n");
    k = std::min(k, n - k);
    QRational r(1);
    for (int i = 0; i < k; ++i) r *= qnum_Q(n - i);
    return r / qfactorial_Q(k);
}

QRational qgamma_ratio(int two_t, int j, QBase base) {
    if (j < 0) throw std::invalid_argument("qgamma_ratio: negative j");
    QRational r(1);
    if (base == QBase::q) {
        if (two_t % 2 != 0) throw std::invalid_argument("qgamma_ratio: base q needs an integer t");
        long long t = two_t / 2;
        for (int s = 0; s < j; ++s) r *= qnum(t + s);
    } else {
        for (int s = 0; s < j; ++s) r *= qnum_Q_half(two_t + 2 * s);
    }
    return r;
}

double qgamma_numeric(double t, double q0) {
    if (!(q0 > 0.0 && q0 < 1.0)) throw std::invalid_argument("qgamma_numeric: need 0 < q0 < 1");
    if (t <= 0.0 && std::abs(t - std::round(t)) < 1e-12)
        throw std::domain_error("qgamma_numeric: pole at nonpositive integer");
    // prod_{k>=1}(1-q^k) / prod_{k>=0}(1-q^{t+k}) * (1-q)^{1-t}
    double ratio = 1.0 / (1.0 - std::pow(q0, t)); // k = 0 term of the denominator
    double qk = 1.0;
    for (int k = 1; k < 100000; ++k) {
        qk *= q0;
        double fn = 1.0 - qk;
        double fd = 1.0 - qk * std::pow(q0, t);
        if (fd == 0.0) throw std::domain_error("qgamma_numeric: pole");
        ratio *= fn / fd;
        if (qk < 1e-16 * (1.0 - q0)) break; // relative product tail < 1e-14
    }
    double r = ratio * std::pow(1.0 - q0, 1.0 - t);
    if (!std::isfinite(r)) throw std::domain_error("qgamma_numeric: non-finite result");
    return r;
}

double qnum_numeric(double u, double q0) {
    return (std::pow(q0, u) - 1.0) / (q0 - 1.0);
}

} // namespace qcliff
