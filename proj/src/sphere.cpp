#include "qcliff/sphere.hpp"

namespace qcliff {

QRational monomial_moment(const Monomial& mono, int m) {
    int total = 0;
    for (int e : mono.e) {
        if (e % 2 != 0) return QRational();
        total += e;
    }
    if (total == 0) return QRational(1);
    BigInt num = 1;
    for (int e : mono.e)
        for (int f = e - 1; f >= 1; f -= 2) num *= f;
    BigInt den = 1;
    for (int j = m; j <= m + total - 2; j += 2) den *= j;
    return QRational::ratio(num, den);
}

CliffordElement sphere_integral(const CliffordPolynomial& p) {
    CliffordElement r(p.dim());
    for (const auto& [k, v] : p.terms()) {
        QRational mom = monomial_moment(k.second, p.dim());
        if (!mom.is_zero()) r.add_term(k.first, v * mom);
    }
    return r;
}

QRational sphere_inner(const CliffordPolynomial& f, const CliffordPolynomial& g) {
    CliffordPolynomial prod = f.bar() * g;
    QRational r;
    for (const auto& [k, v] : prod.terms()) {
        if (k.first != 0) continue;
        QRational mom = monomial_moment(k.second, prod.dim());
        if (!mom.is_zero()) r += v * mom;
    }
    return r;
}

} // namespace qcliff
