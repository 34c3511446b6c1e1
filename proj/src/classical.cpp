#include "qcliff/classical.hpp"

namespace qcliff {

CliffordPolynomial partial(const CliffordPolynomial& p, int j) {
    if (j < 1 || j > p.dim()) throw std::invalid_argument("partial: index out of range");
    CliffordPolynomial r(p.dim());
    std::size_t idx = static_cast<std::size_t>(j - 1);
    for (const auto& [k, v] : p.terms()) {
        int e = k.second.e[idx];
        if (e == 0) continue;
        Monomial mono = k.second;
        mono.e[idx] -= 1;
        r.add_term(k.first, std::move(mono), v * QRational(e));
    }
    return r;
}

CliffordPolynomial dirac(const CliffordPolynomial& p) {
    CliffordPolynomial r(p.dim());
    for (const auto& [k, v] : p.terms()) {
        for (int j = 0; j < p.dim(); ++j) {
            int e = k.second.e[static_cast<std::size_t>(j)];
            if (e == 0) continue;
            Blade ej = 1u << j;
            QRational c = v * QRational(-e);
            if (blade_product_sign(ej, k.first) < 0) c = -c;
            Monomial mono = k.second;
            mono.e[static_cast<std::size_t>(j)] -= 1;
            r.add_term(ej ^ k.first, std::move(mono), c);
        }
    }
    return r;
}

CliffordPolynomial euler(const CliffordPolynomial& p) {
    CliffordPolynomial r(p.dim());
    for (const auto& [k, v] : p.terms()) {
        int d = k.second.degree();
        if (d == 0) continue;
        r.add_term(k.first, k.second, v * QRational(d));
    }
    return r;
}

CliffordPolynomial gamma_op(const CliffordPolynomial& p) {
    return mul_vector_variable(dirac(p)) - euler(p);
}

CliffordPolynomial laplace(const CliffordPolynomial& p) {
    return -dirac(dirac(p));
}

} // namespace qcliff
