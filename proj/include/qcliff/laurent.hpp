/**
 * @file laurent.hpp
 * @brief Dense integer-coefficient polynomials and Laurent polynomials in q.
 *
 * IntPoly stores ascending coefficients with no trailing zero (empty = 0).
 * LaurentPoly is q^off * IntPoly with a nonzero constant term when nonzero,
 * so negative powers of q are first-class. All coefficients are
 * arbitrary-precision integers.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcliff {

using BigInt = boost::multiprecision::cpp_int;

struct IntPoly {
    std::vector<BigInt> c; // ascending powers; c.back() != 0 when nonzero

    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { trim(); }
    static IntPoly constant(BigInt v) {
        IntPoly p;
        if (v != 0) p.c.push_back(std::move(v));
        return p;
    }
    static IntPoly one() { return constant(1); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }
    int degree() const { return is_zero() ? -1 : static_cast<int>(c.size()) - 1; }
    const BigInt& lc() const { return c.back(); }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }
};

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly neg(const IntPoly& a);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly mul_scalar(const IntPoly& a, const BigInt& s);

/// gcd of all coefficients, always >= 0 (0 for the zero polynomial).
BigInt content(const IntPoly& a);
/// a / content(a), sign preserved; zero stays zero.
IntPoly primitive_part(const IntPoly& a);

/// gcd in Z[q]: content-inclusive, primitive PRS on the primitive parts.
/// Result has positive leading coefficient; gcd(0,b) = |b|-normalized b.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Exact division; throws std::domain_error if b does not divide a.
IntPoly divexact(const IntPoly& a, const IntPoly& b);

/// Substitute q -> q^s for s >= 1 (spreads coefficients).
IntPoly stretch(const IntPoly& a, int s);

double eval_double(const IntPoly& a, double x);
/// Exact value at q = 1 (sum of coefficients).
BigInt eval_one(const IntPoly& a);

struct LaurentPoly {
    int off = 0;   // exponent of the lowest monomial
    IntPoly p;     // p.c[0] != 0 when nonzero

    LaurentPoly() = default;
    LaurentPoly(int o, IntPoly poly) : off(o), p(std::move(poly)) { normalize(); }
    static LaurentPoly constant(BigInt v) { return LaurentPoly(0, IntPoly::constant(std::move(v))); }
    static LaurentPoly monomial(BigInt coeff, int exp) { return LaurentPoly(exp, IntPoly::constant(std::move(coeff))); }

    void normalize() {
        p.trim();
        if (p.is_zero()) { off = 0; return; }
        std::size_t lead0 = 0;
        while (lead0 < p.c.size() && p.c[lead0] == 0) ++lead0;
        if (lead0 > 0) {
            p.c.erase(p.c.begin(), p.c.begin() + static_cast<long>(lead0));
            off += static_cast<int>(lead0);
        }
    }
    bool is_zero() const { return p.is_zero(); }
    int low() const { return off; }
    int high() const { return off + p.degree(); }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.off == b.off && a.p == b.p;
    }
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly neg(const LaurentPoly& a);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
/// Substitute q -> q^s for any nonzero integer s (negative flips the range).
LaurentPoly stretch(const LaurentPoly& a, int s);
double eval_double(const LaurentPoly& a, double x);

std::string to_string(const LaurentPoly& a); // descending powers, "0" for zero

} // namespace qcliff
