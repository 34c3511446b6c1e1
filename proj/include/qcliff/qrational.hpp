/**
 * @file qrational.hpp
 * @brief QRational: an element of Q(q), the field of rational functions in q.
 *
 * Represented as num/den with num a Laurent polynomial and den an ordinary
 * integer polynomial. Canonical form invariants, enforced after every
 * operation:
 *   - den is nonzero, has a nonzero constant term (all powers of q are folded
 *     into the numerator offset) and a positive leading coefficient;
 *   - gcd(num, den) = 1 in Z[q], including integer content;
 *   - zero is 0/1.
 * Equality is structural equality of the canonical form. Values are immutable
 * in spirit: all operations return new values.
 */
#pragma once

#include "qcliff/laurent.hpp"

#include <json.hpp>
#include <string>
#include <utility>

namespace qcliff {

class QRational {
  public:
    QRational() : den_(IntPoly::one()) {}
    QRational(long long v) : num_(LaurentPoly::constant(BigInt(v))), den_(IntPoly::one()) {}
    QRational(const BigInt& v) : num_(LaurentPoly::constant(v)), den_(IntPoly::one()) {}
    QRational(LaurentPoly num, LaurentPoly den);
    QRational(LaurentPoly num, IntPoly den);

    /// c * q^e
    static QRational monomial(BigInt c, int e) { QRational r; r.num_ = LaurentPoly::monomial(std::move(c), e); return r; }
    static QRational q_power(int e) { return monomial(1, e); }
    /// a/b for integers, b != 0
    static QRational ratio(BigInt a, BigInt b);

    const LaurentPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.off == 0 && num_.p.is_one() && den_.is_one(); }
    /// true when the denominator is 1 (value is a Laurent polynomial)
    bool is_laurent() const { return den_.is_one(); }

    friend bool operator==(const QRational& a, const QRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QRational& a, const QRational& b) { return !(a == b); }

    friend QRational operator-(const QRational& a) { QRational r; r.num_ = neg(a.num_); r.den_ = a.den_; return r; }
    friend QRational operator+(const QRational& a, const QRational& b);
    friend QRational operator-(const QRational& a, const QRational& b);
    friend QRational operator*(const QRational& a, const QRational& b);
    friend QRational operator/(const QRational& a, const QRational& b);

    QRational& operator+=(const QRational& b) { *this = *this + b; return *this; }
    QRational& operator-=(const QRational& b) { *this = *this - b; return *this; }
    QRational& operator*=(const QRational& b) { *this = *this * b; return *this; }
    QRational& operator/=(const QRational& b) { *this = *this / b; return *this; }

    QRational inverse() const;
    QRational pow(int e) const;

    /// Substitute q -> q^s, s any nonzero integer (s = -1 gives the q -> 1/q involution).
    QRational substitute_power(int s) const;

    /// Evaluate at a concrete q0; throws std::domain_error on a pole
    /// (including q0 = 1 when the reduced denominator vanishes there).
    /// The result is checked to be finite.
    double eval(double q0) const;

    /// Exact value at q = 1 as a reduced integer fraction; throws on a pole.
    std::pair<BigInt, BigInt> eval_one_exact() const;

    /// Deterministic canonical text form, e.g. "(q^2+q+1)/(q+1)".
    std::string str() const;

    nlohmann::json to_json() const;
    static QRational from_json(const nlohmann::json& j);

  private:
    void canonicalize();

    LaurentPoly num_;
    IntPoly den_;
};

inline QRational operator*(const BigInt& s, const QRational& a) { return QRational(s) * a; }

} // namespace qcliff
