#include "qcliff/qrational.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qcliff {

QRational::QRational(LaurentPoly num, LaurentPoly den) {
    if (den.is_zero()) throw std::domain_error("QRational: zero denominator");
    num_ = std::move(num);
    // fold the denominator offset into the numerator
    num_.off -= den.off;
    den_ = std::move(den.p);
    canonicalize();
}

QRational::QRational(LaurentPoly num, IntPoly den) {
    if (den.is_zero()) throw std::domain_error("QRational: zero denominator");
    num_ = std::move(num);
    den_ = std::move(den);
    // den may have leading zero powers of q; strip them into the offset
    std::size_t lead0 = 0;
    while (lead0 < den_.c.size() && den_.c[lead0] == 0) ++lead0;
    if (lead0 > 0) {
        den_.c.erase(den_.c.begin(), den_.c.begin() + static_cast<long>(lead0));
        num_.off -= static_cast<int>(lead0);
    }
    canonicalize();
}

QRational QRational::ratio(BigInt a, BigInt b) {
    return QRational(LaurentPoly::constant(std::move(a)), IntPoly::constant(std::move(b)));
}

void QRational::canonicalize() {
    if (num_.is_zero()) {
        num_ = LaurentPoly{};
        den_ = IntPoly::one();
        return;
    }
    if (!den_.is_one()) {
        IntPoly g = gcd(num_.p, den_);
        if (!g.is_one()) {
            num_.p = divexact(num_.p, g);
            den_ = divexact(den_, g);
        }
    }
    if (den_.lc() < 0) {
        num_.p = neg(num_.p);
        den_ = neg(den_);
    }
}

QRational operator+(const QRational& a, const QRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    QRational r;
    if (a.den_ == b.den_) {
        r.num_ = add(a.num_, b.num_);
        r.den_ = a.den_;
    } else {
        r.num_ = add(mul(a.num_, LaurentPoly(0, b.den_)), mul(b.num_, LaurentPoly(0, a.den_)));
        r.den_ = mul(a.den_, b.den_);
    }
    r.canonicalize();
    return r;
}

QRational operator-(const QRational& a, const QRational& b) { return a + (-b); }

QRational operator*(const QRational& a, const QRational& b) {
    if (a.is_zero() || b.is_zero()) return QRational();
    QRational r;
    if (a.den_.is_one() && b.den_.is_one()) {
        r.num_ = mul(a.num_, b.num_);
        r.den_ = IntPoly::one();
        return r;
    }
    // cross-reduce before multiplying to keep the gcd small
    IntPoly an = a.num_.p, bd = b.den_, bn = b.num_.p, ad = a.den_;
    IntPoly g1 = gcd(an, bd);
    if (!g1.is_one()) { an = divexact(an, g1); bd = divexact(bd, g1); }
    IntPoly g2 = gcd(bn, ad);
    if (!g2.is_one()) { bn = divexact(bn, g2); ad = divexact(ad, g2); }
    r.num_ = LaurentPoly(a.num_.off + b.num_.off, mul(an, bn));
    r.den_ = mul(ad, bd);
    r.canonicalize();
    return r;
}

QRational operator/(const QRational& a, const QRational& b) { return a * b.inverse(); }

QRational QRational::inverse() const {
    if (is_zero()) throw std::domain_error("QRational: division by zero");
    return QRational(LaurentPoly(-num_.off, den_), num_.p);
}

QRational QRational::pow(int e) const {
    if (e == 0) return QRational(1);
    QRational base = e > 0 ? *this : inverse();
    int n = e > 0 ? e : -e;
    QRational r(1);
    while (n > 0) {
        if (n & 1) r *= base;
        base = n > 1 ? base * base : base;
        n >>= 1;
    }
    return r;
}

QRational QRational::substitute_power(int s) const {
    if (is_zero()) return QRational();
    return QRational(stretch(num_, s), stretch(LaurentPoly(0, den_), s));
}

double QRational::eval(double q0) const {
    double dv = eval_double(den_, q0);
    if (dv == 0.0) throw std::domain_error("QRational: pole at q0 = " + std::to_string(q0));
    double nv = eval_double(num_, q0);
    double r = nv / dv;
    if (!std::isfinite(r)) throw std::domain_error("QRational: non-finite value at q0 = " + std::to_string(q0));
    return r;
}

std::pair<BigInt, BigInt> QRational::eval_one_exact() const {
    BigInt d = eval_one(den_);
    if (d == 0) throw std::domain_error("QRational: pole at q = 1");
    BigInt n = eval_one(num_.p);
    BigInt g = boost::multiprecision::gcd(n, d);
    if (g != 0) { n /= g; d /= g; }
    if (d < 0) { n = -n; d = -d; }
    return {n, d};
}

std::string QRational::str() const {
    if (is_zero()) return "0";
    std::string ns = to_string(num_);
    if (den_.is_one()) return ns;
    std::string ds = to_string(LaurentPoly(0, den_));
    return "(" + ns + ")/(" + ds + ")";
}

namespace {

nlohmann::json bigint_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<std::int64_t>());
}

nlohmann::json laurent_to_json(const LaurentPoly& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.p.c) coeffs.push_back(bigint_to_json(c));
    return {{"offset", p.off}, {"coeffs", coeffs}};
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
    std::vector<BigInt> c;
    for (const auto& v : j.at("coeffs")) c.push_back(bigint_from_json(v));
    return LaurentPoly(j.at("offset").get<int>(), IntPoly(std::move(c)));
}

} // namespace

nlohmann::json QRational::to_json() const {
    return {{"num", laurent_to_json(num_)}, {"den", laurent_to_json(LaurentPoly(0, den_))}};
}

QRational QRational::from_json(const nlohmann::json& j) {
    return QRational(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

} // namespace qcliff
