#include "qcliff/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qcliff {

IntPoly add(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size()) r.c[i] += a.c[i];
        if (i < b.c.size()) r.c[i] += b.c[i];
    }
    r.trim();
    return r;
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size()) r.c[i] += a.c[i];
        if (i < b.c.size()) r.c[i] -= b.c[i];
    }
    r.trim();
    return r;
}

IntPoly neg(const IntPoly& a) {
    IntPoly r = a;
    for (auto& v : r.c) v = -v;
    return r;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j] == 0) continue;
            r.c[i + j] += a.c[i] * b.c[j];
        }
    }
    r.trim();
    return r;
}

IntPoly mul_scalar(const IntPoly& a, const BigInt& s) {
    if (s == 0) return {};
    IntPoly r = a;
    for (auto& v : r.c) v *= s;
    return r;
}

BigInt content(const IntPoly& a) {
    BigInt g = 0;
    for (const auto& v : a.c) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1) break;
    }
    return g < 0 ? BigInt(-g) : g;
}

IntPoly primitive_part(const IntPoly& a) {
    if (a.is_zero()) return {};
    BigInt g = content(a);
    if (g == 1) return a;
    IntPoly r = a;
    for (auto& v : r.c) v /= g;
    return r;
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b, assuming deg a >= deg b >= 0.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    const int db = b.degree();
    const BigInt& d = b.lc();
    while (!a.is_zero() && a.degree() >= db) {
        const int shift = a.degree() - db;
        BigInt top = a.lc();
        for (auto& v : a.c) v *= d;
        for (int j = 0; j <= db; ++j) a.c[static_cast<std::size_t>(j + shift)] -= top * b.c[static_cast<std::size_t>(j)];
        a.trim();
    }
    return a;
}

} // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    BigInt ca = content(a), cb = content(b);
    if (a.is_zero()) { IntPoly r = primitive_part(b); if (r.lc() < 0) r = neg(r); return mul_scalar(r, cb); }
    if (b.is_zero()) { IntPoly r = primitive_part(a); if (r.lc() < 0) r = neg(r); return mul_scalar(r, ca); }
    BigInt cg = boost::multiprecision::gcd(ca, cb);

    IntPoly f = primitive_part(a), g = primitive_part(b);
    if (f.degree() < g.degree()) std::swap(f, g);
    // primitive PRS
    while (true) {
        if (g.is_zero()) break;
        if (g.degree() == 0) { g = IntPoly::one(); break; }
        IntPoly r = pseudo_rem(f, g);
        f = std::move(g);
        g = primitive_part(r);
    }
    IntPoly result = f;
    if (g.is_one()) result = IntPoly::one();
    if (result.lc() < 0) result = neg(result);
    return mul_scalar(result, cg);
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("IntPoly divexact: division by zero");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::domain_error("IntPoly divexact: not divisible");
    IntPoly rem = a;
    IntPoly quot;
    quot.c.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), BigInt(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        if (rem.lc() % b.lc() != 0) throw std::domain_error("IntPoly divexact: not divisible");
        BigInt qc = rem.lc() / b.lc();
        int shift = rem.degree() - b.degree();
        quot.c[static_cast<std::size_t>(shift)] = qc;
        for (int j = 0; j <= b.degree(); ++j)
            rem.c[static_cast<std::size_t>(j + shift)] -= qc * b.c[static_cast<std::size_t>(j)];
        rem.trim();
    }
    if (!rem.is_zero()) throw std::domain_error("IntPoly divexact: not divisible");
    quot.trim();
    return quot;
}

IntPoly stretch(const IntPoly& a, int s) {
    if (s < 1) throw std::invalid_argument("IntPoly stretch: s must be >= 1");
    if (s == 1 || a.is_zero()) return a;
    IntPoly r;
    r.c.assign(static_cast<std::size_t>(a.degree() * s + 1), BigInt(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i * static_cast<std::size_t>(s)] = a.c[i];
    return r;
}

double eval_double(const IntPoly& a, double x) {
    double r = 0.0;
    for (std::size_t i = a.c.size(); i-- > 0;) r = r * x + a.c[i].convert_to<double>();
    return r;
}

BigInt eval_one(const IntPoly& a) {
    BigInt s = 0;
    for (const auto& v : a.c) s += v;
    return s;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int off = std::min(a.off, b.off);
    IntPoly p;
    p.c.assign(static_cast<std::size_t>(std::max(a.high(), b.high()) - off + 1), BigInt(0));
    for (std::size_t i = 0; i < a.p.c.size(); ++i) p.c[static_cast<std::size_t>(a.off - off) + i] += a.p.c[i];
    for (std::size_t i = 0; i < b.p.c.size(); ++i) p.c[static_cast<std::size_t>(b.off - off) + i] += b.p.c[i];
    return LaurentPoly(off, std::move(p));
}

LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) { return add(a, neg(b)); }

LaurentPoly neg(const LaurentPoly& a) { return LaurentPoly(a.off, neg(a.p)); }

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return LaurentPoly(a.off + b.off, mul(a.p, b.p));
}

LaurentPoly stretch(const LaurentPoly& a, int s) {
    if (s == 0) throw std::invalid_argument("LaurentPoly stretch: s must be nonzero");
    if (a.is_zero()) return {};
    if (s > 0) return LaurentPoly(a.off * s, stretch(a.p, s));
    // q -> q^s with s < 0 reverses the coefficient order
    IntPoly rev = a.p;
    std::reverse(rev.c.begin(), rev.c.end());
    int high = a.high();
    return LaurentPoly(high * s, stretch(rev, -s));
}

double eval_double(const LaurentPoly& a, double x) {
    if (a.is_zero()) return 0.0;
    return std::pow(x, a.off) * eval_double(a.p, x);
}

std::string to_string(const LaurentPoly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = a.p.degree(); i >= 0; --i) {
        const BigInt& v = a.p.c[static_cast<std::size_t>(i)];
        if (v == 0) continue;
        BigInt av = v < 0 ? BigInt(-v) : v;
        int e = a.off + i;
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? "-" : "+");
        }
        if (av != 1 || e == 0) os << av.str();
        if (e != 0) {
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

} // namespace qcliff
