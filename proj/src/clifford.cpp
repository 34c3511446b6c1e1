#include "qcliff/clifford.hpp"

#include <sstream>

namespace qcliff {

std::string blade_str(Blade b) {
    if (b == 0) return "1";
    std::ostringstream os;
    for (int i = 0; i < kMaxDim; ++i)
        if (b & (1u << i)) os << "e" << (i + 1);
    return os.str();
}

CliffordElement geometric_product(const CliffordElement& a, const CliffordElement& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("geometric_product: dimension mismatch");
    CliffordElement r(a.dim());
    for (const auto& [ba, ca] : a.terms())
        for (const auto& [bb, cb] : b.terms()) {
            QRational c = ca * cb;
            if (blade_product_sign(ba, bb) < 0) c = -c;
            r.add_term(ba ^ bb, c);
        }
    return r;
}

CliffordElement add(const CliffordElement& a, const CliffordElement& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("CliffordElement add: dimension mismatch");
    CliffordElement r = a;
    for (const auto& [bb, cb] : b.terms()) r.add_term(bb, cb);
    return r;
}

CliffordElement sub(const CliffordElement& a, const CliffordElement& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("CliffordElement sub: dimension mismatch");
    CliffordElement r = a;
    for (const auto& [bb, cb] : b.terms()) r.add_term(bb, -cb);
    return r;
}

CliffordElement scale(const CliffordElement& a, const QRational& c) {
    CliffordElement r(a.dim());
    for (const auto& [b, v] : a.terms()) r.add_term(b, v * c);
    return r;
}

CliffordElement bar(const CliffordElement& a) {
    CliffordElement r(a.dim());
    for (const auto& [b, v] : a.terms()) r.add_term(b, bar_sign(b) < 0 ? -v : v);
    return r;
}

std::string CliffordElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.str() << ")";
        if (b != 0) os << "*" << blade_str(b);
    }
    return os.str();
}

} // namespace qcliff
