#include "qcliff/cliffpoly.hpp"

#include <sstream>

namespace qcliff {

CliffordPolynomial CliffordPolynomial::scalar(int m, const QRational& c) {
    CliffordPolynomial p(m);
    p.add_term(0, Monomial{std::vector<int>(static_cast<std::size_t>(m), 0)}, c);
    return p;
}

CliffordPolynomial CliffordPolynomial::variable(int m, int j) {
    if (j < 1 || j > m) throw std::invalid_argument("variable: index out of range");
    CliffordPolynomial p(m);
    Monomial mono{std::vector<int>(static_cast<std::size_t>(m), 0)};
    mono.e[static_cast<std::size_t>(j - 1)] = 1;
    p.add_term(0, std::move(mono), QRational(1));
    return p;
}

CliffordPolynomial CliffordPolynomial::generator(int m, int i) {
    if (i < 1 || i > m) throw std::invalid_argument("generator: index out of range");
    CliffordPolynomial p(m);
    p.add_term(1u << (i - 1), Monomial{std::vector<int>(static_cast<std::size_t>(m), 0)}, QRational(1));
    return p;
}

CliffordPolynomial CliffordPolynomial::vector_variable(int m) {
    CliffordPolynomial p(m);
    for (int j = 1; j <= m; ++j) {
        Monomial mono{std::vector<int>(static_cast<std::size_t>(m), 0)};
        mono.e[static_cast<std::size_t>(j - 1)] = 1;
        p.add_term(1u << (j - 1), std::move(mono), QRational(1));
    }
    return p;
}

CliffordPolynomial CliffordPolynomial::r_squared(int m) {
    CliffordPolynomial p(m);
    for (int j = 0; j < m; ++j) {
        Monomial mono{std::vector<int>(static_cast<std::size_t>(m), 0)};
        mono.e[static_cast<std::size_t>(j)] = 2;
        p.add_term(0, std::move(mono), QRational(1));
    }
    return p;
}

CliffordPolynomial CliffordPolynomial::term(int m, Monomial mono, Blade b, const QRational& c) {
    CliffordPolynomial p(m);
    p.add_term(b, std::move(mono), c);
    return p;
}

void CliffordPolynomial::add_term(Blade b, Monomial mono, const QRational& c) {
    if (c.is_zero()) return;
    if (mono.e.size() != static_cast<std::size_t>(m_))
        throw std::invalid_argument("add_term: exponent vector size mismatch");
    Key key{b, std::move(mono)};
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QRational CliffordPolynomial::coeff(Blade b, const Monomial& mono) const {
    auto it = terms_.find(Key{b, mono});
    return it == terms_.end() ? QRational() : it->second;
}

int CliffordPolynomial::degree() const {
    int d = -1;
    for (const auto& [k, v] : terms_) d = std::max(d, k.second.degree());
    return d;
}

bool CliffordPolynomial::is_homogeneous() const {
    int d = -2;
    for (const auto& [k, v] : terms_) {
        int dk = k.second.degree();
        if (d == -2) d = dk;
        else if (d != dk) return false;
    }
    return true;
}

std::map<int, CliffordPolynomial> CliffordPolynomial::homogeneous_components() const {
    std::map<int, CliffordPolynomial> comps;
    for (const auto& [k, v] : terms_) {
        int d = k.second.degree();
        auto it = comps.find(d);
        if (it == comps.end()) it = comps.emplace(d, CliffordPolynomial(m_)).first;
        it->second.add_term(k.first, k.second, v);
    }
    return comps;
}

CliffordPolynomial CliffordPolynomial::component_of_degree(int d) const {
    CliffordPolynomial r(m_);
    for (const auto& [k, v] : terms_)
        if (k.second.degree() == d) r.add_term(k.first, k.second, v);
    return r;
}

bool CliffordPolynomial::is_scalar() const {
    for (const auto& [k, v] : terms_)
        if (k.first != 0) return false;
    return true;
}

CliffordPolynomial CliffordPolynomial::scalar_part() const { return grade_part(0); }

CliffordPolynomial CliffordPolynomial::grade_part(int g) const {
    CliffordPolynomial r(m_);
    for (const auto& [k, v] : terms_)
        if (grade(k.first) == g) r.add_term(k.first, k.second, v);
    return r;
}

int CliffordPolynomial::max_grade() const {
    int g = 0;
    for (const auto& [k, v] : terms_) g = std::max(g, grade(k.first));
    return g;
}

CliffordPolynomial operator+(const CliffordPolynomial& a, const CliffordPolynomial& b) {
    if (a.m_ != b.m_) throw std::invalid_argument("CliffordPolynomial +: dimension mismatch");
    CliffordPolynomial r = a;
    for (const auto& [k, v] : b.terms_) r.add_term(k.first, k.second, v);
    return r;
}

CliffordPolynomial operator-(const CliffordPolynomial& a, const CliffordPolynomial& b) {
    if (a.m_ != b.m_) throw std::invalid_argument("CliffordPolynomial -: dimension mismatch");
    CliffordPolynomial r = a;
    for (const auto& [k, v] : b.terms_) r.add_term(k.first, k.second, -v);
    return r;
}

CliffordPolynomial operator-(const CliffordPolynomial& a) {
    CliffordPolynomial r(a.m_);
    for (const auto& [k, v] : a.terms_) r.add_term(k.first, k.second, -v);
    return r;
}

CliffordPolynomial operator*(const CliffordPolynomial& a, const CliffordPolynomial& b) {
    if (a.m_ != b.m_) throw std::invalid_argument("CliffordPolynomial *: dimension mismatch");
    CliffordPolynomial r(a.m_);
    for (const auto& [ka, va] : a.terms_)
        for (const auto& [kb, vb] : b.terms_) {
            QRational c = va * vb;
            if (blade_product_sign(ka.first, kb.first) < 0) c = -c;
            Monomial mono;
            mono.e.resize(static_cast<std::size_t>(a.m_));
            for (std::size_t i = 0; i < mono.e.size(); ++i) mono.e[i] = ka.second.e[i] + kb.second.e[i];
            r.add_term(ka.first ^ kb.first, std::move(mono), c);
        }
    return r;
}

CliffordPolynomial CliffordPolynomial::scaled(const QRational& c) const {
    CliffordPolynomial r(m_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, v * c);
    return r;
}

CliffordPolynomial CliffordPolynomial::scaled_variables(const QRational& c) const {
    CliffordPolynomial r(m_);
    for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, v * c.pow(k.second.degree()));
    return r;
}

CliffordPolynomial CliffordPolynomial::bar() const {
    CliffordPolynomial r(m_);
    for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, bar_sign(k.first) < 0 ? -v : v);
    return r;
}

CliffordPolynomial CliffordPolynomial::map_coeffs(const std::function<QRational(const QRational&)>& f) const {
    CliffordPolynomial r(m_);
    for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, f(v));
    return r;
}

CliffordPolynomial CliffordPolynomial::divide_exact_scalar(const CliffordPolynomial& divisor) const {
    if (!divisor.is_scalar() || divisor.is_zero())
        throw std::invalid_argument("divide_exact_scalar: divisor must be a nonzero scalar polynomial");
    if (divisor.m_ != m_) throw std::invalid_argument("divide_exact_scalar: dimension mismatch");
    // lex-leading term of the divisor
    auto lead = std::prev(divisor.terms_.end());
    const Monomial& dmono = lead->first.second;
    const QRational& dcoeff = lead->second;

    CliffordPolynomial quot(m_);
    // reduce each blade component independently
    std::map<Blade, std::map<Monomial, QRational>> by_blade;
    for (const auto& [k, v] : terms_) by_blade[k.first][k.second] = v;

    for (auto& [blade, comp] : by_blade) {
        while (!comp.empty()) {
            auto it = std::prev(comp.end()); // lex-leading monomial
            Monomial t = it->first;
            QRational c = it->second;
            Monomial qm;
            qm.e.resize(t.e.size());
            for (std::size_t i = 0; i < t.e.size(); ++i) {
                qm.e[i] = t.e[i] - dmono.e[i];
                if (qm.e[i] < 0) throw std::domain_error("divide_exact_scalar: not divisible");
            }
            QRational qc = c / dcoeff;
            quot.add_term(blade, qm, qc);
            // comp -= qc * q^qm * divisor
            for (const auto& [dk, dv] : divisor.terms_) {
                Monomial sm;
                sm.e.resize(qm.e.size());
                for (std::size_t i = 0; i < sm.e.size(); ++i) sm.e[i] = qm.e[i] + dk.second.e[i];
                auto [jt, inserted] = comp.try_emplace(sm, QRational());
                jt->second -= qc * dv;
                if (jt->second.is_zero()) comp.erase(jt);
            }
        }
    }
    return quot;
}

std::string CliffordPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.str() << ")";
        for (std::size_t i = 0; i < k.second.e.size(); ++i) {
            if (k.second.e[i] == 0) continue;
            os << "*x" << (i + 1);
            if (k.second.e[i] != 1) os << "^" << k.second.e[i];
        }
        if (k.first != 0) os << "*" << blade_str(k.first);
    }
    return os.str();
}

nlohmann::json CliffordPolynomial::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, v] : terms_)
        terms.push_back({{"exponents", k.second.e}, {"blade", k.first}, {"coeff", v.to_json()}});
    return {{"m", m_}, {"terms", terms}};
}

CliffordPolynomial CliffordPolynomial::from_json(const nlohmann::json& j) {
    CliffordPolynomial p(j.at("m").get<int>());
    for (const auto& t : j.at("terms")) {
        Monomial mono{t.at("exponents").get<std::vector<int>>()};
        p.add_term(t.at("blade").get<Blade>(), std::move(mono), QRational::from_json(t.at("coeff")));
    }
    return p;
}

CliffordPolynomial mul_vector_variable(const CliffordPolynomial& p) {
    CliffordPolynomial r(p.dim());
    for (const auto& [k, v] : p.terms()) {
        for (int j = 0; j < p.dim(); ++j) {
            Blade ej = 1u << j;
            QRational c = v;
            if (blade_product_sign(ej, k.first) < 0) c = -c;
            Monomial mono = k.second;
            mono.e[static_cast<std::size_t>(j)] += 1;
            r.add_term(ej ^ k.first, std::move(mono), c);
        }
    }
    return r;
}

CliffordPolynomial mul_r2(const CliffordPolynomial& p) {
    CliffordPolynomial r(p.dim());
    for (const auto& [k, v] : p.terms()) {
        for (int j = 0; j < p.dim(); ++j) {
            Monomial mono = k.second;
            mono.e[static_cast<std::size_t>(j)] += 2;
            r.add_term(k.first, std::move(mono), v);
        }
    }
    return r;
}

CliffordPolynomial mul_x_power(const CliffordPolynomial& p, int i) {
    if (i < 0) throw std::invalid_argument("mul_x_power: negative power");
    CliffordPolynomial r = p;
    // x^2 = -r^2 is central; peel one leftover vector factor if i is odd
    for (int s = 0; s < i / 2; ++s) r = -mul_r2(r);
    if (i % 2) r = mul_vector_variable(r);
    return r;
}

} // namespace qcliff
