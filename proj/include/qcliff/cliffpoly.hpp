/**
 * @file cliffpoly.hpp
 * @brief Clifford-valued polynomials in m commuting variables.
 *
 * A term is (monomial exponent vector, blade) -> Q(q) coefficient. The
 * variables x_j commute with each other and with the generators e_i; all the
 * noncommutativity lives in the blade part. No zero terms are stored.
 */
#pragma once

#include "qcliff/clifford.hpp"

#include <functional>
#include <map>
#include <vector>

namespace qcliff {

struct Monomial {
    std::vector<int> e; // one exponent per variable

    int degree() const {
        int d = 0;
        for (int v : e) d += v;
        return d;
    }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

class CliffordPolynomial {
  public:
    using Key = std::pair<Blade, Monomial>;

    explicit CliffordPolynomial(int m = 1) : m_(m) {
        if (m < 1 || m > kMaxDim) throw std::invalid_argument("CliffordPolynomial: bad dimension");
    }

    static CliffordPolynomial scalar(int m, const QRational& c);
    static CliffordPolynomial one(int m) { return scalar(m, QRational(1)); }
    /// x_j (1-based)
    static CliffordPolynomial variable(int m, int j);
    /// e_i (1-based)
    static CliffordPolynomial generator(int m, int i);
    /// the vector variable sum_j e_j x_j
    static CliffordPolynomial vector_variable(int m);
    /// r^2 = sum_j x_j^2
    static CliffordPolynomial r_squared(int m);
    /// monomial * blade term
    static CliffordPolynomial term(int m, Monomial mono, Blade b, const QRational& c);

    int dim() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Key, QRational>& terms() const { return terms_; }

    void add_term(Blade b, Monomial mono, const QRational& c);
    QRational coeff(Blade b, const Monomial& mono) const;

    /// -1 for the zero polynomial
    int degree() const;
    bool is_homogeneous() const;
    /// map degree -> homogeneous component (zero polynomial never appears)
    std::map<int, CliffordPolynomial> homogeneous_components() const;
    CliffordPolynomial component_of_degree(int d) const;

    /// true when every term has the empty blade
    bool is_scalar() const;
    /// the empty-blade part, kept as a polynomial
    CliffordPolynomial scalar_part() const;
    /// the part of the given grade
    CliffordPolynomial grade_part(int k) const;
    int max_grade() const;

    friend CliffordPolynomial operator+(const CliffordPolynomial& a, const CliffordPolynomial& b);
    friend CliffordPolynomial operator-(const CliffordPolynomial& a, const CliffordPolynomial& b);
    friend CliffordPolynomial operator-(const CliffordPolynomial& a);
    /// full geometric product (variables commute, blades multiply with signs)
    friend CliffordPolynomial operator*(const CliffordPolynomial& a, const CliffordPolynomial& b);

    CliffordPolynomial scaled(const QRational& c) const;
    /// f(c x): scale the degree-d component by c^d
    CliffordPolynomial scaled_variables(const QRational& c) const;
    /// main anti-involution applied to every blade
    CliffordPolynomial bar() const;
    /// apply a function to every coefficient (used for q -> q^s substitutions)
    CliffordPolynomial map_coeffs(const std::function<QRational(const QRational&)>& f) const;

    /// Exact division by a scalar polynomial (acts blade by blade);
    /// throws std::domain_error when not divisible.
    CliffordPolynomial divide_exact_scalar(const CliffordPolynomial& divisor) const;

    friend bool operator==(const CliffordPolynomial& a, const CliffordPolynomial& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const CliffordPolynomial& a, const CliffordPolynomial& b) { return !(a == b); }

    std::string str() const;
    nlohmann::json to_json() const;
    static CliffordPolynomial from_json(const nlohmann::json& j);

  private:
    int m_;
    std::map<Key, QRational> terms_;
};

/// left multiplication by the vector variable
CliffordPolynomial mul_vector_variable(const CliffordPolynomial& p);
/// multiplication by r^2 (central)
CliffordPolynomial mul_r2(const CliffordPolynomial& p);
/// left multiplication by x_vec^i (powers of the vector variable)
CliffordPolynomial mul_x_power(const CliffordPolynomial& p, int i);

} // namespace qcliff
