/**
 * @file clifford.hpp
 * @brief The real Clifford algebra R_{0,m}: blades as bitmasks, geometric
 * product, main anti-involution, grade and scalar projection.
 *
 * A blade is an m-bit mask (bit i set means the generator e_{i+1} is present),
 * m <= 12. The mask encodes the canonically ordered product e_{i1}...e_{ik}
 * with i1 < ... < ik. Generators satisfy e_i e_j + e_j e_i = -2 delta_ij.
 */
#pragma once

#include "qcliff/qrational.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <string>

namespace qcliff {

using Blade = std::uint32_t;

constexpr int kMaxDim = 12;

inline int grade(Blade b) { return std::popcount(b); }

/// Sign of the geometric product of two blades, counting transpositions and
/// applying e_i^2 = -1 on the common generators. The product blade is a ^ b.
inline int blade_product_sign(Blade a, Blade b) {
    int swaps = 0;
    Blade t = a >> 1;
    while (t) {
        swaps += std::popcount(t & b);
        t >>= 1;
    }
    int squares = std::popcount(a & b);
    return ((swaps + squares) & 1) ? -1 : 1;
}

/// Sign of the main anti-involution on a grade-k blade: (-1)^{k(k+1)/2}.
inline int bar_sign(Blade b) {
    int k = grade(b);
    return ((k * (k + 1) / 2) & 1) ? -1 : 1;
}

/// Text form "e1e3"; the empty blade prints "1".
std::string blade_str(Blade b);

/// An element of R_{0,m} with coefficients in Q(q). No zero terms are stored.
class CliffordElement {
  public:
    explicit CliffordElement(int m = 1) : m_(m) {
        if (m < 1 || m > kMaxDim) throw std::invalid_argument("CliffordElement: bad dimension");
    }

    int dim() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Blade, QRational>& terms() const { return terms_; }

    void add_term(Blade b, const QRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    QRational coeff(Blade b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? QRational() : it->second;
    }

    QRational scalar_part() const { return coeff(0); }

    friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }

    std::string str() const;

  private:
    int m_;
    std::map<Blade, QRational> terms_;
};

CliffordElement geometric_product(const CliffordElement& a, const CliffordElement& b);
CliffordElement add(const CliffordElement& a, const CliffordElement& b);
CliffordElement sub(const CliffordElement& a, const CliffordElement& b);
CliffordElement scale(const CliffordElement& a, const QRational& c);
CliffordElement bar(const CliffordElement& a);

} // namespace qcliff
