#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcliff/qnumbers.hpp"
#include "qcliff/qrational.hpp"

#include <random>

using namespace qcliff;

namespace {

QRational q_pow(int e) { return QRational::q_power(e); }

// random small element of Q(q) with a small polynomial denominator
QRational random_qrational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<int> deg(0, 3);
    std::uniform_int_distribution<int> off(-2, 2);
    auto poly = [&](bool nonzero) {
        IntPoly p;
        int d = deg(rng);
        p.c.resize(static_cast<std::size_t>(d) + 1);
        for (auto& v : p.c) v = coeff(rng);
        p.trim();
        if (nonzero && p.is_zero()) p = IntPoly::constant(1 + std::abs(coeff(rng)));
        return p;
    };
    return QRational(LaurentPoly(off(rng), poly(false)), poly(true));
}

} // namespace

TEST_CASE("qnum basics") {
    CHECK(qnum(0) == QRational());
    CHECK(qnum(1) == QRational(1));
    // [3]_q = 1 + q + q^2
    CHECK(qnum(3) == QRational(1) + q_pow(1) + q_pow(2));
    // [-2]_q = -(1+q)/q^2
    QRational expect = -(QRational(1) + q_pow(1)) * q_pow(-2);
    CHECK(qnum(-2) == expect);
}

TEST_CASE("qfactorial") {
    CHECK(qfactorial(0) == QRational(1));
    CHECK(qfactorial(3) == qnum(2) * qnum(3));
    CHECK_THROWS_AS(qfactorial(-1), std::invalid_argument);
    auto v = qfactorial(4).eval_one_exact();
    CHECK(v.first == 24);
    CHECK(v.second == 1);
}

TEST_CASE("qbinomial") {
    for (int n = 0; n <= 8; ++n) {
        CHECK(qbinomial(n, 0) == QRational(1));
        for (int k = 0; k <= n; ++k) {
            auto b = qbinomial(n, k);
            CHECK(b == qbinomial(n, n - k)); // symmetry
            CHECK(b.is_laurent());           // reduces to a polynomial
        }
    }
    CHECK(qbinomial(2, 1) == QRational(1) + q_pow(1));
    CHECK_THROWS_AS(qbinomial(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(qbinomial(-1, 0), std::invalid_argument);
}

TEST_CASE("qgamma_ratio") {
    CHECK(qgamma_ratio(2, 3, QBase::q) == qnum(1) * qnum(2) * qnum(3));
    // t = 1/2, j = 1, base Q: [1/2]_Q = 1/(q+1)
    CHECK(qgamma_ratio(1, 1, QBase::Q) == QRational(1) / (QRational(1) + q_pow(1)));
    CHECK(qgamma_ratio(5, 0, QBase::Q) == QRational(1));
    CHECK(qgamma_ratio(-3, 0, QBase::Q) == QRational(1));
    CHECK_THROWS_AS(qgamma_ratio(1, 1, QBase::q), std::invalid_argument);
}

TEST_CASE("qgamma_numeric") {
    CHECK(qgamma_numeric(1.0, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
    // recurrence Gamma_q(t+1) = [t]_q Gamma_q(t)
    double lhs = qgamma_numeric(2.5, 0.5);
    double rhs = qgamma_numeric(1.5, 0.5) * qnum_numeric(1.5, 0.5);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    // q -> 1 limit: Gamma_q(2) -> Gamma(2) = 1
    CHECK(qgamma_numeric(2.0, 0.999) == doctest::Approx(1.0).epsilon(1e-2));
    CHECK_THROWS_AS(qgamma_numeric(0.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(qgamma_numeric(-3.0, 0.5), std::domain_error);
}

TEST_CASE("eval at concrete q0") {
    CHECK(qnum(3).eval(1.0) == doctest::Approx(3.0));
    CHECK(qnum(2).eval(0.5) == doctest::Approx(1.5));
    QRational pole = QRational(1) / (q_pow(1) - QRational(1)); // 1/(q-1)
    CHECK_THROWS_AS(pole.eval(1.0), std::domain_error);
    CHECK_THROWS_AS(pole.eval_one_exact(), std::domain_error);
}

TEST_CASE("addition rule for q-numbers") {
    // [u+v]_q = [u]_q + q^u [v]_q
    for (long long u = -6; u <= 6; ++u)
        for (long long v = -6; v <= 6; ++v)
            CHECK(qnum(u + v) == qnum(u) + q_pow(static_cast<int>(u)) * qnum(v));
}

TEST_CASE("inversion rule under q -> 1/q") {
    // [u]_{1/q} = q^{1-u} [u]_q
    for (long long u = -6; u <= 6; ++u)
        CHECK(qnum(u).substitute_power(-1) == q_pow(static_cast<int>(1 - u)) * qnum(u));
}

TEST_CASE("doubling rule") {
    // [2u]_q = (q+1) [u]_{q^2}
    for (long long u = 0; u <= 6; ++u)
        CHECK(qnum(2 * u) == (QRational(1) + q_pow(1)) * qnum(u).substitute_power(2));
}

TEST_CASE("canonical form field laws") {
    std::mt19937_64 rng(20260810);
    for (int i = 0; i < 200; ++i) {
        QRational x = random_qrational(rng);
        QRational y = random_qrational(rng);
        CHECK((x + (-x)).is_zero());
        if (!y.is_zero()) CHECK((x * y) / y == x);
        CHECK(x - x == QRational());
    }
}

TEST_CASE("canonical structure invariants") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        QRational x = random_qrational(rng);
        if (x.is_zero()) {
            CHECK(x.den().is_one());
            continue;
        }
        CHECK(x.den().c[0] != 0);       // q does not divide the denominator
        CHECK(x.den().lc() > 0);        // sign convention
        CHECK(gcd(x.num().p, x.den()).is_one());
        CHECK(x.num().p.c[0] != 0);     // numerator offset is tight
    }
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 50; ++i) {
        QRational x = random_qrational(rng);
        auto j = x.to_json();
        CHECK(QRational::from_json(j) == x);
    }
    auto j = qnum(-2).to_json();
    CHECK(j.at("num").at("offset").get<int>() == -2);
    CHECK(j.at("den").at("offset").get<int>() == 0);
}

TEST_CASE("string form") {
    CHECK(qnum(3).str() == "q^2+q+1");
    CHECK(qnum(-2).str() == "-q^-1-q^-2");
    CHECK(QRational().str() == "0");
    CHECK((QRational(1) / (QRational(1) + q_pow(1))).str() == "(1)/(q+1)");
}
