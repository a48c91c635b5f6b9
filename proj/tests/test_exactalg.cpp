#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affinejt/core.hpp"
#include "affinejt/series.hpp"
#include "affinejt/textio.hpp"

#include <random>

using namespace affinejt;

namespace {

VarSetPtr xs3() { return VarSet::make({"x1", "x2", "x3", "T"}); }

LaurentPoly var(const VarSetPtr& vs, const std::string& n, int e = 1) {
    return LaurentPoly::gen_pow(vs, vs->require(n), e);
}

LaurentPoly random_poly(const VarSetPtr& vs, std::mt19937& rng, int nterms) {
    std::uniform_int_distribution<int> exp(-3, 4), coef(-6, 6);
    std::map<Monomial, BigInt> acc;
    for (int i = 0; i < nterms; ++i) {
        Monomial m(vs->size());
        for (std::size_t j = 0; j < vs->size(); ++j) m.e[j] = exp(rng);
        acc[m] += coef(rng);
    }
    return LaurentPoly::from_map(vs, std::move(acc));
}

}  // namespace

TEST_CASE("poly arithmetic basics") {
    auto vs = xs3();
    LaurentPoly x1 = var(vs, "x1"), x2 = var(vs, "x2"), x3 = var(vs, "x3");
    CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
    LaurentPoly T2 = var(vs, "T", 2);
    LaurentPoly one = LaurentPoly::constant(vs, 1);
    CHECK((one - T2) * (one + T2) == one - var(vs, "T", 4));
    // Vandermonde in three variables has 6 unit-coefficient terms
    LaurentPoly v = (x1 - x2) * (x1 - x3) * (x2 - x3);
    CHECK(v.size() == 6);
    for (const auto& [m, c] : v.terms()) {
        (void)m;
        CHECK((c == 1 || c == -1));
    }
}

TEST_CASE("ring axioms on random inputs") {
    auto vs = xs3();
    std::mt19937 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        LaurentPoly f = random_poly(vs, rng, 6);
        LaurentPoly g = random_poly(vs, rng, 6);
        LaurentPoly h = random_poly(vs, rng, 6);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * g == g * f);
        CHECK(f * (g + h) == f * g + f * h);
    }
}

TEST_CASE("exact division") {
    auto vs = xs3();
    LaurentPoly x1 = var(vs, "x1"), x2 = var(vs, "x2");
    CHECK((x1 * x1 - x2 * x2).divide_exact(x1 - x2) == x1 + x2);
    CHECK_THROWS_AS(LaurentPoly::constant(vs, 1).divide_exact(x1 - x2), NonDivisible);
    // random product round-trip, including Laurent shifts
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        LaurentPoly f = random_poly(vs, rng, 5);
        LaurentPoly g = random_poly(vs, rng, 5);
        if (g.is_zero()) continue;
        CHECK((f * g).divide_exact(g) == f);
    }
}

TEST_CASE("numerator oracle for the antisymmetrised two-variable case") {
    // sum_w sgn(w) w(x1^2 (x1 - t x2)) / (x1 - x2) = x1^2+x1*x2+x2^2 - t*x1*x2
    auto vs = xs3();
    LaurentPoly x1 = var(vs, "x1"), x2 = var(vs, "x2"), t = var(vs, "T", 2);
    LaurentPoly f = x1 * x1 * (x1 - t * x2);
    LaurentPoly swapped = x2 * x2 * (x2 - t * x1);
    LaurentPoly q = (f - swapped).divide_exact(x1 - x2);
    CHECK(q == x1 * x1 + x1 * x2 + x2 * x2 - t * x1 * x2);
}

TEST_CASE("determinant") {
    auto vs = xs3();
    LaurentPoly x1 = var(vs, "x1");
    CHECK(determinant({{x1}}) == x1);
    // zero row
    LaurentPoly z(vs);
    CHECK(determinant({{z, z}, {x1, x1}}).is_zero());
    // agreement of the three evaluation strategies on random 4x4 matrices
    auto vs2 = VarSet::make({"x1", "x2"});
    std::mt19937 rng(11);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<std::vector<LaurentPoly>> m(4, std::vector<LaurentPoly>(4, LaurentPoly(vs2)));
        std::uniform_int_distribution<int> exp(0, 2), coef(-3, 3);
        for (auto& row : m)
            for (auto& cell : row) {
                std::map<Monomial, BigInt> acc;
                for (int i = 0; i < 3; ++i) {
                    Monomial mo(2);
                    mo.e[0] = exp(rng);
                    mo.e[1] = exp(rng);
                    acc[mo] += coef(rng);
                }
                cell = LaurentPoly::from_map(vs2, std::move(acc));
            }
        LaurentPoly d1 = determinant_bareiss(m);
        LaurentPoly d2 = determinant_cofactor(m);
        LaurentPoly d3 = determinant(m);
        CHECK(d1 == d2);
        CHECK(d2 == d3);
    }
}

TEST_CASE("qbinom") {
    auto vs = VarSet::make({"Q", "T"});
    int qg = vs->require("Q");
    // [4 2]_q = 1 + q + 2q^2 + q^3 + q^4
    LaurentPoly b = qbinom(vs, qg, 2, 4, 2);
    LaurentPoly want = LaurentPoly::constant(vs, 1) + LaurentPoly::gen_pow(vs, qg, 2) +
                       LaurentPoly::gen_pow(vs, qg, 4, 2) + LaurentPoly::gen_pow(vs, qg, 6) +
                       LaurentPoly::gen_pow(vs, qg, 8);
    CHECK(b == want);
    CHECK(qbinom(vs, qg, 2, 7, 0) == LaurentPoly::constant(vs, 1));
    CHECK(qbinom(vs, qg, 2, 2, 1) ==
          LaurentPoly::constant(vs, 1) + LaurentPoly::gen_pow(vs, qg, 2));
    CHECK(qbinom(vs, qg, 2, 3, -1).is_zero());
    CHECK(qbinom(vs, qg, 2, 3, 4).is_zero());
    // q-Pascal recurrence at random sizes
    for (long n = 1; n <= 8; ++n)
        for (long r = 0; r <= n; ++r) {
            LaurentPoly lhs = qbinom(vs, qg, 2, n, r);
            LaurentPoly rhs = qbinom(vs, qg, 2, n - 1, r - 1) +
                              LaurentPoly::gen_pow(vs, qg, static_cast<std::int32_t>(2 * r)) *
                                  qbinom(vs, qg, 2, n - 1, r);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("series basics and inversion") {
    auto cvs = VarSet::make({"T"});
    // (Q^2; Q^2)_inf at order 8: 1 - Q^2 - Q^4 + ... (Euler pentagonal)
    TruncSeries euler = pochhammer_trunc(cvs, QMono{1, 2, Monomial(1)}, QMono{1, 2, Monomial(1)},
                                         -1, 40);
    const long pent[] = {0, 1, 2, 5, 7, 12, 15};  // q-exponents with coefficient +-1
    const long sign[] = {1, -1, -1, 1, 1, -1, -1};
    for (int i = 0; i < 7; ++i)
        CHECK(euler.coeff(static_cast<int>(2 * pent[i])) ==
              LaurentPoly::constant(cvs, sign[i]));
    CHECK(euler.coeff(2 * 3).is_zero());
    // empty product
    TruncSeries p0 = pochhammer_trunc(cvs, QMono{1, 2, Monomial(1)}, QMono{1, 2, Monomial(1)}, 0, 8);
    CHECK(p0.agree(TruncSeries::one(cvs, 8)));
    // (q; q)_2 = 1 - q - q^2 + q^3
    TruncSeries p2 = pochhammer_trunc(cvs, QMono{1, 2, Monomial(1)}, QMono{1, 2, Monomial(1)}, 2, 8);
    TruncSeries want = TruncSeries::one(cvs, 8);
    want.add_coeff(2, LaurentPoly::constant(cvs, -1));
    want.add_coeff(4, LaurentPoly::constant(cvs, -1));
    want.add_coeff(6, LaurentPoly::constant(cvs, 1));
    CHECK(p2.agree(want));
    // f * f^{-1} = 1
    TruncSeries inv = euler.inverse();
    CHECK((euler * inv).agree(TruncSeries::one(cvs, 40)));
}

TEST_CASE("theta function") {
    auto cvs = VarSet::make({"T"});
    auto q = [&](std::int64_t e) { return QMono{1, 2 * e, Monomial(1)}; };
    // theta(q; q^5) to q-order 5: 1 - q - q^4 + q^5
    TruncSeries th = theta_trunc(cvs, q(1), q(5), 10);
    CHECK(th.coeff(0) == LaurentPoly::constant(cvs, 1));
    CHECK(th.coeff(2) == LaurentPoly::constant(cvs, -1));
    CHECK(th.coeff(4).is_zero());
    CHECK(th.coeff(6).is_zero());
    CHECK(th.coeff(8) == LaurentPoly::constant(cvs, -1));
    CHECK(th.coeff(10) == LaurentPoly::constant(cvs, 1));
    // symmetry theta(p/a; p) = theta(a; p) for a = q^2, p = q^7
    CHECK(theta_trunc(cvs, q(2), q(7), 30).agree(theta_trunc(cvs, q(5), q(7), 30)));
    // theta(1; p) = 0
    CHECK(theta_trunc(cvs, q(0), q(3), 12).is_zero());
}

TEST_CASE("Jacobi triple product and Euler factorisation") {
    auto cvs = VarSet::make({"T"});
    auto q = [&](std::int64_t e) { return QMono{1, 2 * e, Monomial(1)}; };
    auto mq = [&](std::int64_t e) { return QMono{-1, 2 * e, Monomial(1)}; };
    const int order = 60;  // q-order 30
    for (auto [a, isneg] : {std::pair<std::int64_t, bool>{1, false}, {2, false}, {1, true}}) {
        for (std::int64_t p : {5, 7}) {
            TruncSeries lhs = theta_trunc(cvs, isneg ? mq(a) : q(a), q(p), order) *
                              pochhammer_trunc(cvs, q(p), q(p), -1, order);
            TruncSeries rhs = TruncSeries::zero(cvs, order);
            for (std::int64_t j = -12; j <= 12; ++j) {
                std::int64_t e = p * choose2(j) + a * j;
                if (e < 0 || 2 * e > order) continue;
                long sgn = (j % 2 == 0) ? 1 : -1;
                if (isneg && j % 2 != 0) sgn = -sgn;  // (-q^a)^j
                rhs.add_coeff(static_cast<int>(2 * e), LaurentPoly::constant(cvs, sgn));
            }
            CHECK(lhs.agree(rhs));
        }
    }
    // (q; q)_inf = (q^5; q^5)_inf theta(q; q^5) theta(q^2; q^5) through q^40
    TruncSeries lhs = pochhammer_trunc(cvs, q(1), q(1), -1, 80);
    TruncSeries rhs = pochhammer_trunc(cvs, q(5), q(5), -1, 80) *
                      theta_trunc(cvs, q(1), q(5), 80) * theta_trunc(cvs, q(2), q(5), 80);
    CHECK(lhs.agree(rhs));
}

TEST_CASE("theta expression evaluation commutes with grouping") {
    auto cvs = VarSet::make({"T"});
    auto q = [&](std::int64_t e) { return QMono{1, 2 * e, Monomial(1)}; };
    ThetaExpr e1, e2a, e2b;
    e1.theta(q(1), q(5)).theta(q(2), q(5)).poch(q(5), q(5));
    e2a.theta(q(1), q(5));
    e2b.theta(q(2), q(5)).poch(q(5), q(5));
    TruncSeries grouped = e2a.evaluate(cvs, 40) * e2b.evaluate(cvs, 40);
    CHECK(e1.evaluate(cvs, 40).agree(grouped));
}

TEST_CASE("serialize / parse round-trip") {
    auto vs = xs3();
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        LaurentPoly f = random_poly(vs, rng, 8);
        CHECK(poly_from_json(to_json(f)) == f);
    }
    LaurentPoly p = var(vs, "x1", 2).shifted(Monomial(vs->size()), 3) * var(vs, "x2", -1) *
                        var(vs, "T", 3) -
                    LaurentPoly::constant(vs, 1);
    CHECK(to_string(p) == "3*x1^2*x2^-1*T^3 - 1");
}

TEST_CASE("VarSet mismatch is rejected") {
    auto a = VarSet::make({"x1"});
    auto b = VarSet::make({"x2"});
    LaurentPoly f = LaurentPoly::constant(a, 1), g = LaurentPoly::constant(b, 1);
    CHECK_THROWS(f + g);
}
