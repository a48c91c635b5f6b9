#ifndef AFFINEJT_SERIES_HPP
#define AFFINEJT_SERIES_HPP

#include "affinejt/core.hpp"

namespace affinejt {

// Signed monomial c = sign * cv * G^qexp where G is the series grading
// variable (Q = q^{1/2}, or p^{1/2} for Macdonald-identity series) and cv a
// monomial in the coefficient VarSet.
struct QMono {
    int sign = 1;
    std::int64_t qexp = 0;
    Monomial cv;

    QMono() = default;
    QMono(int s, std::int64_t q, Monomial m) : sign(s), qexp(q), cv(std::move(m)) {}
};

// Power series truncated at a declared order in the grading variable;
// coefficients are exact Laurent polynomials in the remaining generators.
class TruncSeries {
  public:
    TruncSeries(VarSetPtr cvs, int order);

    static TruncSeries one(VarSetPtr cvs, int order);
    static TruncSeries zero(VarSetPtr cvs, int order) { return TruncSeries(std::move(cvs), order); }

    int order() const { return order_; }
    const VarSetPtr& coeff_varset() const { return cvs_; }
    const LaurentPoly& coeff(int k) const;
    void set_coeff(int k, LaurentPoly p);
    void add_coeff(int k, const LaurentPoly& p);

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    // multiply by sign * cv * G^g with g >= 0
    TruncSeries shifted(const QMono& m) const;
    TruncSeries scaled(const LaurentPoly& c) const;
    // 1/this; requires constant term +-1 (a constant polynomial)
    TruncSeries inverse() const;
    TruncSeries divide_exact_int(const BigInt& c) const;
    TruncSeries truncated(int order) const;

    // equal through min(order(), o.order())
    bool agree(const TruncSeries& o) const;
    // first grade where coefficients differ, through min order
    std::optional<int> first_difference(const TruncSeries& o) const;

    bool is_zero() const;

    // substitute T -> G^m inside coefficients, moving content across grades
    TruncSeries substitute_t_to_gpow(int tgen, std::int64_t m) const;
    // substitute a coefficient generator by +-1 / 0
    TruncSeries substitute_int(int gen, const BigInt& v) const;

    // Split a Laurent polynomial over a VarSet containing grading generator
    // `ggen` into a series (exponents of ggen must be >= 0).
    static TruncSeries from_poly(const LaurentPoly& p, int ggen, VarSetPtr cvs, int order);

  private:
    VarSetPtr cvs_;
    int order_;
    std::vector<LaurentPoly> c_;
};

// prod_{i=0}^{count-1} (1 - a * base^i) truncated at `order`; count < 0 means
// the infinite product (requires base.qexp > 0 and a.qexp >= 0).
TruncSeries pochhammer_trunc(VarSetPtr cvs, const QMono& a, const QMono& base,
                             long count, int order);

// theta(a; p) = (a; p)_inf (p/a; p)_inf truncated at `order`.
TruncSeries theta_trunc(VarSetPtr cvs, const QMono& a, const QMono& nome, int order);

// Product/quotient expression over Pochhammer and theta atoms with an exact
// power-of-two scalar. Covers every product side in the check registry.
struct ThetaExpr {
    struct Atom {
        enum Kind { kPoch, kTheta } kind;
        QMono a;
        QMono base;   // Pochhammer base or theta nome
        long count;   // Pochhammer length, -1 for infinite
        int exponent; // negative exponents invert (unit constant term required)
    };
    std::int64_t scalar_num = 1;
    unsigned halvings = 0;  // divide the result by 2^halvings, exactness-checked
    std::vector<Atom> atoms;

    ThetaExpr& poch(QMono a, QMono base, long count = -1, int exponent = 1);
    ThetaExpr& theta(QMono a, QMono nome, int exponent = 1);
    TruncSeries evaluate(VarSetPtr cvs, int order) const;
};

}  // namespace affinejt

#endif
