#include "affinejt/series.hpp"

namespace affinejt {

TruncSeries::TruncSeries(VarSetPtr cvs, int order) : cvs_(std::move(cvs)), order_(order) {
    if (order_ < 0) throw std::invalid_argument("TruncSeries: negative order");
    c_.assign(order_ + 1, LaurentPoly(cvs_));
}

TruncSeries TruncSeries::one(VarSetPtr cvs, int order) {
    TruncSeries s(std::move(cvs), order);
    s.c_[0] = LaurentPoly::constant(s.cvs_, 1);
    return s;
}

const LaurentPoly& TruncSeries::coeff(int k) const {
    static const LaurentPoly kDummy;
    if (k < 0 || k > order_) throw std::out_of_range("TruncSeries::coeff");
    (void)kDummy;
    return c_[k];
}

void TruncSeries::set_coeff(int k, LaurentPoly p) {
    if (k < 0 || k > order_) throw std::out_of_range("TruncSeries::set_coeff");
    c_[k] = std::move(p);
}

void TruncSeries::add_coeff(int k, const LaurentPoly& p) {
    if (k < 0) throw std::out_of_range("TruncSeries::add_coeff");
    if (k > order_) return;
    c_[k] += p;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    int ord = std::min(order_, o.order_);
    TruncSeries r(cvs_, ord);
    for (int k = 0; k <= ord; ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    int ord = std::min(order_, o.order_);
    TruncSeries r(cvs_, ord);
    for (int k = 0; k <= ord; ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    int ord = std::min(order_, o.order_);
    TruncSeries r(cvs_, ord);
    for (int i = 0; i <= ord; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; i + j <= ord; ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return r;
}

TruncSeries TruncSeries::shifted(const QMono& m) const {
    if (m.qexp < 0) throw std::invalid_argument("TruncSeries::shifted: negative grade");
    TruncSeries r(cvs_, order_);
    for (int k = 0; k + m.qexp <= order_; ++k) {
        if (c_[k].is_zero()) continue;
        r.c_[k + m.qexp] = c_[k].shifted(m.cv, m.sign);
    }
    return r;
}

TruncSeries TruncSeries::scaled(const LaurentPoly& c) const {
    TruncSeries r(cvs_, order_);
    for (int k = 0; k <= order_; ++k)
        if (!c_[k].is_zero()) r.c_[k] = c_[k] * c;
    return r;
}

TruncSeries TruncSeries::inverse() const {
    LaurentPoly c0 = c_[0];
    BigInt lead;
    if (c0 == LaurentPoly::constant(cvs_, 1)) lead = 1;
    else if (c0 == LaurentPoly::constant(cvs_, -1)) lead = -1;
    else throw std::domain_error("TruncSeries::inverse: constant term is not a unit");
    // b_0 = 1/a_0; b_n = -(1/a_0) sum_{k=1..n} a_k b_{n-k}
    TruncSeries r(cvs_, order_);
    r.c_[0] = LaurentPoly::constant(cvs_, lead);
    for (int n = 1; n <= order_; ++n) {
        LaurentPoly s(cvs_);
        for (int k = 1; k <= n; ++k)
            if (!c_[k].is_zero() && !r.c_[n - k].is_zero()) s += c_[k] * r.c_[n - k];
        r.c_[n] = s.scaled(-lead);
    }
    return r;
}

TruncSeries TruncSeries::divide_exact_int(const BigInt& c) const {
    TruncSeries r(cvs_, order_);
    for (int k = 0; k <= order_; ++k) r.c_[k] = c_[k].divide_exact_int(c);
    return r;
}

TruncSeries TruncSeries::truncated(int order) const {
    TruncSeries r(cvs_, std::min(order, order_));
    for (int k = 0; k <= r.order_; ++k) r.c_[k] = c_[k];
    return r;
}

bool TruncSeries::agree(const TruncSeries& o) const { return !first_difference(o).has_value(); }

std::optional<int> TruncSeries::first_difference(const TruncSeries& o) const {
    int ord = std::min(order_, o.order_);
    for (int k = 0; k <= ord; ++k)
        if (c_[k] != o.c_[k]) return k;
    return std::nullopt;
}

bool TruncSeries::is_zero() const {
    for (const auto& p : c_)
        if (!p.is_zero()) return false;
    return true;
}

TruncSeries TruncSeries::substitute_t_to_gpow(int tgen, std::int64_t m) const {
    TruncSeries r(cvs_, order_);
    for (int k = 0; k <= order_; ++k) {
        for (const auto& [mono, coef] : c_[k].terms()) {
            std::int64_t g = k + m * mono.e[tgen];
            if (g < 0) throw std::domain_error("substitute_t_to_gpow: negative grade");
            if (g > order_) continue;
            Monomial nm = mono;
            nm.e[tgen] = 0;
            r.c_[static_cast<int>(g)] += LaurentPoly::monomial(cvs_, nm, coef);
        }
    }
    return r;
}

TruncSeries TruncSeries::substitute_int(int gen, const BigInt& v) const {
    TruncSeries r(cvs_, order_);
    for (int k = 0; k <= order_; ++k) r.c_[k] = c_[k].substitute_int(gen, v);
    return r;
}

TruncSeries TruncSeries::from_poly(const LaurentPoly& p, int ggen, VarSetPtr cvs, int order) {
    TruncSeries r(std::move(cvs), order);
    const VarSet& src = *p.varset();
    std::vector<int> slot(src.size(), -1);
    for (std::size_t i = 0; i < src.size(); ++i)
        if (static_cast<int>(i) != ggen) slot[i] = r.cvs_->index(src.name(i));
    for (const auto& [mono, coef] : p.terms()) {
        std::int32_t g = mono.e[ggen];
        if (g < 0) throw std::domain_error("from_poly: negative grading exponent");
        if (g > order) continue;
        Monomial nm(r.cvs_->size());
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (static_cast<int>(i) == ggen || mono.e[i] == 0) continue;
            if (slot[i] < 0)
                throw std::invalid_argument("from_poly: generator " + src.name(i) +
                                            " missing from coefficient VarSet");
            nm.e[slot[i]] = mono.e[i];
        }
        r.c_[g] += LaurentPoly::monomial(r.cvs_, nm, coef);
    }
    return r;
}

TruncSeries pochhammer_trunc(VarSetPtr cvs, const QMono& a, const QMono& base,
                             long count, int order) {
    if (count < 0) {
        if (base.qexp <= 0)
            throw std::domain_error("pochhammer_trunc: infinite product needs positive base grade");
        if (a.qexp < 0)
            throw std::domain_error("pochhammer_trunc: infinite product needs nonnegative head grade");
    }
    TruncSeries r = TruncSeries::one(cvs, order);
    std::int64_t g = a.qexp;
    Monomial cv = a.cv;
    for (long i = 0; count < 0 || i < count; ++i) {
        if (g > order) {
            if (count < 0) break;
            // remaining finite factors have grade beyond the order
            if (base.qexp >= 0) break;
            throw std::domain_error("pochhammer_trunc: non-truncatable finite product");
        }
        if (g < 0) throw std::domain_error("pochhammer_trunc: negative factor grade");
        // r *= 1 - sign * cv * G^g
        TruncSeries shifted = r.shifted(QMono{-a.sign, g, cv});
        r += shifted;
        g += base.qexp;
        cv = cv + base.cv;
    }
    return r;
}

TruncSeries theta_trunc(VarSetPtr cvs, const QMono& a, const QMono& nome, int order) {
    if (nome.qexp <= 0) throw std::domain_error("theta_trunc: nome needs positive grade");
    QMono pa(a.sign, nome.qexp - a.qexp, nome.cv - a.cv);
    if (a.qexp < 0 || pa.qexp < 0)
        throw std::domain_error("theta_trunc: argument grade outside [0, grade(nome)]");
    return pochhammer_trunc(cvs, a, nome, -1, order) *
           pochhammer_trunc(cvs, pa, nome, -1, order);
}

ThetaExpr& ThetaExpr::poch(QMono a, QMono base, long count, int exponent) {
    atoms.push_back(Atom{Atom::kPoch, std::move(a), std::move(base), count, exponent});
    return *this;
}

ThetaExpr& ThetaExpr::theta(QMono a, QMono nome, int exponent) {
    atoms.push_back(Atom{Atom::kTheta, std::move(a), std::move(nome), -1, exponent});
    return *this;
}

TruncSeries ThetaExpr::evaluate(VarSetPtr cvs, int order) const {
    TruncSeries num = TruncSeries::one(cvs, order);
    TruncSeries den = TruncSeries::one(cvs, order);
    for (const auto& at : atoms) {
        TruncSeries v = at.kind == Atom::kPoch
                            ? pochhammer_trunc(cvs, at.a, at.base, at.count, order)
                            : theta_trunc(cvs, at.a, at.base, order);
        int e = at.exponent;
        TruncSeries& dst = e >= 0 ? num : den;
        for (int i = 0; i < std::abs(e); ++i) dst *= v;
    }
    TruncSeries r = num * den.inverse();
    if (scalar_num != 1) r = r.scaled(LaurentPoly::constant(cvs, scalar_num));
    for (unsigned i = 0; i < halvings; ++i) r = r.divide_exact_int(2);
    return r;
}

}  // namespace affinejt
