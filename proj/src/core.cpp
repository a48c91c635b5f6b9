#include "affinejt/core.hpp"

#include <algorithm>
#include <numeric>

namespace affinejt {

Rat::Rat(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
}

Rat Rat::operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
Rat Rat::operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
Rat Rat::operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }

std::int64_t Rat::twice_as_int() const {
    Rat t(2 * num, den);
    if (!t.is_integer()) throw std::domain_error("Rat: exponent is not half-integral");
    return t.num;
}

std::int64_t Rat::as_int() const {
    if (!is_integer()) throw std::domain_error("Rat: not an integer");
    return num;
}

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw std::invalid_argument("VarSet: duplicate generator " + names_[i]);
}

VarSetPtr VarSet::make(std::vector<std::string> names) {
    return VarSetPtr(new VarSet(std::move(names)));
}

int VarSet::index(const std::string& n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == n) return static_cast<int>(i);
    return -1;
}

int VarSet::require(const std::string& n) const {
    int i = index(n);
    if (i < 0) throw std::invalid_argument("VarSet: missing generator " + n);
    return i;
}

Monomial Monomial::operator+(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

Monomial Monomial::operator-(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
}

bool Monomial::is_zero() const {
    return std::all_of(e.begin(), e.end(), [](std::int32_t v) { return v == 0; });
}

void LaurentPoly::check_same_varset(const LaurentPoly& o) const {
    if (!vs_ || !o.vs_) throw std::logic_error("LaurentPoly: unset VarSet");
    if (vs_ != o.vs_ && !vs_->same(*o.vs_))
        throw std::invalid_argument("LaurentPoly: VarSet mismatch");
}

LaurentPoly LaurentPoly::constant(VarSetPtr vs, BigInt c) {
    LaurentPoly p(std::move(vs));
    if (c != 0) p.terms_.emplace_back(Monomial(p.vs_->size()), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::monomial(VarSetPtr vs, Monomial m, BigInt c) {
    LaurentPoly p(std::move(vs));
    if (m.e.size() != p.vs_->size()) throw std::invalid_argument("monomial arity");
    if (c != 0) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::gen_pow(VarSetPtr vs, int gen, std::int32_t e, BigInt c) {
    Monomial m(vs->size());
    m.e[gen] = e;
    return monomial(std::move(vs), std::move(m), std::move(c));
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    check_same_varset(o);
    return terms_ == o.terms_;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    // a default-constructed polynomial is the zero of any ring
    if (!vs_) return o;
    if (!o.vs_) return *this;
    check_same_varset(o);
    LaurentPoly r(vs_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (o.terms_[j].first < terms_[i].first) {
            r.terms_.push_back(terms_[i++]);
        } else if (terms_[i].first < o.terms_[j].first) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            BigInt c = terms_[i].second + o.terms_[j].second;
            if (c != 0) r.terms_.emplace_back(terms_[i].first, std::move(c));
            ++i; ++j;
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_same_varset(o);
    if (is_zero() || o.is_zero()) return zero(vs_);
    const LaurentPoly& a = size() <= o.size() ? *this : o;
    const LaurentPoly& b = size() <= o.size() ? o : *this;
    std::map<Monomial, BigInt> acc;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) acc[ma + mb] += ca * cb;
    return from_map(vs_, std::move(acc));
}

LaurentPoly LaurentPoly::from_map(VarSetPtr vs, std::map<Monomial, BigInt>&& acc) {
    LaurentPoly r(std::move(vs));
    r.terms_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) r.terms_.emplace_back(it->first, std::move(it->second));
    return r;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c) const {
    if (c == 0) return zero(vs_);
    LaurentPoly r(*this);
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m, const BigInt& c) const {
    if (c == 0) return zero(vs_);
    LaurentPoly r(vs_);
    r.terms_.reserve(terms_.size());
    for (const auto& [mm, cc] : terms_) r.terms_.emplace_back(mm + m, cc * c);
    return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& g) const {
    check_same_varset(g);
    if (g.is_zero()) throw NonDivisible("division by zero polynomial");
    if (is_zero()) return zero(vs_);
    const Monomial& glead = g.terms_.front().first;
    const BigInt& gc = g.terms_.front().second;
    LaurentPoly r(*this);
    std::map<Monomial, BigInt> quot;
    std::size_t cap = (size() + 2) * (g.size() + 2) * 4 + 64;
    while (!r.is_zero()) {
        if (cap-- == 0) throw NonDivisible("non-divisible input (reduction does not terminate)");
        const Monomial& rl = r.terms_.front().first;
        const BigInt& rc = r.terms_.front().second;
        if (rc % gc != 0) throw NonDivisible("non-divisible input (coefficient)");
        Monomial qm = rl - glead;
        BigInt qc = rc / gc;
        r -= g.shifted(qm, qc);
        quot[qm] += qc;
    }
    return from_map(vs_, std::move(quot));
}

LaurentPoly LaurentPoly::divide_exact_int(const BigInt& c) const {
    if (c == 0) throw NonDivisible("division by zero");
    LaurentPoly r(*this);
    for (auto& t : r.terms_) {
        if (t.second % c != 0) throw NonDivisible("non-exact integer division");
        t.second /= c;
    }
    return r;
}

LaurentPoly LaurentPoly::substitute_monomial(int gen, int sign, const Monomial& value) const {
    if (value.e[gen] != 0)
        throw std::invalid_argument("substitute_monomial: value mentions the substituted generator");
    std::map<Monomial, BigInt> acc;
    for (const auto& [m, c] : terms_) {
        std::int32_t p = m.e[gen];
        Monomial nm = m;
        nm.e[gen] = 0;
        for (std::size_t i = 0; i < nm.e.size(); ++i) nm.e[i] += p * value.e[i];
        BigInt nc = c;
        if (sign < 0 && (p % 2 != 0)) nc = -nc;
        acc[nm] += nc;
    }
    return from_map(vs_, std::move(acc));
}

LaurentPoly LaurentPoly::substitute_int(int gen, const BigInt& value) const {
    std::map<Monomial, BigInt> acc;
    for (const auto& [m, c] : terms_) {
        std::int32_t p = m.e[gen];
        if (p < 0 && value == 0)
            throw std::domain_error("substitute_int: negative power at zero");
        BigInt nc = c;
        if (value == 0) {
            if (p > 0) continue;
        } else if (value == 1) {
            // unchanged
        } else if (value == -1) {
            if (p % 2 != 0) nc = -nc;
        } else {
            if (p < 0) throw std::domain_error("substitute_int: negative power of non-unit");
            for (std::int32_t i = 0; i < p; ++i) nc *= value;
        }
        Monomial nm = m;
        nm.e[gen] = 0;
        acc[nm] += nc;
    }
    return from_map(vs_, std::move(acc));
}

LaurentPoly LaurentPoly::coefficient_of(int gen, std::int32_t power) const {
    std::map<Monomial, BigInt> acc;
    for (const auto& [m, c] : terms_)
        if (m.e[gen] == power) {
            Monomial nm = m;
            nm.e[gen] = 0;
            acc[nm] += c;
        }
    return from_map(vs_, std::move(acc));
}

std::int32_t LaurentPoly::min_exp(int gen) const {
    std::int32_t v = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (first || m.e[gen] < v) v = m.e[gen];
        first = false;
    }
    return v;
}

std::int32_t LaurentPoly::max_exp(int gen) const {
    std::int32_t v = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (first || m.e[gen] > v) v = m.e[gen];
        first = false;
    }
    return v;
}

bool LaurentPoly::free_of(int gen) const {
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (m.e[gen] != 0) return false;
    }
    return true;
}

const BigInt& LaurentPoly::coeff(const Monomial& m) const {
    static const BigInt kZero = 0;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& mm) { return mm < t.first; });
    if (it != terms_.end() && it->first == m) return it->second;
    return kZero;
}

LaurentPoly LaurentPoly::into(const VarSetPtr& target) const {
    std::vector<int> slot(vs_->size(), -1);
    for (std::size_t i = 0; i < vs_->size(); ++i) slot[i] = target->index(vs_->name(i));
    std::map<Monomial, BigInt> acc;
    for (const auto& [m, c] : terms_) {
        Monomial nm(target->size());
        for (std::size_t i = 0; i < vs_->size(); ++i) {
            if (m.e[i] == 0) continue;
            if (slot[i] < 0)
                throw std::invalid_argument("into: generator " + vs_->name(i) +
                                            " not present in target VarSet");
            nm.e[slot[i]] = m.e[i];
        }
        acc[nm] += c;
    }
    return from_map(target, std::move(acc));
}

namespace {

LaurentPoly det_permutation(const std::vector<std::vector<LaurentPoly>>& m) {
    const std::size_t n = m.size();
    std::vector<int> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
    LaurentPoly det = LaurentPoly::zero(m[0][0].varset());
    int sign = 1;
    // iterate permutations in lex order, tracking parity
    std::vector<int> perm = idx;
    while (true) {
        LaurentPoly prod = LaurentPoly::constant(m[0][0].varset(), sign);
        bool zero = false;
        for (std::size_t i = 0; i < n && !zero; ++i) {
            if (m[i][perm[i]].is_zero()) zero = true;
            else prod *= m[i][perm[i]];
        }
        if (!zero) det += prod;
        // next_permutation with parity: count inversions change is messy;
        // recompute parity from scratch (n <= 5 here).
        if (!std::next_permutation(perm.begin(), perm.end())) break;
        int inv = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inv;
        sign = (inv % 2 == 0) ? 1 : -1;
    }
    return det;
}

}  // namespace

LaurentPoly determinant_bareiss(std::vector<std::vector<LaurentPoly>> a) {
    const std::size_t n = a.size();
    const VarSetPtr vs = a[0][0].varset();
    LaurentPoly prev = LaurentPoly::constant(vs, 1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a[p][k].is_zero()) ++p;
            if (p == n) return LaurentPoly::zero(vs);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).divide_exact(prev);
        prev = a[k][k];
    }
    LaurentPoly d = a[n - 1][n - 1];
    if (sign < 0) d = -d;
    return d;
}

LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("determinant: empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant: non-square matrix");
    if (n == 1) return m[0][0];
    if (n <= 5) return det_permutation(m);
    return determinant_bareiss(m);
}

LaurentPoly determinant_cofactor(const std::vector<std::vector<LaurentPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    LaurentPoly det = LaurentPoly::zero(m[0][0].varset());
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<LaurentPoly>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<LaurentPoly> row;
            for (std::size_t jj = 0; jj < n; ++jj)
                if (jj != j) row.push_back(m[i][jj]);
            minor.push_back(std::move(row));
        }
        LaurentPoly c = m[0][j] * determinant_cofactor(minor);
        if (j % 2 == 0) det += c; else det -= c;
    }
    return det;
}

LaurentPoly qbinom(const VarSetPtr& vs, int gen, int step, long n, long r) {
    if (r < 0 || r > n) return LaurentPoly::zero(vs);
    if (r > n - r) r = n - r;  // [n r] = [n n-r]
    // q-Pascal: [m j] = [m-1 j-1] + b^j [m-1 j], b = gen^step
    std::vector<LaurentPoly> row(1, LaurentPoly::constant(vs, 1));  // m = 0
    for (long m = 1; m <= n; ++m) {
        const long top = std::min(m, r);
        std::vector<LaurentPoly> next(top + 1, LaurentPoly(vs));
        next[0] = LaurentPoly::constant(vs, 1);
        for (long j = 1; j <= top; ++j) {
            LaurentPoly v(vs);
            if (j - 1 < static_cast<long>(row.size())) v = row[j - 1];
            if (j < static_cast<long>(row.size())) {
                Monomial shift(vs->size());
                shift.e[gen] = static_cast<std::int32_t>(step * j);
                v += row[j].shifted(shift);
            }
            next[j] = std::move(v);
        }
        row = std::move(next);
    }
    return row[r];
}

LaurentPoly qfactorial(const VarSetPtr& vs, int gen, int step, long m) {
    LaurentPoly r = LaurentPoly::constant(vs, 1);
    for (long j = 1; j <= m; ++j) {
        LaurentPoly f(vs);
        for (long i = 0; i < j; ++i) f += LaurentPoly::gen_pow(vs, gen, static_cast<std::int32_t>(step * i));
        r *= f;
    }
    return r;
}

LaurentPoly poch_finite(const VarSetPtr& vs, int sign, const Monomial& a,
                        const Monomial& b, long m) {
    LaurentPoly r = LaurentPoly::constant(vs, 1);
    Monomial cur = a;
    for (long i = 0; i < m; ++i) {
        r *= LaurentPoly::constant(vs, 1) - LaurentPoly::monomial(vs, cur, sign);
        cur = cur + b;
    }
    return r;
}

}  // namespace affinejt
