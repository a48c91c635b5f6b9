#include "affinejt/bcsym.hpp"

#include "affinejt/parallel.hpp"

#include <algorithm>
#include <functional>

namespace affinejt {

VarSetPtr bc_varset(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    names.push_back("T");
    names.push_back("S");
    names.push_back("s1");
    names.push_back("s2");
    return VarSet::make(std::move(names));
}

bool is_bc_symmetric(const LaurentPoly& p, int n) {
    if (!is_symmetric(p, n)) return false;
    for (int i = 0; i < n; ++i) {
        int g = xgen(p.varset(), i);
        std::map<Monomial, BigInt> acc;
        for (const auto& [m, c] : p.terms()) {
            Monomial sm = m;
            sm.e[g] = -sm.e[g];
            acc[sm] += c;
        }
        if (LaurentPoly::from_map(p.varset(), std::move(acc)) != p) return false;
    }
    return true;
}

namespace {

LaurentPoly xg(const VarSetPtr& vs, int i, int e = 1) {
    return LaurentPoly::gen_pow(vs, xgen(vs, i), e);
}

// x_i -> x_{sigma(i)}^{eps_i}; sigma = identity allowed
LaurentPoly apply_signed_perm(const LaurentPoly& p, const std::vector<int>& sigma,
                              const std::vector<int>& eps) {
    const VarSetPtr& vs = p.varset();
    int n = static_cast<int>(sigma.size());
    std::vector<int> slot(n);
    for (int i = 0; i < n; ++i) slot[i] = xgen(vs, i);
    std::map<Monomial, BigInt> acc;
    for (const auto& [m, c] : p.terms()) {
        Monomial nm = m;
        for (int i = 0; i < n; ++i) nm.e[slot[i]] = 0;
        for (int i = 0; i < n; ++i) nm.e[slot[sigma[i]]] += eps[i] * m.e[slot[i]];
        acc[nm] += c;
    }
    return LaurentPoly::from_map(vs, std::move(acc));
}

LaurentPoly bc_denominator(const VarSetPtr& vs, int n) {
    LaurentPoly d = LaurentPoly::constant(vs, 1);
    for (int i = 0; i < n; ++i) d *= LaurentPoly::constant(vs, 1) - xg(vs, i, 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            d *= (xg(vs, i) - xg(vs, j)) *
                 (LaurentPoly::constant(vs, 1) - xg(vs, i) * xg(vs, j));
    return d;
}

LaurentPoly poch_value(const VarSetPtr& vs, const LaurentPoly& a, int tg, long m) {
    // (a; t)_m with polynomial a
    LaurentPoly r = LaurentPoly::constant(vs, 1);
    for (long i = 0; i < m; ++i)
        r *= LaurentPoly::constant(vs, 1) -
             a * LaurentPoly::gen_pow(vs, tg, static_cast<std::int32_t>(2 * i));
    return r;
}

}  // namespace

LaurentPoly classical_character(const VarSetPtr& vs, ClassicalFamily fam,
                                const Partition& la, int n) {
    if (la.length() > n) throw std::invalid_argument("classical_character: l(la) > n");
    if (n == 0) return LaurentPoly::constant(vs, 1);
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n, LaurentPoly(vs)));
    LaurentPoly den = LaurentPoly::constant(vs, 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int lj = la.part(j);
            int j1 = j + 1;
            switch (fam) {
                case ClassicalFamily::kSoOdd:
                    m[i][j] = xg(vs, i, -lj + j1 - 1) - xg(vs, i, lj + 2 * n - j1);
                    break;
                case ClassicalFamily::kOEven:
                    m[i][j] = xg(vs, i, -lj + j1 - 1) + xg(vs, i, lj + 2 * n - j1 - 1);
                    break;
                case ClassicalFamily::kSp:
                    m[i][j] = xg(vs, i, -lj + j1 - 1) - xg(vs, i, lj + 2 * n - j1 + 1);
                    break;
            }
        }
    for (int i = 0; i < n; ++i) {
        if (fam == ClassicalFamily::kSoOdd)
            den *= LaurentPoly::constant(vs, 1) - xg(vs, i);
        else if (fam == ClassicalFamily::kSp)
            den *= LaurentPoly::constant(vs, 1) - xg(vs, i, 2);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            den *= (xg(vs, i) - xg(vs, j)) *
                   (xg(vs, i) * xg(vs, j) - LaurentPoly::constant(vs, 1));
    LaurentPoly q = determinant(m).divide_exact(den);
    if (fam == ClassicalFamily::kOEven && la.length() < n) q = q.divide_exact_int(2);
    return q;
}

LaurentPoly hl_bc_weyl(const VarSetPtr& vs, const Partition& la, int n,
                       const LaurentPoly& s1, const LaurentPoly& s2) {
    if (la.length() > n) throw std::invalid_argument("hl_bc: l(la) > n");
    if (n == 0) return LaurentPoly::constant(vs, 1);
    int tg = vs->require("T");
    LaurentPoly t = LaurentPoly::gen_pow(vs, tg, 2);
    // numerator F = prod x_i^{-la_i}(1-s1 x_i)(1-s2 x_i) prod (t x_i - x_j)(1 - t x_i x_j)
    LaurentPoly F = LaurentPoly::constant(vs, 1);
    for (int i = 0; i < n; ++i)
        F *= xg(vs, i, -la.part(i)) * (LaurentPoly::constant(vs, 1) - s1 * xg(vs, i)) *
             (LaurentPoly::constant(vs, 1) - s2 * xg(vs, i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            F *= (t * xg(vs, i) - xg(vs, j)) *
                 (LaurentPoly::constant(vs, 1) - t * xg(vs, i) * xg(vs, j));
    LaurentPoly delta = bc_denominator(vs, n);

    std::vector<std::vector<int>> sigmas;
    {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i;
        do sigmas.push_back(p); while (std::next_permutation(p.begin(), p.end()));
    }
    const std::size_t total = sigmas.size() << n;
    std::vector<LaurentPoly> partial(worker_count(), LaurentPoly(vs));
    std::size_t nchunks = 0;
    parallel_chunks(total, [&](std::size_t chunk, std::size_t b, std::size_t e) {
        LaurentPoly acc(vs);
        for (std::size_t idx = b; idx < e; ++idx) {
            const auto& sigma = sigmas[idx >> n];
            std::vector<int> eps(n);
            for (int i = 0; i < n; ++i) eps[i] = (idx >> i) & 1 ? -1 : 1;
            LaurentPoly wF = apply_signed_perm(F, sigma, eps);
            LaurentPoly wD = apply_signed_perm(delta, sigma, eps);
            LaurentPoly ratio = delta.divide_exact(wD);  // +- a monomial
            acc += wF * ratio;
        }
        partial[chunk] = std::move(acc);
    }, &nchunks);
    LaurentPoly num(vs);
    for (std::size_t c = 0; c < nchunks; ++c) num += partial[c];
    LaurentPoly den = delta * poch_value(vs, s1 * s2, tg, n - la.length()) *
                      hl_vlambda(vs, la, n);
    return num.divide_exact(den);
}

namespace {

LaurentPoly hl_bc_rect(const VarSetPtr& vs, int k, int n, const LaurentPoly& s1,
                       const LaurentPoly& s2) {
    // lambda = (k^n): the S_n factor is trivial; sum over sign vectors only.
    // Each term is cleared against the full denominator (which transforms by
    // +-monomial under sign flips), so the numerator carries the Vandermonde.
    int tg = vs->require("T");
    LaurentPoly t = LaurentPoly::gen_pow(vs, tg, 2);
    LaurentPoly F = LaurentPoly::constant(vs, 1);
    for (int i = 0; i < n; ++i)
        F *= (LaurentPoly::constant(vs, 1) - s1 * xg(vs, i)) *
             (LaurentPoly::constant(vs, 1) - s2 * xg(vs, i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            F *= LaurentPoly::constant(vs, 1) - t * xg(vs, i) * xg(vs, j);
            F *= xg(vs, i) - xg(vs, j);  // Vandermonde completion
        }
    LaurentPoly delta = bc_denominator(vs, n);
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    LaurentPoly num(vs);
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        std::vector<int> eps(n);
        Monomial shift(vs->size());
        for (int i = 0; i < n; ++i) {
            eps[i] = (mask >> i) & 1 ? -1 : 1;
            shift.e[xgen(vs, i)] = static_cast<std::int32_t>(-eps[i] * k);
        }
        LaurentPoly wF = apply_signed_perm(F, id, eps);
        LaurentPoly wD = apply_signed_perm(delta, id, eps);
        num += (wF * delta.divide_exact(wD)).shifted(shift);
    }
    return num.divide_exact(delta);
}

}  // namespace

LaurentPoly hl_bc(const VarSetPtr& vs, const Partition& la, int n,
                  const LaurentPoly& s1, const LaurentPoly& s2) {
    if (la.length() == n && n > 0 && la.part(0) == la.part(n - 1))
        return hl_bc_rect(vs, la.part(0), n, s1, s2);
    return hl_bc_weyl(vs, la, n, s1, s2);
}

LaurentPoly hl_b(const VarSetPtr& vs, const Partition& la, int n, const LaurentPoly& s) {
    return hl_bc(vs, la, n, s, LaurentPoly::constant(vs, -1));
}

LaurentPoly hl_c(const VarSetPtr& vs, const Partition& la, int n, const LaurentPoly& sqrt_s) {
    return hl_bc(vs, la, n, sqrt_s, -sqrt_s);
}

LaurentPoly hl_bc_rect_t1(const VarSetPtr& vs, int k, int n, const LaurentPoly& s1,
                          const LaurentPoly& s2) {
    LaurentPoly r = LaurentPoly::constant(vs, 1);
    for (int i = 0; i < n; ++i) {
        LaurentPoly one = LaurentPoly::constant(vs, 1);
        LaurentPoly num = (one - s1 * xg(vs, i)) * (one - s2 * xg(vs, i)) * xg(vs, i, -k) -
                          (s1 - xg(vs, i)) * (s2 - xg(vs, i)) * xg(vs, i, k);
        r *= num.divide_exact(one - xg(vs, i, 2));
    }
    return r;
}

const char* bl_family_name(BLFamily f) {
    switch (f) {
        case BLFamily::kB0: return "B0";
        case BLFamily::kBNegSqrt: return "B-negsqrt";
        case BLFamily::kB1: return "B1";
        case BLFamily::kC0: return "C0";
        case BLFamily::kCt: return "Ct";
        case BLFamily::kBC: return "BC";
    }
    return "?";
}

bool bl_admits(BLFamily fam, int k, const Partition& la) {
    if (la.part(0) > 2 * k) return false;
    switch (fam) {
        case BLFamily::kB0:
        case BLFamily::kBNegSqrt:
        case BLFamily::kBC:
            return true;
        case BLFamily::kB1:
            for (int p : la.parts())
                if (p < 2 * k && la.mult(p) % 2 == 1) return false;
            return true;
        case BLFamily::kC0:
            return la.is_even();
        case BLFamily::kCt:
            for (int p : la.parts())
                if (p % 2 == 1 && la.mult(p) % 2 == 1) return false;
            return true;
    }
    return false;
}

LaurentPoly bl_weight(const VarSetPtr& vs, BLFamily fam, int k, const Partition& la) {
    int tg = vs->require("T");
    Monomial T1(vs->size()), T2(vs->size()), T4(vs->size());
    T1.e[tg] = 1;
    T2.e[tg] = 2;
    T4.e[tg] = 4;
    LaurentPoly w = LaurentPoly::constant(vs, 1);
    switch (fam) {
        case BLFamily::kB0:
        case BLFamily::kC0:
            return w;
        case BLFamily::kBNegSqrt:
            for (int i = 1; i <= 2 * k - 1; ++i)
                w *= poch_finite(vs, -1, T1, T1, la.mult(i));  // (-t^{1/2}; t^{1/2})_{m_i}
            return w;
        case BLFamily::kB1:
            for (int i = 1; i <= 2 * k - 1; ++i)
                w *= poch_finite(vs, 1, T2, T4, la.mult(i) / 2);  // (t; t^2)_{m_i/2}
            return w;
        case BLFamily::kCt:
            w = LaurentPoly::gen_pow(vs, tg,
                                     static_cast<std::int32_t>(la.odd_sub().length()));
            for (int i = 1; i <= 2 * k - 1; ++i)
                w *= poch_finite(vs, 1, T2, T4, (la.mult(i) + 1) / 2);  // ceil(m_i/2)
            return w;
        case BLFamily::kBC:
            return LaurentPoly::gen_pow(vs, tg,
                                        static_cast<std::int32_t>(la.odd_sub().length()));
    }
    throw std::logic_error("bl_weight: bad family");
}

LaurentPoly bounded_littlewood_lhs(const VarSetPtr& vs, BLFamily fam, int k, int n) {
    LaurentPoly sum(vs);
    PartitionFilter f;
    f.max_part = 2 * k;
    f.max_length = n;
    for_each_partition(f, [&](const Partition& la) {
        if (!bl_admits(fam, k, la)) return;
        sum += bl_weight(vs, fam, k, la) * hl_branching(vs, la, n);
    });
    return sum;
}

LaurentPoly bounded_littlewood_rhs(const VarSetPtr& vs, BLFamily fam, int k, int n) {
    int tg = vs->require("T");
    Partition rect = Partition::rectangle(k, n);
    LaurentPoly zero(vs), one = LaurentPoly::constant(vs, 1);
    LaurentPoly T = LaurentPoly::gen_pow(vs, tg, 1);
    LaurentPoly target(vs);
    switch (fam) {
        case BLFamily::kB0: target = hl_b(vs, rect, n, zero.scaled(0)); break;
        case BLFamily::kBNegSqrt: target = hl_b(vs, rect, n, -T); break;
        case BLFamily::kB1: target = hl_b(vs, rect, n, one); break;
        case BLFamily::kC0: target = hl_c(vs, rect, n, zero); break;
        case BLFamily::kCt: target = hl_c(vs, rect, n, T); break;  // sqrt(t) = T
        case BLFamily::kBC: target = hl_bc(vs, rect, n, -T, zero); break;
    }
    Monomial shift(vs->size());
    for (int i = 0; i < n; ++i) shift.e[xgen(vs, i)] = static_cast<std::int32_t>(k);
    return target.shifted(shift);
}

}  // namespace affinejt
