#include "affinejt/symfun.hpp"

#include "affinejt/parallel.hpp"
#include "affinejt/series.hpp"
#include "affinejt/textio.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

namespace affinejt {

namespace {

class Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  public:
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0).count();
    }
};

int tgen(const VarSetPtr& vs) { return vs->require("T"); }

Monomial gen_mono(const VarSetPtr& vs, int gen, std::int32_t e) {
    Monomial m(vs->size());
    m.e[gen] = e;
    return m;
}

}  // namespace

VarSetPtr sym_varset(int n, std::vector<std::string> extras) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    names.push_back("T");
    for (auto& e : extras) names.push_back(std::move(e));
    return VarSet::make(std::move(names));
}

int xgen(const VarSetPtr& vs, int i) { return vs->require("x" + std::to_string(i + 1)); }

std::vector<LaurentPoly> alphabet_x(const VarSetPtr& vs, int n) {
    std::vector<LaurentPoly> a;
    for (int i = 0; i < n; ++i) a.push_back(LaurentPoly::gen_pow(vs, xgen(vs, i), 1));
    return a;
}

std::vector<LaurentPoly> alphabet_x_pm(const VarSetPtr& vs, int n) {
    std::vector<LaurentPoly> a;
    for (int i = 0; i < n; ++i) {
        a.push_back(LaurentPoly::gen_pow(vs, xgen(vs, i), 1));
        a.push_back(LaurentPoly::gen_pow(vs, xgen(vs, i), -1));
    }
    return a;
}

std::vector<LaurentPoly> alphabet_x_pm1(const VarSetPtr& vs, int n) {
    auto a = alphabet_x_pm(vs, n);
    a.push_back(LaurentPoly::constant(vs, 1));
    return a;
}

LaurentPoly elementary_of(const VarSetPtr& vs, long r, const std::vector<LaurentPoly>& letters) {
    if (r < 0 || r > static_cast<long>(letters.size())) return LaurentPoly::zero(vs);
    std::vector<LaurentPoly> e(r + 1, LaurentPoly(vs));
    e[0] = LaurentPoly::constant(vs, 1);
    for (std::size_t li = 0; li < letters.size(); ++li)
        for (long j = std::min<long>(r, li + 1); j >= 1; --j)
            e[j] += e[j - 1] * letters[li];
    return e[r];
}

LaurentPoly elementary(const VarSetPtr& vs, long r, int n) {
    if (r == 0) return LaurentPoly::constant(vs, 1);
    return elementary_of(vs, r, alphabet_x(vs, n));
}

LaurentPoly complete_h(const VarSetPtr& vs, long r, int n) {
    if (r < 0) return LaurentPoly::zero(vs);
    std::vector<LaurentPoly> h(r + 1, LaurentPoly(vs));
    h[0] = LaurentPoly::constant(vs, 1);
    for (int i = 0; i < n; ++i) {
        LaurentPoly x = LaurentPoly::gen_pow(vs, xgen(vs, i), 1);
        for (long j = 1; j <= r; ++j) h[j] += h[j - 1] * x;
    }
    return h[r];
}

LaurentPoly power_sum(const VarSetPtr& vs, long r, int n) {
    if (r == 0) return LaurentPoly::constant(vs, 1);
    LaurentPoly p(vs);
    for (int i = 0; i < n; ++i)
        p += LaurentPoly::gen_pow(vs, xgen(vs, i), static_cast<std::int32_t>(r));
    return p;
}

LaurentPoly monomial_sym(const VarSetPtr& vs, const Partition& la, int n) {
    if (la.length() > n) return LaurentPoly::zero(vs);
    std::vector<int> exps(n, 0);
    for (int i = 0; i < la.length(); ++i) exps[i] = la.parts()[i];
    std::sort(exps.begin(), exps.end());
    LaurentPoly m(vs);
    do {
        Monomial mono(vs->size());
        for (int i = 0; i < n; ++i) mono.e[xgen(vs, i)] = exps[i];
        m += LaurentPoly::monomial(vs, mono);
    } while (std::next_permutation(exps.begin(), exps.end()));
    return m;
}

bool is_symmetric(const LaurentPoly& p, int n) {
    for (int i = 0; i + 1 < n; ++i) {
        int a = xgen(p.varset(), i), b = xgen(p.varset(), i + 1);
        std::map<Monomial, BigInt> acc;
        for (const auto& [m, c] : p.terms()) {
            Monomial sm = m;
            std::swap(sm.e[a], sm.e[b]);
            acc[sm] += c;
        }
        if (LaurentPoly::from_map(p.varset(), std::move(acc)) != p) return false;
    }
    return true;
}

namespace {

LaurentPoly vandermonde(const VarSetPtr& vs, int n) {
    LaurentPoly v = LaurentPoly::constant(vs, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            v *= LaurentPoly::gen_pow(vs, xgen(vs, i), 1) - LaurentPoly::gen_pow(vs, xgen(vs, j), 1);
    return v;
}

LaurentPoly schur_bialternant(const VarSetPtr& vs, const Partition& la, int n) {
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n, LaurentPoly(vs)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = LaurentPoly::gen_pow(vs, xgen(vs, i),
                                           static_cast<std::int32_t>(la.part(j) + n - j - 1));
    return determinant(m).divide_exact(vandermonde(vs, n));
}

}  // namespace

LaurentPoly schur(const VarSetPtr& vs, const Partition& la, int n, SchurMethod method) {
    if (la.length() > n) return LaurentPoly::zero(vs);
    switch (method) {
        case SchurMethod::kBialternant:
            if (n == 0) return LaurentPoly::constant(vs, 1);
            return schur_bialternant(vs, la, n);
        case SchurMethod::kJacobiTrudiH: {
            int d = std::max(la.length(), 1);
            std::vector<std::vector<LaurentPoly>> m(d, std::vector<LaurentPoly>(d, LaurentPoly(vs)));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    m[i][j] = complete_h(vs, la.part(i) - (i + 1) + (j + 1), n);
            return determinant(m);
        }
        case SchurMethod::kJacobiTrudiE: {
            Partition c = la.conjugate();
            int d = std::max(la.part(0), 1);
            std::vector<std::vector<LaurentPoly>> m(d, std::vector<LaurentPoly>(d, LaurentPoly(vs)));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    m[i][j] = elementary(vs, c.part(i) - (i + 1) + (j + 1), n);
            return determinant(m);
        }
        case SchurMethod::kTableaux: {
            LaurentPoly s(vs);
            for_each_ssyt(la, Partition(), n, [&](const Tableau& t) {
                auto w = t.weight(n);
                Monomial mono(vs->size());
                for (int i = 0; i < n; ++i) mono.e[xgen(vs, i)] = w[i];
                s += LaurentPoly::monomial(vs, mono);
            });
            return s;
        }
    }
    throw std::logic_error("schur: bad method");
}

LaurentPoly hl_vlambda(const VarSetPtr& vs, const Partition& la, int n) {
    int tg = tgen(vs);
    LaurentPoly v = qfactorial(vs, tg, 2, n - la.length());
    for (int i = 1; i <= la.part(0); ++i) v *= qfactorial(vs, tg, 2, la.mult(i));
    return v;
}

LaurentPoly hall_littlewood(const VarSetPtr& vs, const Partition& la, int n) {
    if (la.length() > n) return LaurentPoly::zero(vs);
    if (n == 0) return LaurentPoly::constant(vs, 1);
    int tg = tgen(vs);
    // B = prod_{i<j} (x_i - t x_j)
    LaurentPoly base = LaurentPoly::constant(vs, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            base *= LaurentPoly::gen_pow(vs, xgen(vs, i), 1) -
                    LaurentPoly::gen_pow(vs, xgen(vs, j), 1) * LaurentPoly::gen_pow(vs, tg, 2);
    std::vector<int> xslot(n);
    for (int i = 0; i < n; ++i) xslot[i] = xgen(vs, i);

    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i;
        do perms.push_back(p); while (std::next_permutation(p.begin(), p.end()));
    }
    std::vector<std::map<Monomial, BigInt>> partial(worker_count());
    std::size_t nchunks = 0;
    parallel_chunks(perms.size(), [&](std::size_t chunk, std::size_t b, std::size_t e) {
        std::map<Monomial, BigInt>& acc = partial[chunk];
        for (std::size_t pi = b; pi < e; ++pi) {
            const std::vector<int>& w = perms[pi];
            int inv = 0;
            for (int a = 0; a < n; ++a)
                for (int bb = a + 1; bb < n; ++bb)
                    if (w[a] > w[bb]) ++inv;
            int sign = inv % 2 == 0 ? 1 : -1;
            Monomial shift(vs->size());
            for (int i = 0; i < n; ++i) shift.e[xslot[w[i]]] += la.part(i);
            for (const auto& [m, c] : base.terms()) {
                Monomial nm = m;
                for (int i = 0; i < n; ++i) nm.e[xslot[w[i]]] = m.e[xslot[i]];
                nm = nm + shift;
                acc[nm] += sign > 0 ? c : -c;
            }
        }
    }, &nchunks);
    std::map<Monomial, BigInt> acc;
    for (std::size_t c = 0; c < nchunks; ++c)
        for (auto& [m, v] : partial[c]) acc[m] += v;
    LaurentPoly num = LaurentPoly::from_map(vs, std::move(acc));
    LaurentPoly res = num.divide_exact(vandermonde(vs, n));
    return res.divide_exact(hl_vlambda(vs, la, n));
}

LaurentPoly hl_psi(const VarSetPtr& vs, const Partition& la, const Partition& mu) {
    LaurentPoly psi = LaurentPoly::constant(vs, 1);
    int tg = tgen(vs);
    for (int i = 1; i <= la.part(0); ++i)
        if (mu.mult(i) == la.mult(i) + 1)
            psi *= LaurentPoly::constant(vs, 1) -
                   LaurentPoly::gen_pow(vs, tg, static_cast<std::int32_t>(2 * mu.mult(i)));
    return psi;
}

namespace {

std::vector<Partition> subshapes(const Partition& la) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int row) {
        if (row == la.length()) {
            std::vector<int> parts;
            for (int v : cur)
                if (v > 0) parts.push_back(v);
            out.emplace_back(parts);
            return;
        }
        int hi = std::min(la.parts()[row], row > 0 ? cur[row - 1] : la.parts()[row]);
        for (int v = hi; v >= 0; --v) {
            cur.push_back(v);
            rec(row + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

LaurentPoly hl_branching(const VarSetPtr& vs, const Partition& la, int n) {
    if (la.length() > n) return LaurentPoly::zero(vs);
    auto shapes = subshapes(la);
    auto idx = [&](const Partition& p) {
        return static_cast<std::size_t>(
            std::lower_bound(shapes.begin(), shapes.end(), p) - shapes.begin());
    };
    struct Edge { std::size_t from; LaurentPoly psi; int boxes; };
    std::vector<std::vector<Edge>> into(shapes.size());
    for (std::size_t a = 0; a < shapes.size(); ++a)
        for (std::size_t b = 0; b < shapes.size(); ++b)
            if (shapes[a].interlaces_under(shapes[b]))
                into[b].push_back(Edge{a, hl_psi(vs, shapes[b], shapes[a]),
                                       static_cast<int>(shapes[b].size() - shapes[a].size())});
    std::vector<LaurentPoly> f(shapes.size(), LaurentPoly(vs));
    f[idx(Partition())] = LaurentPoly::constant(vs, 1);
    for (int var = 0; var < n; ++var) {
        std::vector<LaurentPoly> g(shapes.size(), LaurentPoly(vs));
        for (std::size_t b = 0; b < shapes.size(); ++b)
            for (const Edge& e : into[b]) {
                if (f[e.from].is_zero()) continue;
                g[b] += (f[e.from] * e.psi).shifted(gen_mono(vs, xgen(vs, var), e.boxes));
            }
        f = std::move(g);
    }
    return f[idx(la)];
}

TruncSeries hl_principal_series(const Partition& la, int order) {
    VarSetPtr cvs = VarSet::make({"T"});
    const int tg = 0;
    auto shapes = subshapes(la);
    auto idx = [&](const Partition& p) {
        return static_cast<std::size_t>(
            std::lower_bound(shapes.begin(), shapes.end(), p) - shapes.begin());
    };
    struct Edge { std::size_t from; LaurentPoly psi; long boxes; };
    std::vector<std::vector<Edge>> into(shapes.size());
    for (std::size_t a = 0; a < shapes.size(); ++a)
        for (std::size_t b = 0; b < shapes.size(); ++b)
            if (a != b && shapes[a].interlaces_under(shapes[b])) {
                LaurentPoly psi = LaurentPoly::constant(cvs, 1);
                for (int i = 1; i <= shapes[b].part(0); ++i)
                    if (shapes[a].mult(i) == shapes[b].mult(i) + 1)
                        psi *= LaurentPoly::constant(cvs, 1) -
                               LaurentPoly::gen_pow(cvs, tg,
                                                    static_cast<std::int32_t>(2 * shapes[a].mult(i)));
                into[b].push_back(Edge{a, psi, shapes[b].size() - shapes[a].size()});
            }
    std::vector<TruncSeries> f(shapes.size(), TruncSeries::zero(cvs, order));
    f[idx(Partition())] = TruncSeries::one(cvs, order);
    // variable i carries weight q^{i-1} = Q^{2(i-1)} per box
    for (int var = 0; 2 * var <= order || var == 0; ++var) {
        std::vector<TruncSeries> g = f;  // empty-strip transitions
        for (std::size_t b = 0; b < shapes.size(); ++b)
            for (const Edge& e : into[b]) {
                if (f[e.from].is_zero()) continue;
                std::int64_t grade = 2LL * var * e.boxes;
                if (grade > order) continue;
                g[b] += f[e.from].scaled(e.psi).shifted(QMono{1, grade, Monomial(1)});
            }
        f = std::move(g);
    }
    return f[idx(la)];
}

LaurentPoly kirillov_R(const VarSetPtr& vs, const Partition& la, const Composition& alpha) {
    const Partition target = la.conjugate();
    if (la.size() != alpha.size()) return LaurentPoly::zero(vs);
    int k = static_cast<int>(alpha.parts.size());
    if (la.part(0) > k) return LaurentPoly::zero(vs);
    int tg = tgen(vs);
    LaurentPoly total(vs);
    // chains 0 = nu^0 prec nu^1 prec ... prec nu^k = la' with |nu^i/nu^{i-1}| = alpha_i
    std::function<void(int, const Partition&, const LaurentPoly&)> rec =
        [&](int step, const Partition& prev, const LaurentPoly& weight) {
            if (step == k) {
                if (prev == target) total += weight;
                return;
            }
            long want = alpha.parts[step];
            int maxrows = prev.length() + 1;
            std::vector<int> cur;
            std::function<void(int, long)> build = [&](int row, long rem) {
                if (row == maxrows) {
                    if (rem != 0) return;
                    std::vector<int> parts;
                    for (int v : cur)
                        if (v > 0) parts.push_back(v);
                    Partition nu(parts);
                    LaurentPoly w = weight;
                    int i1 = step + 1;  // 1-based step index
                    if (i1 >= 2) {
                        for (int j = 0; j <= i1 - 2; ++j) {
                            w = w * qbinom(vs, tg, 2, nu.part(j) - nu.part(j + 1),
                                           nu.part(j) - prev.part(j));
                            if (w.is_zero()) return;
                        }
                    }
                    rec(step + 1, nu, w);
                    return;
                }
                int lo = prev.part(row);
                int hi = std::min(target.part(row),
                                  row > 0 ? std::min(cur[row - 1], prev.part(row - 1))
                                          : target.part(0));
                for (int v = std::min<long>(hi, lo + rem); v >= lo; --v) {
                    cur.push_back(v);
                    build(row + 1, rem - (v - lo));
                    cur.pop_back();
                }
            };
            build(0, want);
        };
    rec(0, Partition(), LaurentPoly::constant(vs, 1));
    return total;
}

namespace {

std::vector<int> x_exps(const VarSetPtr& vs, const Monomial& m, int n) {
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = m.e[xgen(vs, i)];
    return e;
}

LaurentPoly coeff_of_xmono(const LaurentPoly& f, const std::vector<int>& exps, int n) {
    const VarSetPtr& vs = f.varset();
    std::map<Monomial, BigInt> acc;
    for (const auto& [m, c] : f.terms()) {
        bool match = true;
        for (int i = 0; i < n && match; ++i) match = m.e[xgen(vs, i)] == exps[i];
        if (!match) continue;
        Monomial nm = m;
        for (int i = 0; i < n; ++i) nm.e[xgen(vs, i)] = 0;
        acc[nm] += c;
    }
    return LaurentPoly::from_map(vs, std::move(acc));
}

// Generic triangular elimination of a symmetric polynomial against a basis
// whose member indexed by la has unitriangular monomial expansion with
// dominance-lower support.
HLExpansion eliminate_against(const LaurentPoly& f, int n,
                              const std::function<LaurentPoly(const Partition&)>& basis) {
    const VarSetPtr& vs = f.varset();
    HLExpansion out;
    LaurentPoly rest = f;
    std::size_t guard = 1000000;
    while (!rest.is_zero()) {
        if (guard-- == 0) throw std::domain_error("elimination does not terminate");
        std::optional<std::vector<int>> best;
        for (const auto& [m, c] : rest.terms()) {
            (void)c;
            auto e = x_exps(vs, m, n);
            for (int v : e)
                if (v < 0) throw std::domain_error("eliminate: negative x-exponent");
            std::vector<int> sorted = e;
            std::sort(sorted.rbegin(), sorted.rend());
            if (sorted != e) continue;
            if (!best || e > *best) best = e;
        }
        if (!best) throw std::domain_error("eliminate: non-symmetric input");
        std::vector<int> parts;
        for (int v : *best)
            if (v > 0) parts.push_back(v);
        Partition la(parts);
        LaurentPoly c = coeff_of_xmono(rest, *best, n);
        rest -= c * basis(la);
        out[la] = c;
    }
    return out;
}

}  // namespace

HLExpansion expand_in_hl(const LaurentPoly& f, int n) {
    const VarSetPtr vs = f.varset();
    return eliminate_against(f, n, [&](const Partition& la) { return hl_branching(vs, la, n); });
}

LaurentPoly assemble_hl(const VarSetPtr& vs, const HLExpansion& exp, int n) {
    LaurentPoly f(vs);
    for (const auto& [la, c] : exp) f += c * hl_branching(vs, la, n);
    return f;
}

HLExpansion pieri_e(const VarSetPtr& vs, const Partition& mu, long r, int n) {
    HLExpansion out;
    if (r < 0 || r > n || mu.length() > n) return out;
    int tg = tgen(vs);
    int rows = mu.length() + static_cast<int>(r);  // up to r new rows below mu
    for (unsigned mask = 0; mask < (1u << rows); ++mask) {
        if (__builtin_popcount(mask) != r) continue;
        std::vector<int> parts;
        bool ok = true;
        for (int i = 0; i < rows && ok; ++i) {
            int v = mu.part(i) + ((mask >> i) & 1);
            if (i > 0 && v > parts[static_cast<std::size_t>(i - 1)]) ok = false;
            parts.push_back(v);
        }
        if (!ok) continue;
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        Partition la(parts);
        if (la.length() > n) continue;
        Partition lc = la.conjugate(), mc = mu.conjugate();
        LaurentPoly w = LaurentPoly::constant(vs, 1);
        for (int i = 0; i < la.part(0) && !w.is_zero(); ++i)
            w = w * qbinom(vs, tg, 2, lc.part(i) - lc.part(i + 1), lc.part(i) - mc.part(i));
        if (!w.is_zero()) out[la] += w;
    }
    return out;
}

LaurentPoly rogers_szego_H(const VarSetPtr& vs, long m, int arg_gen) {
    int tg = tgen(vs);
    LaurentPoly h(vs);
    for (long i = 0; i <= m; ++i)
        h += LaurentPoly::gen_pow(vs, arg_gen, static_cast<std::int32_t>(i)) *
             qbinom(vs, tg, 2, m, i);
    return h;
}

namespace {

// H_m(b/a; t) and H_m(ab; t) as Laurent polynomials in generators A, B
LaurentPoly H_two_gen(const VarSetPtr& vs, long m, int asign) {
    int tg = tgen(vs), ag = vs->require("A"), bg = vs->require("B");
    LaurentPoly h(vs);
    for (long i = 0; i <= m; ++i) {
        Monomial mono(vs->size());
        mono.e[bg] = static_cast<std::int32_t>(i);
        mono.e[ag] = static_cast<std::int32_t>(asign * i);
        h += LaurentPoly::monomial(vs, mono) * qbinom(vs, tg, 2, m, i);
    }
    return h;
}

}  // namespace

LaurentPoly rogers_szego_h(const VarSetPtr& vs, const Partition& la, int k) {
    int ag = vs->require("A");
    LaurentPoly h = LaurentPoly::constant(vs, 1);
    for (int i = 1; i <= k - 1; ++i) {
        long m = la.mult(i);
        if (i % 2 == 1)
            h = h * H_two_gen(vs, m, -1).shifted(gen_mono(vs, ag, static_cast<std::int32_t>(m)),
                                                 (m % 2 == 0) ? 1 : -1);
        else
            h = h * H_two_gen(vs, m, +1);
    }
    return h;
}

LaurentPoly rogers_szego_htilde(const VarSetPtr& vs, const Partition& la, int k) {
    int ag = vs->require("A");
    LaurentPoly h = LaurentPoly::constant(vs, 1);
    for (int i = 1; i <= 2 * k; ++i)
        h = h * H_two_gen(vs, la.mult(i), i % 2 == 1 ? -1 : +1);
    return h.shifted(gen_mono(vs, ag, static_cast<std::int32_t>(la.odd_sub().length())));
}

namespace {

CheckReport compare_expansions(const std::string& id, const HLExpansion& lhs,
                               const HLExpansion& rhs, long size_cap, long elapsed) {
    std::vector<Partition> keys;
    for (const auto& [p, c] : lhs) { (void)c; if (p.size() <= size_cap) keys.push_back(p); }
    for (const auto& [p, c] : rhs) { (void)c; if (p.size() <= size_cap) keys.push_back(p); }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (const Partition& p : keys) {
        auto l = lhs.find(p);
        auto r = rhs.find(p);
        bool lz = l == lhs.end() || l->second.is_zero();
        bool rz = r == rhs.end() || r->second.is_zero();
        if (lz && rz) continue;
        if (lz != rz || l->second != r->second) {
            CheckReport rep = CheckReport::fail(
                id, CheckReport::Witness{"P_(" + p.serialize() + ")",
                                         lz ? "0" : to_string(l->second),
                                         rz ? "0" : to_string(r->second)});
            rep.elapsed_ms = elapsed;
            return rep;
        }
    }
    CheckReport rep = CheckReport::pass(id);
    rep.elapsed_ms = elapsed;
    return rep;
}

}  // namespace

CheckReport bounded_pieri_identity_check(int n, int k, int degree_cap) {
    Timer timer;
    VarSetPtr vs = sym_varset(n, {"A", "B"});
    int ag = vs->require("A"), bg = vs->require("B"), tg = vs->require("T");

    HLExpansion lhs;
    PartitionFilter pf;
    pf.max_part = 2 * k;
    pf.max_length = n;
    for_each_partition(pf, [&](const Partition& mu) {
        if (mu.size() > degree_cap) return;
        LaurentPoly bw = LaurentPoly::gen_pow(vs, bg,
                                              static_cast<std::int32_t>(mu.odd_sub().length()));
        for (long r = 0; r <= n && mu.size() + r <= degree_cap; ++r) {
            LaurentPoly aw = LaurentPoly::gen_pow(vs, ag, static_cast<std::int32_t>(r));
            for (auto& [la, w] : pieri_e(vs, mu, r, n)) lhs[la] += w * aw * bw;
        }
    });
    HLExpansion rhs;
    PartitionFilter pf2;
    pf2.max_part = 2 * k + 1;
    pf2.max_length = n;
    for_each_partition(pf2, [&](const Partition& la) {
        if (la.size() > degree_cap) return;
        rhs[la] = rogers_szego_htilde(vs, la, k);
    });
    CheckReport rep = compare_expansions("bounded-pieri", lhs, rhs, degree_cap, timer.ms());
    if (!rep.passed()) return rep;

    // b -> 0 gives weights a^{l(la^odd)}
    for (auto& [la, w] : rhs) {
        if (la.size() > degree_cap) continue;
        LaurentPoly got = w.substitute_int(bg, 0);
        LaurentPoly want = LaurentPoly::gen_pow(vs, ag,
                                                static_cast<std::int32_t>(la.odd_sub().length()));
        if (got != want)
            return CheckReport::fail(
                "bounded-pieri",
                CheckReport::Witness{"htilde(a,0) at P_(" + la.serialize() + ")",
                                     to_string(got), to_string(want)});
    }
    // a = 1, b = t^{1/2} gives weights prod (-t^{1/2}; t^{1/2})_{m_i}
    for (auto& [la, w] : rhs) {
        if (la.size() > degree_cap) continue;
        LaurentPoly got = w.substitute_int(ag, 1).substitute_monomial(bg, 1, gen_mono(vs, tg, 1));
        LaurentPoly want = LaurentPoly::constant(vs, 1);
        Monomial t1 = gen_mono(vs, tg, 1);
        for (int i = 1; i <= 2 * k; ++i) want *= poch_finite(vs, -1, t1, t1, la.mult(i));
        if (got != want)
            return CheckReport::fail(
                "bounded-pieri",
                CheckReport::Witness{"htilde(1,t^(1/2)) at P_(" + la.serialize() + ")",
                                     to_string(got), to_string(want)});
    }
    rep = CheckReport::pass("bounded-pieri");
    rep.params = {{"n", std::to_string(n)}, {"k", std::to_string(k)},
                  {"cap", std::to_string(degree_cap)}};
    rep.elapsed_ms = timer.ms();
    return rep;
}

CheckReport ep_lemma_check(int n) {
    Timer timer;
    VarSetPtr vs = sym_varset(n);
    int tg = vs->require("T");
    LaurentPoly xall = LaurentPoly::constant(vs, 1);
    for (int i = 0; i < n; ++i) xall *= LaurentPoly::gen_pow(vs, xgen(vs, i), 1);
    for (int k = -n; k <= n; ++k) {
        LaurentPoly lhs = xall * elementary_of(vs, n - k, alphabet_x_pm(vs, n));
        LaurentPoly rhs(vs);
        for (int s = std::abs(k); s <= n; ++s) {
            if ((s - k) % 2 != 0) continue;
            for (int r = 0; r + s <= n; ++r) {
                std::vector<int> parts(r, 2);
                parts.insert(parts.end(), s, 1);
                rhs += qbinom(vs, tg, 2, s, (s - k) / 2) * hl_branching(vs, Partition(parts), n);
            }
        }
        if (lhs != rhs) {
            CheckReport rep = CheckReport::fail(
                "ep-lemma",
                CheckReport::Witness{"k=" + std::to_string(k) + " at " + diff_witness_where(lhs, rhs),
                                     to_string(lhs), to_string(rhs)});
            rep.elapsed_ms = timer.ms();
            return rep;
        }
    }
    CheckReport rep = CheckReport::pass("ep-lemma");
    rep.params = {{"n", std::to_string(n)}};
    rep.elapsed_ms = timer.ms();
    return rep;
}

BigInt sym_character(const Partition& la, const Partition& mu) {
    if (la.size() != mu.size()) throw std::invalid_argument("sym_character: size mismatch");
    if (mu.size() == 0) return 1;
    // remove a border strip of size mu_1 via beta-numbers
    int r = mu.parts()[0];
    std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
    int L = la.length();
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = la.parts()[i] + (L - 1 - i);
    BigInt total = 0;
    for (int i = 0; i < L; ++i) {
        int b = beta[i] - r;
        if (b < 0) continue;
        if (std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
        int height = 0;
        for (int v : beta)
            if (v > b && v < beta[i]) ++height;
        std::vector<int> nb = beta;
        nb[i] = b;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> parts;
        for (int j = 0; j < L; ++j) {
            int p = nb[j] - (L - 1 - j);
            if (p > 0) parts.push_back(p);
        }
        BigInt c = sym_character(Partition(parts), Partition(rest));
        total += (height % 2 == 0) ? c : -c;
    }
    return total;
}

BigInt z_order(const Partition& mu) {
    BigInt z = 1;
    for (int i = 1; i <= mu.part(0); ++i) {
        long m = mu.mult(i);
        for (long j = 1; j <= m; ++j) z *= j;
        for (long j = 0; j < m; ++j) z *= i;
    }
    return z;
}

std::map<Partition, LaurentPoly> hl_in_schur(const VarSetPtr& vs, const Partition& la) {
    int n = std::max<int>(static_cast<int>(la.size()), 1);
    VarSetPtr wvs = sym_varset(n);
    LaurentPoly f = hl_branching(wvs, la, n);
    HLExpansion exp = eliminate_against(f, n, [&](const Partition& nu) {
        return schur(wvs, nu, n, SchurMethod::kJacobiTrudiE);
    });
    std::map<Partition, LaurentPoly> out;
    for (auto& [nu, c] : exp) out[nu] = c.into(vs);
    return out;
}

std::map<Partition, LaurentPoly> hl_in_powersum_scaled(const VarSetPtr& vs, const Partition& la) {
    auto in_s = hl_in_schur(vs, la);
    std::map<Partition, LaurentPoly> out;
    for (const Partition& mu : partitions_of(la.size())) {
        LaurentPoly acc(vs);
        for (const auto& [nu, a] : in_s) {
            BigInt chi = sym_character(nu, mu);
            if (chi != 0) acc += a.scaled(chi);
        }
        if (!acc.is_zero()) out[mu] = acc;
    }
    return out;
}

CheckReport modified_hl_spec_check(const Partition& la, int n, int D) {
    Timer timer;
    const int order = 2 * D;
    VarSetPtr tvs = VarSet::make({"T"});
    auto scaled = hl_in_powersum_scaled(tvs, la);  // mu -> z_mu c_{la,mu}(t)
    BigInt Z = 1;
    for (const Partition& mu : partitions_of(la.size())) {
        BigInt z = z_order(mu);
        BigInt g = boost::multiprecision::gcd(Z, z);
        Z = Z / g * z;
    }
    // Z * P'_la(1,q,...,q^{n-1};q^n) = sum_mu (Z/z_mu)(z_mu c_{la,mu}(q^n)) prod 1/(1-q^{mu_i})
    TruncSeries lhs = TruncSeries::zero(tvs, order);
    for (const auto& [mu, zc] : scaled) {
        TruncSeries coeff = TruncSeries::zero(tvs, order);
        for (const auto& [mono, c] : zc.terms()) {
            std::int64_t grade = static_cast<std::int64_t>(mono.e[0]) * n;  // T -> Q^n
            if (grade < 0) throw std::logic_error("modified_hl: negative t-exponent");
            if (grade > order) continue;
            coeff.add_coeff(static_cast<int>(grade), LaurentPoly::constant(tvs, c));
        }
        TruncSeries term = coeff.scaled(LaurentPoly::constant(tvs, Z / z_order(mu)));
        for (int p : mu.parts()) {
            TruncSeries geo = TruncSeries::one(tvs, order) -
                              TruncSeries::one(tvs, order).shifted(QMono{1, 2L * p, Monomial(1)});
            term *= geo.inverse();
        }
        lhs += term;
    }
    TruncSeries rhs =
        hl_principal_series(la, order).substitute_t_to_gpow(0, n).scaled(
            LaurentPoly::constant(tvs, Z));
    auto diff = lhs.first_difference(rhs);
    CheckReport rep;
    if (!diff) {
        rep = CheckReport::pass("modified-hl", order);
    } else {
        rep = CheckReport::fail("modified-hl",
                                CheckReport::Witness{"Q^" + std::to_string(*diff),
                                                     to_string(lhs.coeff(*diff)),
                                                     to_string(rhs.coeff(*diff))},
                                order);
    }
    rep.params = {{"lambda", la.serialize()}, {"n", std::to_string(n)}, {"D", std::to_string(D)}};
    rep.elapsed_ms = timer.ms();
    return rep;
}

}  // namespace affinejt
