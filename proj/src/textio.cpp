#include "affinejt/textio.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace affinejt {

namespace {

using nlohmann::json;

bool is_x(const std::string& name) { return !name.empty() && name[0] == 'x'; }

// one generator-power in the requested mode; empty string when exp == 0
std::string gen_pow_str(const std::string& name, std::int32_t e, RenderMode mode) {
    if (e == 0) return {};
    std::ostringstream os;
    if (mode == RenderMode::kQt && (name == "Q" || name == "T")) {
        os << (name == "Q" ? 'q' : 't');
        if (e == 2) return os.str();
        if (e % 2 == 0) {
            os << '^' << e / 2;
        } else {
            os << "^(" << e << "/2)";
        }
        return os.str();
    }
    os << name;
    if (e != 1) os << '^' << e;
    return os.str();
}

std::string term_body(const VarSet& vs, const Monomial& m, RenderMode mode) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        std::string g = gen_pow_str(vs.name(i), m.e[i], mode);
        if (g.empty()) continue;
        if (!out.empty()) out += '*';
        out += g;
    }
    return out;
}

void append_term(std::ostringstream& os, bool first, const BigInt& c, const std::string& body) {
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (first) {
        if (c < 0) os << '-';
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || body.empty()) {
        os << a.str();
        if (!body.empty()) os << '*';
    }
    os << body;
}

}  // namespace

std::string to_string(const LaurentPoly& p, RenderMode mode) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        append_term(os, first, c, term_body(*p.varset(), m, mode));
        first = false;
    }
    return os.str();
}

std::string to_string_grouped(const LaurentPoly& p, RenderMode mode) {
    if (p.is_zero()) return "0";
    const VarSet& vs = *p.varset();
    std::vector<std::size_t> xslots, cslots;
    for (std::size_t i = 0; i < vs.size(); ++i)
        (is_x(vs.name(i)) ? xslots : cslots).push_back(i);
    // group terms by x-part (descending), keep coefficient polynomial
    std::map<Monomial, LaurentPoly, std::greater<Monomial>> groups;
    for (const auto& [m, c] : p.terms()) {
        Monomial xm(vs.size()), cm(vs.size());
        for (std::size_t i : xslots) xm.e[i] = m.e[i];
        for (std::size_t i : cslots) cm.e[i] = m.e[i];
        auto it = groups.find(xm);
        if (it == groups.end()) it = groups.emplace(xm, LaurentPoly(p.varset())).first;
        it->second += LaurentPoly::monomial(p.varset(), cm, c);
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [xm, cp] : groups) {
        std::string body = term_body(vs, xm, mode);
        if (cp.size() == 1) {
            const auto& [cm, c] = cp.terms()[0];
            std::string cbody = term_body(vs, cm, mode);
            std::string full = cbody.empty() ? body : (body.empty() ? cbody : cbody + "*" + body);
            append_term(os, first, c, full);
        } else {
            if (!first) os << " + ";
            os << '(' << to_string(cp, mode) << ')';
            if (!body.empty()) os << '*' << body;
        }
        first = false;
    }
    return os.str();
}

std::string to_string(const TruncSeries& s, RenderMode mode) {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= s.order(); ++k) {
        const LaurentPoly& c = s.coeff(k);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string qs;
        if (k > 0) {
            if (mode == RenderMode::kQt) {
                qs = k == 2 ? "q" : (k % 2 == 0 ? "q^" + std::to_string(k / 2)
                                                : "q^(" + std::to_string(k) + "/2)");
            } else {
                qs = k == 1 ? "Q" : "Q^" + std::to_string(k);
            }
        }
        bool plain_unit = c.size() == 1 && c.terms()[0].first.is_zero();
        if (plain_unit) {
            const BigInt& v = c.terms()[0].second;
            if (qs.empty()) os << v.str();
            else if (v == 1) os << qs;
            else if (v == -1) os << '-' << qs;
            else os << v.str() << '*' << qs;
        } else {
            os << '(' << to_string(c, mode) << ')';
            if (!qs.empty()) os << '*' << qs;
        }
    }
    if (first) os << '0';
    return os.str();
}

std::string to_json(const LaurentPoly& p) {
    json j;
    j["vars"] = p.varset()->names();
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json t;
        t["exponents"] = m.e;
        t["coeff"] = c.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

LaurentPoly poly_from_json(const std::string& text) {
    json j = json::parse(text);
    VarSetPtr vs = VarSet::make(j.at("vars").get<std::vector<std::string>>());
    std::map<Monomial, BigInt> acc;
    for (const auto& t : j.at("terms")) {
        Monomial m;
        m.e = t.at("exponents").get<std::vector<std::int32_t>>();
        if (m.e.size() != vs->size()) throw std::invalid_argument("poly_from_json: arity");
        acc[m] += BigInt(t.at("coeff").get<std::string>());
    }
    return LaurentPoly::from_map(vs, std::move(acc));
}

std::string to_json(const TruncSeries& s) {
    json j;
    j["order"] = s.order();
    j["vars"] = s.coeff_varset()->names();
    json coeffs = json::array();
    for (int k = 0; k <= s.order(); ++k) {
        json terms = json::array();
        for (const auto& [m, c] : s.coeff(k).terms()) {
            json t;
            t["exponents"] = m.e;
            t["coeff"] = c.str();
            terms.push_back(std::move(t));
        }
        coeffs.push_back(std::move(terms));
    }
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

std::string diff_witness_where(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly d = a - b;
    if (d.is_zero()) return {};
    return term_body(*d.varset(), d.terms()[0].first, RenderMode::kRaw);
}

}  // namespace affinejt
