#ifndef AFFINEJT_CORE_HPP
#define AFFINEJT_CORE_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace affinejt {

using BigInt = boost::multiprecision::cpp_int;

// Exact small rational for exponent bookkeeping (Cartan-matrix inverses and
// half-integer t-exponents). Values stay tiny, int64 is plenty.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n) : num(n), den(1) {}
    Rat(std::int64_t n, std::int64_t d);

    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }

    bool is_integer() const { return den == 1; }
    // numerator of this * 2; throws unless the result is integral
    std::int64_t twice_as_int() const;
    std::int64_t as_int() const;
};

class VarSet;
using VarSetPtr = std::shared_ptr<const VarSet>;

// Ordered set of generator names. Polynomials are tagged with their VarSet
// and cross-set arithmetic is rejected. By convention the generator "Q"
// stands for q^{1/2} and "T" for t^{1/2}.
class VarSet {
  public:
    static VarSetPtr make(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    int index(const std::string& n) const;          // -1 when absent
    int require(const std::string& n) const;        // throws when absent
    bool same(const VarSet& o) const { return names_ == o.names_; }

  private:
    explicit VarSet(std::vector<std::string> names);
    std::vector<std::string> names_;
};

// Exponent vector, one slot per generator of the owning VarSet.
struct Monomial {
    std::vector<std::int32_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t n) : e(n, 0) {}

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator<(const Monomial& o) const { return e < o.e; }  // lex
    bool operator>(const Monomial& o) const { return o.e < e; }
    Monomial operator+(const Monomial& o) const;
    Monomial operator-(const Monomial& o) const;
    bool is_zero() const;
};

class NonDivisible : public std::runtime_error {
  public:
    explicit NonDivisible(const std::string& m) : std::runtime_error(m) {}
};

// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
// Canonical form: terms sorted by descending lex monomial, no zero
// coefficients, so structural equality is mathematical equality.
class LaurentPoly {
  public:
    using Term = std::pair<Monomial, BigInt>;

    LaurentPoly() = default;
    explicit LaurentPoly(VarSetPtr vs) : vs_(std::move(vs)) {}

    static LaurentPoly zero(VarSetPtr vs) { return LaurentPoly(std::move(vs)); }
    static LaurentPoly constant(VarSetPtr vs, BigInt c);
    static LaurentPoly monomial(VarSetPtr vs, Monomial m, BigInt c = 1);
    // single-generator power c * g^e
    static LaurentPoly gen_pow(VarSetPtr vs, int gen, std::int32_t e, BigInt c = 1);

    const VarSetPtr& varset() const { return vs_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const BigInt& c) const;
    // multiply by c * x^m
    LaurentPoly shifted(const Monomial& m, const BigInt& c = 1) const;

    // Exact division; throws NonDivisible when the quotient does not exist.
    LaurentPoly divide_exact(const LaurentPoly& g) const;
    // Exact division by an integer; throws NonDivisible on any remainder.
    LaurentPoly divide_exact_int(const BigInt& c) const;

    // Substitute generator `gen` by sign * (monomial value). The value lives
    // in the same VarSet (its own slot for `gen` must be zero).
    LaurentPoly substitute_monomial(int gen, int sign, const Monomial& value) const;
    // Substitute generator by an integer constant (0, 1, -1, ...). Negative
    // exponents of `gen` are rejected for value 0.
    LaurentPoly substitute_int(int gen, const BigInt& value) const;

    // Coefficient of gen^power: terms with that exponent, slot reset to 0.
    LaurentPoly coefficient_of(int gen, std::int32_t power) const;
    std::int32_t min_exp(int gen) const;  // 0 for the zero polynomial
    std::int32_t max_exp(int gen) const;
    // All exponents of every generator in `gens` are zero.
    bool free_of(int gen) const;

    const BigInt& coeff(const Monomial& m) const;  // 0 if absent

    // Map this polynomial into another VarSet (by generator name). Fails if
    // a generator with nonzero exponent has no slot in the target.
    LaurentPoly into(const VarSetPtr& target) const;

    // Build from a raw accumulation map.
    static LaurentPoly from_map(VarSetPtr vs, std::map<Monomial, BigInt>&& acc);

    void check_same_varset(const LaurentPoly& o) const;

  private:
    VarSetPtr vs_;
    std::vector<Term> terms_;  // descending lex, canonical
};

// Permutation expansion for dimension <= 5, fraction-free elimination above.
LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m);
// Cofactor-expansion determinant, used as an independent test oracle.
LaurentPoly determinant_cofactor(const std::vector<std::vector<LaurentPoly>>& m);
// Fraction-free Bareiss elimination (every division exact).
LaurentPoly determinant_bareiss(std::vector<std::vector<LaurentPoly>> m);

// Gaussian binomial [n r] in base gen^step (step 2 realises base q = Q^2 or
// base t = T^2). Zero when r < 0 or r > n.
LaurentPoly qbinom(const VarSetPtr& vs, int gen, int step, long n, long r);
// (base; base)-style t-factorial [m]! = prod_{j=1..m} (1-b^j)/(1-b) in gen^step.
LaurentPoly qfactorial(const VarSetPtr& vs, int gen, int step, long m);
// Finite Pochhammer prod_{i=0}^{m-1} (1 - sign * a * b^i) with monomial a, b.
LaurentPoly poch_finite(const VarSetPtr& vs, int sign, const Monomial& a,
                        const Monomial& b, long m);

inline BigInt binom(long n, long r) {
    if (r < 0 || r > n) return 0;
    BigInt v = 1;
    for (long i = 0; i < r; ++i) { v *= (n - i); v /= (i + 1); }
    return v;
}
// binomial(y,2) = y(y-1)/2, valid for negative y
inline std::int64_t choose2(std::int64_t y) { return y * (y - 1) / 2; }

}  // namespace affinejt

#endif
