#ifndef AFFINEJT_SYMFUN_HPP
#define AFFINEJT_SYMFUN_HPP

#include "affinejt/core.hpp"
#include "affinejt/partitions.hpp"
#include "affinejt/report.hpp"
#include "affinejt/series.hpp"

#include <map>

namespace affinejt {

// Standard working VarSet: x1..xn, then T (= t^{1/2}), then extras.
VarSetPtr sym_varset(int n, std::vector<std::string> extras = {});
int xgen(const VarSetPtr& vs, int i);  // 0-based variable index -> slot

// Alphabets as lists of monomial letters. x(n) is the plain alphabet,
// x_pm(n) the 2n-letter alphabet {x_i, 1/x_i}, x_pm1(n) adds the letter 1.
std::vector<LaurentPoly> alphabet_x(const VarSetPtr& vs, int n);
std::vector<LaurentPoly> alphabet_x_pm(const VarSetPtr& vs, int n);
std::vector<LaurentPoly> alphabet_x_pm1(const VarSetPtr& vs, int n);

LaurentPoly elementary_of(const VarSetPtr& vs, long r, const std::vector<LaurentPoly>& letters);
LaurentPoly elementary(const VarSetPtr& vs, long r, int n);          // e_r(x_1..x_n)
LaurentPoly complete_h(const VarSetPtr& vs, long r, int n);          // h_r(x_1..x_n)
LaurentPoly power_sum(const VarSetPtr& vs, long r, int n);           // p_r(x_1..x_n)
LaurentPoly monomial_sym(const VarSetPtr& vs, const Partition& la, int n);

bool is_symmetric(const LaurentPoly& p, int n);

enum class SchurMethod { kBialternant, kJacobiTrudiH, kJacobiTrudiE, kTableaux };
LaurentPoly schur(const VarSetPtr& vs, const Partition& la, int n,
                  SchurMethod method = SchurMethod::kJacobiTrudiE);

// Hall-Littlewood polynomial P_lambda(x;t), t = T^2.
// Antisymmetrised Weyl sum, exact Vandermonde and v_lambda division.
LaurentPoly hall_littlewood(const VarSetPtr& vs, const Partition& la, int n);
// Column-strict branching evaluation of the same polynomial; the fast path.
// Must agree with hall_littlewood (covered by tests).
LaurentPoly hl_branching(const VarSetPtr& vs, const Partition& la, int n);
// v_lambda(t) normalisation for n variables, as a polynomial in T^2.
LaurentPoly hl_vlambda(const VarSetPtr& vs, const Partition& la, int n);

// Branching coefficient psi_{la/mu}(t) for a horizontal strip la/mu.
LaurentPoly hl_psi(const VarSetPtr& vs, const Partition& la, const Partition& mu);

// P_la(1, q, q^2, ...; t) through Q-order `order`, coefficients in Z[T^2]
// over the coefficient VarSet {"T"}. Grade-truncated branching iteration.
TruncSeries hl_principal_series(const Partition& la, int order);

// Kirillov transition coefficient R_{lambda,alpha}(t) in the given VarSet.
LaurentPoly kirillov_R(const VarSetPtr& vs, const Partition& la, const Composition& alpha);

using HLExpansion = std::map<Partition, LaurentPoly>;

// Expand a symmetric polynomial in the P-basis by triangular elimination
// against dominance-ordered leading monomials. Throws on non-symmetric input.
HLExpansion expand_in_hl(const LaurentPoly& f, int n);
// Reassemble sum c_la P_la (spot-check helper).
LaurentPoly assemble_hl(const VarSetPtr& vs, const HLExpansion& exp, int n);

// e-Pieri rule: P_mu e_r = sum over la of the q-binomial weight times P_la.
HLExpansion pieri_e(const VarSetPtr& vs, const Partition& mu, long r, int n);

// Rogers-Szego polynomials. H uses one generator slot for its argument.
LaurentPoly rogers_szego_H(const VarSetPtr& vs, long m, int arg_gen);
// h_la^{(k)}(a,b;t) with generators named "A" and "B".
LaurentPoly rogers_szego_h(const VarSetPtr& vs, const Partition& la, int k);
// h~_la^{(k)}(a,b;t) = a^{l(la^odd)} prod H(b/a) H(ab).
LaurentPoly rogers_szego_htilde(const VarSetPtr& vs, const Partition& la, int k);

// Bounded e-Pieri expansion identity plus its two specialisations.
CheckReport bounded_pieri_identity_check(int n, int k, int degree_cap);
// (x_1..x_n) e_{n-k}(x^{+-}) = sum [s (s-k)/2] P_{(2^r,1^s)}
CheckReport ep_lemma_check(int n);

// --- power-sum layer (degree <= 8) ---
// characters chi^lambda_mu of S_m via Murnaghan-Nakayama
BigInt sym_character(const Partition& la, const Partition& mu);
BigInt z_order(const Partition& mu);  // |centraliser| z_mu
// P_la = sum_nu a_{la,nu}(t) s_nu (integer polynomial coefficients)
std::map<Partition, LaurentPoly> hl_in_schur(const VarSetPtr& vs, const Partition& la);
// z_mu * c_{la,mu}(t) where P_la = sum_mu c_{la,mu}(t) p_mu
std::map<Partition, LaurentPoly> hl_in_powersum_scaled(const VarSetPtr& vs, const Partition& la);

// P'_la(1,q,..,q^{n-1};q^n) = P_la(1,q,q^2,...;q^n) through Q-order 2D.
CheckReport modified_hl_spec_check(const Partition& la, int n, int D);

}  // namespace affinejt

#endif
