#ifndef AFFINEJT_AFFTRUDI_HPP
#define AFFINEJT_AFFTRUDI_HPP

#include "affinejt/bcsym.hpp"
#include "affinejt/core.hpp"
#include "affinejt/partitions.hpp"
#include "affinejt/report.hpp"

namespace affinejt {

// GL affine dual Jacobi-Trudi sum:
// sum over y in Z^k, |y| = 0, of det( t^{k C(y_i,2) + i y_i} e_{r-i+j-k y_i}(x) ).
LaurentPoly affine_jt_gl(const VarSetPtr& vs, int k, int r, int n);

// BC-type lattice determinant sums (the six conjectured families reuse the
// bounded-Littlewood family tags). All exponents integral in T.
LaurentPoly affine_jt_bc(const VarSetPtr& vs, BLFamily fam, int k, int n);

// The companion identity for P^{B_n}_{(k^n)}(x;t,t): an e(x^{+-},1)-type sum
// over Z^k with K = 2k and an exact overall halving.
LaurentPoly affine_jt_b_tt(const VarSetPtr& vs, int k, int n);

// Cylindric Schur determinant:
// sum over |y| = 0 of det( e_{la'_i - i + j - (k+l) y_i}(x) ).
LaurentPoly cylindric_schur_det(const VarSetPtr& vs, const Partition& la, int n, int k, int l);

// t-deformation S^{k,l}_{(k^r)}(t) with weights t^{(k+l) C(y_i,2) + i y_i}.
LaurentPoly s_klt(const VarSetPtr& vs, int k, int r, int l, int n);

struct KostkaParams {
    int k = 1;   // rectangle width
    int l = 1;   // level
    int r = 0;   // rectangle height
    Partition mu;
};
// Coefficient of P_mu in the P-expansion of S^{k,l}_{(k^r)}(t): the
// Cartan-matrix tau-sum times t^{phi_l(mu)}; exponents accumulate as exact
// rationals and must land on half-integers.
LaurentPoly level_restricted_kostka(const VarSetPtr& vs, const KostkaParams& p);

enum class DetTransform { kPlusForm, kMinusForm };
// e(x^{+-}) vs e(x^{+-},1) determinant transforms with formal u.
CheckReport det_transform_check(DetTransform kind, int k, int n, int K);

// sum over y in Q, sigma in S_k of sgn(sigma) t^{...} R_{mu,(s^k)+sigma-rho-ky}
// equals delta_{s,0} for mu of size ks with mu_1 < k.
CheckReport ss_delta_check(int k, const Partition& mu, int s);

enum class CylindricF { kSignedFbar, kUnsignedF };
// t=1 determinant evaluations of the cylindric generating functions.
CheckReport cylindric_f_check(CylindricF kind, int k, int n);

// The principal-specialisation corollary: both the raw determinant identity
// and its product evaluation, as polynomial identities in t.
CheckReport a_hypergeometric_check(int k, int n);

}  // namespace affinejt

#endif
