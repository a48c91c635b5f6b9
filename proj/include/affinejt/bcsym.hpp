#ifndef AFFINEJT_BCSYM_HPP
#define AFFINEJT_BCSYM_HPP

#include "affinejt/core.hpp"
#include "affinejt/partitions.hpp"
#include "affinejt/symfun.hpp"

namespace affinejt {

// x1..xn, T, S, s1, s2 (S carries the C-family parameter via s = S^2)
VarSetPtr bc_varset(int n);

// invariance under x_i <-> x_j and x_i -> 1/x_i
bool is_bc_symmetric(const LaurentPoly& p, int n);

enum class ClassicalFamily { kSoOdd, kOEven, kSp };

// Bialternant formulas for the odd orthogonal, even orthogonal and
// symplectic Schur functions; the even orthogonal case halves exactly when
// l(lambda) < n.
LaurentPoly classical_character(const VarSetPtr& vs, ClassicalFamily fam,
                                const Partition& la, int n);

// Hyperoctahedral Hall-Littlewood polynomial; s1, s2 given as polynomial
// values in the same VarSet (0, +-1, +-T, S, -S, or the formal s1/s2).
// Full W = S_n x (Z/2)^n sum with exact denominator clearing; for
// lambda = (k^n) the sum collapses to sign vectors only.
LaurentPoly hl_bc(const VarSetPtr& vs, const Partition& la, int n,
                  const LaurentPoly& s1, const LaurentPoly& s2);
// General Weyl-sum path with no rectangle shortcut (test oracle).
LaurentPoly hl_bc_weyl(const VarSetPtr& vs, const Partition& la, int n,
                       const LaurentPoly& s1, const LaurentPoly& s2);
// B_n wrapper: s2 = -1. C_n wrapper: (s^{1/2}, -s^{1/2}); pass sqrt_s.
LaurentPoly hl_b(const VarSetPtr& vs, const Partition& la, int n, const LaurentPoly& s);
LaurentPoly hl_c(const VarSetPtr& vs, const Partition& la, int n, const LaurentPoly& sqrt_s);

// Product formula at t = 1 for rectangles:
// prod_i [(1-s1 x_i)(1-s2 x_i) x_i^{-k} - (s1-x_i)(s2-x_i) x_i^k]/(1-x_i^2)
LaurentPoly hl_bc_rect_t1(const VarSetPtr& vs, int k, int n,
                          const LaurentPoly& s1, const LaurentPoly& s2);

enum class BLFamily { kB0, kBNegSqrt, kB1, kC0, kCt, kBC };
const char* bl_family_name(BLFamily f);

// Does lambda belong to the family's summation domain (la_1 <= 2k plus the
// parity restriction)?
bool bl_admits(BLFamily fam, int k, const Partition& la);
// The family's weight as a polynomial in T.
LaurentPoly bl_weight(const VarSetPtr& vs, BLFamily fam, int k, const Partition& la);
// Bounded Littlewood left side: sum of weight(la) P_la(x;t) over the domain.
LaurentPoly bounded_littlewood_lhs(const VarSetPtr& vs, BLFamily fam, int k, int n);
// Right side: (x_1...x_n)^k times the matching BC-type polynomial.
LaurentPoly bounded_littlewood_rhs(const VarSetPtr& vs, BLFamily fam, int k, int n);

}  // namespace affinejt

#endif
