#ifndef AFFINEJT_QTSERIES_HPP
#define AFFINEJT_QTSERIES_HPP

#include "affinejt/partitions.hpp"
#include "affinejt/report.hpp"
#include "affinejt/series.hpp"
#include "affinejt/symfun.hpp"

#include <string>
#include <vector>

namespace affinejt {

// All (q,t)-series here are graded by Q = q^{1/2} with coefficients in Z[T].

// P_la(1,q,q^2,...;t) through Q-order `order`.
TruncSeries specialize_hl(const Partition& la, int order);
// Exact finite principal specialisation P_la(1,q,...,q^{nvars-1};t) in (Q,T).
LaurentPoly specialize_hl_finite(const VarSetPtr& vs, const Partition& la, int nvars);
// independent transition-matrix evaluation used as an oracle: invert the
// Kirillov matrix at |la| and specialise e_r(1,q,q^2,...) = q^{C(r,2)}/(q;q)_r
TruncSeries specialize_hl_via_transition(const Partition& la, int order);

enum class EShift { kHalfShift, kIntegerShift };
// e_{n-r} at the symmetric principal point: closed form and direct expansion.
LaurentPoly specialize_e_closed(const VarSetPtr& vs, EShift kind, int n, int r);
LaurentPoly specialize_e_direct(const VarSetPtr& vs, EShift kind, int n, int r);

enum class RRTheorem { kT15, kT16a, kT16b, kT17, kT18 };
TruncSeries rr_sum_side(RRTheorem thm, int k, int sigma, int order);
TruncSeries rr_product_side(RRTheorem thm, int k, int sigma, int order);
// The simplified sigma = 1 product form of the A_{2k}^{(2)} first identity.
TruncSeries rr_t16a_sigma1_simplified(int k, int order);

enum class MacdonaldSystem { kC, kA2k2B, kA2k2C, kDkp12, kA2km12, kDn1Variant };
// Lattice sum and theta product, graded by p^{1/2}, coefficients Laurent in
// the symbolic alphabet x_1..x_k.
TruncSeries macdonald_sum_side(MacdonaldSystem sys, int k, int orderP);
TruncSeries macdonald_product_side(MacdonaldSystem sys, int k, int orderP);

enum class SlaterId { kA12Even, kA12Odd, kF1, kF2, kE1, kE4, kA34, kA5 };
const char* slater_name(SlaterId id);
CheckReport slater_binomial_identity(SlaterId id, int s_or_n);

// beta_n = (1/(q^{l+1};q)_{2n}) sum_{j<=n} alpha_j [2n+l, n-j]_q
std::vector<TruncSeries> bailey_beta_from_alpha(const std::vector<TruncSeries>& alpha,
                                                int l, int N, int order);
CheckReport bailey_pair_verify(const std::vector<TruncSeries>& alpha,
                               const std::vector<TruncSeries>& beta, int l, int N, int order);

enum class FiniteRR { kQtDeformation, kFodaQuano, kBressoud };
CheckReport finite_rr_poly(FiniteRR variant, int sigma, int n);

// Section-5.2-style specialised character identities: the sum side is the
// t = q^m partition sum, the product side a pure-q theta product.
struct CorollaryInfo {
    std::string id;
    bool has_sigma;
    int min_n;          // small-n exception: smallest n the product form covers
    std::string note;
};
std::vector<CorollaryInfo> corollary_registry();
TruncSeries corollary_sum_side(const std::string& id, int k, int n, int sigma, int order);
TruncSeries corollary_product_side(const std::string& id, int k, int n, int sigma, int order);

std::vector<std::string> theta_duality_ids();
CheckReport theta_duality_check(const std::string& id, int k, int n, int order);

// extras: the k = l = 1 chain with p = t^2 q^12 and its Virasoro value at t=q
TruncSeries extra_chain_sum_side(int sigma, int order);
TruncSeries extra_chain_product_side(int sigma, int order);
CheckReport extra_chain_poly_check(int sigma, int n);
CheckReport virasoro_check(int sigma, int qorder);
CheckReport misprint_resolution_check(int nmax);

// partitions with all parts = +-r mod 5 counted by size (index = q-exponent)
std::vector<long> count_parts_mod5(int residue_class, int qmax);
CheckReport classical_rr_check(int sigma, int qmax);

// oracle pair for specialize_hl
CheckReport specialize_hl_oracle_check(const Partition& la, int order);

}  // namespace affinejt

#endif
