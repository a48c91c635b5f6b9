#ifndef AFFINEJT_TEXTIO_HPP
#define AFFINEJT_TEXTIO_HPP

#include "affinejt/core.hpp"
#include "affinejt/series.hpp"

#include <string>

namespace affinejt {

enum class RenderMode {
    kRaw,  // generators verbatim: 3*x1^2*x2^-1*T^3*Q^2 - 1
    kQt,   // Q, T rendered as q, t with half-integer exponents as fractions
};

std::string to_string(const LaurentPoly& p, RenderMode mode = RenderMode::kRaw);
// Group by x-monomial, parenthesised coefficient polynomial first:
// x1^2 + (1-t)*x1*x2 + x2^2
std::string to_string_grouped(const LaurentPoly& p, RenderMode mode = RenderMode::kQt);
// c0 + c1*q^(1/2) + c2*q + ...
std::string to_string(const TruncSeries& s, RenderMode mode = RenderMode::kQt);

// JSON form: {"vars": [...], "terms": [{"exponents": [...], "coeff": "..."}]}
std::string to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const std::string& text);
std::string to_json(const TruncSeries& s);

// first discrepancy between two polynomials (canonical term order)
std::string diff_witness_where(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace affinejt

#endif
