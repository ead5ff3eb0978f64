#ifndef HYPERSTRATA_EXACT_HPP
#define HYPERSTRATA_EXACT_HPP

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace hyperstrata {

using Rational = mpq_class;

/// Dense univariate polynomial with exact rational coefficients, ascending
/// powers, no trailing zero (the zero polynomial is the empty vector).
using RatPoly = std::vector<Rational>;

// IEEE doubles are exact binary rationals, so polynomial input given as
// doubles converts losslessly and the whole root-counting path stays exact.
RatPoly ratpoly_from_doubles(const std::vector<double>& ascending);

RatPoly rp_trim(RatPoly p);
int rp_degree(const RatPoly& p);  // -1 for the zero polynomial
RatPoly rp_derivative(const RatPoly& p);
Rational rp_eval(const RatPoly& p, const Rational& t);
// division with remainder; divisor must be nonzero
std::pair<RatPoly, RatPoly> rp_divmod(const RatPoly& num, const RatPoly& den);
RatPoly rp_gcd(RatPoly a, RatPoly b);  // monic

/// Sturm chain p, p', -rem(...), ... down to a constant (or the gcd).
std::vector<RatPoly> sturm_chain(const RatPoly& p);

/// Number of distinct real roots over the whole line. Valid for
/// non-squarefree input (the chain then terminates at the gcd).
int sturm_distinct_real_roots(const RatPoly& p);

/// Number of distinct real roots in the half-open interval (a, b].
int sturm_roots_in(const std::vector<RatPoly>& chain, const Rational& a, const Rational& b);

/// Yun's squarefree decomposition: pairwise coprime squarefree factors with
/// their multiplicities, product over factor^multiplicity = p up to a
/// constant.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p);

/// All real roots with multiplicities, ascending, refined to double
/// precision by exact bisection. Exact rational roots are returned exactly.
std::vector<std::pair<double, int>> real_roots_with_multiplicity(const RatPoly& p);

/// Counts distinct real roots of the polynomial with the given coefficients,
/// leading coefficient first. Throws std::domain_error when the leading
/// coefficient vanishes.
int sturm_real_root_count(const std::vector<double>& coeffs_leading_first);

/// All roots real, counted with multiplicity.
bool is_hyperbolic_exact(const RatPoly& p);

} // namespace hyperstrata

#endif
