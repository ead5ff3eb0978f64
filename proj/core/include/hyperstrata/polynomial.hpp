#ifndef HYPERSTRATA_POLYNOMIAL_HPP
#define HYPERSTRATA_POLYNOMIAL_HPP

#include <optional>
#include <vector>

namespace hyperstrata {

/// Monic real polynomial T^n + H_1 T^(n-1) + ... + H_n, stored as
/// (H_1,...,H_n). The root multiset, when present, is ascending with
/// multiplicity and reproduces the coefficients under expansion.
struct HyperbolicPoly {
    int n = 0;
    std::vector<double> coeffs;
    std::optional<std::vector<double>> roots;

    static HyperbolicPoly from_roots(std::vector<double> roots);
    // Validates hyperbolicity through the exact Sturm gate.
    static HyperbolicPoly from_coeffs(std::vector<double> coeffs);

    // Computes the root multiset if absent (exact isolation + refinement).
    const std::vector<double>& ensure_roots();
    double coefficient(int i) const { return coeffs[static_cast<std::size_t>(i) - 1]; }
};

/// (H_1,...,H_n) of the monic polynomial with the given roots.
std::vector<double> coeffs_from_roots(const std::vector<double>& roots);

/// Exact hyperbolicity gate on (H_1,...,H_n).
bool is_hyperbolic(const std::vector<double>& coeffs);

/// Elementary symmetric values E_1..E_count of the multiset that repeats
/// x[j] with multiplicity mult[j].
template <typename Real>
std::vector<Real> elementary_with_multiplicity(const std::vector<Real>& x,
                                               const std::vector<int>& mult, int count);

/// Jacobian d E_i / d x_j (rows i = 1..count, columns j).
std::vector<std::vector<double>> elementary_jacobian(const std::vector<double>& x,
                                                     const std::vector<int>& mult, int count);

/// Power sums P_1..P_count of the same multiset.
std::vector<double> power_sums_with_multiplicity(const std::vector<double>& x,
                                                 const std::vector<int>& mult, int count);

/// Solves A y = b by Gaussian elimination with partial pivoting; returns
/// false when the matrix is numerically singular.
bool solve_linear(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>& y);

} // namespace hyperstrata

#endif
