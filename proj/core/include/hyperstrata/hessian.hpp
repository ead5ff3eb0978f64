#ifndef HYPERSTRATA_HESSIAN_HPP
#define HYPERSTRATA_HESSIAN_HPP

#include <vector>

#include "hyperstrata/composition.hpp"

namespace hyperstrata {

/// Constrained second-order data at a one-dimensional-stratum endpoint:
/// x is an (s+1)-tuple with exactly one repeated adjacent pair, mu the
/// stratum composition, and the multipliers solve grad L = 0 for
/// L = P_{s+1}^mu - sum a_i P_i^mu.
///
/// The sign of (-1)^s det(HL(x)) classifies the endpoint: positive exactly
/// when the repeated value is the largest, third-largest, ... distinct
/// coordinate (odd rank from the top), which is the maximal endpoint, whose
/// quotient is alternate even. Negative at even ranks: the minimal,
/// alternate-odd endpoint.
struct HessianCheck {
    explicit HessianCheck(Composition stratum) : mu(std::move(stratum)) {}

    std::vector<double> x;
    Composition mu;
    std::vector<double> multipliers;
    double grad_residual = 0.0;
    double det_value = 0.0;  // (-1)^s det(HL(x))
    int det_sign = 0;
    int repeated_rank_from_top = 0;  // 1-based among distinct values
    bool sign_matches_rank = false;  // det_sign > 0 <=> odd rank
    std::vector<std::vector<double>> bordered_hessian;  // (2s+1) x (2s+1)
};

HessianCheck hessian_sign(const std::vector<double>& x, const Composition& mu, int s,
                          double tol_grad = 1e-7);

struct DualityCheck {
    bool holds = false;
    bool tie = false;  // both orderings are equalities
    double p_delta = 0.0;
    double e_delta = 0.0;  // signed (-1)^(s+1) (E_{s+1}(x) - E_{s+1}(y))
};

/// On a shared fiber (E_1..E_s agree), P_{s+1} increases exactly when
/// (-1)^(s+1) E_{s+1} decreases. Comparison of orderings, not values.
DualityCheck power_elem_duality(const std::vector<double>& x, const std::vector<double>& y,
                                int s, double tol = 1e-7);

} // namespace hyperstrata

#endif
