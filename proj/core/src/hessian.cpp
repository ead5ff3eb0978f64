#include "hyperstrata/hessian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hyperstrata/polynomial.hpp"

namespace hyperstrata {

namespace {

using LD = long double;

// LU determinant with partial pivoting.
LD det_ld(std::vector<std::vector<LD>> a) {
    const std::size_t m = a.size();
    LD det = 1.0L;
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < m; ++r)
            if ((a[r][col] < 0 ? -a[r][col] : a[r][col]) >
                (a[pivot][col] < 0 ? -a[pivot][col] : a[pivot][col]))
                pivot = r;
        if (a[pivot][col] == 0.0L) return 0.0L;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < m; ++r) {
            LD f = a[r][col] / a[col][col];
            for (std::size_t c2 = col; c2 < m; ++c2) a[r][c2] -= f * a[col][c2];
        }
    }
    return det;
}

} // namespace

HessianCheck hessian_sign(const std::vector<double>& x, const Composition& mu, int s,
                          double tol_grad) {
    const int l = mu.length();
    if (l != s + 1) throw std::domain_error("hessian_sign needs a composition of length s+1");
    if (static_cast<int>(x.size()) != l)
        throw std::domain_error("x must have one coordinate per part of mu");
    for (int j = 0; j + 1 < l; ++j)
        if (x[static_cast<std::size_t>(j)] > x[static_cast<std::size_t>(j) + 1])
            throw std::domain_error("x must be weakly increasing");

    // exactly one repeated adjacent pair
    const double span = std::max(1.0, std::fabs(x.back()) + std::fabs(x.front()));
    const double collide = 1e-9 * span;
    int pair = -1;
    for (int j = 0; j + 1 < l; ++j) {
        if (x[static_cast<std::size_t>(j) + 1] - x[static_cast<std::size_t>(j)] <= collide) {
            if (pair >= 0) throw std::domain_error("x has more than one repeated pair");
            pair = j;
        }
    }
    if (pair < 0) throw std::domain_error("x has no repeated adjacent pair");

    HessianCheck check(mu);
    check.x = x;
    check.repeated_rank_from_top = l - 1 - pair;  // rank among the s distinct values

    // multipliers from grad L = 0: mu_i Q(x_i) = 0 with
    // Q(T) = (s+1) T^s - sum_j a_j j T^(j-1); least squares over the rows.
    std::vector<std::vector<LD>> ata(static_cast<std::size_t>(s),
                                     std::vector<LD>(static_cast<std::size_t>(s), 0.0L));
    std::vector<LD> atb(static_cast<std::size_t>(s), 0.0L);
    LD rhs_scale = 1.0L;
    for (int i = 0; i < l; ++i) {
        std::vector<LD> row(static_cast<std::size_t>(s));
        LD xp = 1.0L;
        for (int j = 1; j <= s; ++j) {
            row[static_cast<std::size_t>(j) - 1] = j * xp;
            xp *= x[static_cast<std::size_t>(i)];
        }
        const LD b = (s + 1) * xp;  // (s+1) x_i^s
        rhs_scale = std::max(rhs_scale, b < 0 ? -b : b);
        for (int r = 0; r < s; ++r) {
            for (int c = 0; c < s; ++c)
                ata[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] +=
                    row[static_cast<std::size_t>(r)] * row[static_cast<std::size_t>(c)];
            atb[static_cast<std::size_t>(r)] += row[static_cast<std::size_t>(r)] * b;
        }
    }
    // reuse the Gaussian solve through a local copy in long double
    std::vector<LD> a_ld;
    {
        // flatten-solve
        std::vector<std::vector<LD>> m = ata;
        std::vector<LD> v = atb;
        // forward elimination
        const std::size_t dim = m.size();
        std::vector<LD> sol(dim, 0.0L);
        for (std::size_t col = 0; col < dim; ++col) {
            std::size_t pivot = col;
            for (std::size_t r = col + 1; r < dim; ++r)
                if ((m[r][col] < 0 ? -m[r][col] : m[r][col]) >
                    (m[pivot][col] < 0 ? -m[pivot][col] : m[pivot][col]))
                    pivot = r;
            if (m[pivot][col] == 0.0L)
                throw std::domain_error("multiplier system is singular");
            std::swap(m[pivot], m[col]);
            std::swap(v[pivot], v[col]);
            for (std::size_t r = col + 1; r < dim; ++r) {
                LD f = m[r][col] / m[col][col];
                for (std::size_t c2 = col; c2 < dim; ++c2) m[r][c2] -= f * m[col][c2];
                v[r] -= f * v[col];
            }
        }
        for (std::size_t r = dim; r-- > 0;) {
            LD acc = v[r];
            for (std::size_t c2 = r + 1; c2 < dim; ++c2) acc -= m[r][c2] * sol[c2];
            sol[r] = acc / m[r][r];
        }
        a_ld = std::move(sol);
    }
    check.multipliers.resize(a_ld.size());
    for (std::size_t i = 0; i < a_ld.size(); ++i)
        check.multipliers[i] = static_cast<double>(a_ld[i]);

    auto q_of = [&](LD t) {
        LD acc = 0.0L, tp = 1.0L;
        for (int j = 1; j <= s; ++j) {
            acc += a_ld[static_cast<std::size_t>(j) - 1] * j * tp;
            tp *= t;
        }
        return (s + 1) * tp - acc;
    };
    auto qprime_of = [&](LD t) {
        LD acc = 0.0L, tp = 1.0L;
        for (int j = 2; j <= s; ++j) {
            acc += a_ld[static_cast<std::size_t>(j) - 1] * j * (j - 1) * tp;
            tp *= t;
        }
        return (s + 1) * s * tp - acc;
    };

    LD grad_res = 0.0L;
    for (int i = 0; i < l; ++i) {
        LD g = mu.part(i) * q_of(x[static_cast<std::size_t>(i)]);
        grad_res = std::max(grad_res, g < 0 ? -g : g);
    }
    check.grad_residual = static_cast<double>(grad_res);
    if (check.grad_residual > tol_grad * static_cast<double>(rhs_scale))
        throw std::domain_error("x is not a constrained critical point: gradient residual " +
                                std::to_string(check.grad_residual));

    // bordered Hessian of L(a, x): zero block, constraint Jacobian
    // m_{i,j} = -i mu_j x_j^{i-1}, and diag(mu_j Q'(x_j)).
    const int dim = 2 * s + 1;
    std::vector<std::vector<LD>> hess(static_cast<std::size_t>(dim),
                                      std::vector<LD>(static_cast<std::size_t>(dim), 0.0L));
    for (int i = 1; i <= s; ++i) {
        for (int j = 0; j < l; ++j) {
            LD xp = 1.0L;
            for (int t = 0; t < i - 1; ++t) xp *= x[static_cast<std::size_t>(j)];
            const LD v = -static_cast<LD>(i) * mu.part(j) * xp;
            hess[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(s + j)] = v;
            hess[static_cast<std::size_t>(s + j)][static_cast<std::size_t>(i) - 1] = v;
        }
    }
    for (int j = 0; j < l; ++j)
        hess[static_cast<std::size_t>(s + j)][static_cast<std::size_t>(s + j)] =
            mu.part(j) * qprime_of(x[static_cast<std::size_t>(j)]);

    check.bordered_hessian.assign(static_cast<std::size_t>(dim),
                                  std::vector<double>(static_cast<std::size_t>(dim), 0.0));
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            check.bordered_hessian[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                static_cast<double>(hess[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);

    LD det = det_ld(std::move(hess));
    if (s % 2 == 1) det = -det;
    check.det_value = static_cast<double>(det);
    check.det_sign = det > 0 ? 1 : (det < 0 ? -1 : 0);
    check.sign_matches_rank =
        (check.det_sign > 0) == (check.repeated_rank_from_top % 2 == 1) && check.det_sign != 0;
    return check;
}

DualityCheck power_elem_duality(const std::vector<double>& x, const std::vector<double>& y,
                                int s, double tol) {
    if (x.size() != y.size()) throw std::domain_error("tuples must have equal length");
    const int n = static_cast<int>(x.size());
    if (s + 1 > n) throw std::domain_error("power_elem_duality needs s+1 <= n");
    const std::vector<int> ones(static_cast<std::size_t>(n), 1);
    std::vector<double> ex = elementary_with_multiplicity(x, ones, s + 1);
    std::vector<double> ey = elementary_with_multiplicity(y, ones, s + 1);
    double scale = 1.0;
    for (int i = 1; i <= s; ++i) {
        scale = std::max(scale, std::fabs(ex[static_cast<std::size_t>(i)]));
        if (std::fabs(ex[static_cast<std::size_t>(i)] - ey[static_cast<std::size_t>(i)]) >
            tol * std::max(1.0, std::fabs(ex[static_cast<std::size_t>(i)])))
            throw std::domain_error("tuples are not on a shared fiber: E_" + std::to_string(i) +
                                    " differs");
    }
    std::vector<double> px = power_sums_with_multiplicity(x, ones, s + 1);
    std::vector<double> py = power_sums_with_multiplicity(y, ones, s + 1);

    DualityCheck check;
    check.p_delta = px[static_cast<std::size_t>(s)] - py[static_cast<std::size_t>(s)];
    const double sign = (s + 1) % 2 == 0 ? 1.0 : -1.0;
    check.e_delta = sign * (ex[static_cast<std::size_t>(s) + 1] - ey[static_cast<std::size_t>(s) + 1]);
    const double atol = tol * scale;
    if (std::fabs(check.p_delta) <= atol && std::fabs(check.e_delta) <= atol) {
        check.tie = true;
        check.holds = true;
    } else {
        check.holds = (check.p_delta > 0 && check.e_delta < 0) ||
                      (check.p_delta < 0 && check.e_delta > 0);
    }
    return check;
}

} // namespace hyperstrata
