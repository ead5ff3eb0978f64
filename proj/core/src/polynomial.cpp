#include "hyperstrata/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hyperstrata/exact.hpp"

namespace hyperstrata {

std::vector<double> coeffs_from_roots(const std::vector<double>& roots) {
    // expand prod (T - r): ascending accumulation, then read off descending
    std::vector<double> c{1.0};
    for (double r : roots) {
        c.push_back(0.0);
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
        c[0] *= -r;
    }
    // c[i] is the coefficient of T^i with c[n] = 1; H_k = c[n-k]
    std::vector<double> h(roots.size());
    for (std::size_t k = 1; k <= roots.size(); ++k) h[k - 1] = c[roots.size() - k];
    return h;
}

namespace {

RatPoly ascending_from_monic(const std::vector<double>& coeffs) {
    std::vector<double> ascending(coeffs.rbegin(), coeffs.rend());
    ascending.push_back(1.0);
    return ratpoly_from_doubles(ascending);
}

} // namespace

bool is_hyperbolic(const std::vector<double>& coeffs) {
    if (coeffs.empty()) return true;
    return is_hyperbolic_exact(ascending_from_monic(coeffs));
}

HyperbolicPoly HyperbolicPoly::from_roots(std::vector<double> roots) {
    for (double r : roots)
        if (!std::isfinite(r)) throw std::domain_error("roots must be finite");
    std::sort(roots.begin(), roots.end());
    HyperbolicPoly p;
    p.n = static_cast<int>(roots.size());
    p.coeffs = coeffs_from_roots(roots);
    p.roots = std::move(roots);
    return p;
}

HyperbolicPoly HyperbolicPoly::from_coeffs(std::vector<double> coeffs) {
    HyperbolicPoly p;
    p.n = static_cast<int>(coeffs.size());
    p.coeffs = std::move(coeffs);
    if (!is_hyperbolic(p.coeffs))
        throw std::domain_error("polynomial is not hyperbolic (complex roots detected)");
    return p;
}

const std::vector<double>& HyperbolicPoly::ensure_roots() {
    if (!roots) {
        std::vector<double> rs;
        for (const auto& [r, mult] : real_roots_with_multiplicity(ascending_from_monic(coeffs)))
            for (int k = 0; k < mult; ++k) rs.push_back(r);
        if (static_cast<int>(rs.size()) != n)
            throw std::domain_error("polynomial is not hyperbolic: only " +
                                    std::to_string(rs.size()) + " of " + std::to_string(n) +
                                    " roots are real");
        roots = std::move(rs);
    }
    return *roots;
}

template <typename Real>
std::vector<Real> elementary_with_multiplicity(const std::vector<Real>& x,
                                               const std::vector<int>& mult, int count) {
    // coefficients of prod_j (1 + x_j t)^(mult_j) up to t^count
    std::vector<Real> e(static_cast<std::size_t>(count) + 1, Real(0));
    e[0] = Real(1);
    int filled = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        for (int rep = 0; rep < mult[j]; ++rep) {
            int top = std::min(count, ++filled);
            for (int i = top; i >= 1; --i)
                e[static_cast<std::size_t>(i)] += x[j] * e[static_cast<std::size_t>(i) - 1];
        }
    }
    return e;  // e[i] = E_i, e[0] = 1
}

template std::vector<double> elementary_with_multiplicity<double>(const std::vector<double>&,
                                                                  const std::vector<int>&, int);
template std::vector<long double> elementary_with_multiplicity<long double>(
    const std::vector<long double>&, const std::vector<int>&, int);

std::vector<std::vector<double>> elementary_jacobian(const std::vector<double>& x,
                                                     const std::vector<int>& mult, int count) {
    const std::size_t l = x.size();
    std::vector<double> full = elementary_with_multiplicity(x, mult, count);
    std::vector<std::vector<double>> jac(static_cast<std::size_t>(count),
                                         std::vector<double>(l, 0.0));
    for (std::size_t j = 0; j < l; ++j) {
        // q = full / (1 + x_j t) truncated at t^(count-1); d E_i / d x_j =
        // mult_j * q_{i-1}
        std::vector<double> q(static_cast<std::size_t>(count), 0.0);
        double prev = 0.0;
        for (int i = 0; i < count; ++i) {
            double qi = full[static_cast<std::size_t>(i)] - x[j] * prev;
            q[static_cast<std::size_t>(i)] = qi;
            prev = qi;
        }
        for (int i = 1; i <= count; ++i)
            jac[static_cast<std::size_t>(i) - 1][j] =
                mult[j] * q[static_cast<std::size_t>(i) - 1];
    }
    return jac;
}

std::vector<double> power_sums_with_multiplicity(const std::vector<double>& x,
                                                 const std::vector<int>& mult, int count) {
    std::vector<double> p(static_cast<std::size_t>(count), 0.0);
    for (std::size_t j = 0; j < x.size(); ++j) {
        double xp = 1.0;
        for (int i = 1; i <= count; ++i) {
            xp *= x[j];
            p[static_cast<std::size_t>(i) - 1] += mult[j] * xp;
        }
    }
    return p;
}

bool solve_linear(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>& y) {
    const std::size_t m = a.size();
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < m; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
        if (std::fabs(a[pivot][col]) < 1e-300) return false;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = col + 1; r < m; ++r) {
            double f = a[r][col] / a[col][col];
            for (std::size_t c2 = col; c2 < m; ++c2) a[r][c2] -= f * a[col][c2];
            b[r] -= f * b[col];
        }
    }
    y.assign(m, 0.0);
    for (std::size_t r = m; r-- > 0;) {
        double acc = b[r];
        for (std::size_t c2 = r + 1; c2 < m; ++c2) acc -= a[r][c2] * y[c2];
        y[r] = acc / a[r][r];
    }
    return true;
}

} // namespace hyperstrata
