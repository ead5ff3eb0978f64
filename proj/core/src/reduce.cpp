#include "hyperstrata/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "hyperstrata/polynomial.hpp"

namespace hyperstrata {

MPoly MPoly::constant(int nvars, const Rational& c) {
    MPoly p;
    p.nvars = nvars;
    if (c != 0) p.terms[std::vector<int>(static_cast<std::size_t>(nvars), 0)] = c;
    return p;
}

MPoly MPoly::variable(int nvars, int index) {
    MPoly p;
    p.nvars = nvars;
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.terms[std::move(e)] = 1;
    return p;
}

void MPoly::prune_zeros() {
    for (auto it = terms.begin(); it != terms.end();)
        it = it->second == 0 ? terms.erase(it) : std::next(it);
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.terms) r.terms[e] += c;
    r.prune_zeros();
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r;
    r.nvars = nvars;
    for (const auto& [ea, ca] : terms) {
        for (const auto& [eb, cb] : o.terms) {
            std::vector<int> e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.terms[std::move(e)] += ca * cb;
        }
    }
    r.prune_zeros();
    return r;
}

MPoly MPoly::pow(int e) const {
    MPoly r = MPoly::constant(nvars, 1);
    MPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

double MPoly::eval(const std::vector<double>& x) const {
    double acc = 0;
    for (const auto& [e, c] : terms) {
        double t = c.get_d();
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        acc += t;
    }
    return acc;
}

std::vector<double> MPoly::gradient(const std::vector<double>& x) const {
    std::vector<double> g(x.size(), 0.0);
    for (const auto& [e, c] : terms) {
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (e[j] == 0) continue;
            double t = c.get_d() * e[j];
            for (std::size_t i = 0; i < e.size(); ++i) {
                int reps = e[i] - (i == j ? 1 : 0);
                for (int k = 0; k < reps; ++k) t *= x[i];
            }
            g[j] += t;
        }
    }
    return g;
}

MPoly elementary_symmetric_pattern(int i, const std::vector<int>& mult) {
    const int l = static_cast<int>(mult.size());
    // coefficients of prod_j (1 + x_j t)^(mult_j) as polynomials in x
    std::vector<MPoly> e(static_cast<std::size_t>(i) + 1, MPoly::constant(l, 0));
    e[0] = MPoly::constant(l, 1);
    for (int j = 0; j < l; ++j) {
        const MPoly xj = MPoly::variable(l, j);
        for (int rep = 0; rep < mult[static_cast<std::size_t>(j)]; ++rep) {
            for (int k = i; k >= 1; --k)
                e[static_cast<std::size_t>(k)] =
                    e[static_cast<std::size_t>(k)] + xj * e[static_cast<std::size_t>(k) - 1];
        }
    }
    return e[static_cast<std::size_t>(i)];
}

namespace {

// Multistart Gauss-Newton on the reduced system; any converged real point is
// a certificate.
std::optional<std::vector<double>> certificate_search(const std::vector<MPoly>& polys, int nvars,
                                                      const ReduceConfig& config, double box,
                                                      double* residual_out) {
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> dist(-box, box);
    const std::size_t k = polys.size();
    for (int attempt = 0; attempt < config.starts; ++attempt) {
        std::vector<double> x(static_cast<std::size_t>(nvars));
        for (double& v : x) v = dist(rng);
        double best = 1e300;
        for (int it = 0; it < config.newton_iters; ++it) {
            std::vector<double> g(k);
            double norm = 0;
            for (std::size_t i = 0; i < k; ++i) {
                g[i] = polys[i].eval(x);
                norm = std::max(norm, std::fabs(g[i]));
            }
            best = std::min(best, norm);
            if (norm <= config.tol) {
                if (residual_out) *residual_out = norm;
                return x;
            }
            // normal equations J^T J d = -J^T g
            std::vector<std::vector<double>> jt(static_cast<std::size_t>(nvars),
                                                std::vector<double>(k));
            for (std::size_t i = 0; i < k; ++i) {
                std::vector<double> gr = polys[i].gradient(x);
                for (int v = 0; v < nvars; ++v) jt[static_cast<std::size_t>(v)][i] = gr[static_cast<std::size_t>(v)];
            }
            std::vector<std::vector<double>> a(static_cast<std::size_t>(nvars),
                                               std::vector<double>(static_cast<std::size_t>(nvars), 0.0));
            std::vector<double> rhs(static_cast<std::size_t>(nvars), 0.0);
            for (int r = 0; r < nvars; ++r) {
                for (int c = 0; c < nvars; ++c)
                    for (std::size_t i = 0; i < k; ++i)
                        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] +=
                            jt[static_cast<std::size_t>(r)][i] * jt[static_cast<std::size_t>(c)][i];
                for (std::size_t i = 0; i < k; ++i)
                    rhs[static_cast<std::size_t>(r)] -= jt[static_cast<std::size_t>(r)][i] * g[i];
            }
            std::vector<double> step;
            if (!solve_linear(a, rhs, step)) break;
            double lambda = 1.0;
            bool moved = false;
            for (int half = 0; half < 8; ++half) {
                std::vector<double> xn = x;
                for (int v = 0; v < nvars; ++v) xn[static_cast<std::size_t>(v)] += lambda * step[static_cast<std::size_t>(v)];
                double nn = 0;
                for (std::size_t i = 0; i < k; ++i)
                    nn = std::max(nn, std::fabs(polys[i].eval(xn)));
                if (nn < norm) {
                    x = std::move(xn);
                    moved = true;
                    break;
                }
                lambda /= 2;
            }
            if (!moved) break;
        }
    }
    return std::nullopt;
}

} // namespace

std::vector<ReducedSystem> reduce_symmetric(const SymbolicSystem& system, int n,
                                            const std::vector<Partition>& patterns,
                                            const ReduceConfig& config) {
    for (const MPoly& p : system.polys)
        if (p.nvars != system.z_count)
            throw std::domain_error("system polynomial has the wrong variable count");
    std::vector<ReducedSystem> out;
    for (const Partition& q : patterns) {
        if (q.n() != n)
            throw std::domain_error("pattern does not sum to n");
        const int l = q.length();
        // E_1^q,...,E_s^q once per pattern
        std::vector<MPoly> basis;
        basis.reserve(static_cast<std::size_t>(system.z_count));
        for (int i = 1; i <= system.z_count; ++i)
            basis.push_back(elementary_symmetric_pattern(i, q.parts()));

        ReducedSystem red{q, {}, std::nullopt, 0.0};
        for (const MPoly& g : system.polys) {
            MPoly composed = MPoly::constant(l, 0);
            for (const auto& [e, c] : g.terms) {
                MPoly term = MPoly::constant(l, c);
                for (int zi = 0; zi < system.z_count; ++zi)
                    if (e[static_cast<std::size_t>(zi)] > 0)
                        term = term * basis[static_cast<std::size_t>(zi)].pow(e[static_cast<std::size_t>(zi)]);
                composed = composed + term;
            }
            red.polys.push_back(std::move(composed));
        }
        if (config.solve) {
            const double box = config.box > 0 ? config.box : n + 2.0;
            double residual = 0.0;
            red.certificate = certificate_search(red.polys, l, config, box, &residual);
            red.certificate_residual = red.certificate ? residual : 0.0;
        }
        out.push_back(std::move(red));
    }
    return out;
}

} // namespace hyperstrata
