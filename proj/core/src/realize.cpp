#include "hyperstrata/realize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "hyperstrata/poset.hpp"

namespace hyperstrata {

namespace {

using LD = long double;

std::vector<LD> elementary_ld(const std::vector<LD>& x, const std::vector<int>& mult,
                              int count) {
    return elementary_with_multiplicity<LD>(x, mult, count);
}

// d E_i / d x_j for the multiset, long double throughout:
// mult_j times the (i-1)-st coefficient of prod/(1 + x_j t).
std::vector<std::vector<LD>> jacobian_ld(const std::vector<LD>& x, const std::vector<int>& mult,
                                         int count) {
    const std::size_t l = x.size();
    std::vector<LD> full = elementary_ld(x, mult, count);
    std::vector<std::vector<LD>> jac(static_cast<std::size_t>(count), std::vector<LD>(l, 0.0L));
    std::vector<LD> q(static_cast<std::size_t>(count), 0.0L);
    for (std::size_t j = 0; j < l; ++j) {
        LD prev = 0.0L;
        for (int i = 0; i < count; ++i) {
            q[static_cast<std::size_t>(i)] = full[static_cast<std::size_t>(i)] - x[j] * prev;
            prev = q[static_cast<std::size_t>(i)];
        }
        for (int i = 1; i <= count; ++i)
            jac[static_cast<std::size_t>(i) - 1][j] = mult[j] * q[static_cast<std::size_t>(i) - 1];
    }
    return jac;
}

bool solve_linear_ld(std::vector<std::vector<LD>> a, std::vector<LD> b, std::vector<LD>& y) {
    const std::size_t m = a.size();
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < m; ++r)
            if (std::fabs(static_cast<double>(a[r][col])) >
                std::fabs(static_cast<double>(a[pivot][col])))
                pivot = r;
        if (a[pivot][col] == 0.0L) return false;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = col + 1; r < m; ++r) {
            LD f = a[r][col] / a[col][col];
            for (std::size_t c2 = col; c2 < m; ++c2) a[r][c2] -= f * a[col][c2];
            b[r] -= f * b[col];
        }
    }
    y.assign(m, 0.0L);
    for (std::size_t r = m; r-- > 0;) {
        LD acc = b[r];
        for (std::size_t c2 = r + 1; c2 < m; ++c2) acc -= a[r][c2] * y[c2];
        y[r] = acc / a[r][r];
    }
    return true;
}

struct MuSystem {
    std::vector<int> mult;
    int s = 0;
    std::vector<LD> target;  // E_i targets, i = 1..s
    LD scale = 1.0L;

    std::vector<LD> residuals(const std::vector<LD>& x) const {
        std::vector<LD> e = elementary_ld(x, mult, s);
        std::vector<LD> g(static_cast<std::size_t>(s));
        for (int i = 1; i <= s; ++i)
            g[static_cast<std::size_t>(i) - 1] =
                e[static_cast<std::size_t>(i)] - target[static_cast<std::size_t>(i) - 1];
        return g;
    }
};

LD inf_norm(const std::vector<LD>& v) {
    LD m = 0;
    for (LD x : v) m = std::max(m, x < 0 ? -x : x);
    return m;
}

// Damped (Gauss-)Newton; least squares when the composition is shorter than
// the number of equations. Returns the final residual norm.
bool newton_ld(const MuSystem& sys, std::vector<LD>& x, int iters, LD target_norm) {
    const std::size_t l = x.size();
    std::vector<LD> g = sys.residuals(x);
    LD gn = inf_norm(g);
    for (int it = 0; it < iters; ++it) {
        if (gn <= target_norm) return true;
        std::vector<std::vector<LD>> jac = jacobian_ld(x, sys.mult, sys.s);
        std::vector<std::vector<LD>> a;
        std::vector<LD> rhs;
        if (l == static_cast<std::size_t>(sys.s)) {
            a = jac;
            rhs.assign(g.begin(), g.end());
            for (LD& v : rhs) v = -v;
        } else {
            // normal equations J^T J d = -J^T g
            a.assign(l, std::vector<LD>(l, 0.0L));
            rhs.assign(l, 0.0L);
            for (std::size_t r = 0; r < l; ++r) {
                for (std::size_t c = 0; c < l; ++c)
                    for (int i = 0; i < sys.s; ++i)
                        a[r][c] += jac[static_cast<std::size_t>(i)][r] *
                                   jac[static_cast<std::size_t>(i)][c];
                for (int i = 0; i < sys.s; ++i)
                    rhs[r] -= jac[static_cast<std::size_t>(i)][r] * g[static_cast<std::size_t>(i)];
            }
        }
        std::vector<LD> step;
        if (!solve_linear_ld(std::move(a), std::move(rhs), step)) return false;
        LD lambda = 1.0L;
        bool improved = false;
        for (int half = 0; half < 6; ++half) {
            std::vector<LD> xn(l);
            for (std::size_t j = 0; j < l; ++j) xn[j] = x[j] + lambda * step[j];
            std::vector<LD> gnew = sys.residuals(xn);
            LD nn = inf_norm(gnew);
            if (nn < gn) {
                x = std::move(xn);
                g = std::move(gnew);
                gn = nn;
                improved = true;
                break;
            }
            lambda /= 2;
        }
        if (!improved) return gn <= target_norm;
    }
    return gn <= target_norm;
}

std::vector<double> to_double(const std::vector<LD>& x) {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = static_cast<double>(x[i]);
    return out;
}

std::vector<LD> to_ld(const std::vector<double>& x) {
    std::vector<LD> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i];
    return out;
}

// Residual of the stored (double) point, measured in extended precision.
double residual_at(const MuSystem& sys, const std::vector<double>& x) {
    return static_cast<double>(inf_norm(sys.residuals(to_ld(x))));
}

// (H_{s+1},...,H_n) of prod (T - x_j)^(mult_j), extended precision.
std::vector<double> tail_coefficients(const std::vector<double>& x, const std::vector<int>& mult,
                                      int n, int s) {
    std::vector<LD> c{1.0L};
    for (std::size_t j = 0; j < x.size(); ++j)
        for (int rep = 0; rep < mult[j]; ++rep) {
            c.push_back(0.0L);
            for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - x[j] * c[i];
            c[0] *= -static_cast<LD>(x[j]);
        }
    std::vector<double> tail;
    for (int k = s + 1; k <= n; ++k)
        tail.push_back(static_cast<double>(c[static_cast<std::size_t>(n - k)]));
    return tail;
}

MuSystem make_system(const HyperbolicPoly& f, int s, const std::vector<int>& mult) {
    MuSystem sys;
    sys.mult = mult;
    sys.s = s;
    sys.target.resize(static_cast<std::size_t>(s));
    LD scale = 1.0L;
    for (int i = 1; i <= s; ++i) {
        LD t = (i % 2 == 0 ? 1.0L : -1.0L) * static_cast<LD>(f.coeffs[static_cast<std::size_t>(i) - 1]);
        sys.target[static_cast<std::size_t>(i) - 1] = t;
        scale = std::max(scale, t < 0 ? -t : t);
    }
    sys.scale = scale;
    return sys;
}

struct Classified {
    Composition label;
    std::vector<double> x;
    bool degenerate = false;
    bool usable = false;
};

Classified classify_solution(const std::vector<double>& x, const Composition& mu,
                             double tol_sep) {
    Classified out{mu, x, false, false};
    for (std::size_t j = 0; j + 1 < x.size(); ++j)
        if (x[j + 1] < x[j] - tol_sep) return out;  // out of the chamber
    bool collision = false;
    for (std::size_t j = 0; j + 1 < x.size(); ++j)
        if (x[j + 1] - x[j] <= tol_sep) collision = true;
    if (!collision) {
        out.usable = true;
        return out;
    }
    // merge colliding neighbours: weighted means, summed multiplicities
    std::vector<int> merged_mult;
    std::vector<double> merged_x;
    double acc = x[0] * mu.part(0);
    int weight = mu.part(0);
    for (std::size_t j = 1; j < x.size(); ++j) {
        if (x[j] - x[j - 1] <= tol_sep) {
            acc += x[j] * mu.part(static_cast<int>(j));
            weight += mu.part(static_cast<int>(j));
        } else {
            merged_x.push_back(acc / weight);
            merged_mult.push_back(weight);
            acc = x[j] * mu.part(static_cast<int>(j));
            weight = mu.part(static_cast<int>(j));
        }
    }
    merged_x.push_back(acc / weight);
    merged_mult.push_back(weight);
    out.label = Composition(merged_mult);
    out.x = std::move(merged_x);
    out.degenerate = true;
    out.usable = true;
    return out;
}

} // namespace

std::vector<VertexSolution> solve_vertices(const HyperbolicPoly& f, int s, const Composition& mu,
                                           const SolveConfig& config) {
    if (s < 1 || s > f.n) throw std::domain_error("solve_vertices needs 1 <= s <= n");
    if (mu.n() != f.n) throw std::domain_error("composition does not sum to the degree");
    if (mu.length() > s)
        throw std::domain_error("stratum " + std::to_string(mu.length()) + " > s = " +
                                std::to_string(s) + " has positive dimension, not vertices");
    HyperbolicPoly poly = f;
    const std::vector<double>& roots = poly.ensure_roots();
    const int l = mu.length();
    MuSystem sys = make_system(poly, s, mu.parts());
    const LD converge_norm = 1e-14L * sys.scale;
    const double accept = config.tol_sys * static_cast<double>(sys.scale);

    double lo = roots.front(), hi = roots.back();
    if (hi - lo < 1.0) {
        lo -= 1.0;
        hi += 1.0;
    }

    std::vector<std::vector<LD>> starts;
    // consecutive clustering of the roots into blocks of sizes mu
    {
        std::vector<LD> seed;
        std::size_t pos = 0;
        for (int j = 0; j < l; ++j) {
            LD acc = 0;
            for (int r = 0; r < mu.part(j); ++r) acc += roots[pos++];
            seed.push_back(acc / mu.part(j));
        }
        starts.push_back(std::move(seed));
    }
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> dist(lo - 0.5, hi + 0.5);
    const int random_starts = config.random_starts_per_s * s;
    for (int k = 0; k < random_starts; ++k) {
        std::vector<LD> seed(static_cast<std::size_t>(l));
        for (LD& v : seed) v = dist(rng);
        std::sort(seed.begin(), seed.end());
        starts.push_back(std::move(seed));
    }

    std::vector<VertexSolution> found;
    auto duplicate = [&](const Composition& label, const std::vector<double>& x) {
        for (const VertexSolution& v : found) {
            if (v.label != label) continue;
            double d = 0;
            for (std::size_t j = 0; j < x.size(); ++j)
                d = std::max(d, std::fabs(v.x[j] - x[j]));
            if (d <= std::max(1e-8 * (std::fabs(hi) + std::fabs(lo) + 1.0), 10 * config.tol_sep))
                return true;
        }
        return false;
    };

    for (std::vector<LD>& x : starts) {
        if (!newton_ld(sys, x, config.newton_iters, converge_norm)) continue;
        Classified cls = classify_solution(to_double(x), mu, config.tol_sep);
        if (!cls.usable) continue;
        if (cls.degenerate) {
            // re-polish the merged configuration against all s equations
            MuSystem merged = make_system(poly, s, cls.label.parts());
            std::vector<LD> mx = to_ld(cls.x);
            newton_ld(merged, mx, config.newton_iters, converge_norm);
            cls.x = to_double(mx);
            double res = residual_at(merged, cls.x);
            if (res > accept) continue;
            if (duplicate(cls.label, cls.x)) continue;
            found.push_back(VertexSolution{cls.label, mu, cls.x,
                                           tail_coefficients(cls.x, cls.label.parts(), f.n, s),
                                           res, true});
        } else {
            double res = residual_at(sys, cls.x);
            if (res > accept) continue;
            if (duplicate(cls.label, cls.x)) continue;
            // a composition shorter than s is a degenerate stratum even when
            // its own coordinates are distinct
            found.push_back(VertexSolution{cls.label, mu, cls.x,
                                           tail_coefficients(cls.x, mu.parts(), f.n, s), res,
                                           mu.length() < s});
        }
    }
    std::sort(found.begin(), found.end(), [](const VertexSolution& a, const VertexSolution& b) {
        if (a.label != b.label) return a.label < b.label;
        return a.x < b.x;
    });
    return found;
}

namespace {

SliceRealization realize_once(const HyperbolicPoly& f_in, int s, const SolveConfig& config,
                              const std::set<Composition>* allowed, bool* aborted) {
    HyperbolicPoly f = f_in;
    f.ensure_roots();  // once, shared by every per-composition solve
    SliceRealization r;
    r.f = f;
    r.s = s;
    std::vector<Composition> all = enumerate_compositions(f.n, s);
    std::vector<std::vector<VertexSolution>> per_mu(all.size());
    std::atomic<bool> abort_flag{false};

    auto work = [&](std::size_t idx) {
        if (abort_flag.load()) return;
        SolveConfig local = config;
        local.seed = config.seed * 0x9e3779b97f4a7c15ULL + idx + 1;
        per_mu[idx] = solve_vertices(f, s, all[idx], local);
        if (allowed) {
            for (const VertexSolution& v : per_mu[idx]) {
                if (v.degenerate || !allowed->count(v.label)) {
                    abort_flag.store(true);
                    return;
                }
            }
        }
    };

    const int jobs = std::max(1, config.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < all.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < all.size(); i = next.fetch_add(1))
                    work(i);
            });
        for (std::thread& th : pool) th.join();
    }
    if (aborted) *aborted = abort_flag.load();

    for (std::size_t i = 0; i < all.size(); ++i) {
        for (VertexSolution& v : per_mu[i]) {
            if (v.degenerate) {
                bool dup = false;
                for (const VertexSolution& d : r.degenerate) {
                    if (d.label != v.label) continue;
                    double dist = 0;
                    for (std::size_t j = 0; j < d.x.size(); ++j)
                        dist = std::max(dist, std::fabs(d.x[j] - v.x[j]));
                    if (dist <= 10 * config.tol_sep) dup = true;
                }
                if (!dup) r.degenerate.push_back(v);
            } else {
                r.vertices[v.label].push_back(v);
            }
        }
    }
    for (const auto& [label, list] : r.vertices) r.realized_facets.push_back(label);
    std::sort(r.realized_facets.begin(), r.realized_facets.end());
    r.generic = r.degenerate.empty();
    return r;
}

} // namespace

SliceRealization realize_slice(const HyperbolicPoly& f, int s, const SolveConfig& config) {
    if (s < 1 || s > f.n) throw std::domain_error("realize_slice needs 1 <= s <= n");
    SolveConfig attempt = config;
    SliceRealization r;
    for (int round = 0; round <= config.escalations; ++round) {
        r = realize_once(f, s, attempt, nullptr, nullptr);
        r.escalations_used = round;
        if (!r.generic) {
            r.complete = true;
            return r;
        }
        // the endpoint axioms only constrain s >= 2 (at s = 1 the slice is a
        // simplex with no minimal polynomial)
        if (!r.realized_facets.empty() &&
            (s < 2 || is_potential(r.realized_facets, f.n, s).potential)) {
            r.complete = true;
            return r;
        }
        attempt.random_starts_per_s *= 4;
    }
    r.complete = false;
    return r;
}

MinMaxReport verify_min_max(const SliceRealization& r) {
    MinMaxReport rep;
    if (r.s < 2) {
        rep.skipped = true;
        rep.ok = true;
        return rep;
    }
    if (!r.generic || !r.complete) {
        rep.violations.push_back("realization is not generic/complete");
        return rep;
    }
    StrataPoset poset = build_poset(r.realized_facets, r.f.n, r.s);
    annotate_min_max(poset);

    // The first free coefficient H_{s+1} of each vertex polynomial.
    std::vector<double> coeff(poset.facets.size(), 0.0);
    for (std::size_t i = 0; i < poset.facets.size(); ++i) {
        auto it = r.vertices.find(poset.facets[i]);
        if (it == r.vertices.end() || it->second.empty()) {
            rep.violations.push_back("facet without a solved vertex");
            return rep;
        }
        if (it->second.size() > 1)
            rep.violations.push_back("facet with several distinct vertices (theory forbids)");
        coeff[i] = it->second.front().tail_coeffs.front();
    }

    rep.extremes_ok = true;
    {
        std::size_t lo = 0, hi = 0;
        for (std::size_t i = 1; i < coeff.size(); ++i) {
            if (coeff[i] < coeff[lo]) lo = i;
            if (coeff[i] > coeff[hi]) hi = i;
        }
        if (!is_alternate_odd(poset.facets[lo])) {
            rep.extremes_ok = false;
            rep.violations.push_back("vertex with minimal coefficient is not alternate odd");
        }
        if (!is_alternate_even(poset.facets[hi])) {
            rep.extremes_ok = false;
            rep.violations.push_back("vertex with maximal coefficient is not alternate even");
        }
    }

    rep.edges_ok = true;
    rep.linear_extension_ok = true;
    if (poset.levels.size() > 1) {
        for (std::size_t i = 0; i < poset.levels[1].size(); ++i) {
            const auto& a = poset.annotations[1][i];
            if (a.mu_min < 0 || a.mu_max < 0) {
                rep.edges_ok = false;
                rep.violations.push_back("one-dimensional stratum without unique endpoints");
                continue;
            }
            if (a.mu_min == a.mu_max) continue;
            const double cmin = coeff[static_cast<std::size_t>(a.mu_min)];
            const double cmax = coeff[static_cast<std::size_t>(a.mu_max)];
            if (!(cmin < cmax)) {
                rep.edges_ok = false;
                rep.linear_extension_ok = false;
                rep.violations.push_back("mu_min does not have the smaller coefficient on a "
                                         "one-dimensional stratum");
            }
        }
    }
    rep.ok = rep.extremes_ok && rep.edges_ok && rep.linear_extension_ok && rep.violations.empty();
    return rep;
}

namespace {

std::set<Composition> as_set(const std::vector<Composition>& v) {
    return std::set<Composition>(v.begin(), v.end());
}

// Facet set of a quick scan, or nullopt when the scan aborted on a facet
// outside the allowed set (or found a degeneracy).
std::optional<std::vector<Composition>> scan_facets(const HyperbolicPoly& f, int s,
                                                    const SolveConfig& config,
                                                    const std::set<Composition>& allowed) {
    bool aborted = false;
    SliceRealization r = realize_once(f, s, config, &allowed, &aborted);
    if (aborted || !r.degenerate.empty()) return std::nullopt;
    return r.realized_facets;
}

} // namespace

RandomRealizeResult random_realize(const std::vector<Composition>& target, int n, int s,
                                   const RandomRealizeConfig& config) {
    PotentialCheck pc = is_potential(target, n, s);
    if (!pc.potential)
        throw std::domain_error("random_realize target is not a potential facet set: " +
                                pc.reason);
    RandomRealizeResult result;
    const std::set<Composition> want = as_set(target);
    // negating every root reverses all realized compositions, so a
    // realization of the reversed target converts into a witness
    std::set<Composition> want_reversed;
    for (const Composition& mu : target) want_reversed.insert(mu.reversed());
    const int range = config.root_range > 0 ? config.root_range : 3 * n;

    SolveConfig quick = config.solve;
    quick.random_starts_per_s = std::max(40, config.solve.random_starts_per_s / 4);
    quick.escalations = 0;

    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<int> root_dist(-range, range);

    auto mismatch = [&](const std::vector<Composition>& got) {
        std::size_t miss = 0;
        for (const Composition& c : target)
            if (!std::count(got.begin(), got.end(), c)) ++miss;
        std::size_t extra = 0;
        for (const Composition& c : got)
            if (!want.count(c)) ++extra;
        return miss + extra;
    };

    auto confirm = [&](const std::vector<double>& roots) -> std::optional<HyperbolicPoly> {
        HyperbolicPoly f = HyperbolicPoly::from_roots(roots);
        SliceRealization full = realize_slice(f, s, config.solve);
        if (full.generic && full.complete && as_set(full.realized_facets) == want) return f;
        return std::nullopt;
    };

    auto sample_roots = [&]() {
        std::set<int> chosen;
        while (static_cast<int>(chosen.size()) < n) chosen.insert(root_dist(rng));
        return std::vector<double>(chosen.begin(), chosen.end());
    };

    const std::size_t bad = target.size() + 1;
    auto negated = [](const std::vector<double>& roots) {
        std::vector<double> neg;
        for (double r : roots) neg.push_back(-r);
        std::sort(neg.begin(), neg.end());
        return neg;
    };
    auto objective = [&](const std::vector<double>& roots, const SolveConfig& q) {
        HyperbolicPoly fc = HyperbolicPoly::from_roots(roots);
        SliceRealization sc = realize_once(fc, s, q, nullptr, nullptr);
        return sc.degenerate.empty() ? mismatch(sc.realized_facets) : bad;
    };

    for (long long attempt = 0; attempt < config.budget; ++attempt) {
        result.tried += 1;
        std::vector<double> roots = sample_roots();
        HyperbolicPoly f = HyperbolicPoly::from_roots(roots);
        SolveConfig q = quick;
        q.seed = config.seed + 7919 * static_cast<std::uint64_t>(attempt);
        auto quick_facets = scan_facets(f, s, q, want);
        std::size_t obj;
        if (quick_facets) {
            // no facet fell outside the target, so only omissions remain
            obj = mismatch(*quick_facets);
        } else {
            SliceRealization free_scan = realize_once(f, s, q, nullptr, nullptr);
            if (free_scan.degenerate.empty() &&
                as_set(free_scan.realized_facets) == want_reversed) {
                if (auto witness = confirm(negated(roots))) {
                    result.witness = std::move(witness);
                    return result;
                }
            }
            obj = free_scan.degenerate.empty() ? mismatch(free_scan.realized_facets) : bad;
        }
        if (obj == 0) {
            if (auto witness = confirm(roots)) {
                result.witness = std::move(witness);
                return result;
            }
            continue;
        }
        if (obj > 2) continue;
        // coordinate-wise moves of shrinking step, bounded by an evaluation cap
        std::vector<double> best = roots;
        int evals_left = 40 * config.hill_climb_rounds;
        for (double step : {2.0, 1.0, 0.5, 0.25}) {
            bool improved = true;
            while (improved && obj > 0 && evals_left > 0) {
                improved = false;
                for (std::size_t j = 0; j < best.size() && obj > 0 && evals_left > 0; ++j) {
                    for (double dir : {+1.0, -1.0}) {
                        std::vector<double> cand = best;
                        cand[j] += dir * step;
                        std::sort(cand.begin(), cand.end());
                        bool distinct = true;
                        for (std::size_t t = 0; t + 1 < cand.size(); ++t)
                            if (cand[t + 1] - cand[t] < 1e-3) distinct = false;
                        if (!distinct) continue;
                        --evals_left;
                        std::size_t o = objective(cand, q);
                        if (o < obj) {
                            obj = o;
                            best = cand;
                            improved = true;
                            break;
                        }
                    }
                }
            }
        }
        if (obj == 0) {
            if (auto witness = confirm(best)) {
                result.witness = std::move(witness);
                return result;
            }
        }
    }
    return result;
}

} // namespace hyperstrata
