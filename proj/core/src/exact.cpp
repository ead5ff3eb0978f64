#include "hyperstrata/exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hyperstrata {

RatPoly ratpoly_from_doubles(const std::vector<double>& ascending) {
    RatPoly p;
    p.reserve(ascending.size());
    for (double c : ascending) {
        if (!std::isfinite(c))
            throw std::domain_error("polynomial coefficients must be finite");
        p.emplace_back(c);
    }
    return rp_trim(std::move(p));
}

RatPoly rp_trim(RatPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int rp_degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly rp_derivative(const RatPoly& p) {
    RatPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    return rp_trim(std::move(d));
}

Rational rp_eval(const RatPoly& p, const Rational& t) {
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
    return acc;
}

std::pair<RatPoly, RatPoly> rp_divmod(const RatPoly& num, const RatPoly& den) {
    if (den.empty()) throw std::domain_error("polynomial division by zero");
    RatPoly rem = num;
    RatPoly quo;
    const int dd = rp_degree(den);
    if (rp_degree(rem) >= dd) quo.assign(static_cast<std::size_t>(rp_degree(rem) - dd) + 1, Rational(0));
    while (rp_degree(rem) >= dd) {
        const int k = rp_degree(rem) - dd;
        Rational c = rem.back() / den.back();
        quo[static_cast<std::size_t>(k)] = c;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<std::size_t>(i + k)] -= c * den[static_cast<std::size_t>(i)];
        rem = rp_trim(std::move(rem));
    }
    return {rp_trim(std::move(quo)), std::move(rem)};
}

RatPoly rp_gcd(RatPoly a, RatPoly b) {
    a = rp_trim(std::move(a));
    b = rp_trim(std::move(b));
    while (!b.empty()) {
        RatPoly r = rp_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        Rational lead = a.back();
        for (Rational& c : a) c /= lead;
    }
    return a;
}

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain;
    chain.push_back(rp_trim(p));
    if (chain.back().empty()) return chain;
    chain.push_back(rp_derivative(chain.back()));
    while (!chain.back().empty() && rp_degree(chain.back()) > 0) {
        RatPoly r = rp_divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.empty()) break;
        for (Rational& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

namespace {

int sign_of(const Rational& r) { return sgn(r); }

int variations(const std::vector<int>& signs) {
    int v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int variations_at_infinity(const std::vector<RatPoly>& chain, bool positive) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const RatPoly& q : chain) {
        if (q.empty()) {
            signs.push_back(0);
            continue;
        }
        int s = sign_of(q.back());
        if (!positive && rp_degree(q) % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return variations(signs);
}

int variations_at(const std::vector<RatPoly>& chain, const Rational& t) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const RatPoly& q : chain) signs.push_back(q.empty() ? 0 : sign_of(rp_eval(q, t)));
    return variations(signs);
}

} // namespace

int sturm_distinct_real_roots(const RatPoly& p) {
    RatPoly q = rp_trim(p);
    if (q.empty()) throw std::domain_error("root count of the zero polynomial");
    if (rp_degree(q) == 0) return 0;
    const std::vector<RatPoly> chain = sturm_chain(q);
    return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

int sturm_roots_in(const std::vector<RatPoly>& chain, const Rational& a, const Rational& b) {
    return variations_at(chain, a) - variations_at(chain, b);
}

std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p) {
    RatPoly f = rp_trim(p);
    if (f.empty() || rp_degree(f) == 0) return {};
    std::vector<std::pair<RatPoly, int>> out;
    RatPoly a0 = rp_gcd(f, rp_derivative(f));
    RatPoly b = rp_divmod(f, a0).first;
    RatPoly c = rp_divmod(rp_derivative(f), a0).first;
    RatPoly d = rp_trim([&] {
        RatPoly bd = rp_derivative(b);
        RatPoly r = c;
        if (r.size() < bd.size()) r.resize(bd.size(), Rational(0));
        for (std::size_t i = 0; i < bd.size(); ++i) r[i] -= bd[i];
        return r;
    }());
    int i = 1;
    while (rp_degree(b) > 0) {
        RatPoly ai = rp_gcd(b, d);
        if (rp_degree(ai) > 0) out.push_back({ai, i});
        b = rp_divmod(b, ai).first;
        c = rp_divmod(d, ai).first;
        RatPoly bd = rp_derivative(b);
        d = c;
        if (d.size() < bd.size()) d.resize(bd.size(), Rational(0));
        for (std::size_t k = 0; k < bd.size(); ++k) d[k] -= bd[k];
        d = rp_trim(std::move(d));
        ++i;
    }
    return out;
}

namespace {

// Cauchy bound: all real roots lie in [-B, B].
Rational root_bound(const RatPoly& p) {
    Rational m = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        Rational a = abs(p[i] / p.back());
        if (a > m) m = a;
    }
    return m + 1;
}

// Isolates and refines the real roots of a squarefree polynomial.
std::vector<double> roots_of_squarefree(const RatPoly& p) {
    std::vector<double> roots;
    if (rp_degree(p) < 1) return roots;
    const std::vector<RatPoly> chain = sturm_chain(p);
    const Rational bound = root_bound(p);
    struct Interval { Rational lo, hi; int count; };
    std::vector<Interval> stack;
    {
        int total = sturm_roots_in(chain, -bound, bound);
        if (total > 0) stack.push_back({-bound, bound, total});
    }
    std::vector<Interval> isolated;
    while (!stack.empty()) {
        Interval iv = stack.back();
        stack.pop_back();
        if (iv.count == 1) {
            isolated.push_back(iv);
            continue;
        }
        Rational mid = (iv.lo + iv.hi) / 2;
        if (rp_eval(p, mid) == 0) {
            isolated.push_back({mid, mid, 1});
            // shrink around the exact root until the two halves account for
            // every other root in the interval
            Rational eps = (iv.hi - iv.lo) / 1024;
            while (true) {
                if (rp_eval(p, mid - eps) != 0 && rp_eval(p, mid + eps) != 0) {
                    int left = sturm_roots_in(chain, iv.lo, mid - eps);
                    int right = sturm_roots_in(chain, mid + eps, iv.hi);
                    if (left + right + 1 == iv.count) {
                        if (left > 0) stack.push_back({iv.lo, mid - eps, left});
                        if (right > 0) stack.push_back({mid + eps, iv.hi, right});
                        break;
                    }
                }
                eps /= 2;
            }
            continue;
        }
        int left = sturm_roots_in(chain, iv.lo, mid);
        int right = iv.count - left;
        if (left > 0) stack.push_back({iv.lo, mid, left});
        if (right > 0) stack.push_back({mid, iv.hi, right});
    }
    for (Interval& iv : isolated) {
        if (iv.lo == iv.hi) {
            roots.push_back(iv.lo.get_d());
            continue;
        }
        // exact bisection on the sign of p; 80 halvings take the width far
        // below double resolution
        int lo_sign = sign_of(rp_eval(p, iv.lo));
        if (lo_sign == 0) {
            roots.push_back(iv.lo.get_d());
            continue;
        }
        Rational lo = iv.lo, hi = iv.hi;
        for (int it = 0; it < 80; ++it) {
            Rational mid = (lo + hi) / 2;
            int ms = sign_of(rp_eval(p, mid));
            if (ms == 0) {
                lo = hi = mid;
                break;
            }
            if (ms == lo_sign)
                lo = mid;
            else
                hi = mid;
        }
        roots.push_back(Rational((lo + hi) / 2).get_d());
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace

std::vector<std::pair<double, int>> real_roots_with_multiplicity(const RatPoly& p) {
    std::vector<std::pair<double, int>> out;
    for (const auto& [factor, mult] : squarefree_decomposition(p))
        for (double r : roots_of_squarefree(factor)) out.push_back({r, mult});
    std::sort(out.begin(), out.end());
    return out;
}

int sturm_real_root_count(const std::vector<double>& coeffs_leading_first) {
    if (coeffs_leading_first.empty() || coeffs_leading_first.front() == 0.0)
        throw std::domain_error("leading coefficient must be nonzero");
    std::vector<double> ascending(coeffs_leading_first.rbegin(), coeffs_leading_first.rend());
    return sturm_distinct_real_roots(ratpoly_from_doubles(ascending));
}

bool is_hyperbolic_exact(const RatPoly& p) {
    RatPoly q = rp_trim(p);
    if (q.empty()) throw std::domain_error("hyperbolicity of the zero polynomial");
    if (rp_degree(q) == 0) return true;
    const RatPoly g = rp_gcd(q, rp_derivative(q));
    const int squarefree_degree = rp_degree(q) - rp_degree(g);
    return sturm_distinct_real_roots(q) == squarefree_degree;
}

} // namespace hyperstrata
