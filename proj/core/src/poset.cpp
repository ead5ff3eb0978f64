#include "hyperstrata/poset.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hyperstrata/errors.hpp"

namespace hyperstrata {

namespace {

std::string comp_str(const Composition& c) {
    std::string s = "(";
    for (int i = 0; i < c.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(c.part(i));
    }
    return s + ")";
}

} // namespace

int StrataPoset::index_in_level(const Composition& lambda) const {
    int lvl = lambda.length() - s;
    if (lvl < 0 || lvl >= static_cast<int>(levels.size())) return -1;
    const auto& v = levels[static_cast<std::size_t>(lvl)];
    auto it = std::lower_bound(v.begin(), v.end(), lambda);
    if (it == v.end() || *it != lambda) return -1;
    return static_cast<int>(it - v.begin());
}

StrataPoset build_poset(std::vector<Composition> facets, int n, int s) {
    if (n < 1 || s < 1 || s > n)
        throw std::domain_error("build_poset needs 1 <= s <= n");
    if (n > 24)
        throw std::domain_error("poset materialization supports n <= 24");
    if (facets.empty())
        throw std::domain_error("facet set must be nonempty");
    for (const Composition& mu : facets) {
        if (mu.n() != n || mu.length() != s)
            throw std::domain_error("facet " + comp_str(mu) +
                                    " is not a composition of " + std::to_string(n) +
                                    " into " + std::to_string(s) + " parts");
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    StrataPoset poset;
    poset.n = n;
    poset.s = s;
    poset.facets = facets;
    poset.levels.resize(static_cast<std::size_t>(n - s + 1));
    poset.levels[0] = facets;

    // Upward closure level by level through single-part splits.
    std::set<std::uint64_t> seen;
    for (std::size_t lvl = 1; lvl < poset.levels.size(); ++lvl) {
        seen.clear();
        std::vector<Composition>& out = poset.levels[lvl];
        for (const Composition& lambda : poset.levels[lvl - 1]) {
            for (const Composition& up : upper_covers(lambda)) {
                if (seen.insert(up.inner_mask()).second) out.push_back(up);
            }
        }
        std::sort(out.begin(), out.end());
    }
    return poset;
}

void annotate_min_max(StrataPoset& poset) {
    poset.annotations.assign(poset.levels.size(), {});
    for (std::size_t lvl = 0; lvl < poset.levels.size(); ++lvl) {
        auto& anns = poset.annotations[lvl];
        anns.resize(poset.levels[lvl].size());
        for (std::size_t i = 0; i < poset.levels[lvl].size(); ++i) {
            const Composition& lambda = poset.levels[lvl][i];
            StrataPoset::Annotation& a = anns[i];
            for (std::size_t fi = 0; fi < poset.facets.size(); ++fi) {
                const Composition& mu = poset.facets[fi];
                if ((mu.prefix_mask() & ~lambda.prefix_mask()) != 0) continue;
                Composition nu = quotient(mu, lambda);
                if (is_alternate_odd(nu)) {
                    a.odd_candidates += 1;
                    a.mu_min = a.odd_candidates == 1 ? static_cast<int>(fi) : -1;
                }
                if (is_alternate_even(nu)) {
                    a.even_candidates += 1;
                    a.mu_max = a.even_candidates == 1 ? static_cast<int>(fi) : -1;
                }
            }
        }
    }
    poset.annotated = true;
}

PotentialCheck check_potential(const StrataPoset& poset) {
    if (!poset.annotated)
        throw std::logic_error("check_potential requires an annotated poset");
    PotentialCheck r;
    for (std::size_t lvl = 0; lvl < poset.levels.size(); ++lvl) {
        for (std::size_t i = 0; i < poset.levels[lvl].size(); ++i) {
            const auto& a = poset.annotations[lvl][i];
            if (a.odd_candidates == 1 && a.even_candidates == 1) continue;
            r.potential = false;
            r.first_failure = poset.levels[lvl][i];
            std::ostringstream os;
            os << "element " << comp_str(*r.first_failure) << " dominates "
               << a.odd_candidates << " alternate-odd and " << a.even_candidates
               << " alternate-even facets (need exactly one of each)";
            r.reason = os.str();
            return r;
        }
    }
    r.potential = true;
    return r;
}

PotentialCheck is_potential(const std::vector<Composition>& facets, int n, int s) {
    StrataPoset poset = build_poset(facets, n, s);
    annotate_min_max(poset);
    return check_potential(poset);
}

DualComplex dual_complex(const StrataPoset& poset) {
    DualComplex c;
    c.ground_size = poset.n - 1;
    c.facet_size = poset.n - poset.s;
    c.faces_by_size.resize(static_cast<std::size_t>(c.facet_size) + 1);
    const std::uint64_t full = (c.ground_size >= 64)
                                   ? ~std::uint64_t{0}
                                   : ((std::uint64_t{1} << c.ground_size) - 1);
    for (std::size_t lvl = 0; lvl < poset.levels.size(); ++lvl) {
        const int size = c.facet_size - static_cast<int>(lvl);
        for (const Composition& lambda : poset.levels[lvl]) {
            std::uint64_t face = full & ~lambda.inner_mask();
            c.faces_by_size[static_cast<std::size_t>(size)].push_back(face);
            if (lvl == 0) c.facet_masks.push_back(face);
        }
        auto& v = c.faces_by_size[static_cast<std::size_t>(size)];
        std::sort(v.begin(), v.end());
    }
    // Downward closure: every subface one element smaller must be present.
    // The upward closure of the poset guarantees this; violation means the
    // input was corrupted.
    for (int size = c.facet_size; size >= 1; --size) {
        const auto& level = c.faces_by_size[static_cast<std::size_t>(size)];
        const auto& below = c.faces_by_size[static_cast<std::size_t>(size) - 1];
        for (std::uint64_t face : level) {
            std::uint64_t rest = face;
            while (rest) {
                std::uint64_t bit = rest & (~rest + 1);
                rest ^= bit;
                if (!std::binary_search(below.begin(), below.end(), face ^ bit))
                    throw structural_error("dual complex is not downward closed");
            }
        }
    }
    return c;
}

bool ridges_in_two_facets(const DualComplex& complex) {
    if (complex.facet_size == 0) return true;  // no ridges at all
    const auto& ridges = complex.faces_by_size[static_cast<std::size_t>(complex.facet_size) - 1];
    for (std::uint64_t ridge : ridges) {
        int count = 0;
        for (std::uint64_t facet : complex.facet_masks)
            if ((ridge & ~facet) == 0) ++count;
        if (count != 2) return false;
    }
    return true;
}

std::vector<long long> h_from_f(const std::vector<long long>& f) {
    const int d = static_cast<int>(f.size()) - 1;
    std::vector<long long> h(f.size(), 0);
    for (int i = 0; i <= d; ++i) {
        long long v = 0;
        for (int j = 0; j <= i; ++j) {
            long long term = binomial(d - j, i - j) * f[static_cast<std::size_t>(d - j)];
            v += ((i - j) % 2 == 0) ? term : -term;
        }
        h[static_cast<std::size_t>(i)] = v;
    }
    return h;
}

std::vector<long long> f_from_h(const std::vector<long long>& h) {
    const int d = static_cast<int>(h.size()) - 1;
    std::vector<long long> f(h.size(), 0);
    for (int i = 0; i <= d; ++i) {
        long long v = 0;
        for (int j = 0; j <= i; ++j)
            v += binomial(d - j, i - j) * h[static_cast<std::size_t>(j)];
        f[static_cast<std::size_t>(d - i)] = v;
    }
    return f;
}

FaceVectors face_vectors(const StrataPoset& poset) {
    FaceVectors fv;
    fv.d = poset.dimension();
    fv.f.resize(static_cast<std::size_t>(fv.d) + 1);
    for (int i = 0; i <= fv.d; ++i)
        fv.f[static_cast<std::size_t>(i)] =
            static_cast<long long>(poset.levels[static_cast<std::size_t>(i)].size());
    fv.h = h_from_f(fv.f);
    return fv;
}

bool dehn_sommerville_check(const std::vector<long long>& h) {
    const int d = static_cast<int>(h.size()) - 1;
    for (int i = 0; i <= d / 2; ++i)
        if (h[static_cast<std::size_t>(i)] != h[static_cast<std::size_t>(d - i)]) return false;
    return true;
}

namespace {

// Canonical binomial representation of m in degree i and its pseudo-power.
long long macaulay_pseudo_power(long long m, int i) {
    if (m <= 0) return 0;
    long long bound = 0;
    int deg = i;
    while (m > 0 && deg >= 1) {
        int a = deg;
        while (binomial(a + 1, deg) <= m) ++a;
        m -= binomial(a, deg);
        bound += binomial(a + 1, deg + 1);
        --deg;
    }
    return bound;
}

} // namespace

bool macaulay_check(const std::vector<long long>& g) {
    if (g.empty()) return true;
    if (g[0] != 1) return false;
    for (long long v : g)
        if (v < 0) return false;
    for (std::size_t i = 1; i + 1 < g.size(); ++i)
        if (g[i + 1] > macaulay_pseudo_power(g[i], static_cast<int>(i))) return false;
    return true;
}

bool g_theorem_check(const std::vector<long long>& h) {
    if (h.empty() || h[0] != 1) return false;
    if (!dehn_sommerville_check(h)) return false;
    const int d = static_cast<int>(h.size()) - 1;
    std::vector<long long> g;
    g.push_back(h[0]);
    for (int i = 1; i <= d / 2; ++i) {
        if (h[static_cast<std::size_t>(i)] < h[static_cast<std::size_t>(i) - 1]) return false;
        g.push_back(h[static_cast<std::size_t>(i)] - h[static_cast<std::size_t>(i) - 1]);
    }
    return macaulay_check(g);
}

std::vector<int> shelling_order(const StrataPoset& poset) {
    if (!poset.annotated)
        throw std::logic_error("shelling_order requires an annotated poset");
    const int k = static_cast<int>(poset.facets.size());
    std::vector<std::set<int>> succ(static_cast<std::size_t>(k));
    std::vector<int> indeg(static_cast<std::size_t>(k), 0);
    if (poset.levels.size() > 1) {
        const auto& anns = poset.annotations[1];
        for (std::size_t i = 0; i < anns.size(); ++i) {
            const auto& a = anns[i];
            if (a.mu_min < 0 || a.mu_max < 0)
                throw structural_error("shelling_order needs a potential poset");
            if (a.mu_min == a.mu_max) continue;
            if (succ[static_cast<std::size_t>(a.mu_min)].insert(a.mu_max).second)
                indeg[static_cast<std::size_t>(a.mu_max)] += 1;
        }
    }
    // Kahn's algorithm; facets are lex sorted, so the min-heap of indices
    // breaks ties lexicographically.
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int i = 0; i < k; ++i)
        if (indeg[static_cast<std::size_t>(i)] == 0) ready.push(i);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(k));
    while (!ready.empty()) {
        int u = ready.top();
        ready.pop();
        order.push_back(u);
        for (int v : succ[static_cast<std::size_t>(u)])
            if (--indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
    }
    if (static_cast<int>(order.size()) != k)
        throw structural_error(
            "the <=_p relation on facets is cyclic; this contradicts shellability "
            "of potential posets and indicates a deeper inconsistency");
    return order;
}

ShellingReport verify_shelling(const DualComplex& complex, const std::vector<int>& order) {
    ShellingReport rep;
    const int k = static_cast<int>(complex.facet_masks.size());
    if (static_cast<int>(order.size()) != k) {
        rep.reason = "order does not cover all facets";
        return rep;
    }
    std::vector<char> used(static_cast<std::size_t>(k), 0);
    for (int idx : order) {
        if (idx < 0 || idx >= k || used[static_cast<std::size_t>(idx)]) {
            rep.reason = "order is not a permutation of the facets";
            return rep;
        }
        used[static_cast<std::size_t>(idx)] = 1;
    }
    // Prefix-intersection condition: for every j < i there is r < i with
    // F_i cap F_j inside F_i cap F_r and |F_i cap F_r| = |F_i| - 1.
    for (int i = 1; i < k; ++i) {
        const std::uint64_t fi = complex.facet_masks[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
        for (int j = 0; j < i; ++j) {
            const std::uint64_t inter =
                fi & complex.facet_masks[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
            bool dominated = false;
            for (int r = 0; r < i && !dominated; ++r) {
                const std::uint64_t cand =
                    fi & complex.facet_masks[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])];
                if (std::popcount(cand) == complex.facet_size - 1 && (inter & ~cand) == 0)
                    dominated = true;
            }
            if (!dominated) {
                rep.reason = "facet " + std::to_string(order[static_cast<std::size_t>(i)]) +
                             " meets facet " + std::to_string(order[static_cast<std::size_t>(j)]) +
                             " outside a codimension-1 face of the prefix";
                return rep;
            }
        }
    }
    // Restriction of F_i: vertices v with F_i minus v inside an earlier facet.
    rep.restriction_sizes.resize(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        const std::uint64_t fi = complex.facet_masks[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
        int size = 0;
        std::uint64_t rest = fi;
        while (rest) {
            std::uint64_t bit = rest & (~rest + 1);
            rest ^= bit;
            for (int j = 0; j < i; ++j) {
                const std::uint64_t fj = complex.facet_masks[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
                if (((fi ^ bit) & ~fj) == 0) {
                    ++size;
                    break;
                }
            }
        }
        rep.restriction_sizes[static_cast<std::size_t>(i)] = size;
    }
    rep.valid = true;
    return rep;
}

std::string to_dot(const StrataPoset& poset) {
    std::ostringstream os;
    os << "digraph strata {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t lvl = 0; lvl < poset.levels.size(); ++lvl) {
        for (const Composition& lambda : poset.levels[lvl]) {
            os << "  \"" << comp_str(lambda) << "\"";
            if (poset.annotated) {
                std::size_t idx = static_cast<std::size_t>(poset.index_in_level(lambda));
                const auto& a = poset.annotations[lvl][idx];
                os << " [label=\"" << comp_str(lambda);
                if (a.mu_min >= 0)
                    os << "\\nmin=" << comp_str(poset.facets[static_cast<std::size_t>(a.mu_min)]);
                if (a.mu_max >= 0)
                    os << "\\nmax=" << comp_str(poset.facets[static_cast<std::size_t>(a.mu_max)]);
                os << "\"]";
            }
            os << ";\n";
        }
    }
    os << "  \"(" << poset.n << ")\" [style=dashed];\n";
    for (const Composition& mu : poset.facets)
        os << "  \"(" << poset.n << ")\" -> \"" << comp_str(mu) << "\" [style=dashed];\n";
    for (std::size_t lvl = 0; lvl + 1 < poset.levels.size(); ++lvl) {
        for (const Composition& lambda : poset.levels[lvl]) {
            for (const Composition& up : upper_covers(lambda)) {
                if (poset.index_in_level(up) >= 0)
                    os << "  \"" << comp_str(lambda) << "\" -> \"" << comp_str(up) << "\";\n";
            }
        }
    }
    os << "}\n";
    return os.str();
}

} // namespace hyperstrata
