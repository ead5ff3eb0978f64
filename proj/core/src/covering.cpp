#include "hyperstrata/covering.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hyperstrata/bounds.hpp"
#include "hyperstrata/errors.hpp"
#include "hyperstrata/poset.hpp"

namespace hyperstrata {

namespace {

// Bitset over the candidate facets; |C(n,s)| stays below 128 for the
// supported range (70 at the guarded maximum (9,5)).
struct CandMask {
    std::uint64_t lo = 0, hi = 0;
    void set(int i) { (i < 64 ? lo : hi) |= std::uint64_t{1} << (i & 63); }
    bool intersects(const CandMask& o) const { return (lo & o.lo) || (hi & o.hi); }
    bool empty() const { return lo == 0 && hi == 0; }
};

enum Parity : unsigned char { kNeither = 0, kOdd = 1, kEven = 2, kBoth = 3 };

struct Universe {
    int n = 0, s = 0;
    std::vector<Composition> candidates;          // C(n,s), lex
    std::vector<std::uint32_t> element_masks;     // inner masks, length >= s
    std::vector<int> mask_to_element;             // 2^(n-1) entries, -1 if none
    // memberships[c]: elements above candidate c with the quotient parity
    std::vector<std::vector<std::pair<int, Parity>>> memberships;
    std::vector<CandMask> odd_mask;               // per element
    std::vector<CandMask> even_mask;
    std::vector<CandMask> suffix;                 // candidates with index >= i
};

Universe build_universe(int n, int s) {
    Universe u;
    u.n = n;
    u.s = s;
    u.candidates = enumerate_compositions(n, s);
    const std::uint32_t inner_limit = std::uint32_t{1} << (n - 1);
    u.mask_to_element.assign(inner_limit, -1);
    for (std::uint32_t m = 0; m < inner_limit; ++m) {
        if (std::popcount(m) >= s - 1) {
            u.mask_to_element[m] = static_cast<int>(u.element_masks.size());
            u.element_masks.push_back(m);
        }
    }
    const std::size_t ecount = u.element_masks.size();
    u.odd_mask.resize(ecount);
    u.even_mask.resize(ecount);
    u.memberships.resize(u.candidates.size());
    for (std::size_t c = 0; c < u.candidates.size(); ++c) {
        const Composition& mu = u.candidates[c];
        const std::uint32_t base = static_cast<std::uint32_t>(mu.inner_mask());
        // iterate supersets of base within [0, inner_limit)
        std::uint32_t free_bits = ~base & (inner_limit - 1);
        std::uint32_t sub = 0;
        while (true) {
            const std::uint32_t lam_mask = base | sub;
            const int e = u.mask_to_element[lam_mask];
            Composition lambda = Composition::from_inner_mask(lam_mask, n);
            Composition nu = quotient(mu, lambda);
            unsigned char par = kNeither;
            if (is_alternate_odd(nu)) par |= kOdd;
            if (is_alternate_even(nu)) par |= kEven;
            u.memberships[c].push_back({e, static_cast<Parity>(par)});
            if (par & kOdd) u.odd_mask[static_cast<std::size_t>(e)].set(static_cast<int>(c));
            if (par & kEven) u.even_mask[static_cast<std::size_t>(e)].set(static_cast<int>(c));
            if (sub == free_bits) break;
            sub = (sub - free_bits) & free_bits;
        }
    }
    u.suffix.resize(u.candidates.size() + 1);
    for (int i = static_cast<int>(u.candidates.size()) - 1; i >= 0; --i) {
        u.suffix[static_cast<std::size_t>(i)] = u.suffix[static_cast<std::size_t>(i) + 1];
        u.suffix[static_cast<std::size_t>(i)].set(i);
    }
    return u;
}

struct Dfs {
    const Universe* u = nullptr;
    long long max_size = 0;
    std::vector<int> included;
    std::vector<signed char> odd_cnt, even_cnt, dom_cnt;
    std::vector<std::vector<Composition>>* out = nullptr;

    bool add(int c) {
        for (const auto& [e, par] : u->memberships[static_cast<std::size_t>(c)]) {
            if (((par & kOdd) && odd_cnt[static_cast<std::size_t>(e)] >= 1) ||
                ((par & kEven) && even_cnt[static_cast<std::size_t>(e)] >= 1)) {
                undo_partial(c, e);
                return false;
            }
            if (par & kOdd) odd_cnt[static_cast<std::size_t>(e)] += 1;
            if (par & kEven) even_cnt[static_cast<std::size_t>(e)] += 1;
            dom_cnt[static_cast<std::size_t>(e)] += 1;
        }
        included.push_back(c);
        return true;
    }

    void undo_partial(int c, int stop_e) {
        for (const auto& [e, par] : u->memberships[static_cast<std::size_t>(c)]) {
            if (e == stop_e) break;
            if (par & kOdd) odd_cnt[static_cast<std::size_t>(e)] -= 1;
            if (par & kEven) even_cnt[static_cast<std::size_t>(e)] -= 1;
            dom_cnt[static_cast<std::size_t>(e)] -= 1;
        }
    }

    void remove(int c) {
        included.pop_back();
        for (const auto& [e, par] : u->memberships[static_cast<std::size_t>(c)]) {
            if (par & kOdd) odd_cnt[static_cast<std::size_t>(e)] -= 1;
            if (par & kEven) even_cnt[static_cast<std::size_t>(e)] -= 1;
            dom_cnt[static_cast<std::size_t>(e)] -= 1;
        }
    }

    // Every element already in L(S) must still be able to acquire its
    // missing alternate-odd/even facet from the undecided suffix.
    bool feasible(int next) const {
        const CandMask& remaining = u->suffix[static_cast<std::size_t>(next)];
        for (std::size_t e = 0; e < u->element_masks.size(); ++e) {
            if (dom_cnt[e] == 0) continue;
            if (odd_cnt[e] == 0 && !u->odd_mask[e].intersects(remaining)) return false;
            if (even_cnt[e] == 0 && !u->even_mask[e].intersects(remaining)) return false;
        }
        return true;
    }

    void run(int i) {
        if (!feasible(i)) return;
        if (i == static_cast<int>(u->candidates.size())) {
            if (!included.empty()) {
                std::vector<Composition> family;
                family.reserve(included.size());
                for (int c : included) family.push_back(u->candidates[static_cast<std::size_t>(c)]);
                std::sort(family.begin(), family.end());
                out->push_back(std::move(family));
            }
            return;
        }
        if (static_cast<long long>(included.size()) < max_size && add(i)) {
            run(i + 1);
            remove(i);
        }
        run(i + 1);
    }
};

std::vector<Composition> sorted_copy(std::vector<Composition> v) {
    std::sort(v.begin(), v.end());
    return v;
}

bool family_less(const std::vector<Composition>& a, const std::vector<Composition>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

} // namespace

std::vector<Composition> reversal_canonical(std::vector<Composition> family) {
    std::sort(family.begin(), family.end());
    std::vector<Composition> rev;
    rev.reserve(family.size());
    for (const Composition& mu : family) rev.push_back(mu.reversed());
    std::sort(rev.begin(), rev.end());
    if (rev == family) return family;
    auto odd_member = [](const std::vector<Composition>& f) -> const Composition* {
        for (const Composition& mu : f)
            if (is_alternate_odd(mu)) return &mu;
        return nullptr;
    };
    const Composition* oa = odd_member(family);
    const Composition* ob = odd_member(rev);
    if (oa && ob && *oa != *ob) return *oa < *ob ? family : rev;
    return family < rev ? family : rev;
}

std::vector<std::vector<Composition>> enumerate_potential(int n, int s,
                                                          const EnumerateOptions& opts) {
    if (s < 1 || s > n)
        throw std::domain_error("enumerate_potential needs 1 <= s <= n");
    if ((n > 9 || s > 9) && !opts.force) {
        std::ostringstream os;
        os << "enumerate_potential(" << n << "," << s << ") is beyond the documented "
           << "n,s <= 9 scale (" << binomial(n - 1, s - 1)
           << " candidate facets); pass force to run anyway";
        throw scale_error(os.str());
    }
    if (n > 16 || binomial(n - 1, s - 1) > 128)
        throw std::domain_error("enumerate_potential supports at most 128 candidate facets");

    const Universe u = build_universe(n, s);
    const long long cap = f0_bound(n, s);
    const int m = static_cast<int>(u.candidates.size());

    // Tasks split the DFS at a fixed shallow depth; every worker owns a
    // disjoint set of prefixes, so the merged output is independent of the
    // worker count.
    const int split_depth = std::min(m, opts.jobs > 1 ? 10 : 0);
    struct Task {
        std::vector<int> prefix_included;
    };
    std::vector<Task> tasks;
    {
        Dfs probe;
        probe.u = &u;
        probe.max_size = cap;
        probe.odd_cnt.assign(u.element_masks.size(), 0);
        probe.even_cnt.assign(u.element_masks.size(), 0);
        probe.dom_cnt.assign(u.element_masks.size(), 0);
        std::vector<std::vector<Composition>> ignored;
        probe.out = &ignored;
        // enumerate feasible prefixes of the first split_depth decisions
        struct Frame { int i; };
        std::function<void(int)> gen = [&](int i) {
            if (!probe.feasible(i)) return;
            if (i == split_depth) {
                tasks.push_back({probe.included});
                return;
            }
            if (static_cast<long long>(probe.included.size()) < cap && probe.add(i)) {
                gen(i + 1);
                probe.remove(i);
            }
            gen(i + 1);
        };
        gen(0);
    }

    std::vector<std::vector<std::vector<Composition>>> results(tasks.size());
    auto run_task = [&](std::size_t t) {
        Dfs dfs;
        dfs.u = &u;
        dfs.max_size = cap;
        dfs.odd_cnt.assign(u.element_masks.size(), 0);
        dfs.even_cnt.assign(u.element_masks.size(), 0);
        dfs.dom_cnt.assign(u.element_masks.size(), 0);
        dfs.out = &results[t];
        for (int c : tasks[t].prefix_included)
            if (!dfs.add(c)) return;  // cannot happen; prefixes were vetted
        dfs.run(split_depth);
    };

    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        for (std::size_t t = 0; t < tasks.size(); ++t) run_task(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                for (std::size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1))
                    run_task(t);
            });
        for (std::thread& th : pool) th.join();
    }

    std::vector<std::vector<Composition>> families;
    for (auto& chunk : results)
        for (auto& fam : chunk) families.push_back(std::move(fam));

    if (opts.up_to_reversal) {
        for (auto& fam : families) fam = reversal_canonical(std::move(fam));
        std::sort(families.begin(), families.end(), family_less);
        families.erase(std::unique(families.begin(), families.end()), families.end());
    } else {
        std::sort(families.begin(), families.end(), family_less);
    }
    return families;
}

CoveringCheck is_covering(const std::vector<Partition>& p,
                          const std::vector<std::vector<Composition>>& family) {
    CoveringCheck check;
    check.covering = true;
    check.witnesses.resize(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& facets = family[i];
        if (facets.empty())
            throw std::domain_error("family member " + std::to_string(i) + " is empty");
        const int n = facets.front().n();
        const int s = facets.front().length();
        StrataPoset poset = build_poset(facets, n, s);
        bool found = false;
        for (const auto& level : poset.levels) {
            for (const Composition& lambda : level) {
                Partition pl = sorted_partition(lambda);
                for (const Partition& q : p) {
                    if (q.n() == pl.n() && leq_partition(pl, q)) {
                        check.witnesses[i] = CoverWitness{q, lambda};
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) check.covering = false;
    }
    return check;
}

namespace {

// family membership as a multi-word bitset, one bit per family index
using MemberMask = std::vector<std::uint64_t>;

bool mask_any(const MemberMask& m) {
    for (std::uint64_t w : m)
        if (w) return true;
    return false;
}

bool mask_intersects(const MemberMask& a, const MemberMask& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return true;
    return false;
}

int mask_gain(const MemberMask& a, const MemberMask& b) {
    int g = 0;
    for (std::size_t i = 0; i < a.size(); ++i) g += std::popcount(a[i] & b[i]);
    return g;
}

MemberMask mask_andnot(MemberMask a, const MemberMask& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] &= ~b[i];
    return a;
}

std::vector<MemberMask> coverage_table(const std::vector<Partition>& candidates,
                                       const std::vector<std::vector<Composition>>& family) {
    const std::size_t words = (family.size() + 63) / 64;
    std::vector<MemberMask> covers(candidates.size(), MemberMask(words, 0));
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            for (const Composition& mu : family[i]) {
                if (sorted_partition(mu) == candidates[c]) {
                    covers[c][i / 64] |= std::uint64_t{1} << (i % 64);
                    break;
                }
            }
        }
    }
    return covers;
}

bool exact_cover_rec(const std::vector<MemberMask>& covers, const MemberMask& need, int k,
                     int from, std::vector<int>& chosen) {
    if (!mask_any(need)) return true;
    if (k == 0) return false;
    for (int c = from; c + k <= static_cast<int>(covers.size()); ++c) {
        if (!mask_intersects(covers[static_cast<std::size_t>(c)], need)) continue;
        chosen.push_back(c);
        if (exact_cover_rec(covers, mask_andnot(need, covers[static_cast<std::size_t>(c)]),
                            k - 1, c + 1, chosen))
            return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

MinCoverResult min_cover(const std::vector<std::vector<Composition>>& family, int n, int s,
                         CoverMethod method) {
    if (family.empty()) throw std::domain_error("min_cover needs a nonempty family");
    MinCoverResult result;
    result.method = method;
    result.caveat =
        "minimal over the potential family; equality with the minimum over realizable "
        "slices rests on the realizability conjecture";
    std::vector<Partition> candidates = enumerate_partitions(n, s);
    const std::vector<MemberMask> covers = coverage_table(candidates, family);
    MemberMask need((family.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < family.size(); ++i)
        need[i / 64] |= std::uint64_t{1} << (i % 64);

    if (method == CoverMethod::kGreedy) {
        MemberMask left = need;
        while (mask_any(left)) {
            int best = -1;
            int best_gain = -1;
            for (std::size_t c = 0; c < candidates.size(); ++c) {
                int gain = mask_gain(covers[c], left);
                if (gain > best_gain) {
                    best_gain = gain;
                    best = static_cast<int>(c);
                }
            }
            if (best < 0 || best_gain == 0)
                throw structural_error("greedy cover stalled: some family member has no "
                                       "candidate partition at all");
            result.partitions.push_back(candidates[static_cast<std::size_t>(best)]);
            left = mask_andnot(std::move(left), covers[static_cast<std::size_t>(best)]);
        }
        return result;
    }

    const long long lower = std::max<long long>(1, covering_lower_recursive(n, s).value);
    for (long long k = lower; k <= static_cast<long long>(candidates.size()); ++k) {
        std::vector<int> chosen;
        if (exact_cover_rec(covers, need, static_cast<int>(k), 0, chosen)) {
            for (int c : chosen)
                result.partitions.push_back(candidates[static_cast<std::size_t>(c)]);
            return result;
        }
    }
    throw structural_error("no covering exists over the given family");
}

bool known_cover_check(int n, const EnumerateOptions& opts) {
    if (n < 4) throw std::domain_error("known_cover_check needs n >= 4");
    const int s = n - 2;
    std::vector<std::vector<Composition>> family = enumerate_potential(n, s, opts);
    std::vector<int> parts{2, 2};
    for (int i = 0; i < n - 4; ++i) parts.push_back(1);
    const std::vector<Partition> p{Partition(parts)};
    return is_covering(p, family).covering;
}

} // namespace hyperstrata
