#include "hyperstrata/composition.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <map>
#include <utility>

namespace hyperstrata {

namespace {

void check_pair_n(int a, int b) {
    if (a != b)
        throw std::domain_error("compositions/partitions of different n: " +
                                std::to_string(a) + " vs " + std::to_string(b));
}

} // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw std::domain_error("composition needs at least one part");
    long long sum = 0;
    for (int p : parts_) {
        if (p < 1)
            throw std::domain_error("composition parts must be >= 1");
        sum += p;
        if (sum > kMaxN)
            throw std::domain_error("composition sum exceeds the supported cap of 64");
        mask_ |= std::uint64_t{1} << (sum - 1);
    }
    n_ = static_cast<int>(sum);
}

Composition Composition::single(int n) { return Composition(std::vector<int>{n}); }

Composition Composition::ones(int n) {
    return Composition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Composition Composition::from_inner_mask(std::uint64_t inner, int n) {
    std::vector<int> parts;
    int prev = 0;
    for (int k = 1; k < n; ++k) {
        if (inner & (std::uint64_t{1} << (k - 1))) {
            parts.push_back(k - prev);
            prev = k;
        }
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

std::uint64_t Composition::inner_mask() const {
    return mask_ & ~(std::uint64_t{1} << (n_ - 1));
}

Composition Composition::reversed() const {
    std::vector<int> r(parts_.rbegin(), parts_.rend());
    return Composition(std::move(r));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw std::domain_error("partition needs at least one part");
    long long sum = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::domain_error("partition parts must be >= 1");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::domain_error("partition parts must be weakly decreasing");
        sum += parts_[i];
    }
    if (sum > Composition::kMaxN)
        throw std::domain_error("partition sum exceeds the supported cap of 64");
    n_ = static_cast<int>(sum);
}

Partition sorted_partition(const Composition& mu) {
    std::vector<int> p = mu.parts();
    std::sort(p.begin(), p.end(), std::greater<int>());
    return Partition(std::move(p));
}

namespace {

void compositions_rec(int n, int l, std::vector<int>& acc,
                      std::vector<Composition>& out) {
    if (l == 1) {
        acc.push_back(n);
        out.emplace_back(acc);
        acc.pop_back();
        return;
    }
    for (int a = 1; a <= n - l + 1; ++a) {
        acc.push_back(a);
        compositions_rec(n - a, l - 1, acc, out);
        acc.pop_back();
    }
}

void partitions_rec(int n, int l, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (l == 1) {
        if (n <= max_part) {
            acc.push_back(n);
            out.emplace_back(acc);
            acc.pop_back();
        }
        return;
    }
    // first part a, remaining l-1 parts each in [1, a]
    int hi = std::min(max_part, n - (l - 1));
    for (int a = hi; a >= (n + l - 1) / l; --a) {
        acc.push_back(a);
        partitions_rec(n - a, l - 1, a, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Composition> enumerate_compositions(int n, int l) {
    if (l < 1 || l > n)
        throw std::domain_error("enumerate_compositions needs 1 <= l <= n");
    if (n > Composition::kMaxN)
        throw std::domain_error("n exceeds the supported cap of 64");
    std::vector<Composition> out;
    std::vector<int> acc;
    compositions_rec(n, l, acc, out);
    return out;
}

std::vector<Partition> enumerate_partitions(int n, int l) {
    if (l < 1 || l > n)
        throw std::domain_error("enumerate_partitions needs 1 <= l <= n");
    if (n > Composition::kMaxN)
        throw std::domain_error("n exceeds the supported cap of 64");
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(n, l, n, acc, out);
    return out;
}

long long count_partitions(int n, int l) {
    if (n < 0 || l < 0) return 0;
    if (l == 0) return n == 0 ? 1 : 0;
    if (n < l) return 0;
    // p(n, exactly l parts) = p(n-1, l-1 parts) + p(n-l, l parts)
    std::vector<std::vector<long long>> dp(static_cast<std::size_t>(n + 1),
                                           std::vector<long long>(static_cast<std::size_t>(l + 1), 0));
    dp[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= l; ++j) {
            dp[i][j] = dp[i - 1][j - 1];
            if (i >= j) dp[i][j] += dp[i - j][j];
        }
    return dp[static_cast<std::size_t>(n)][static_cast<std::size_t>(l)];
}

bool leq_composition(const Composition& mu, const Composition& lambda) {
    check_pair_n(mu.n(), lambda.n());
    return (mu.prefix_mask() & ~lambda.prefix_mask()) == 0;
}

Composition quotient(const Composition& lambda, const Composition& mu) {
    if (!leq_composition(lambda, mu))
        throw std::domain_error("quotient requires lambda <= mu in the refinement order");
    std::vector<int> nu;
    nu.reserve(static_cast<std::size_t>(lambda.length()));
    int j = 0;
    for (int i = 0; i < lambda.length(); ++i) {
        int target = lambda.part(i);
        int sum = 0, count = 0;
        while (sum < target) {
            sum += mu.part(j++);
            ++count;
        }
        nu.push_back(count);
    }
    return Composition(std::move(nu));
}

bool is_alternate_odd(const Composition& mu) {
    for (int i = mu.length() - 1; i >= 0; i -= 2)
        if (mu.part(i) != 1) return false;
    return true;
}

bool is_alternate_even(const Composition& mu) {
    for (int i = mu.length() - 2; i >= 0; i -= 2)
        if (mu.part(i) != 1) return false;
    return true;
}

std::vector<Composition> upper_covers(const Composition& mu) {
    std::vector<Composition> out;
    for (int i = 0; i < mu.length(); ++i) {
        for (int a = 1; a < mu.part(i); ++a) {
            std::vector<int> parts;
            parts.reserve(static_cast<std::size_t>(mu.length() + 1));
            for (int j = 0; j < i; ++j) parts.push_back(mu.part(j));
            parts.push_back(a);
            parts.push_back(mu.part(i) - a);
            for (int j = i + 1; j < mu.length(); ++j) parts.push_back(mu.part(j));
            out.emplace_back(std::move(parts));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Assigns q's parts (indexed by free_mask) to blocks whose sums consume the
// remaining multiset of p's parts. The block containing the lowest free
// index is branched over every distinct remaining target value, which keeps
// the search canonical without losing completeness.
struct BlockPartitionSearch {
    const std::vector<int>* items = nullptr;  // q's parts
    std::vector<int> values;                  // distinct p-part values
    std::vector<int> counts;                  // multiplicities, mutated in rec
    std::map<std::pair<std::uint32_t, std::vector<int>>, bool> memo;

    bool rec(std::uint32_t free_mask) {
        if (free_mask == 0) return true;
        const auto k = std::make_pair(free_mask, counts);
        if (auto it = memo.find(k); it != memo.end()) return it->second;
        bool ok = false;
        const int lowest = std::countr_zero(free_mask);
        for (std::size_t c = 0; c < values.size() && !ok; ++c) {
            if (counts[c] == 0) continue;
            counts[c] -= 1;
            ok = grow_block(free_mask & ~(std::uint32_t{1} << lowest), lowest + 1,
                            values[c] - (*items)[static_cast<std::size_t>(lowest)],
                            free_mask);
            counts[c] += 1;
        }
        memo.emplace(k, ok);
        return ok;
    }

    // Extends the block containing the pinned lowest index by items with
    // index >= next until the remaining target hits zero.
    bool grow_block(std::uint32_t rest, int next, int remaining, std::uint32_t) {
        if (remaining == 0) return rec(rest);
        if (remaining < 0) return false;
        for (int j = next; j < static_cast<int>(items->size()); ++j) {
            if (!(rest & (std::uint32_t{1} << j))) continue;
            if ((*items)[static_cast<std::size_t>(j)] > remaining) continue;
            if (grow_block(rest & ~(std::uint32_t{1} << j), j + 1,
                           remaining - (*items)[static_cast<std::size_t>(j)], 0))
                return true;
        }
        return false;
    }
};

} // namespace

bool leq_partition(const Partition& p, const Partition& q) {
    check_pair_n(p.n(), q.n());
    const int lp = p.length(), lq = q.length();
    if (lq > 30)
        throw std::domain_error("leq_partition supports at most 30 parts");
    if (lp > lq) return false;
    if (lp == lq) return p == q;
    BlockPartitionSearch search;
    search.items = &q.parts();
    for (int v : p.parts()) {
        if (!search.values.empty() && search.values.back() == v) {
            search.counts.back() += 1;
        } else {
            search.values.push_back(v);
            search.counts.push_back(1);
        }
    }
    return search.rec((std::uint32_t{1} << lq) - 1);
}

MinMaxSets min_max_sets(int n, int s) {
    if (s < 1 || s > n)
        throw std::domain_error("min_max_sets needs 1 <= s <= n");
    MinMaxSets r;
    for (const Composition& mu : enumerate_compositions(n, s)) {
        if (is_alternate_odd(mu)) r.c_min.push_back(mu);
        if (is_alternate_even(mu)) r.c_max.push_back(mu);
    }
    auto project = [](const std::vector<Composition>& cs) {
        std::vector<Partition> ps;
        ps.reserve(cs.size());
        for (const Composition& c : cs) ps.push_back(sorted_partition(c));
        std::sort(ps.begin(), ps.end(), [](const Partition& a, const Partition& b) {
            return b < a;  // lex decreasing
        });
        ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
        return ps;
    };
    r.p_min = project(r.c_min);
    r.p_max = project(r.c_max);
    return r;
}

long long binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

} // namespace hyperstrata
