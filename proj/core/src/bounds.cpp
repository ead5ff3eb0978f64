#include "hyperstrata/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

#include "hyperstrata/composition.hpp"

namespace hyperstrata {

namespace {

// Gale evenness: a d-subset T of [m] spans a facet of C_d(m) iff any two
// elements outside T have an even number of elements of T strictly between
// them.
bool gale_even(std::uint32_t t, int m) {
    int between = 0;
    bool outside_seen = false;
    bool odd_since_outside = false;
    // scan positions 0..m-1; count parity of T-elements between consecutive
    // non-T positions
    for (int i = 0; i < m; ++i) {
        if (t & (std::uint32_t{1} << i)) {
            if (outside_seen) odd_since_outside = !odd_since_outside;
            ++between;
        } else {
            if (outside_seen && odd_since_outside) return false;
            outside_seen = true;
            odd_since_outside = false;
        }
    }
    (void)between;
    return true;
}

void subsets_of_size(int m, int k, std::vector<std::uint32_t>& out) {
    if (k == 0) {
        out.push_back(0);
        return;
    }
    std::uint32_t t = (std::uint32_t{1} << k) - 1;
    const std::uint32_t limit = std::uint32_t{1} << m;
    while (t < limit) {
        out.push_back(t);
        // Gosper's hack
        std::uint32_t c = t & (~t + 1);
        std::uint32_t r = t + c;
        t = (((r ^ t) >> 2) / c) | r;
    }
}

} // namespace

std::vector<long long> cyclic_face_vector(int d, int m) {
    if (d < 1 || m < d + 1)
        throw std::domain_error("cyclic_face_vector needs m >= d+1 >= 2");
    if (m > 30)
        throw std::domain_error("cyclic_face_vector supports m <= 30");
    std::vector<std::uint32_t> candidates;
    subsets_of_size(m, d, candidates);
    std::vector<std::uint32_t> facets;
    for (std::uint32_t t : candidates)
        if (gale_even(t, m)) facets.push_back(t);

    // All faces are subsets of facets (the polytope is simplicial).
    std::unordered_set<std::uint32_t> faces;
    for (std::uint32_t f : facets) {
        // iterate subsets of f
        std::uint32_t sub = f;
        while (true) {
            faces.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    std::vector<long long> fv(static_cast<std::size_t>(d), 0);
    for (std::uint32_t face : faces) {
        int k = std::popcount(face);
        if (k >= 1) fv[static_cast<std::size_t>(k) - 1] += 1;
    }
    return fv;
}

std::vector<bool> ubt_check(const FaceVectors& fv, int n, int s) {
    const int d = n - s;
    if (fv.d != d)
        throw std::domain_error("face vector dimension does not match (n,s)");
    if (d == 0) return {};
    const long long m = fv.f[static_cast<std::size_t>(d) - 1];
    std::vector<long long> c = cyclic_face_vector(d, static_cast<int>(m));
    std::vector<bool> ok(static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i)
        ok[static_cast<std::size_t>(i) - 1] =
            fv.f[static_cast<std::size_t>(d - i)] <= c[static_cast<std::size_t>(i) - 1];
    return ok;
}

long long f0_bound(int n, int s) {
    if (s < 1 || s > n)
        throw std::domain_error("f0_bound needs 1 <= s <= n");
    const int d = n - s;
    if (d % 2 == 0) {
        const int k = d / 2;
        return binomial(n - 1 - k, k) + binomial(n - 2 - k, k - 1);
    }
    const int k = (d - 1) / 2;
    return 2 * binomial(n - 2 - k, k);
}

long long covering_upper_bound(int n, int s) {
    if (s < 2 || s > n)
        throw std::domain_error("covering bounds need 2 <= s <= n");
    return count_partitions(n - (s + 1) / 2, s / 2);
}

long long covering_lower_trivial(int n, int s) {
    const long long u = covering_upper_bound(n, s);
    const long long denom = static_cast<long long>((s - 1 + 1) / 2) * ((s + 1 + 1) / 2);
    return (2 * u + denom - 1) / denom;
}

RecursiveLowerBound covering_lower_recursive(int n, int s) {
    if (s < 2 || s > n)
        throw std::domain_error("covering bounds need 2 <= s <= n");
    RecursiveLowerBound r;
    const int top = s / 2;
    r.b.assign(static_cast<std::size_t>(top) + 1, 0);
    if (top >= 1) r.b[1] = 1;
    for (int i = 2; i <= top; ++i) {
        const long long remaining = count_partitions(n - s + 1, i) -
                                    i * r.b[static_cast<std::size_t>(i) - 1] -
                                    r.b[static_cast<std::size_t>(i) - 2];
        const long long denom = static_cast<long long>(i) * i + i;
        // ceil(2*remaining/denom), clamped: a negative requirement means the
        // partitions counted so far already overcover this layer.
        long long bi = remaining <= 0 ? 0 : (2 * remaining + denom - 1) / denom;
        r.b[static_cast<std::size_t>(i)] = bi;
    }
    for (long long bi : r.b) r.value += bi;
    return r;
}

BoundReport bound_report(int n, int s) {
    BoundReport rep;
    rep.n = n;
    rep.s = s;
    rep.f0 = f0_bound(n, s);
    rep.covering_upper = covering_upper_bound(n, s);
    rep.covering_lower_trivial = covering_lower_trivial(n, s);
    RecursiveLowerBound rec = covering_lower_recursive(n, s);
    rep.covering_lower_recursive = rec.value;
    rep.b = rec.b;
    return rep;
}

} // namespace hyperstrata
