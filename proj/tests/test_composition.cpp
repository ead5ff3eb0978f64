#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hyperstrata/composition.hpp"

using namespace hyperstrata;

namespace {

Composition comp(std::vector<int> parts) { return Composition(std::move(parts)); }
Partition part(std::vector<int> parts) { return Partition(std::move(parts)); }

// Brute-force composition order: mu <= lambda iff merging adjacent parts of
// lambda in every possible way reaches mu. Independent of the prefix-mask
// route used by the library.
bool leq_composition_oracle(const Composition& mu, const Composition& lambda) {
    if (mu == lambda) return true;
    if (mu.length() >= lambda.length()) return false;
    for (int i = 0; i + 1 < lambda.length(); ++i) {
        std::vector<int> merged;
        for (int j = 0; j < lambda.length(); ++j) {
            if (j == i) {
                merged.push_back(lambda.part(i) + lambda.part(i + 1));
                ++j;
            } else {
                merged.push_back(lambda.part(j));
            }
        }
        if (leq_composition_oracle(mu, Composition(merged))) return true;
    }
    return false;
}

// Independent leq_partition oracle: enumerate every set partition of q's
// index set into l(p) blocks and compare block-sum multisets.
bool leq_partition_oracle(const Partition& p, const Partition& q) {
    if (p.length() > q.length()) return false;
    std::vector<int> assign(static_cast<std::size_t>(q.length()), 0);
    const int blocks = p.length();
    std::vector<int> target = p.parts();
    std::sort(target.begin(), target.end());
    while (true) {
        std::vector<int> sums(static_cast<std::size_t>(blocks), 0);
        for (int i = 0; i < q.length(); ++i)
            sums[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])] += q.part(i);
        std::vector<int> sorted_sums = sums;
        std::sort(sorted_sums.begin(), sorted_sums.end());
        bool all_nonempty = std::find(sorted_sums.begin(), sorted_sums.end(), 0) ==
                            sorted_sums.end();
        if (all_nonempty && sorted_sums == target) return true;
        int i = 0;
        while (i < q.length()) {
            if (++assign[static_cast<std::size_t>(i)] < blocks) break;
            assign[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == q.length()) return false;
    }
}

} // namespace

TEST_CASE("composition invariants and prefix masks") {
    Composition c = comp({1, 2, 2, 1});
    CHECK(c.n() == 6);
    CHECK(c.length() == 4);
    // prefix sums 1,3,5,6
    CHECK(c.prefix_mask() == ((1ULL << 0) | (1ULL << 2) | (1ULL << 4) | (1ULL << 5)));
    CHECK(c.inner_mask() == ((1ULL << 0) | (1ULL << 2) | (1ULL << 4)));
    CHECK(Composition::from_inner_mask(c.inner_mask(), 6) == c);
    CHECK(c.reversed() == comp({1, 2, 2, 1}));
    CHECK(comp({2, 1, 3}).reversed() == comp({3, 1, 2}));
    CHECK_THROWS_AS(comp({0, 3}), std::domain_error);
    CHECK_THROWS_AS(comp({}), std::domain_error);
    CHECK_THROWS_AS(comp(std::vector<int>(65, 1)), std::domain_error);
}

TEST_CASE("enumerate_compositions counts and order") {
    CHECK(enumerate_compositions(6, 4).size() == 10);
    CHECK(enumerate_compositions(5, 1) == std::vector<Composition>{comp({5})});
    CHECK(enumerate_compositions(4, 2) ==
          std::vector<Composition>{comp({1, 3}), comp({2, 2}), comp({3, 1})});
    for (int n = 1; n <= 12; ++n)
        for (int l = 1; l <= n; ++l)
            CHECK(static_cast<long long>(enumerate_compositions(n, l).size()) ==
                  binomial(n - 1, l - 1));
    CHECK_THROWS_AS(enumerate_compositions(4, 5), std::domain_error);
    CHECK_THROWS_AS(enumerate_compositions(4, 0), std::domain_error);
}

TEST_CASE("enumerate_partitions against brute force") {
    CHECK(enumerate_partitions(4, 2) == std::vector<Partition>{part({3, 1}), part({2, 2})});
    CHECK(enumerate_partitions(6, 2) ==
          std::vector<Partition>{part({5, 1}), part({4, 2}), part({3, 3})});
    CHECK(enumerate_partitions(5, 5) == std::vector<Partition>{part({1, 1, 1, 1, 1})});
    // brute force via sorted compositions
    for (int n = 1; n <= 10; ++n) {
        for (int l = 1; l <= n; ++l) {
            std::set<std::vector<int>> expect;
            for (const Composition& c : enumerate_compositions(n, l))
                expect.insert(sorted_partition(c).parts());
            std::set<std::vector<int>> got;
            for (const Partition& p : enumerate_partitions(n, l)) got.insert(p.parts());
            CHECK(got == expect);
            CHECK(static_cast<long long>(got.size()) == count_partitions(n, l));
        }
    }
}

TEST_CASE("composition order matches the merge oracle") {
    CHECK(leq_composition(comp({3, 3}), comp({1, 2, 2, 1})));
    CHECK_FALSE(leq_composition(comp({2, 4}), comp({1, 2, 2, 1})));
    CHECK(leq_composition(comp({6}), comp({1, 2, 2, 1})));
    CHECK_THROWS_AS(leq_composition(comp({3, 2}), comp({3, 3})), std::domain_error);
    for (int n = 1; n <= 7; ++n) {
        std::vector<Composition> all;
        for (int l = 1; l <= n; ++l)
            for (const Composition& c : enumerate_compositions(n, l)) all.push_back(c);
        for (const Composition& a : all)
            for (const Composition& b : all)
                CHECK(leq_composition(a, b) == leq_composition_oracle(a, b));
    }
}

TEST_CASE("prefix-mask map is injective") {
    for (int n = 1; n <= 8; ++n) {
        std::set<std::uint64_t> masks;
        int total = 0;
        for (int l = 1; l <= n; ++l)
            for (const Composition& c : enumerate_compositions(n, l)) {
                masks.insert(c.prefix_mask());
                ++total;
            }
        CHECK(static_cast<int>(masks.size()) == total);
    }
}

TEST_CASE("quotient basics") {
    CHECK(quotient(comp({3, 3}), comp({1, 2, 2, 1})) == comp({2, 2}));
    CHECK(quotient(comp({6}), comp({1, 2, 2, 1})) == comp({4}));
    Composition mu = comp({1, 2, 2, 1});
    CHECK(quotient(mu, mu) == comp({1, 1, 1, 1}));
    CHECK_THROWS_AS(quotient(comp({2, 4}), comp({1, 2, 2, 1})), std::domain_error);
}

TEST_CASE("quotient transitivity law, exhaustive for n <= 8") {
    for (int n = 2; n <= 8; ++n) {
        std::vector<Composition> all;
        for (int l = 1; l <= n; ++l)
            for (const Composition& c : enumerate_compositions(n, l)) all.push_back(c);
        for (const Composition& mu : all) {
            // lambda <= gamma <= mu
            std::vector<Composition> below;
            for (const Composition& c : all)
                if (leq_composition(c, mu)) below.push_back(c);
            for (const Composition& gamma : below) {
                for (const Composition& lambda : below) {
                    if (!leq_composition(lambda, gamma)) continue;
                    Composition lg = quotient(lambda, gamma);
                    Composition lm = quotient(lambda, mu);
                    Composition gm = quotient(gamma, mu);
                    CHECK(leq_composition(lm, gm));
                    CHECK(quotient(lm, gm) == lg);
                }
                // order equivalence: lambda < gamma iff lambda/mu < gamma/mu
                for (const Composition& lambda : below) {
                    CHECK(leq_composition(lambda, gamma) ==
                          leq_composition(quotient(lambda, mu), quotient(gamma, mu)));
                }
            }
        }
    }
}

TEST_CASE("alternate odd/even classification") {
    CHECK(is_alternate_odd(comp({2, 1, 3, 1})));
    CHECK_FALSE(is_alternate_even(comp({2, 1, 3, 1})));
    CHECK_FALSE(is_alternate_odd(comp({1, 2, 1, 3})));
    CHECK(is_alternate_even(comp({1, 2, 1, 3})));
    CHECK(is_alternate_odd(comp({1, 1, 1, 1})));
    CHECK(is_alternate_even(comp({1, 1, 1, 1})));
    CHECK(is_alternate_even(comp({6})));  // no constrained position
    CHECK_FALSE(is_alternate_odd(comp({6})));
}

TEST_CASE("reversal acts on the parity patterns by length parity") {
    // Reversal maps position k to l+1-k, so the constrained positions swap
    // between the two patterns exactly when the length is even; for odd
    // length each pattern is preserved. ((1,2,1) is alternate odd and equals
    // its own reversal, so a blanket swap law would be false.)
    CHECK(is_alternate_odd(comp({1, 2, 1})));
    CHECK(is_alternate_odd(comp({1, 2, 1}).reversed()));
    CHECK(is_alternate_even(comp({1, 1, 2}).reversed()));
    for (int n = 1; n <= 9; ++n) {
        for (int l = 1; l <= n; ++l) {
            for (const Composition& c : enumerate_compositions(n, l)) {
                bool odd = is_alternate_odd(c), even = is_alternate_even(c);
                Composition r = c.reversed();
                if (l % 2 == 0) {
                    CHECK(is_alternate_odd(r) == even);
                    CHECK(is_alternate_even(r) == odd);
                } else {
                    CHECK(is_alternate_odd(r) == odd);
                    CHECK(is_alternate_even(r) == even);
                }
                if (odd && even) CHECK(c == Composition::ones(n));
            }
        }
    }
}

TEST_CASE("upper covers") {
    auto covers = upper_covers(comp({1, 1, 2, 2}));
    CHECK(covers == std::vector<Composition>{comp({1, 1, 1, 1, 2}), comp({1, 1, 2, 1, 1})});
    CHECK(upper_covers(comp({1, 1, 1, 1})).empty());
    CHECK(upper_covers(comp({3})) == std::vector<Composition>{comp({1, 2}), comp({2, 1})});
    // covering relations generate the order: each cover has length + 1
    for (const Composition& c : enumerate_compositions(7, 3))
        for (const Composition& up : upper_covers(c)) {
            CHECK(up.length() == 4);
            CHECK(leq_composition(c, up));
        }
}

TEST_CASE("leq_partition matches the set-partition oracle up to n = 9") {
    CHECK(leq_partition(part({2, 2, 1, 1}), part({2, 2, 1, 1})));
    CHECK(leq_partition(part({3, 1, 1, 1}), part({2, 1, 1, 1, 1})));
    CHECK_FALSE(leq_partition(part({2, 2, 2}), part({3, 1, 1, 1})));
    CHECK_THROWS_AS(leq_partition(part({2, 2}), part({3, 3})), std::domain_error);
    for (int n = 2; n <= 9; ++n) {
        std::vector<Partition> all;
        for (int l = 1; l <= n; ++l)
            for (const Partition& p : enumerate_partitions(n, l)) all.push_back(p);
        for (const Partition& p : all)
            for (const Partition& q : all)
                CHECK(leq_partition(p, q) == leq_partition_oracle(p, q));
    }
}

TEST_CASE("equal-length dominance forces equality") {
    for (int n = 2; n <= 9; ++n)
        for (int l = 1; l <= n; ++l) {
            auto ps = enumerate_partitions(n, l);
            for (const Partition& p : ps)
                for (const Partition& q : ps)
                    if (leq_partition(p, q)) CHECK(p == q);
        }
}

TEST_CASE("min_max_sets for the worked instances") {
    MinMaxSets r = min_max_sets(6, 4);
    CHECK(r.c_min == std::vector<Composition>{comp({1, 1, 3, 1}), comp({2, 1, 2, 1}),
                                              comp({3, 1, 1, 1})});
    CHECK(r.p_min == std::vector<Partition>{part({3, 1, 1, 1}), part({2, 2, 1, 1})});
    CHECK(r.p_min.size() == 2);
    CHECK(static_cast<long long>(r.p_min.size()) == count_partitions(4, 2));

    MinMaxSets r84 = min_max_sets(8, 4);
    CHECK(r84.p_min.size() == 3);
    CHECK(static_cast<long long>(r84.p_min.size()) == count_partitions(6, 2));

    // s = 1: only n = 1 has an alternate-odd composition
    CHECK(min_max_sets(1, 1).c_min == std::vector<Composition>{comp({1})});
    CHECK(min_max_sets(5, 1).c_min.empty());
    CHECK(min_max_sets(5, 1).c_max == std::vector<Composition>{comp({5})});
}

TEST_CASE("p_min size law across the range") {
    for (int n = 2; n <= 11; ++n)
        for (int s = 2; s <= n; ++s)
            CHECK(static_cast<long long>(min_max_sets(n, s).p_min.size()) ==
                  count_partitions(n - (s + 1) / 2, s / 2));
}
