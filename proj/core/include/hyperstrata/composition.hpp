#ifndef HYPERSTRATA_COMPOSITION_HPP
#define HYPERSTRATA_COMPOSITION_HPP

#include <compare>
#include <cstdint>
#include <vector>

namespace hyperstrata {

/// An ordered tuple of positive integers summing to n. Labels a stratum of a
/// hyperbolic slice: part i is the multiplicity of the i-th distinct root.
///
/// The prefix-sum set (excluding 0) is cached as a bitmask, which makes the
/// refinement order a subset test. This caps n at 64; larger n is rejected.
class Composition {
public:
    static constexpr int kMaxN = 64;

    explicit Composition(std::vector<int> parts);

    static Composition single(int n);  // (n)
    static Composition ones(int n);    // (1,...,1)
    // Rebuilds a composition of n from its inner prefix-sum mask
    // (bit k-1 set <=> k is a prefix sum, 1 <= k <= n-1).
    static Composition from_inner_mask(std::uint64_t inner, int n);

    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }

    // Bit k-1 set <=> k is a prefix sum, 1 <= k <= n. Bit n-1 is always set.
    std::uint64_t prefix_mask() const { return mask_; }
    // Prefix sums excluding n, i.e. the subset of [n-1] identifying the
    // composition among all compositions of n.
    std::uint64_t inner_mask() const;

    Composition reversed() const;

    bool operator==(const Composition&) const = default;
    auto operator<=>(const Composition& o) const { return parts_ <=> o.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
    std::uint64_t mask_ = 0;
};

/// Weakly decreasing positive parts summing to n: an orbit type of the
/// symmetric group acting on root multisets.
class Partition {
public:
    explicit Partition(std::vector<int> parts);

    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Sorts the parts decreasingly.
Partition sorted_partition(const Composition& mu);

/// All compositions of n into exactly l parts, lexicographically increasing.
std::vector<Composition> enumerate_compositions(int n, int l);

/// All partitions of n into exactly l parts, lexicographically decreasing.
std::vector<Partition> enumerate_partitions(int n, int l);

/// Number of partitions of n into exactly l parts.
long long count_partitions(int n, int l);

/// mu <= lambda in the refinement order: mu is obtained from lambda by
/// merging adjacent parts, equivalently PrefixSums(mu) is contained in
/// PrefixSums(lambda). (n) is the global minimum, (1,...,1) the maximum.
bool leq_composition(const Composition& mu, const Composition& lambda);

/// For lambda <= mu, the composition nu of length l(lambda) with parts
/// summing to l(mu): grouping mu's parts into consecutive blocks of sizes
/// nu reproduces lambda.
Composition quotient(const Composition& lambda, const Composition& mu);

// Parity patterns counted from the last part: alternate odd has
// mu_l = mu_{l-2} = ... = 1, alternate even has mu_{l-1} = mu_{l-3} = ... = 1.
bool is_alternate_odd(const Composition& mu);
bool is_alternate_even(const Composition& mu);

/// All compositions obtained by splitting exactly one part of mu in two.
std::vector<Composition> upper_covers(const Composition& mu);

/// Partition dominance: p <= q iff q's parts can be grouped into l(p)
/// blocks whose sums are exactly p's parts (summing then reordering).
bool leq_partition(const Partition& p, const Partition& q);

/// The compositions of n into s parts that label minimal (alternate odd)
/// and maximal (alternate even) polynomials, with their partition images.
struct MinMaxSets {
    std::vector<Composition> c_min;  // alternate odd, lex increasing
    std::vector<Composition> c_max;  // alternate even, lex increasing
    std::vector<Partition> p_min;    // deduplicated, lex decreasing
    std::vector<Partition> p_max;
};
MinMaxSets min_max_sets(int n, int s);

long long binomial(int n, int k);

} // namespace hyperstrata

#endif
