#ifndef HYPERSTRATA_BOUNDS_HPP
#define HYPERSTRATA_BOUNDS_HPP

#include <vector>

#include "hyperstrata/poset.hpp"

namespace hyperstrata {

/// f-vector (f_0,...,f_{d-1}) of the d-dimensional cyclic polytope on m
/// vertices, counted combinatorially through Gale's evenness condition.
/// The polytope is never embedded.
std::vector<long long> cyclic_face_vector(int d, int m);

/// Per-index truth of f_{n-s-i} <= c_{i-1}, where c comes from the cyclic
/// (n-s)-polytope on f_{n-s-1} vertices.
std::vector<bool> ubt_check(const FaceVectors& fv, int n, int s);

/// The closed-form cap on the number of zero-dimensional strata: the facet
/// count of the cyclic (n-s)-polytope on n-1 vertices.
long long f0_bound(int n, int s);

/// |P(n - ceil(s/2), floor(s/2))|: the size of the covering built from the
/// minimal-polynomial partitions.
long long covering_upper_bound(int n, int s);

/// Pigeonhole lower bound on any (n,s)-Vandermonde covering.
long long covering_lower_trivial(int n, int s);

struct RecursiveLowerBound {
    long long value = 0;
    std::vector<long long> b;  // B_0..B_{floor(s/2)}
};

/// Recursive lower bound: B_0 = 0, B_1 = 1,
/// B_i = ceil(2(|P(n-s+1,i)| - i B_{i-1} - B_{i-2}) / (i^2+i)), clamped at 0.
RecursiveLowerBound covering_lower_recursive(int n, int s);

struct BoundReport {
    int n = 0;
    int s = 0;
    long long f0 = 0;
    long long covering_upper = 0;
    long long covering_lower_trivial = 0;
    long long covering_lower_recursive = 0;
    std::vector<long long> b;
};

BoundReport bound_report(int n, int s);

} // namespace hyperstrata

#endif
