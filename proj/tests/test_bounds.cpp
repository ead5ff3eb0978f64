#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "hyperstrata/bounds.hpp"

using namespace hyperstrata;

namespace {

// Closed-form h-vector route for the cyclic polytope: C_d(m) is
// floor(d/2)-neighborly with h_i = binom(m-d-1+i, i) on the first half and
// palindromic, so f comes out of the standard transform. Independent of the
// Gale-evenness enumeration.
std::vector<long long> cyclic_f_via_h(int d, int m) {
    std::vector<long long> h(static_cast<std::size_t>(d) + 1, 0);
    for (int i = 0; i <= d / 2; ++i) {
        h[static_cast<std::size_t>(i)] = binomial(m - d - 1 + i, i);
        h[static_cast<std::size_t>(d - i)] = h[static_cast<std::size_t>(i)];
    }
    std::vector<long long> f = f_from_h(h);  // f[0..d] with f[d] = 1 convention
    // translate to the polytope's (f_0,...,f_{d-1}): our f_from_h yields the
    // strata convention, where f[i] counts the faces of size d-i
    std::vector<long long> out(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(d - 1 - i)];
    return out;
}

} // namespace

TEST_CASE("cyclic polytope face vectors") {
    CHECK(cyclic_face_vector(4, 6) == std::vector<long long>{6, 15, 18, 9});
    CHECK(cyclic_face_vector(2, 7) == std::vector<long long>{7, 7});
    CHECK(cyclic_face_vector(3, 5) == std::vector<long long>{5, 9, 6});
    CHECK_THROWS_AS(cyclic_face_vector(4, 4), std::domain_error);
}

TEST_CASE("cyclic face vectors agree with the h-vector closed form") {
    for (int d = 1; d <= 8; ++d) {
        for (int m = d + 1; m <= 14; ++m) {
            std::vector<long long> gale = cyclic_face_vector(d, m);
            CHECK(gale == cyclic_f_via_h(d, m));
            // Euler relation: alternating sum is 1 - (-1)^d
            long long alt = 0;
            for (int i = 0; i < d; ++i)
                alt += (i % 2 == 0 ? 1 : -1) * gale[static_cast<std::size_t>(i)];
            CHECK(alt == (d % 2 == 0 ? 0 : 2));
        }
    }
}

TEST_CASE("cyclic h-vector is palindromic (dehn-sommerville)") {
    for (int d = 1; d <= 8; ++d)
        for (int m = d + 1; m <= 14; ++m) {
            std::vector<long long> fv = cyclic_face_vector(d, m);
            // strata convention: f[i] counts size-(d-i) faces, f[d] = 1
            std::vector<long long> f(static_cast<std::size_t>(d) + 1);
            for (int i = 0; i < d; ++i) f[static_cast<std::size_t>(i)] = fv[static_cast<std::size_t>(d - 1 - i)];
            f[static_cast<std::size_t>(d)] = 1;
            CHECK(dehn_sommerville_check(h_from_f(f)));
        }
}

TEST_CASE("ubt_check on the worked example and a negative control") {
    FaceVectors fv;
    fv.d = 2;
    fv.f = {4, 4, 1};
    fv.h = h_from_f(fv.f);
    std::vector<bool> ok = ubt_check(fv, 6, 4);
    CHECK(ok == std::vector<bool>{true, true});

    FaceVectors bad;
    bad.d = 2;
    bad.f = {9, 4, 1};  // more vertices than the cyclic polytope on 4 ridges allows
    bad.h = h_from_f(bad.f);
    std::vector<bool> fail = ubt_check(bad, 6, 4);
    CHECK_FALSE(fail[1]);
}

TEST_CASE("f0_bound values and the ubt cross-check") {
    CHECK(f0_bound(6, 3) == 6);
    CHECK(f0_bound(8, 4) == 14);
    CHECK(f0_bound(6, 6) == 1);
    CHECK(f0_bound(6, 4) == 5);
    // f0_bound(n,s) equals the facet count of the cyclic (n-s)-polytope on
    // n-1 vertices
    for (int n = 3; n <= 10; ++n)
        for (int s = 2; s < n; ++s) {
            int d = n - s;
            std::vector<long long> c = cyclic_face_vector(d, n - 1);
            CHECK(f0_bound(n, s) == c[static_cast<std::size_t>(d) - 1]);
        }
}

TEST_CASE("covering bound values") {
    CHECK(covering_upper_bound(8, 4) == 3);
    CHECK(covering_upper_bound(6, 4) == 2);
    CHECK(covering_lower_trivial(6, 4) == 1);
    RecursiveLowerBound r = covering_lower_recursive(8, 4);
    CHECK(r.value == 1);
    CHECK(r.b == std::vector<long long>{0, 1, 0});
    CHECK_THROWS_AS(covering_upper_bound(5, 1), std::domain_error);
}

TEST_CASE("bound report invariants") {
    for (int n = 4; n <= 12; ++n)
        for (int s = 2; s <= n; ++s) {
            BoundReport rep = bound_report(n, s);
            CHECK(rep.covering_lower_trivial <= rep.covering_upper);
            CHECK(rep.covering_lower_recursive <= rep.covering_upper);
            CHECK(rep.covering_lower_trivial >= 0);
            CHECK(rep.covering_lower_recursive >= 0);
            CHECK(rep.f0 >= 1);
            for (long long b : rep.b) CHECK(b >= 0);
        }
}
