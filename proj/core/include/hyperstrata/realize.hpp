#ifndef HYPERSTRATA_REALIZE_HPP
#define HYPERSTRATA_REALIZE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperstrata/composition.hpp"
#include "hyperstrata/polynomial.hpp"

namespace hyperstrata {

struct SolveConfig {
    // Residual gate |E_i^mu(x) - (-1)^i F_i| <= tol_sys * max(1, |target|_inf);
    // absolute at unit coefficient scale, scale-relative above it (a double
    // root tuple cannot beat the gradient*ulp floor on large integer slices).
    double tol_sys = 1e-9;
    // Coordinates closer than this are one root; solutions with such a
    // collision are degenerate and reported under the merged composition.
    double tol_sep = 1e-6;
    double tol_grad = 1e-7;
    int random_starts_per_s = 200;  // random Newton starts = this * s
    int newton_iters = 80;
    std::uint64_t seed = 0;
    int jobs = 1;
    int escalations = 2;  // budget quadruples this many times on axiom failure
};

struct VertexSolution {
    Composition label;      // merged composition for degenerate solutions
    Composition found_via;  // the length-s system that produced it
    std::vector<double> x;  // increasing; strictly so unless degenerate
    std::vector<double> tail_coeffs;  // H_{s+1},...,H_n
    double residual = 0.0;
    bool degenerate = false;
};

/// Zero-dimensional strata of H_s(F) labeled by mu: the solutions of
/// E_i^mu(x) = (-1)^i F_i, i = 1..s, inside the open Weyl chamber, found by
/// damped Newton from clustering and random starts. Degenerate solutions
/// (coordinate collisions) are kept, relabeled by their merged composition.
/// Empty output is a valid result. Deterministic for a fixed seed.
std::vector<VertexSolution> solve_vertices(const HyperbolicPoly& f, int s,
                                           const Composition& mu, const SolveConfig& config);

struct SliceRealization {
    HyperbolicPoly f;
    int s = 0;
    std::vector<Composition> realized_facets;  // lex sorted, strict vertices only
    std::map<Composition, std::vector<VertexSolution>> vertices;
    std::vector<VertexSolution> degenerate;
    bool generic = false;
    // True when either the slice is non-generic, or the realized facet set
    // passed the potential-poset axioms within the escalation budget. A
    // false value is the incompleteness signal (CLI exit 4).
    bool complete = false;
    int escalations_used = 0;
};

SliceRealization realize_slice(const HyperbolicPoly& f, int s, const SolveConfig& config);

struct MinMaxReport {
    bool ok = false;
    bool extremes_ok = false;          // min/max coefficient vertices are alternate odd/even
    bool edges_ok = false;             // per 1-dim stratum, mu_min has the smaller coefficient
    bool linear_extension_ok = false;  // coefficient sort refines <=_p
    bool skipped = false;              // s < 2: no minimal polynomial exists
    std::vector<std::string> violations;
};

/// Numeric check of the stratum min/max law on a generic realization.
MinMaxReport verify_min_max(const SliceRealization& r);

struct RandomRealizeConfig {
    long long budget = 300;      // candidate polynomials to try
    int root_range = 0;          // 0 means the default 3n
    std::uint64_t seed = 0;
    SolveConfig solve;           // used for the confirmation pass
    int hill_climb_rounds = 3;
};

struct RandomRealizeResult {
    std::optional<HyperbolicPoly> witness;
    long long tried = 0;
    bool attains_f0_bound = false;
};

/// Searches for a hyperbolic polynomial whose realized facet set equals the
/// target, by random distinct integer roots plus coordinate-wise
/// hill-climbing. Absence of a witness within budget is a valid outcome.
RandomRealizeResult random_realize(const std::vector<Composition>& target, int n, int s,
                                   const RandomRealizeConfig& config);

} // namespace hyperstrata

#endif
