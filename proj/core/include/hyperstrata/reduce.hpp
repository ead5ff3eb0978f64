#ifndef HYPERSTRATA_REDUCE_HPP
#define HYPERSTRATA_REDUCE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hyperstrata/composition.hpp"
#include "hyperstrata/exact.hpp"

namespace hyperstrata {

/// Sparse multivariate polynomial with exact rational coefficients,
/// exponent vectors as keys.
struct MPoly {
    int nvars = 0;
    std::map<std::vector<int>, Rational> terms;

    static MPoly constant(int nvars, const Rational& c);
    static MPoly variable(int nvars, int index);
    MPoly operator+(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly pow(int e) const;
    double eval(const std::vector<double>& x) const;
    std::vector<double> gradient(const std::vector<double>& x) const;
    void prune_zeros();
};

/// E_i of the multiset repeating x_j with multiplicity mult[j], expanded as
/// a polynomial in x_1..x_l with integer coefficients.
MPoly elementary_symmetric_pattern(int i, const std::vector<int>& mult);

/// A polynomial system in Z_1..Z_s, the elementary-symmetric coordinates.
struct SymbolicSystem {
    int z_count = 0;
    std::vector<MPoly> polys;
};

struct ReduceConfig {
    bool solve = true;  // attempt a multistart certificate on each reduction
    int starts = 400;
    double box = 0.0;  // 0: derived from n
    double tol = 1e-9;
    std::uint64_t seed = 0;
    int newton_iters = 80;
};

struct ReducedSystem {
    Partition pattern;
    std::vector<MPoly> polys;  // in l(pattern) variables
    std::optional<std::vector<double>> certificate;
    double certificate_residual = 0.0;
};

/// Substitutes Z_i -> E_i^q into the system for each pattern q, expanding
/// with exact rational coefficients. With solve on, a multistart
/// Gauss-Newton run looks for a real point of each reduced system; any
/// point found certifies nonemptiness of the original symmetric variety.
std::vector<ReducedSystem> reduce_symmetric(const SymbolicSystem& system, int n,
                                            const std::vector<Partition>& patterns,
                                            const ReduceConfig& config = {});

} // namespace hyperstrata

#endif
