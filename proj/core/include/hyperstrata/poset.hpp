#ifndef HYPERSTRATA_POSET_HPP
#define HYPERSTRATA_POSET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperstrata/composition.hpp"

namespace hyperstrata {

/// The lattice L(S) over a facet set S of length-s compositions of n:
/// the upward closure of S in the refinement order, plus the formal
/// bottom (n). Elements of length s+i label the i-dimensional strata.
///
/// After annotate_min_max, every element lambda carries the facet indices
/// whose quotients mu/lambda are alternate odd (mu_min) and alternate even
/// (mu_max), or a failure marker when existence or uniqueness breaks.
struct StrataPoset {
    struct Annotation {
        int mu_min = -1;         // facet index, -1 when missing/ambiguous
        int mu_max = -1;
        int odd_candidates = 0;  // dominated facets with alternate-odd quotient
        int even_candidates = 0;
    };

    int n = 0;
    int s = 0;
    std::vector<Composition> facets;       // lex sorted
    // levels[i] holds the elements of length s+i, lex sorted; the last level
    // is {(1,...,1)}. The formal bottom (n) is implicit and excluded from
    // all axiom checks.
    std::vector<std::vector<Composition>> levels;
    bool annotated = false;
    std::vector<std::vector<Annotation>> annotations;  // parallel to levels

    int dimension() const { return n - s; }
    const Annotation& annotation_of(int level, int idx) const {
        return annotations[static_cast<std::size_t>(level)][static_cast<std::size_t>(idx)];
    }
    // Index of an element within its level, or -1.
    int index_in_level(const Composition& lambda) const;
};

StrataPoset build_poset(std::vector<Composition> facets, int n, int s);

/// Classifies, for every element, the dominated facets by quotient parity.
void annotate_min_max(StrataPoset& poset);

struct PotentialCheck {
    bool potential = false;
    std::optional<Composition> first_failure;
    std::string reason;
};

/// Whether every element of L(S) has a unique alternate-odd and a unique
/// alternate-even dominated facet.
PotentialCheck is_potential(const std::vector<Composition>& facets, int n, int s);
PotentialCheck check_potential(const StrataPoset& annotated_poset);

/// The simplicial complex dual to the strata poset: the face of an element
/// is the complement in [n-1] of its inner prefix-sum set, so facets of the
/// complex correspond to S and the empty face to (1,...,1).
struct DualComplex {
    int ground_size = 0;                    // n-1
    int facet_size = 0;                     // n-s
    std::vector<std::uint64_t> facet_masks; // order matches poset.facets
    std::vector<std::vector<std::uint64_t>> faces_by_size;  // [0..facet_size]

    int dimension() const { return facet_size - 1; }
};

DualComplex dual_complex(const StrataPoset& poset);

/// Every (n-s-1)-element face lies in exactly two facets. Part of the
/// combinatorial-sphere certificate.
bool ridges_in_two_facets(const DualComplex& complex);

/// Strata counts by dimension and their binomial transform.
struct FaceVectors {
    int d = 0;
    std::vector<long long> f;  // f[0..d], f[d] = 1
    std::vector<long long> h;  // h[0..d]
};

FaceVectors face_vectors(const StrataPoset& poset);
std::vector<long long> h_from_f(const std::vector<long long>& f);
std::vector<long long> f_from_h(const std::vector<long long>& h);

bool dehn_sommerville_check(const std::vector<long long>& h);
bool macaulay_check(const std::vector<long long>& g);
bool g_theorem_check(const std::vector<long long>& h);

/// A facet order refining <=_p: the partial order generated by
/// mu_min(lambda) -> mu_max(lambda) over the length-(s+1) elements.
/// Deterministic (lexicographic tie-break). Throws structural_error on a
/// cycle, which would contradict shellability.
std::vector<int> shelling_order(const StrataPoset& poset);

struct ShellingReport {
    bool valid = false;
    std::vector<int> restriction_sizes;  // |R_j| per facet in order
    std::string reason;
};

/// Checks the prefix-intersection condition facet by facet; restriction_sizes
/// histogram equals the h-vector for shellable complexes.
ShellingReport verify_shelling(const DualComplex& complex, const std::vector<int>& order);

/// Graphviz rendering of the Hasse diagram, strata labeled by composition
/// and annotated with their min/max facets.
std::string to_dot(const StrataPoset& poset);

} // namespace hyperstrata

#endif
