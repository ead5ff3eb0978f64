#ifndef HYPERSTRATA_COVERING_HPP
#define HYPERSTRATA_COVERING_HPP

#include <optional>
#include <string>
#include <vector>

#include "hyperstrata/composition.hpp"

namespace hyperstrata {

struct EnumerateOptions {
    bool up_to_reversal = false;
    bool force = false;  // lifts the documented n,s <= 9 scale guard
    int jobs = 1;
};

/// All facet sets S of C(n,s) whose upward closure satisfies the
/// potential-poset axioms. Output is deterministic: families sorted by
/// (size, lex), each family lex sorted. With up_to_reversal, families are
/// identified with their elementwise reversals and the representative whose
/// unique alternate-odd facet is lex-least is kept.
std::vector<std::vector<Composition>> enumerate_potential(int n, int s,
                                                          const EnumerateOptions& opts = {});

/// Canonical representative of {S, reverse(S)} under the alternate-odd rule.
std::vector<Composition> reversal_canonical(std::vector<Composition> family);

struct CoverWitness {
    Partition q;
    Composition lambda;
};

struct CoveringCheck {
    bool covering = false;
    // Per family member: the witnessing (q, lambda), or nullopt if uncovered.
    std::vector<std::optional<CoverWitness>> witnesses;
};

/// P covers the family iff every facet set S admits a stratum lambda in L(S)
/// whose sorted partition is dominated by some q in P. Only length-s strata
/// can match, but all of L(S) is scanned.
CoveringCheck is_covering(const std::vector<Partition>& p,
                          const std::vector<std::vector<Composition>>& family);

enum class CoverMethod { kExact, kGreedy };

struct MinCoverResult {
    std::vector<Partition> partitions;
    CoverMethod method = CoverMethod::kExact;
    // Minimality is certified over the potential family only; whether that
    // equals minimality over realizable slices rests on the realizability
    // conjecture unless witnesses are produced numerically.
    std::string caveat;
};

MinCoverResult min_cover(const std::vector<std::vector<Composition>>& family, int n, int s,
                         CoverMethod method);

/// Verifies that {(2,2,1,...,1)} covers the enumerated (n, n-2) family.
bool known_cover_check(int n, const EnumerateOptions& opts = {});

/// An (n,s) covering problem bundled for serialization.
struct CoveringInstance {
    int n = 0;
    int s = 0;
    std::vector<std::vector<Composition>> family;
    std::vector<Partition> candidates;
    std::optional<MinCoverResult> solution;
};

} // namespace hyperstrata

#endif
