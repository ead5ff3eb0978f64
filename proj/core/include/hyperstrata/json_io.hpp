#ifndef HYPERSTRATA_JSON_IO_HPP
#define HYPERSTRATA_JSON_IO_HPP

#include <json.hpp>

#include "hyperstrata/bounds.hpp"
#include "hyperstrata/composition.hpp"
#include "hyperstrata/covering.hpp"
#include "hyperstrata/polynomial.hpp"
#include "hyperstrata/poset.hpp"
#include "hyperstrata/realize.hpp"
#include "hyperstrata/reduce.hpp"

namespace hyperstrata {

inline constexpr const char* kSchemaVersion = "1";

using json = nlohmann::ordered_json;

// Compositions and partitions travel as plain integer arrays, e.g. [1,2,2,1].
json to_json(const Composition& c);
json to_json(const Partition& p);
Composition composition_from_json(const json& j);
Partition partition_from_json(const json& j);

std::vector<Composition> facets_from_json(const json& j);

json poset_report_json(const StrataPoset& poset, const PotentialCheck& check,
                       const FaceVectors& fv, const std::vector<int>* shelling_order,
                       const ShellingReport* shelling);
json bound_report_json(const BoundReport& rep);
json families_json(int n, int s, const std::vector<std::vector<Composition>>& families,
                   bool up_to_reversal);
json cover_solution_json(const CoveringInstance& instance);
json cover_check_json(const std::vector<Partition>& p,
                      const std::vector<std::vector<Composition>>& family,
                      const CoveringCheck& check);
json realization_json(const SliceRealization& r);
json reduce_json(int n, const std::vector<ReducedSystem>& systems);

/// {"n":..,"coeffs":[H_1..H_n]} or {"roots":[..]}.
HyperbolicPoly poly_from_json(const json& j);

/// {"n":..,"polys":[{"terms":[{"coef":"1","monomial":{"Z1":1}}]},..]}; the
/// Z count is the highest index that appears unless "s" is given.
struct ParsedSystem {
    int n = 0;
    SymbolicSystem system;
};
ParsedSystem system_from_json(const json& j);

} // namespace hyperstrata

#endif
