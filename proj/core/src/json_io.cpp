#include "hyperstrata/json_io.hpp"

#include <stdexcept>

namespace hyperstrata {

json to_json(const Composition& c) {
    json j = json::array();
    for (int p : c.parts()) j.push_back(p);
    return j;
}

json to_json(const Partition& p) {
    json j = json::array();
    for (int v : p.parts()) j.push_back(v);
    return j;
}

Composition composition_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::domain_error("expected a nonempty array of parts");
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return Composition(std::move(parts));
}

Partition partition_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::domain_error("expected a nonempty array of parts");
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return Partition(std::move(parts));
}

std::vector<Composition> facets_from_json(const json& j) {
    if (!j.is_array()) throw std::domain_error("expected an array of compositions");
    std::vector<Composition> out;
    for (const auto& item : j) out.push_back(composition_from_json(item));
    return out;
}

json poset_report_json(const StrataPoset& poset, const PotentialCheck& check,
                       const FaceVectors& fv, const std::vector<int>* order,
                       const ShellingReport* shelling) {
    json j;
    j["schema"] = kSchemaVersion;
    j["n"] = poset.n;
    j["s"] = poset.s;
    j["facets"] = json::array();
    for (const Composition& mu : poset.facets) j["facets"].push_back(to_json(mu));
    j["elements_by_length"] = json::object();
    for (std::size_t lvl = 0; lvl < poset.levels.size(); ++lvl) {
        json arr = json::array();
        for (const Composition& lambda : poset.levels[lvl]) arr.push_back(to_json(lambda));
        j["elements_by_length"][std::to_string(poset.s + static_cast<int>(lvl))] = std::move(arr);
    }
    j["f"] = fv.f;
    j["h"] = fv.h;
    // the cyclic comparison needs at least d+1 vertices, which only the
    // sphere theorem guarantees; degenerate diagnostic inputs skip it
    if (fv.d == 0 || fv.f[static_cast<std::size_t>(fv.d) - 1] >= fv.d + 1) {
        json ubt = json::array();
        for (bool ok : ubt_check(fv, poset.n, poset.s)) ubt.push_back(ok);
        j["ubt_ok"] = std::move(ubt);
    } else {
        j["ubt_ok"] = nullptr;
    }
    j["potential"] = check.potential;
    if (!check.potential) j["failure"] = check.reason;
    if (order) {
        json arr = json::array();
        for (int idx : *order)
            arr.push_back(to_json(poset.facets[static_cast<std::size_t>(idx)]));
        j["shelling"] = std::move(arr);
    }
    if (shelling) {
        j["shelling_valid"] = shelling->valid;
        j["restriction_sizes"] = shelling->restriction_sizes;
    }
    return j;
}

json bound_report_json(const BoundReport& rep) {
    json j;
    j["schema"] = kSchemaVersion;
    j["n"] = rep.n;
    j["s"] = rep.s;
    j["f0_bound"] = rep.f0;
    j["covering_upper"] = rep.covering_upper;
    j["covering_lower_trivial"] = rep.covering_lower_trivial;
    j["covering_lower_recursive"] = rep.covering_lower_recursive;
    j["B"] = rep.b;
    return j;
}

json families_json(int n, int s, const std::vector<std::vector<Composition>>& families,
                   bool up_to_reversal) {
    json j;
    j["schema"] = kSchemaVersion;
    j["n"] = n;
    j["s"] = s;
    j["up_to_reversal"] = up_to_reversal;
    j["count"] = families.size();
    j["families"] = json::array();
    for (const auto& fam : families) {
        json arr = json::array();
        for (const Composition& mu : fam) arr.push_back(to_json(mu));
        j["families"].push_back(std::move(arr));
    }
    return j;
}

json cover_solution_json(const CoveringInstance& instance) {
    json j;
    j["schema"] = kSchemaVersion;
    j["n"] = instance.n;
    j["s"] = instance.s;
    j["family_size"] = instance.family.size();
    j["candidates"] = json::array();
    for (const Partition& q : instance.candidates) j["candidates"].push_back(to_json(q));
    if (instance.solution) {
        j["method"] = instance.solution->method == CoverMethod::kExact ? "exact" : "greedy";
        j["size"] = instance.solution->partitions.size();
        j["partitions"] = json::array();
        for (const Partition& q : instance.solution->partitions)
            j["partitions"].push_back(to_json(q));
        j["caveat"] = instance.solution->caveat;
    }
    return j;
}

json cover_check_json(const std::vector<Partition>& p,
                      const std::vector<std::vector<Composition>>& family,
                      const CoveringCheck& check) {
    json j;
    j["schema"] = kSchemaVersion;
    j["partitions"] = json::array();
    for (const Partition& q : p) j["partitions"].push_back(to_json(q));
    j["family_size"] = family.size();
    j["covering"] = check.covering;
    j["witnesses"] = json::array();
    for (std::size_t i = 0; i < check.witnesses.size(); ++i) {
        json w;
        w["family_index"] = i;
        if (check.witnesses[i]) {
            w["q"] = to_json(check.witnesses[i]->q);
            w["lambda"] = to_json(check.witnesses[i]->lambda);
        } else {
            w["uncovered"] = true;
        }
        j["witnesses"].push_back(std::move(w));
    }
    return j;
}

json realization_json(const SliceRealization& r) {
    json j;
    j["schema"] = kSchemaVersion;
    j["n"] = r.f.n;
    j["s"] = r.s;
    j["coeffs"] = r.f.coeffs;
    j["generic"] = r.generic;
    j["complete"] = r.complete;
    j["escalations_used"] = r.escalations_used;
    if (r.generic && r.s >= 1 && r.s <= r.f.n) {
        const long long cap = f0_bound(r.f.n, r.s);
        j["f0_bound"] = cap;
        j["attains_f0_bound"] = static_cast<long long>(r.realized_facets.size()) == cap;
    }
    j["realized_facets"] = json::array();
    for (const Composition& mu : r.realized_facets)
        j["realized_facets"].push_back(to_json(mu));
    j["vertices"] = json::array();
    for (const auto& [mu, list] : r.vertices) {
        for (const VertexSolution& v : list) {
            json e;
            e["composition"] = to_json(mu);
            e["x"] = v.x;
            e["tail_coeffs"] = v.tail_coeffs;
            e["residual"] = v.residual;
            j["vertices"].push_back(std::move(e));
        }
    }
    j["degenerate"] = json::array();
    for (const VertexSolution& v : r.degenerate) {
        json e;
        e["composition"] = to_json(v.label);
        e["found_via"] = to_json(v.found_via);
        e["x"] = v.x;
        e["tail_coeffs"] = v.tail_coeffs;
        e["residual"] = v.residual;
        j["degenerate"].push_back(std::move(e));
    }
    return j;
}

json reduce_json(int n, const std::vector<ReducedSystem>& systems) {
    json j;
    j["schema"] = kSchemaVersion;
    j["n"] = n;
    j["reductions"] = json::array();
    for (const ReducedSystem& red : systems) {
        json e;
        e["pattern"] = to_json(red.pattern);
        e["variables"] = red.pattern.length();
        e["polys"] = json::array();
        for (const MPoly& p : red.polys) {
            json terms = json::array();
            for (const auto& [exp, coef] : p.terms) {
                json t;
                t["coef"] = coef.get_str();
                json mono = json::object();
                for (std::size_t v = 0; v < exp.size(); ++v)
                    if (exp[v] > 0) mono["x" + std::to_string(v + 1)] = exp[v];
                t["monomial"] = std::move(mono);
                terms.push_back(std::move(t));
            }
            e["polys"].push_back(json{{"terms", std::move(terms)}});
        }
        if (red.certificate) {
            e["certificate"] = *red.certificate;
            e["certificate_residual"] = red.certificate_residual;
        } else {
            e["certificate"] = nullptr;
        }
        j["reductions"].push_back(std::move(e));
    }
    return j;
}

HyperbolicPoly poly_from_json(const json& j) {
    if (j.contains("roots")) {
        std::vector<double> roots = j.at("roots").get<std::vector<double>>();
        if (roots.empty()) throw std::domain_error("roots array is empty");
        return HyperbolicPoly::from_roots(std::move(roots));
    }
    if (!j.contains("coeffs")) throw std::domain_error("polynomial needs coeffs or roots");
    std::vector<double> coeffs = j.at("coeffs").get<std::vector<double>>();
    if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(coeffs.size()))
        throw std::domain_error("n does not match the coefficient count");
    return HyperbolicPoly::from_coeffs(std::move(coeffs));
}

ParsedSystem system_from_json(const json& j) {
    ParsedSystem parsed;
    parsed.n = j.at("n").get<int>();
    int z_count = j.value("s", 0);
    const json& polys = j.at("polys");
    // first pass: highest Z index
    for (const auto& poly : polys) {
        for (const auto& term : poly.at("terms")) {
            for (const auto& [key, e] : term.at("monomial").items()) {
                if (key.size() < 2 || key[0] != 'Z')
                    throw std::domain_error("monomial variables must be Z1, Z2, ...");
                z_count = std::max(z_count, std::stoi(key.substr(1)));
                (void)e;
            }
        }
    }
    if (z_count == 0) throw std::domain_error("system uses no Z variables and gives no s");
    parsed.system.z_count = z_count;
    for (const auto& poly : polys) {
        MPoly p;
        p.nvars = z_count;
        for (const auto& term : poly.at("terms")) {
            std::vector<int> exp(static_cast<std::size_t>(z_count), 0);
            for (const auto& [key, e] : term.at("monomial").items())
                exp[static_cast<std::size_t>(std::stoi(key.substr(1)) - 1)] = e.get<int>();
            Rational coef;
            const json& cj = term.at("coef");
            if (cj.is_string())
                coef = Rational(cj.get<std::string>());
            else
                coef = Rational(cj.get<double>());
            coef.canonicalize();
            p.terms[std::move(exp)] += coef;
        }
        p.prune_zeros();
        parsed.system.polys.push_back(std::move(p));
    }
    return parsed;
}

} // namespace hyperstrata
