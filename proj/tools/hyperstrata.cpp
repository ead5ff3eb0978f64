// Command-line front end: enumeration, poset checks, closed-form bounds,
// covering search, numeric slice realization, and symmetric-system reduction.
// All output is deterministic for a fixed configuration (including --seed),
// independent of --jobs.
//
// Exit codes: 0 success, 2 domain error (bad input or scale guard),
// 3 structural failure (axiom or shelling violation), 4 numeric
// incompleteness (budget exhausted with failing cross-checks).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hyperstrata/bounds.hpp"
#include "hyperstrata/covering.hpp"
#include "hyperstrata/errors.hpp"
#include "hyperstrata/json_io.hpp"
#include "hyperstrata/poset.hpp"
#include "hyperstrata/realize.hpp"
#include "hyperstrata/reduce.hpp"

namespace {

using namespace hyperstrata;

constexpr int kExitDomain = 2;
constexpr int kExitStructural = 3;
constexpr int kExitIncomplete = 4;

int default_jobs() {
    if (const char* env = std::getenv("HYPERSTRATA_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

std::vector<Composition> parse_facets_arg(const std::string& inline_json,
                                          const std::string& file) {
    if (!inline_json.empty()) return facets_from_json(json::parse(inline_json));
    if (!file.empty()) return facets_from_json(read_json_file(file));
    throw std::domain_error("provide --facets or --facets-file");
}

std::vector<Partition> parse_partition_list(const std::string& arg) {
    std::vector<Partition> out;
    std::stringstream groups(arg);
    std::string group;
    while (std::getline(groups, group, ';')) {
        if (group.empty()) continue;
        std::vector<int> parts;
        std::stringstream ss(group);
        std::string tok;
        while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
        out.emplace_back(std::move(parts));
    }
    if (out.empty()) throw std::domain_error("no partitions given");
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string row(const Composition& c) {
    std::string s;
    for (int i = 0; i < c.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(c.part(i));
    }
    return s;
}

std::string row(const Partition& p) {
    std::string s;
    for (int i = 0; i < p.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.part(i));
    }
    return s;
}

struct CommonFlags {
    std::string format = "json";
    std::uint64_t seed = 0;
    int jobs = default_jobs();
    bool force = false;
    double tol_sys = 1e-9;
    double tol_sep = 1e-6;
    double tol_grad = 1e-7;
    int starts = 200;
    int newton_iters = 80;
};

int cmd_enumerate(const std::string& kind, int n, int l, int s, const CommonFlags& flags) {
    json j;
    j["schema"] = kSchemaVersion;
    if (kind == "compositions") {
        auto all = enumerate_compositions(n, l);
        if (flags.format == "table") {
            for (const auto& c : all) std::cout << row(c) << "\n";
            return 0;
        }
        j["n"] = n;
        j["l"] = l;
        j["count"] = all.size();
        j["compositions"] = json::array();
        for (const auto& c : all) j["compositions"].push_back(to_json(c));
    } else if (kind == "partitions") {
        auto all = enumerate_partitions(n, l);
        if (flags.format == "table") {
            for (const auto& p : all) std::cout << row(p) << "\n";
            return 0;
        }
        j["n"] = n;
        j["l"] = l;
        j["count"] = all.size();
        j["partitions"] = json::array();
        for (const auto& p : all) j["partitions"].push_back(to_json(p));
    } else if (kind == "minmax") {
        MinMaxSets mm = min_max_sets(n, s);
        if (flags.format == "table") {
            std::cout << "c_min:\n";
            for (const auto& c : mm.c_min) std::cout << "  " << row(c) << "\n";
            std::cout << "c_max:\n";
            for (const auto& c : mm.c_max) std::cout << "  " << row(c) << "\n";
            std::cout << "p_min:\n";
            for (const auto& p : mm.p_min) std::cout << "  " << row(p) << "\n";
            std::cout << "p_max:\n";
            for (const auto& p : mm.p_max) std::cout << "  " << row(p) << "\n";
            return 0;
        }
        j["n"] = n;
        j["s"] = s;
        j["c_min"] = json::array();
        for (const auto& c : mm.c_min) j["c_min"].push_back(to_json(c));
        j["c_max"] = json::array();
        for (const auto& c : mm.c_max) j["c_max"].push_back(to_json(c));
        j["p_min"] = json::array();
        for (const auto& p : mm.p_min) j["p_min"].push_back(to_json(p));
        j["p_max"] = json::array();
        for (const auto& p : mm.p_max) j["p_max"].push_back(to_json(p));
    } else {
        throw std::domain_error("unknown --kind " + kind);
    }
    emit(j);
    return 0;
}

int cmd_poset(const std::vector<Composition>& facets, int n, int s, const CommonFlags& flags) {
    StrataPoset poset = build_poset(facets, n, s);
    annotate_min_max(poset);
    PotentialCheck check = check_potential(poset);
    FaceVectors fv = face_vectors(poset);
    if (flags.format == "dot") {
        std::cout << to_dot(poset);
        return check.potential ? 0 : kExitStructural;
    }
    std::vector<int> order;
    ShellingReport shelling;
    if (check.potential) {
        DualComplex complex = dual_complex(poset);
        if (!ridges_in_two_facets(complex))
            throw structural_error("a ridge is not contained in exactly two facets");
        order = shelling_order(poset);
        shelling = verify_shelling(complex, order);
        if (!shelling.valid)
            throw structural_error("shelling verification failed: " + shelling.reason);
    }
    json j = poset_report_json(poset, check, fv, check.potential ? &order : nullptr,
                               check.potential ? &shelling : nullptr);
    if (flags.format == "table") {
        std::cout << "n=" << n << " s=" << s << " facets=" << poset.facets.size()
                  << " potential=" << (check.potential ? "yes" : "no") << "\n";
        std::cout << "f =";
        for (long long v : fv.f) std::cout << " " << v;
        std::cout << "\nh =";
        for (long long v : fv.h) std::cout << " " << v;
        std::cout << "\n";
        if (!check.potential) std::cout << "failure: " << check.reason << "\n";
    } else {
        emit(j);
    }
    return check.potential ? 0 : kExitStructural;
}

int cmd_bounds(int n, int s, const CommonFlags& flags) {
    BoundReport rep = bound_report(n, s);
    if (flags.format == "table") {
        std::cout << "n=" << n << " s=" << s << "\n"
                  << "f0_bound                 " << rep.f0 << "\n"
                  << "covering_upper           " << rep.covering_upper << "\n"
                  << "covering_lower_trivial   " << rep.covering_lower_trivial << "\n"
                  << "covering_lower_recursive " << rep.covering_lower_recursive << " (B =";
        for (long long b : rep.b) std::cout << " " << b;
        std::cout << ")\n";
        return 0;
    }
    emit(bound_report_json(rep));
    return 0;
}

int cmd_cover_enumerate(int n, int s, bool up_to_reversal, const CommonFlags& flags) {
    EnumerateOptions opts;
    opts.up_to_reversal = up_to_reversal;
    opts.force = flags.force;
    opts.jobs = flags.jobs;
    auto families = enumerate_potential(n, s, opts);
    if (flags.format == "table") {
        for (const auto& fam : families) {
            for (std::size_t i = 0; i < fam.size(); ++i)
                std::cout << (i ? " " : "") << "(" << row(fam[i]) << ")";
            std::cout << "\n";
        }
        std::cout << "count: " << families.size() << "\n";
        return 0;
    }
    emit(families_json(n, s, families, up_to_reversal));
    return 0;
}

int cmd_cover_solve(int n, int s, const std::string& method, const CommonFlags& flags) {
    if (method != "greedy" && method != "exact")
        throw std::domain_error("--method must be exact or greedy");
    EnumerateOptions opts;
    opts.force = flags.force;
    opts.jobs = flags.jobs;
    CoveringInstance instance;
    instance.n = n;
    instance.s = s;
    instance.family = enumerate_potential(n, s, opts);
    instance.candidates = enumerate_partitions(n, s);
    CoverMethod m = method == "greedy" ? CoverMethod::kGreedy : CoverMethod::kExact;
    instance.solution = min_cover(instance.family, n, s, m);
    if (flags.format == "table") {
        for (const auto& p : instance.solution->partitions) std::cout << row(p) << "\n";
        return 0;
    }
    emit(cover_solution_json(instance));
    return 0;
}

int cmd_cover_check(int n, int s, const std::string& partitions, const CommonFlags& flags) {
    EnumerateOptions opts;
    opts.force = flags.force;
    opts.jobs = flags.jobs;
    auto families = enumerate_potential(n, s, opts);
    std::vector<Partition> p = parse_partition_list(partitions);
    CoveringCheck check = is_covering(p, families);
    if (flags.format == "table") {
        std::cout << "covering: " << (check.covering ? "yes" : "no") << "\n";
        return 0;
    }
    emit(cover_check_json(p, families, check));
    return 0;
}

int cmd_realize(const std::string& poly_file, int s, const CommonFlags& flags) {
    HyperbolicPoly f = poly_from_json(read_json_file(poly_file));
    SolveConfig cfg;
    cfg.tol_sys = flags.tol_sys;
    cfg.tol_sep = flags.tol_sep;
    cfg.tol_grad = flags.tol_grad;
    cfg.seed = flags.seed;
    cfg.jobs = flags.jobs;
    cfg.random_starts_per_s = flags.starts;
    cfg.newton_iters = flags.newton_iters;
    SliceRealization r = realize_slice(f, s, cfg);
    json j = realization_json(r);
    if (r.generic && r.complete) {
        MinMaxReport rep = verify_min_max(r);
        json m;
        m["ok"] = rep.ok;
        m["extremes_ok"] = rep.extremes_ok;
        m["edges_ok"] = rep.edges_ok;
        m["linear_extension_ok"] = rep.linear_extension_ok;
        m["violations"] = rep.violations;
        j["min_max"] = std::move(m);
    }
    if (flags.format == "table") {
        std::cout << "generic: " << (r.generic ? "yes" : "no")
                  << "  facets: " << r.realized_facets.size()
                  << "  degenerate: " << r.degenerate.size() << "\n";
        for (const auto& mu : r.realized_facets) std::cout << "  (" << row(mu) << ")\n";
    } else {
        emit(j);
    }
    return r.complete ? 0 : kExitIncomplete;
}

int cmd_reduce(const std::string& system_file, const std::string& partitions, bool use_minmax,
               const CommonFlags& flags) {
    ParsedSystem parsed = system_from_json(read_json_file(system_file));
    std::vector<Partition> patterns;
    if (!partitions.empty()) {
        patterns = parse_partition_list(partitions);
    } else if (use_minmax) {
        patterns = min_max_sets(parsed.n, parsed.system.z_count).p_min;
    } else {
        throw std::domain_error("provide --partitions or --use-minmax");
    }
    ReduceConfig cfg;
    cfg.seed = flags.seed;
    cfg.tol = flags.tol_sys;
    auto reductions = reduce_symmetric(parsed.system, parsed.n, patterns, cfg);
    emit(reduce_json(parsed.n, reductions));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"stratified hyperbolic slices: posets, bounds, coverings, realizations"};
    app.fallthrough();
    app.require_subcommand(1);

    CommonFlags flags;
    app.add_option("--format", flags.format, "json|dot|table")->capture_default_str();
    app.add_option("--seed", flags.seed, "seed for all randomized search")->capture_default_str();
    app.add_option("--jobs", flags.jobs, "worker threads (also HYPERSTRATA_JOBS)")
        ->capture_default_str();
    app.add_flag("--force", flags.force, "lift the documented scale guard");
    app.add_option("--tol-sys", flags.tol_sys, "residual tolerance")->capture_default_str();
    app.add_option("--tol-sep", flags.tol_sep, "root separation tolerance")
        ->capture_default_str();
    app.add_option("--tol-grad", flags.tol_grad, "gradient tolerance")->capture_default_str();
    app.add_option("--starts", flags.starts, "random Newton starts per unit of s")
        ->capture_default_str();
    app.add_option("--newton-iters", flags.newton_iters, "Newton iteration cap per start")
        ->capture_default_str();

    auto* enumerate = app.add_subcommand("enumerate", "compositions, partitions, min/max sets");
    enumerate->fallthrough();
    std::string kind = "compositions";
    int en = 0, el = 0, es = 0;
    enumerate->add_option("--kind", kind, "compositions|partitions|minmax")->required();
    enumerate->add_option("--n", en)->required();
    enumerate->add_option("--l", el);
    enumerate->add_option("--s", es);

    auto* poset = app.add_subcommand("poset", "build a strata poset and verify its structure");
    poset->fallthrough();
    std::string facets_inline, facets_file;
    int pn = 0, ps = 0;
    poset->add_option("--facets", facets_inline, "inline JSON array of compositions");
    poset->add_option("--facets-file", facets_file, "path to a JSON array of compositions");
    poset->add_option("--n", pn)->required();
    poset->add_option("--s", ps)->required();

    auto* bounds = app.add_subcommand("bounds", "closed-form bounds for (n,s)");
    bounds->fallthrough();
    int bn = 0, bs = 0;
    bounds->add_option("--n", bn)->required();
    bounds->add_option("--s", bs)->required();

    auto* cover = app.add_subcommand("cover", "potential families and covering search");
    cover->fallthrough();
    cover->require_subcommand(1);
    auto* cover_enum = cover->add_subcommand("enumerate", "census of potential facet sets");
    cover_enum->fallthrough();
    int cn = 0, cs = 0;
    bool up_to_reversal = false;
    cover_enum->add_option("--n", cn)->required();
    cover_enum->add_option("--s", cs)->required();
    cover_enum->add_flag("--up-to-reversal", up_to_reversal);
    auto* cover_solve = cover->add_subcommand("solve", "minimum covering over the census");
    cover_solve->fallthrough();
    std::string method = "exact";
    int sn = 0, ss = 0;
    cover_solve->add_option("--n", sn)->required();
    cover_solve->add_option("--s", ss)->required();
    cover_solve->add_option("--method", method, "exact|greedy")->capture_default_str();
    auto* cover_check = cover->add_subcommand("check", "verify a covering candidate");
    cover_check->fallthrough();
    std::string partitions;
    int kn = 0, ks = 0;
    cover_check->add_option("--n", kn)->required();
    cover_check->add_option("--s", ks)->required();
    cover_check->add_option("--partitions", partitions, "e.g. \"2,2,1,1;4,2,1,1\"")->required();

    auto* realize = app.add_subcommand("realize", "solve the zero-dimensional strata of a slice");
    realize->fallthrough();
    std::string poly_file;
    int rs = 0;
    realize->add_option("--poly", poly_file, "JSON {n, coeffs:[H_1..H_n]} or {roots:[..]}")
        ->required();
    realize->add_option("--s", rs)->required();

    auto* reduce = app.add_subcommand("reduce", "substitute orbit patterns into a Z-system");
    reduce->fallthrough();
    std::string system_file, reduce_partitions;
    bool use_minmax = false;
    reduce->add_option("--system", system_file, "JSON system in Z_1..Z_s")->required();
    reduce->add_option("--partitions", reduce_partitions, "patterns, e.g. \"2,1,1;3,1\"");
    reduce->add_flag("--use-minmax", use_minmax,
                     "use the minimal-polynomial partitions as the covering");

    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate->parsed()) {
            if (kind == "minmax") {
                if (es == 0) throw std::domain_error("minmax needs --s");
                return cmd_enumerate(kind, en, 0, es, flags);
            }
            if (el == 0) throw std::domain_error("enumerate needs --l");
            return cmd_enumerate(kind, en, el, 0, flags);
        }
        if (poset->parsed())
            return cmd_poset(parse_facets_arg(facets_inline, facets_file), pn, ps, flags);
        if (bounds->parsed()) return cmd_bounds(bn, bs, flags);
        if (cover->parsed()) {
            if (cover_enum->parsed()) return cmd_cover_enumerate(cn, cs, up_to_reversal, flags);
            if (cover_solve->parsed()) return cmd_cover_solve(sn, ss, method, flags);
            if (cover_check->parsed()) return cmd_cover_check(kn, ks, partitions, flags);
        }
        if (realize->parsed()) return cmd_realize(poly_file, rs, flags);
        if (reduce->parsed())
            return cmd_reduce(system_file, reduce_partitions, use_minmax, flags);
    } catch (const structural_error& e) {
        std::cerr << "structural error: " << e.what() << "\n";
        return kExitStructural;
    } catch (const scale_error& e) {
        std::cerr << "scale guard: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitDomain;
    }
    return 0;
}
