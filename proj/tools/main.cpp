#include "quiverhom/atspace.hpp"
#include "quiverhom/chainrep.hpp"
#include "quiverhom/checks.hpp"
#include "quiverhom/json_io.hpp"
#include "quiverhom/render.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>

using namespace quiverhom;
using nlohmann::json;

namespace {

bool log_enabled() {
    const char* env = std::getenv("QUIVERHOM_LOG");
    return env != nullptr && *env != '\0';
}

void log_note(const std::string& what) {
    if (log_enabled())
        std::cerr << "[quiverhom] " << what << "\n";
}

json js_int(const Int& x) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (x >= lo && x <= hi)
        return json(static_cast<long long>(x));
    return json(render_int(x));
}

json js_matrix(const IntMatrix& m) {
    json data = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            data.push_back(js_int(m(i, j)));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

json js_group(const FgAbGroup& g) {
    json torsion = json::array();
    for (const Int& d : g.torsion())
        torsion.push_back(js_int(d));
    return json{{"free_rank", g.free_rank()}, {"torsion", torsion}};
}

json js_homology(const Homology& h, int degree) {
    json out = js_group(h.group);
    out["degree"] = degree;
    json gens = json::array();
    for (const auto& [order, cycle] : h.generators) {
        json vec = json::array();
        for (const Int& x : cycle)
            vec.push_back(js_int(x));
        gens.push_back(json{{"order", js_int(order)}, {"cycle", vec}});
    }
    out["generators"] = gens;
    return out;
}

json js_complex(const SimplicialComplex& k) {
    json vertices = json::array();
    for (int v : k.vertices())
        vertices.push_back(v);
    json facets = json::array();
    for (int d = k.dim(); d >= 0; --d)
        for (const auto& s : k.simplices(d)) {
            bool maximal = true;
            for (int dd = d + 1; dd <= k.dim() && maximal; ++dd)
                for (const auto& t : k.simplices(dd))
                    if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                        maximal = false;
                        break;
                    }
            if (maximal)
                facets.push_back(s);
        }
    return json{{"vertices", vertices}, {"facets", facets}};
}

struct Options {
    std::string input;
    int max_degree = 2;
    std::string format = "text";
    std::uint64_t seed = 0;
    std::string property;
    int base_vertex = -1;
};

void emit(const json& report, const Options& opt,
          const std::function<void(const json&)>& text_renderer) {
    if (opt.format == "json")
        std::cout << report.dump(2) << "\n";
    else
        text_renderer(report);
}

std::string group_text(const json& g) {
    std::size_t free_rank = g.at("free_rank").get<std::size_t>();
    std::vector<Int> torsion;
    for (const json& t : g.at("torsion"))
        torsion.push_back(t.is_string() ? Int(t.get<std::string>())
                                        : Int(t.get<long long>()));
    return FgAbGroup::from_invariants(free_rank, torsion).to_string();
}

ChainRep chain_rep_of_input(const ParsedInput& in) {
    if (in.kind == ParsedInput::Kind::simplicial)
        return s_gamma(*in.simplicial);
    if (in.kind == ParsedInput::Kind::chain)
        return *in.chain;
    throw ValidationError("this command needs a simplicial or chain representation");
}

int cmd_analyze(const Options& opt) {
    ParsedInput in = parse_input_file(opt.input);
    json report;
    const Quiver& q = in.any_quiver();
    report["quiver"] = {{"vertices", q.vertices().size()},
                        {"arrows", q.arrows().size()},
                        {"components", q.components().size()},
                        {"acyclic", q.is_acyclic()}};
    switch (in.kind) {
        case ParsedInput::Kind::quiver: {
            report["kind"] = "quiver";
            CycleReport cr = cycle_report(q);
            report["all_symmetric"] = cr.all_symmetric;
            json cycles = json::array();
            for (const CycleEntry& c : cr.cycles)
                cycles.push_back(json{{"arrows", c.arrows},
                                      {"clockwise", c.clockwise},
                                      {"anticlockwise", c.anticlockwise},
                                      {"symmetric", c.symmetric},
                                      {"oriented", c.oriented}});
            report["cycles"] = cycles;
            break;
        }
        case ParsedInput::Kind::finset: {
            report["kind"] = "finset";
            json sizes;
            for (const auto& [v, elems] : in.finset->sets)
                sizes[std::to_string(v)] = elems.size();
            report["set_sizes"] = sizes;
            break;
        }
        case ParsedInput::Kind::simplicial: {
            report["kind"] = "simplicial";
            json spaces;
            for (const auto& [v, k] : in.simplicial->spaces) {
                json ranks = json::array();
                for (int d = 0; d <= k.dim(); ++d)
                    ranks.push_back(k.n_simplices(d));
                spaces[std::to_string(v)] = ranks;
            }
            report["space_ranks"] = spaces;
            break;
        }
        case ParsedInput::Kind::chain: {
            report["kind"] = "chain";
            json ranks;
            for (const auto& [v, c] : in.chain->complexes) {
                json r = json::array();
                for (int n = 0; n <= c.top_degree(); ++n)
                    r.push_back(c.rank(n));
                ranks[std::to_string(v)] = r;
            }
            report["complex_ranks"] = ranks;
            break;
        }
        case ParsedInput::Kind::ab: {
            report["kind"] = "ab";
            json groups;
            for (const auto& [v, g] : in.ab->groups)
                groups[std::to_string(v)] = js_group(g);
            report["groups"] = groups;
            break;
        }
    }
    emit(report, opt, [&](const json& r) {
        std::cout << "kind: " << r.at("kind").get<std::string>() << "\n"
                  << "vertices: " << r.at("quiver").at("vertices")
                  << "  arrows: " << r.at("quiver").at("arrows")
                  << "  components: " << r.at("quiver").at("components") << "\n";
        if (r.contains("all_symmetric"))
            std::cout << "all cycles symmetric: "
                      << (r.at("all_symmetric").get<bool>() ? "yes" : "no") << "\n";
    });
    return 0;
}

int cmd_grade(const Options& opt) {
    ParsedInput in = parse_input_file(opt.input);
    const Quiver& q = in.any_quiver();
    json report;
    auto f = arrow_positive_function(q);
    CycleReport cr = cycle_report(q);
    report["all_symmetric"] = cr.all_symmetric;
    if (f) {
        json values;
        for (const auto& [v, val] : f->values)
            values[std::to_string(v)] = val;
        report["arrow_positive_function"] = values;
        json degrees;
        for (const auto& [v, d] : vertex_grading(q, *f))
            degrees[std::to_string(v)] = d;
        report["vertex_degrees"] = degrees;
    } else {
        report["arrow_positive_function"] = nullptr;
        for (const CycleEntry& c : cr.cycles)
            if (!c.symmetric) {
                report["non_symmetric_cycle"] = c.arrows;
                break;
            }
    }
    emit(report, opt, [&](const json& r) {
        if (r.at("arrow_positive_function").is_null()) {
            std::cout << "no arrow positive function; non-symmetric cycle [";
            const json& cyc = r.at("non_symmetric_cycle");
            for (std::size_t i = 0; i < cyc.size(); ++i)
                std::cout << (i ? "," : "") << cyc[i].get<std::string>();
            std::cout << "]\n";
        } else {
            std::cout << "arrow positive function:\n";
            for (auto it = r.at("arrow_positive_function").begin();
                 it != r.at("arrow_positive_function").end(); ++it)
                std::cout << "  F(" << it.key() << ") = " << it.value() << "\n";
        }
    });
    return 0;
}

int cmd_limit(const Options& opt) {
    ParsedInput in = parse_input_file(opt.input);
    json report;
    if (in.kind == ParsedInput::Kind::ab) {
        AbLimit lim = ab_limit(*in.ab);
        report["limit_group"] = js_group(lim.group);
        json projections;
        for (const auto& [v, hom] : lim.projections)
            projections[std::to_string(v)] = js_matrix(hom.matrix());
        report["projections"] = projections;
        report["lattice_basis"] = js_matrix(lim.lattice_basis);
    } else {
        ChainRep crep = chain_rep_of_input(in);
        LimitComplex lim = rep_limit(crep);
        json ranks = json::array();
        for (int n = 0; n <= lim.complex.top_degree(); ++n)
            ranks.push_back(lim.complex.rank(n));
        report["limit_ranks"] = ranks;
        json groups;
        for (int n = 0; n <= opt.max_degree; ++n)
            groups[std::to_string(n)] = js_group(homology(lim.complex, n).group);
        report["limit_homology"] = groups;
    }
    emit(report, opt, [&](const json& r) {
        if (r.contains("limit_group"))
            std::cout << "limit group: " << group_text(r.at("limit_group")) << "\n";
        else {
            std::cout << "limit ranks:";
            for (const json& x : r.at("limit_ranks"))
                std::cout << " " << x;
            std::cout << "\n";
            for (auto it = r.at("limit_homology").begin(); it != r.at("limit_homology").end();
                 ++it)
                std::cout << "H_" << it.key() << " = " << group_text(it.value()) << "\n";
        }
    });
    return 0;
}

int cmd_homology(const Options& opt) {
    ParsedInput in = parse_input_file(opt.input);
    ChainRep crep = chain_rep_of_input(in);
    LimitComplex lim = rep_limit(crep);
    json degrees = json::array();
    for (int n = 0; n <= opt.max_degree; ++n)
        degrees.push_back(js_homology(homology(lim.complex, n), n));
    json report{{"homology", degrees}};
    emit(report, opt, [&](const json& r) {
        for (const json& h : r.at("homology"))
            std::cout << "H_" << h.at("degree") << " = " << group_text(h) << "\n";
    });
    return 0;
}

int cmd_relative(const Options& opt) {
    ParsedInput in = parse_input_file(opt.input);
    if (in.kind != ParsedInput::Kind::simplicial)
        throw ValidationError("relative homology needs a simplicial representation");
    const SimplicialRep& rep = *in.simplicial;
    SimplicialRep sub = [&] {
        if (!in.basepoints.empty())
            return basepoint_subrep(rep, in.basepoints);
        if (!in.sub_a.empty()) {
            std::map<std::string, std::map<int, int>> maps;
            for (const Arrow& a : rep.quiver.arrows()) {
                std::map<int, int> vm;
                for (int x : in.sub_a.at(a.src).vertices())
                    vm[x] = rep.arrow_maps.at(a.id).at(x);
                maps[a.id] = vm;
            }
            return validate_simplicial_rep(rep.quiver, in.sub_a, maps);
        }
        throw ValidationError("relative homology needs \"basepoints\" or \"sub_a\"");
    }();
    ChainRep crep = s_gamma(rep);
    ChainRep csub = s_gamma(sub);
    std::map<int, ChainMap> comps;
    for (int v : rep.quiver.vertices()) {
        std::map<int, int> vm;
        for (int x : sub.spaces.at(v).vertices())
            vm[x] = x;
        comps.emplace(v, chain_map_of(validate_simplicial_map(sub.spaces.at(v),
                                                              rep.spaces.at(v), vm)));
    }
    ChainRepMorphism inc = validate_chainrep_morphism(csub, crep, std::move(comps));
    json degrees;
    for (int n = 0; n <= opt.max_degree; ++n)
        degrees[std::to_string(n)] = js_group(relative_homology(inc, n));
    json report{{"relative_homology", degrees}};
    emit(report, opt, [&](const json& r) {
        for (auto it = r.at("relative_homology").begin();
             it != r.at("relative_homology").end(); ++it)
            std::cout << "H_" << it.key() << " rel = " << group_text(it.value()) << "\n";
    });
    return 0;
}

int cmd_excision(const Options& opt) {
    ParsedInput in = parse_input_file(opt.input);
    if (in.kind != ParsedInput::Kind::simplicial)
        throw ValidationError("excision needs a simplicial representation");
    if (in.sub_a.empty() || in.sub_b.empty())
        throw ValidationError("excision needs \"sub_a\" and \"sub_b\" families");
    ExcisionReport er = excision_check(*in.simplicial, in.sub_a, in.sub_b);
    json report{{"covers", er.covers},
                {"h0", js_group(er.h0)},
                {"h1", js_group(er.h1)},
                {"vanishing", er.vanishing}};
    emit(report, opt, [&](const json& r) {
        std::cout << "cover condition: " << (r.at("covers").get<bool>() ? "holds" : "fails")
                  << "\n"
                  << "H_0 = " << group_text(r.at("h0")) << "\n"
                  << "H_1 = " << group_text(r.at("h1")) << "\n";
        if (!r.at("covers").get<bool>())
            std::cout << "no vanishing claim: the cover hypothesis does not hold\n";
    });
    return 0;
}

int cmd_at(const Options& opt) {
    ParsedInput in = parse_input_file(opt.input);
    if (in.kind != ParsedInput::Kind::simplicial)
        throw ValidationError("attachment spaces need a simplicial representation");
    AtSpace at = at_space(*in.simplicial);
    json classes;
    for (const auto& [node, cls] : at.class_of)
        classes[std::to_string(node.first) + "." + std::to_string(node.second)] = cls;
    json report{{"quotient_complex", js_complex(at.quotient_complex)},
                {"classes", classes},
                {"n_classes", at.n_classes},
                {"generating_pairs", at.generating_pairs},
                {"components", component_count(at)}};
    emit(report, opt, [&](const json& r) {
        std::cout << "classes: " << r.at("n_classes") << "\n"
                  << "components: " << r.at("components") << "\n";
    });
    return 0;
}

int cmd_sigma(const Options& opt) {
    ParsedInput in = parse_input_file(opt.input);
    if (in.kind != ParsedInput::Kind::simplicial)
        throw ValidationError("sigma needs a simplicial representation");
    std::vector<SigmaComponent> comps = sigma(*in.simplicial);
    json components = json::array();
    for (const SigmaComponent& c : comps) {
        json mats = json::array();
        for (int n = 0; n <= std::min(opt.max_degree, c.limit.complex.top_degree()); ++n)
            mats.push_back(js_matrix(c.sigma.matrix(n)));
        components.push_back(json{{"vertices", c.quiver_vertices},
                                  {"base_vertex", c.base_vertex},
                                  {"base_independent", c.base_independent},
                                  {"matrices", mats}});
    }
    json report{{"components", components}};
    emit(report, opt, [&](const json& r) {
        for (const json& c : r.at("components"))
            std::cout << "component at base " << c.at("base_vertex")
                      << ": base independent: "
                      << (c.at("base_independent").get<bool>() ? "yes" : "no") << "\n";
    });
    return 0;
}

int cmd_rho(const Options& opt) {
    ParsedInput in = parse_input_file(opt.input);
    ChainRep crep = chain_rep_of_input(in);
    json degrees;
    for (int n = 0; n <= opt.max_degree; ++n) {
        RhoResult r = rho(crep, n);
        degrees[std::to_string(n)] = json{{"matrix", js_matrix(r.hom.matrix())},
                                          {"source", js_group(r.hom.source())},
                                          {"target", js_group(r.hom.target())},
                                          {"injective", r.injective},
                                          {"surjective", r.surjective}};
    }
    json report{{"rho", degrees}};
    emit(report, opt, [&](const json& r) {
        for (auto it = r.at("rho").begin(); it != r.at("rho").end(); ++it)
            std::cout << "rho_" << it.key() << ": " << group_text(it.value().at("source"))
                      << " -> " << group_text(it.value().at("target"))
                      << (it.value().at("injective").get<bool>() ? " injective" : "")
                      << (it.value().at("surjective").get<bool>() ? " surjective" : "") << "\n";
    });
    return 0;
}

int cmd_check(const Options& opt) {
    std::vector<std::string> names;
    if (!opt.property.empty()) {
        if (!checks::has_property(opt.property))
            throw ValidationError("unknown property \"" + opt.property + "\"");
        names.push_back(opt.property);
    } else {
        names = checks::property_names();
    }
    json results = json::array();
    bool all_ok = true;
    for (const std::string& name : names) {
        log_note("running property " + name);
        checks::PropertyResult r = checks::run_property(name, opt.seed);
        all_ok = all_ok && r.passed();
        json entry{{"property", r.name},
                   {"trials", r.trials},
                   {"failures", r.failures},
                   {"passed", r.passed()}};
        if (!r.detail.empty())
            entry["detail"] = r.detail;
        results.push_back(entry);
    }
    json report{{"results", results}, {"seed", opt.seed}, {"passed", all_ok}};
    emit(report, opt, [&](const json& r) {
        for (const json& e : r.at("results"))
            std::cout << (e.at("passed").get<bool>() ? "pass" : "FAIL") << "  "
                      << e.at("property").get<std::string>() << "  (" << e.at("trials")
                      << " trials, " << e.at("failures") << " failures)\n";
    });
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quiver representation invariants over exact integer arithmetic"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("input", opt.input, "input JSON file")->required();
        cmd->add_option("--max-degree", opt.max_degree, "largest homology degree");
        cmd->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--seed", opt.seed, "seed for randomized checks");
        cmd->add_option("--base-vertex", opt.base_vertex, "base vertex override");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "validate an input and summarize it");
    add_common(analyze);
    CLI::App* grade = app.add_subcommand("grade", "arrow positive function and cycle symmetry");
    add_common(grade);
    CLI::App* limit = app.add_subcommand("limit", "limit of a representation");
    add_common(limit);
    CLI::App* hom = app.add_subcommand("homology", "homology of the limit complex");
    add_common(hom);
    CLI::App* rel = app.add_subcommand("relative", "relative homology against a subrepresentation");
    add_common(rel);
    CLI::App* exc = app.add_subcommand("excision", "quotient by two preserved families");
    add_common(exc);
    CLI::App* at = app.add_subcommand("at", "attachment space of a representation");
    add_common(at);
    CLI::App* sg = app.add_subcommand("sigma", "comparison map into the attachment space");
    add_common(sg);
    CLI::App* rh = app.add_subcommand("rho", "comparison of limit homology with class limits");
    add_common(rh);
    CLI::App* check = app.add_subcommand("check", "run named property suites");
    check->add_option("input", opt.input, "fixture path (unused by self-generating suites)");
    check->add_option("--property", opt.property, "property suite name");
    check->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    check->add_option("--seed", opt.seed, "seed for randomized checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed())
            return cmd_analyze(opt);
        if (grade->parsed())
            return cmd_grade(opt);
        if (limit->parsed())
            return cmd_limit(opt);
        if (hom->parsed())
            return cmd_homology(opt);
        if (rel->parsed())
            return cmd_relative(opt);
        if (exc->parsed())
            return cmd_excision(opt);
        if (at->parsed())
            return cmd_at(opt);
        if (sg->parsed())
            return cmd_sigma(opt);
        if (rh->parsed())
            return cmd_rho(opt);
        if (check->parsed())
            return cmd_check(opt);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
