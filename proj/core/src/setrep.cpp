#include "quiverhom/setrep.hpp"

#include <algorithm>
#include <set>

namespace quiverhom {

FinSetRep validate_finset_rep(Quiver q, std::map<int, std::vector<std::string>> sets,
                              std::map<std::string, std::map<std::string, std::string>> maps) {
    std::set<std::string> all_ids;
    for (int v : q.vertices()) {
        auto it = sets.find(v);
        if (it == sets.end())
            sets[v] = {};
        for (const std::string& e : sets[v])
            if (!all_ids.insert(e).second)
                throw ValidationError("set rep: element id \"" + e +
                                      "\" is used at more than one vertex");
    }
    for (const auto& [v, elems] : sets)
        if (!q.has_vertex(v))
            throw ValidationError("set rep: set given for unknown vertex " + std::to_string(v));

    for (const Arrow& a : q.arrows()) {
        auto it = maps.find(a.id);
        if (it == maps.end()) {
            if (!sets[a.src].empty())
                throw ValidationError("set rep: no table for arrow \"" + a.id + "\"");
            maps[a.id] = {};
            continue;
        }
        const auto& table = it->second;
        std::set<std::string> src(sets[a.src].begin(), sets[a.src].end());
        std::set<std::string> tgt(sets[a.tgt].begin(), sets[a.tgt].end());
        for (const std::string& e : sets[a.src])
            if (!table.count(e))
                throw ValidationError("set rep: table for arrow \"" + a.id +
                                      "\" misses element \"" + e + "\"");
        for (const auto& [x, y] : table) {
            if (!src.count(x))
                throw ValidationError("set rep: table for arrow \"" + a.id +
                                      "\" mentions foreign element \"" + x + "\"");
            if (!tgt.count(y))
                throw ValidationError("set rep: arrow \"" + a.id + "\" sends \"" + x +
                                      "\" outside the target set");
        }
    }
    // null propagation: an arrow into an empty set forces an empty source
    for (const Arrow& a : q.arrows())
        if (sets[a.tgt].empty() && !sets[a.src].empty())
            throw ValidationError("set rep: set at vertex " + std::to_string(a.tgt) +
                                  " is empty but arrow \"" + a.id +
                                  "\" starts from a nonempty set");

    FinSetRep rep;
    rep.quiver = std::move(q);
    rep.sets = std::move(sets);
    rep.maps = std::move(maps);
    return rep;
}

FinSetRep empty_rep(const Quiver& q) {
    return validate_finset_rep(q, {}, {});
}

SetMorphism SetMorphism::zero_morphism(FinSetRep source, FinSetRep target) {
    SetMorphism m;
    m.zero = true;
    m.source = std::move(source);
    m.target = std::move(target);
    return m;
}

SetMorphism validate_set_morphism(FinSetRep source, FinSetRep target,
                                  std::map<int, std::map<std::string, std::string>> components) {
    if (!(source.quiver == target.quiver))
        throw ValidationError("set morphism: quivers differ");
    for (int v : source.quiver.vertices()) {
        const auto& table = components[v];
        std::set<std::string> tgt(target.sets.at(v).begin(), target.sets.at(v).end());
        for (const std::string& e : source.sets.at(v)) {
            auto it = table.find(e);
            if (it == table.end())
                throw ValidationError("set morphism: component at vertex " + std::to_string(v) +
                                      " misses element \"" + e + "\"");
            if (!tgt.count(it->second))
                throw ValidationError("set morphism: image of \"" + e +
                                      "\" is not in the target set");
        }
    }
    for (const Arrow& a : source.quiver.arrows())
        for (const std::string& e : source.sets.at(a.src)) {
            const std::string& via_target =
                target.maps.at(a.id).at(components.at(a.src).at(e));
            const std::string& via_source =
                components.at(a.tgt).at(source.maps.at(a.id).at(e));
            if (via_target != via_source)
                throw ValidationError("set morphism: square at arrow \"" + a.id +
                                      "\" fails on element \"" + e + "\"");
        }
    SetMorphism m;
    m.source = std::move(source);
    m.target = std::move(target);
    m.components = std::move(components);
    return m;
}

SetMorphism compose(const SetMorphism& g, const SetMorphism& h) {
    if (g.zero || h.zero)
        return SetMorphism::zero_morphism(h.source, g.target);
    if (!(g.source == h.target))
        throw ValidationError("set morphism composition: middle representations differ");
    std::map<int, std::map<std::string, std::string>> comps;
    for (int v : h.source.quiver.vertices())
        for (const std::string& e : h.source.sets.at(v))
            comps[v][e] = g.components.at(v).at(h.components.at(v).at(e));
    return validate_set_morphism(h.source, g.target, std::move(comps));
}

SetMorphism identity_morphism(const FinSetRep& rep) {
    std::map<int, std::map<std::string, std::string>> comps;
    for (int v : rep.quiver.vertices())
        for (const std::string& e : rep.sets.at(v))
            comps[v][e] = e;
    return validate_set_morphism(rep, rep, std::move(comps));
}

std::optional<std::string> PGammaSystem::act(const SemigroupElement& rho,
                                             const std::optional<std::string>& element) const {
    if (rho.is_zero() || !element)
        return std::nullopt;
    const Path& p = *rho.path;
    int at = part_of(*element);
    if (p.source != at)
        return std::nullopt;  // e_i m = theta off the part, and so does any path
    std::string current = *element;
    for (const std::string& arrow_id : p.arrows)
        current = action.at(arrow_id).at(current);
    return current;
}

int PGammaSystem::part_of(const std::string& element) const {
    for (const auto& [v, elems] : parts)
        if (std::find(elems.begin(), elems.end(), element) != elems.end())
            return v;
    throw ValidationError("system: element \"" + element + "\" is not in any part");
}

PGammaSystem to_system(const FinSetRep& rep) {
    PGammaSystem sys;
    sys.quiver = rep.quiver;
    sys.parts = rep.sets;
    sys.action = rep.maps;
    return sys;
}

FinSetRep from_system(const PGammaSystem& sys) {
    return validate_finset_rep(sys.quiver, sys.parts, sys.action);
}

SystemMorphism to_system(const SetMorphism& h) {
    if (h.zero)
        throw ValidationError("system morphism: the zero morphism has no element table");
    SystemMorphism phi;
    phi.source = to_system(h.source);
    phi.target = to_system(h.target);
    for (const auto& [v, table] : h.components)
        for (const auto& [x, y] : table)
            phi.table[x] = y;
    return phi;
}

SetMorphism from_system(const SystemMorphism& phi) {
    std::map<int, std::map<std::string, std::string>> comps;
    for (const auto& [v, elems] : phi.source.parts)
        for (const std::string& e : elems)
            comps[v][e] = phi.table.at(e);
    return validate_set_morphism(from_system(phi.source), from_system(phi.target),
                                 std::move(comps));
}

SystemMorphism compose(const SystemMorphism& g, const SystemMorphism& h) {
    SystemMorphism out;
    out.source = h.source;
    out.target = g.target;
    for (const auto& [x, y] : h.table)
        out.table[x] = g.table.at(y);
    return out;
}

FinSetRep direct_sum(const FinSetRep& a, const FinSetRep& b) {
    if (!(a.quiver == b.quiver))
        throw ValidationError("direct sum: quivers differ");
    std::map<int, std::vector<std::string>> sets;
    std::map<std::string, std::map<std::string, std::string>> maps;
    for (int v : a.quiver.vertices()) {
        for (const std::string& e : a.sets.at(v))
            sets[v].push_back(e + "#L");
        for (const std::string& e : b.sets.at(v))
            sets[v].push_back(e + "#R");
    }
    for (const Arrow& ar : a.quiver.arrows()) {
        for (const auto& [x, y] : a.maps.at(ar.id))
            maps[ar.id][x + "#L"] = y + "#L";
        for (const auto& [x, y] : b.maps.at(ar.id))
            maps[ar.id][x + "#R"] = y + "#R";
    }
    return validate_finset_rep(a.quiver, std::move(sets), std::move(maps));
}

namespace {

std::string pair_id(const std::string& x, const std::string& y) {
    return "(" + x + "," + y + ")";
}

}  // namespace

FinSetRep product(const FinSetRep& a, const FinSetRep& b) {
    if (!(a.quiver == b.quiver))
        throw ValidationError("product: quivers differ");
    std::map<int, std::vector<std::string>> sets;
    std::map<std::string, std::map<std::string, std::string>> maps;
    for (int v : a.quiver.vertices())
        for (const std::string& x : a.sets.at(v))
            for (const std::string& y : b.sets.at(v))
                sets[v].push_back(pair_id(x, y));
    for (const Arrow& ar : a.quiver.arrows())
        for (const std::string& x : a.sets.at(ar.src))
            for (const std::string& y : b.sets.at(ar.src))
                maps[ar.id][pair_id(x, y)] =
                    pair_id(a.maps.at(ar.id).at(x), b.maps.at(ar.id).at(y));
    return validate_finset_rep(a.quiver, std::move(sets), std::move(maps));
}

std::map<std::string, int> grade_system(const PGammaSystem& sys, const ArrowFunction& f) {
    std::map<int, int> degrees = vertex_grading(sys.quiver, f);
    std::map<std::string, int> out;
    for (const auto& [v, elems] : sys.parts)
        for (const std::string& e : elems)
            out[e] = degrees.at(v);
    // law: every arrow raises the degree by one
    for (const Arrow& a : sys.quiver.arrows())
        for (const auto& [x, y] : sys.action.at(a.id))
            if (out.at(y) != out.at(x) + 1)
                internal_error("system grading law failed despite a valid potential");
    return out;
}

namespace {

std::set<std::pair<std::string, std::string>> kernel_pairs(const SetMorphism& h2, int v) {
    std::set<std::pair<std::string, std::string>> out;
    const auto& elems = h2.source.sets.at(v);
    for (const std::string& x : elems)
        for (const std::string& y : elems) {
            if (h2.zero || h2.components.at(v).at(x) == h2.components.at(v).at(y))
                out.emplace(x, y);
        }
    return out;
}

}  // namespace

RelatedExactResult related_exact_check(const SetMorphism& h, const SetMorphism& h2) {
    if (!(h.target == h2.source))
        throw ValidationError("related exactness: middle representations differ");
    RelatedExactResult result;
    for (int v : h.target.quiver.vertices()) {
        std::set<std::string> image;
        if (!h.zero)
            for (const std::string& x : h.source.sets.at(v))
                image.insert(h.components.at(v).at(x));
        std::set<std::pair<std::string, std::string>> lhs;
        for (const std::string& x : image)
            for (const std::string& y : image)
                lhs.emplace(x, y);
        for (const std::string& x : h.target.sets.at(v))
            lhs.emplace(x, x);
        std::set<std::pair<std::string, std::string>> rhs = kernel_pairs(h2, v);
        if (lhs != rhs) {
            for (const auto& p : rhs)
                if (!lhs.count(p)) {
                    result.witness = {v, p.first, p.second};
                    return result;
                }
            for (const auto& p : lhs)
                if (!rhs.count(p)) {
                    result.witness = {v, p.first, p.second};
                    return result;
                }
        }
    }
    result.exact = true;
    return result;
}

MorphismClass classify_morphism(const SetMorphism& h) {
    MorphismClass c;
    if (h.zero) {
        // the formal zero morphism is never mono or epi between nonempty reps
        bool source_empty = true, target_empty = true;
        for (const auto& [v, e] : h.source.sets)
            source_empty = source_empty && e.empty();
        for (const auto& [v, e] : h.target.sets)
            target_empty = target_empty && e.empty();
        c.mono = source_empty;
        c.epi = target_empty;
        c.iso = c.mono && c.epi;
        return c;
    }
    c.mono = true;
    c.epi = true;
    for (int v : h.source.quiver.vertices()) {
        std::set<std::string> image;
        for (const std::string& x : h.source.sets.at(v))
            image.insert(h.components.at(v).at(x));
        if (image.size() != h.source.sets.at(v).size())
            c.mono = false;
        if (image.size() != h.target.sets.at(v).size())
            c.epi = false;
    }
    c.iso = c.mono && c.epi;
    return c;
}

}  // namespace quiverhom
