#include "quiverhom/atspace.hpp"

#include <algorithm>
#include <set>

namespace quiverhom {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i)
            parent[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

struct NodeIndex {
    std::vector<std::pair<int, int>> nodes;  // sorted (quiver vertex, space vertex)
    std::map<std::pair<int, int>, std::size_t> index;

    explicit NodeIndex(const SimplicialRep& rep) {
        for (int v : rep.quiver.vertices())
            for (int x : rep.spaces.at(v).vertices())
                nodes.emplace_back(v, x);
        std::sort(nodes.begin(), nodes.end());
        for (std::size_t i = 0; i < nodes.size(); ++i)
            index[nodes[i]] = i;
    }
};

}  // namespace

AtSpace at_space(const SimplicialRep& rep) {
    NodeIndex idx(rep);
    UnionFind uf(idx.nodes.size());
    std::size_t pairs = 0;
    for (const Arrow& a : rep.quiver.arrows()) {
        const auto& vm = rep.arrow_maps.at(a.id);
        for (int x : rep.spaces.at(a.src).vertices()) {
            uf.unite(idx.index.at({a.src, x}), idx.index.at({a.tgt, vm.at(x)}));
            ++pairs;
        }
    }

    // class representative = smallest member pair, classes numbered in
    // representative order
    std::map<std::size_t, std::pair<int, int>> root_min;
    for (std::size_t i = 0; i < idx.nodes.size(); ++i) {
        std::size_t r = uf.find(i);
        auto it = root_min.find(r);
        if (it == root_min.end() || idx.nodes[i] < it->second)
            root_min[r] = idx.nodes[i];
    }
    std::vector<std::pair<int, int>> reps;
    for (const auto& [root, mn] : root_min)
        reps.push_back(mn);
    std::sort(reps.begin(), reps.end());
    std::map<std::pair<int, int>, int> rep_id;
    for (std::size_t i = 0; i < reps.size(); ++i)
        rep_id[reps[i]] = static_cast<int>(i);

    AtSpace out;
    out.generating_pairs = pairs;
    out.n_classes = reps.size();
    for (std::size_t i = 0; i < idx.nodes.size(); ++i)
        out.class_of[idx.nodes[i]] = rep_id.at(root_min.at(uf.find(i)));

    std::vector<std::vector<int>> facets;
    for (int v : rep.quiver.vertices()) {
        const SimplicialComplex& k = rep.spaces.at(v);
        for (int d = 0; d <= k.dim(); ++d)
            for (const auto& s : k.simplices(d)) {
                std::set<int> classes;
                for (int x : s)
                    classes.insert(out.class_of.at({v, x}));
                facets.emplace_back(classes.begin(), classes.end());
            }
    }
    out.quotient_complex = SimplicialComplex::from_facets({}, facets);
    return out;
}

SimplicialMap at_morphism(const SimplicialRepMorphism& theta, const AtSpace& source_at,
                          const AtSpace& target_at) {
    std::map<int, int> class_map;
    for (const auto& [node, cls] : source_at.class_of) {
        int image_class = target_at.class_of.at({node.first, theta.components.at(node.first).at(node.second)});
        auto it = class_map.find(cls);
        if (it == class_map.end())
            class_map[cls] = image_class;
        else if (it->second != image_class)
            internal_error("attachment map is not well defined on classes");
    }
    return validate_simplicial_map(source_at.quotient_complex, target_at.quotient_complex,
                                   std::move(class_map));
}

std::size_t component_count(const AtSpace& at) {
    const SimplicialComplex& k = at.quotient_complex;
    std::map<int, std::size_t> pos;
    std::size_t n = 0;
    for (int v : k.vertices())
        pos[v] = n++;
    UnionFind uf(n);
    for (const auto& e : k.simplices(1))
        uf.unite(pos.at(e[0]), pos.at(e[1]));
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < n; ++i)
        roots.insert(uf.find(i));
    return roots.size();
}

SplitReport split_analysis(const SimplicialRep& rep, const std::map<int, SimplicialComplex>& left,
                           const std::map<int, SimplicialComplex>& right) {
    for (int v : rep.quiver.vertices()) {
        if (!left.count(v) || !right.count(v))
            throw ValidationError("split: missing piece at vertex " + std::to_string(v));
        const SimplicialComplex& l = left.at(v);
        const SimplicialComplex& r = right.at(v);
        const SimplicialComplex& k = rep.spaces.at(v);
        if (!l.is_subcomplex_of(k) || !r.is_subcomplex_of(k))
            throw ValidationError("split: pieces at vertex " + std::to_string(v) +
                                  " are not subcomplexes");
        std::set<int> lv(l.vertices().begin(), l.vertices().end());
        for (int x : r.vertices())
            if (lv.count(x))
                throw ValidationError("split: pieces at vertex " + std::to_string(v) +
                                      " share the space vertex " + std::to_string(x));
        if (l.vertices().size() + r.vertices().size() != k.vertices().size())
            throw ValidationError("split: pieces at vertex " + std::to_string(v) +
                                  " do not cover the vertices");
        for (int d = 0; d <= k.dim(); ++d)
            for (const auto& s : k.simplices(d))
                if (!l.contains(s) && !r.contains(s))
                    throw ValidationError("split: a simplex at vertex " + std::to_string(v) +
                                          " lies in neither piece");
    }
    auto preserved = [&](const std::map<int, SimplicialComplex>& fam) {
        for (const Arrow& a : rep.quiver.arrows()) {
            const auto& vm = rep.arrow_maps.at(a.id);
            for (int d = 0; d <= fam.at(a.src).dim(); ++d)
                for (const auto& s : fam.at(a.src).simplices(d)) {
                    std::set<int> img;
                    for (int x : s)
                        img.insert(vm.at(x));
                    if (!fam.at(a.tgt).contains({img.begin(), img.end()}))
                        return false;
                }
        }
        return true;
    };
    if (!preserved(left) || !preserved(right))
        throw ValidationError("split: pieces are not preserved by the structure maps");

    auto piece_rep = [&](const std::map<int, SimplicialComplex>& fam) {
        std::map<std::string, std::map<int, int>> maps;
        for (const Arrow& a : rep.quiver.arrows()) {
            std::map<int, int> vm;
            for (int x : fam.at(a.src).vertices())
                vm[x] = rep.arrow_maps.at(a.id).at(x);
            maps[a.id] = std::move(vm);
        }
        return validate_simplicial_rep(rep.quiver, fam, std::move(maps));
    };
    AtSpace at_full = at_space(rep);
    AtSpace at_left = at_space(piece_rep(left));
    AtSpace at_right = at_space(piece_rep(right));

    SplitReport report;
    auto image_classes = [&](const AtSpace& piece, const std::map<int, SimplicialComplex>& fam,
                             bool& injective) {
        std::map<int, int> induced;  // piece class -> full class
        injective = true;
        std::set<int> image;
        for (int v : rep.quiver.vertices())
            for (int x : fam.at(v).vertices()) {
                int pc = piece.class_of.at({v, x});
                int fc = at_full.class_of.at({v, x});
                auto it = induced.find(pc);
                if (it == induced.end())
                    induced[pc] = fc;
                else if (it->second != fc)
                    internal_error("induced attachment map not well defined");
                image.insert(fc);
            }
        std::set<int> distinct;
        for (const auto& [pc, fc] : induced)
            if (!distinct.insert(fc).second)
                injective = false;
        return std::make_pair(induced, image);
    };
    auto [left_map, left_image] = image_classes(at_left, left, report.left_injective);
    auto [right_map, right_image] = image_classes(at_right, right, report.right_injective);

    std::set<int> inter;
    std::set_intersection(left_image.begin(), left_image.end(), right_image.begin(),
                          right_image.end(), std::inserter(inter, inter.begin()));
    report.images_disjoint = inter.empty();
    report.images_cover =
        left_image.size() + right_image.size() == at_full.n_classes;

    // combinatorial isomorphism of each piece onto its image subcomplex
    auto iso_onto_image = [&](const AtSpace& piece, const std::map<int, int>& cls_map,
                              const std::set<int>& image) {
        std::set<std::vector<int>> mapped;
        for (int d = 0; d <= piece.quotient_complex.dim(); ++d)
            for (const auto& s : piece.quotient_complex.simplices(d)) {
                std::set<int> img;
                for (int c : s)
                    img.insert(cls_map.at(c));
                if (img.size() != s.size())
                    return false;  // collapse: not injective on a simplex
                std::vector<int> tuple(img.begin(), img.end());
                if (!at_full.quotient_complex.contains(tuple))
                    return false;
                mapped.insert(tuple);
            }
        // every full simplex supported on the image must be hit
        for (int d = 0; d <= at_full.quotient_complex.dim(); ++d)
            for (const auto& s : at_full.quotient_complex.simplices(d)) {
                bool inside = true;
                for (int c : s)
                    if (!image.count(c)) {
                        inside = false;
                        break;
                    }
                if (inside && !mapped.count(s))
                    return false;
            }
        return true;
    };
    report.left_iso_image = iso_onto_image(at_left, left_map, left_image);
    report.right_iso_image = iso_onto_image(at_right, right_map, right_image);
    return report;
}

namespace {

/// chain map of the projection T(i) -> quotient complex
ChainMap projection_chain_map(const SimplicialRep& rep, const AtSpace& at, int quiver_vertex) {
    std::map<int, int> vm;
    for (int x : rep.spaces.at(quiver_vertex).vertices())
        vm[x] = at.class_of.at({quiver_vertex, x});
    return chain_map_of(
        validate_simplicial_map(rep.spaces.at(quiver_vertex), at.quotient_complex, vm));
}

}  // namespace

std::vector<SigmaComponent> sigma(const SimplicialRep& rep) {
    std::vector<SigmaComponent> out;
    for (const std::vector<int>& comp : rep.quiver.components()) {
        SigmaComponent sc;
        sc.quiver_vertices = comp;
        sc.base_vertex = comp.front();
        SimplicialRep sub = rep.restricted_to(comp);
        sc.at = at_space(sub);
        ChainRep crep = s_gamma(sub);
        sc.limit = rep_limit(crep);
        ChainComplex at_chain = chain_complex_of(sc.at.quotient_complex);

        std::map<int, ChainMap> proj;
        for (int v : comp)
            proj.emplace(v, projection_chain_map(sub, sc.at, v));

        int top = sc.limit.complex.top_degree();
        std::vector<IntMatrix> mats;
        sc.base_independent = true;
        for (int n = 0; n <= top; ++n) {
            IntMatrix base = proj.at(sc.base_vertex).matrix(n) *
                             sc.limit.block(n, sc.base_vertex, crep.complexes.at(sc.base_vertex).rank(n));
            for (int v : comp) {
                IntMatrix via_v =
                    proj.at(v).matrix(n) * sc.limit.block(n, v, crep.complexes.at(v).rank(n));
                if (!(via_v == base))
                    sc.base_independent = false;
            }
            mats.push_back(std::move(base));
        }
        sc.sigma = ChainMap::validate(sc.limit.complex, at_chain, std::move(mats));
        out.push_back(std::move(sc));
    }
    return out;
}

bool sigma_is_natural(const SimplicialRepMorphism& theta) {
    for (const std::vector<int>& comp : theta.source.quiver.components()) {
        SimplicialRep src = theta.source.restricted_to(comp);
        SimplicialRep tgt = theta.target.restricted_to(comp);
        std::map<int, std::map<int, int>> comps;
        for (int v : comp)
            comps[v] = theta.components.at(v);
        SimplicialRepMorphism restricted = validate_rep_morphism(src, tgt, std::move(comps));

        std::vector<SigmaComponent> ss = sigma(src);
        std::vector<SigmaComponent> ts = sigma(tgt);
        if (ss.size() != 1 || ts.size() != 1)
            internal_error("component restriction is not connected");
        const SigmaComponent& s = ss.front();
        const SigmaComponent& t = ts.front();

        ChainMap at_theta = chain_map_of(at_morphism(restricted, s.at, t.at));
        ChainMap lim_theta = limit_map(
            s.limit, t.limit,
            [&] {
                std::map<int, ChainMap> cm;
                for (int v : comp)
                    cm.emplace(v, chain_map_of(validate_simplicial_map(
                                      src.spaces.at(v), tgt.spaces.at(v), theta.components.at(v))));
                return validate_chainrep_morphism(s_gamma(src), s_gamma(tgt), std::move(cm));
            }());
        int top = std::max(s.limit.complex.top_degree(), t.limit.complex.top_degree());
        for (int n = 0; n <= top; ++n)
            if (!(at_theta.matrix(n) * s.sigma.matrix(n) ==
                  t.sigma.matrix(n) * lim_theta.matrix(n)))
                return false;
    }
    return true;
}

GroupHom h_natural(const SimplicialRep& rep, int n) {
    AtSpace at = at_space(rep);
    ChainComplex at_chain = chain_complex_of(at.quotient_complex);
    ChainRep crep = s_gamma(rep);
    LimitComplex lim = rep_limit(crep);

    // assembled comparison map: push each component block through its base
    // vertex projection into the shared quotient complex
    std::vector<IntMatrix> mats;
    for (int d = 0; d <= lim.complex.top_degree(); ++d) {
        IntMatrix m(at_chain.rank(d), lim.complex.rank(d));
        for (const std::vector<int>& comp : rep.quiver.components()) {
            int base = comp.front();
            ChainMap p = projection_chain_map(rep, at, base);
            m = m + p.matrix(d) * lim.block(d, base, crep.complexes.at(base).rank(d));
        }
        mats.push_back(std::move(m));
    }
    ChainMap sigma_whole = ChainMap::validate(lim.complex, at_chain, std::move(mats));
    return homology_map(homology(lim.complex, n), homology(at_chain, n),
                        sigma_whole.matrix(n));
}

}  // namespace quiverhom
