#include "quiverhom/simplicial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace quiverhom {

const std::vector<std::vector<int>> SimplicialComplex::none_{};

namespace {

std::string tuple_label(const std::vector<int>& t) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i)
            os << ",";
        os << t[i];
    }
    os << "}";
    return os.str();
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<int> vertices,
                                                 std::vector<std::vector<int>> facets) {
    std::set<std::vector<int>> closed;
    for (std::vector<int>& f : facets) {
        std::sort(f.begin(), f.end());
        for (std::size_t i = 0; i + 1 < f.size(); ++i)
            if (f[i] == f[i + 1])
                throw ValidationError("simplicial complex: repeated vertex in simplex " +
                                      tuple_label(f));
        if (f.empty())
            throw ValidationError("simplicial complex: empty simplex");
        // downward closure by subset enumeration
        std::size_t n = f.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            std::vector<int> face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t{1} << i))
                    face.push_back(f[i]);
            closed.insert(std::move(face));
        }
    }
    std::set<int> vset(vertices.begin(), vertices.end());
    for (const std::vector<int>& s : closed)
        for (int v : s)
            vset.insert(v);
    for (int v : vset)
        closed.insert({v});

    SimplicialComplex k;
    k.vertices_.assign(vset.begin(), vset.end());
    for (const std::vector<int>& s : closed) {
        std::size_t d = s.size() - 1;
        if (k.simplices_.size() <= d)
            k.simplices_.resize(d + 1);
        k.simplices_[d].push_back(s);
    }
    for (auto& level : k.simplices_)
        std::sort(level.begin(), level.end());
    return k;
}

SimplicialComplex validate_complex(const std::vector<int>& vertices,
                                   const std::vector<std::vector<int>>& facets) {
    return SimplicialComplex::from_facets(vertices, facets);
}

SimplicialComplex SimplicialComplex::polygon(int n) {
    if (n < 3)
        throw ValidationError("polygon needs at least 3 vertices");
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e{i, (i + 1) % n};
        std::sort(e.begin(), e.end());
        facets.push_back(e);
    }
    return from_facets({}, facets);
}

SimplicialComplex SimplicialComplex::point(int vertex) { return from_facets({vertex}, {}); }

SimplicialComplex SimplicialComplex::full_simplex(int n) {
    std::vector<int> top(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        top[static_cast<std::size_t>(i)] = i;
    return from_facets({}, {top});
}

std::size_t SimplicialComplex::n_simplices(int d) const {
    if (d < 0 || d > dim())
        return 0;
    return simplices_[static_cast<std::size_t>(d)].size();
}

const std::vector<std::vector<int>>& SimplicialComplex::simplices(int d) const {
    if (d < 0 || d > dim())
        return none_;
    return simplices_[static_cast<std::size_t>(d)];
}

bool SimplicialComplex::contains(const std::vector<int>& simplex) const {
    int d = static_cast<int>(simplex.size()) - 1;
    if (d < 0 || d > dim())
        return false;
    const auto& level = simplices_[static_cast<std::size_t>(d)];
    return std::binary_search(level.begin(), level.end(), simplex);
}

std::size_t SimplicialComplex::index_of(const std::vector<int>& simplex) const {
    int d = static_cast<int>(simplex.size()) - 1;
    const auto& level = simplices(d);
    auto it = std::lower_bound(level.begin(), level.end(), simplex);
    if (it == level.end() || *it != simplex)
        internal_error("simplex not in complex: " + tuple_label(simplex));
    return static_cast<std::size_t>(it - level.begin());
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
    for (int d = 0; d <= dim(); ++d)
        for (const auto& s : simplices(d))
            if (!other.contains(s))
                return false;
    return true;
}

SimplicialMap validate_simplicial_map(SimplicialComplex source, SimplicialComplex target,
                                      std::map<int, int> vertex_map) {
    for (int v : source.vertices())
        if (!vertex_map.count(v))
            throw ValidationError("simplicial map: no image for vertex " + std::to_string(v));
    for (int d = 0; d <= source.dim(); ++d)
        for (const auto& s : source.simplices(d)) {
            std::set<int> image;
            for (int v : s)
                image.insert(vertex_map.at(v));
            std::vector<int> tuple(image.begin(), image.end());
            if (!target.contains(tuple))
                throw ValidationError("simplicial map: image " + tuple_label(tuple) +
                                      " of simplex " + tuple_label(s) +
                                      " is not a target simplex");
        }
    SimplicialMap f;
    f.source = std::move(source);
    f.target = std::move(target);
    f.vertex_map = std::move(vertex_map);
    return f;
}

ChainComplex chain_complex_of(const SimplicialComplex& k) {
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> boundaries;
    std::vector<std::vector<std::string>> labels;
    for (int d = 0; d <= k.dim(); ++d) {
        ranks.push_back(k.n_simplices(d));
        std::vector<std::string> lab;
        for (const auto& s : k.simplices(d))
            lab.push_back(tuple_label(s));
        labels.push_back(std::move(lab));

        IntMatrix b(k.n_simplices(d - 1), k.n_simplices(d));
        if (d >= 1) {
            const auto& level = k.simplices(d);
            for (std::size_t j = 0; j < level.size(); ++j) {
                const std::vector<int>& s = level[j];
                for (std::size_t i = 0; i < s.size(); ++i) {
                    std::vector<int> facet;
                    for (std::size_t t = 0; t < s.size(); ++t)
                        if (t != i)
                            facet.push_back(s[t]);
                    std::size_t row = k.index_of(facet);
                    b(row, j) += (i % 2 == 0) ? 1 : -1;
                }
            }
        }
        boundaries.push_back(std::move(b));
    }
    return ChainComplex::validate(std::move(ranks), std::move(boundaries), std::move(labels));
}

ChainMap chain_map_of(const SimplicialMap& f) {
    ChainComplex src = chain_complex_of(f.source);
    ChainComplex tgt = chain_complex_of(f.target);
    std::vector<IntMatrix> mats;
    int top = std::max(src.top_degree(), tgt.top_degree());
    for (int d = 0; d <= top; ++d) {
        IntMatrix m(tgt.rank(d), src.rank(d));
        const auto& level = f.source.simplices(d);
        for (std::size_t j = 0; j < level.size(); ++j) {
            std::vector<int> image;
            for (int v : level[j])
                image.push_back(f.vertex_map.at(v));
            std::set<int> distinct(image.begin(), image.end());
            if (distinct.size() != image.size())
                continue;  // degenerate image, maps to 0
            // parity of the permutation sorting the image tuple
            int sign = 1;
            std::vector<int> work = image;
            for (std::size_t a = 0; a < work.size(); ++a)
                for (std::size_t b = a + 1; b < work.size(); ++b)
                    if (work[a] > work[b]) {
                        std::swap(work[a], work[b]);
                        sign = -sign;
                    }
            m(f.target.index_of(work), j) = sign;
        }
        mats.push_back(std::move(m));
    }
    return ChainMap::validate(std::move(src), std::move(tgt), std::move(mats));
}

QuotientComplex quotient_by_subcomplexes(const SimplicialComplex& k, const SimplicialComplex& a,
                                         const SimplicialComplex& b) {
    if (!a.is_subcomplex_of(k))
        throw ValidationError("quotient: first family is not a subcomplex");
    if (!b.is_subcomplex_of(k))
        throw ValidationError("quotient: second family is not a subcomplex");
    QuotientComplex out;
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> boundaries;
    std::vector<std::vector<std::string>> labels;
    ChainComplex full = chain_complex_of(k);
    for (int d = 0; d <= k.dim(); ++d) {
        std::vector<std::size_t> kept;
        std::vector<std::string> lab;
        const auto& level = k.simplices(d);
        for (std::size_t j = 0; j < level.size(); ++j)
            if (!a.contains(level[j]) && !b.contains(level[j])) {
                kept.push_back(j);
                lab.push_back(tuple_label(level[j]));
            }
        out.kept.push_back(kept);
        ranks.push_back(kept.size());
        labels.push_back(std::move(lab));
        if (d >= 1)
            boundaries.push_back(full.boundary(d).select_rows(out.kept[static_cast<std::size_t>(d) - 1])
                                     .select_cols(kept));
        else
            boundaries.push_back(IntMatrix(0, kept.size()));
    }
    out.complex = ChainComplex::validate(std::move(ranks), std::move(boundaries), std::move(labels));
    return out;
}

SimplicialMap SimplicialRep::arrow_map(const std::string& arrow_id) const {
    const Arrow& a = quiver.arrow(arrow_id);
    return validate_simplicial_map(spaces.at(a.src), spaces.at(a.tgt), arrow_maps.at(arrow_id));
}

SimplicialRep SimplicialRep::restricted_to(const std::vector<int>& quiver_vertices) const {
    SimplicialRep out;
    out.quiver = quiver.restricted_to(quiver_vertices);
    for (int v : out.quiver.vertices())
        out.spaces[v] = spaces.at(v);
    for (const Arrow& a : out.quiver.arrows())
        out.arrow_maps[a.id] = arrow_maps.at(a.id);
    return out;
}

SimplicialRep validate_simplicial_rep(Quiver q, std::map<int, SimplicialComplex> spaces,
                                      std::map<std::string, std::map<int, int>> arrow_maps) {
    for (int v : q.vertices())
        if (!spaces.count(v))
            throw ValidationError("simplicial rep: no space at vertex " + std::to_string(v));
    for (const Arrow& a : q.arrows()) {
        auto it = arrow_maps.find(a.id);
        if (it == arrow_maps.end())
            throw ValidationError("simplicial rep: no map for arrow \"" + a.id + "\"");
        validate_simplicial_map(spaces.at(a.src), spaces.at(a.tgt), it->second);
    }
    SimplicialRep rep;
    rep.quiver = std::move(q);
    rep.spaces = std::move(spaces);
    rep.arrow_maps = std::move(arrow_maps);
    return rep;
}

SimplicialRepMorphism validate_rep_morphism(SimplicialRep source, SimplicialRep target,
                                            std::map<int, std::map<int, int>> components) {
    if (!(source.quiver == target.quiver))
        throw ValidationError("rep morphism: quivers differ");
    for (int v : source.quiver.vertices()) {
        if (!components.count(v))
            throw ValidationError("rep morphism: missing component at vertex " +
                                  std::to_string(v));
        validate_simplicial_map(source.spaces.at(v), target.spaces.at(v), components.at(v));
    }
    for (const Arrow& a : source.quiver.arrows()) {
        const auto& f = source.arrow_maps.at(a.id);
        const auto& fp = target.arrow_maps.at(a.id);
        const auto& hs = components.at(a.src);
        const auto& ht = components.at(a.tgt);
        for (int x : source.spaces.at(a.src).vertices())
            if (fp.at(hs.at(x)) != ht.at(f.at(x)))
                throw ValidationError("rep morphism: square at arrow \"" + a.id +
                                      "\" fails on vertex " + std::to_string(x));
    }
    SimplicialRepMorphism m;
    m.source = std::move(source);
    m.target = std::move(target);
    m.components = std::move(components);
    return m;
}

SimplicialRep basepoint_subrep(const SimplicialRep& rep, const std::map<int, int>& basepoints) {
    std::map<int, SimplicialComplex> spaces;
    std::map<std::string, std::map<int, int>> maps;
    for (int v : rep.quiver.vertices()) {
        auto it = basepoints.find(v);
        if (it == basepoints.end())
            throw ValidationError("basepoints: vertex " + std::to_string(v) + " has none");
        if (!rep.spaces.at(v).contains({it->second}))
            throw ValidationError("basepoints: " + std::to_string(it->second) +
                                  " is not a vertex of the space at " + std::to_string(v));
        spaces[v] = SimplicialComplex::point(it->second);
    }
    for (const Arrow& a : rep.quiver.arrows()) {
        int x = basepoints.at(a.src);
        int y = basepoints.at(a.tgt);
        if (rep.arrow_maps.at(a.id).at(x) != y)
            throw ValidationError("basepoints: arrow \"" + a.id +
                                  "\" does not carry the basepoint family to itself");
        maps[a.id] = {{x, y}};
    }
    return validate_simplicial_rep(rep.quiver, std::move(spaces), std::move(maps));
}

}  // namespace quiverhom
