#include "quiverhom/checks.hpp"

#include "quiverhom/normal_forms.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace quiverhom::checks {

// ---------------------------------------------------------------------------
// generators
// ---------------------------------------------------------------------------

Quiver random_quiver(Rng& rng, int max_vertices, int max_extra_arrows, bool connected) {
    int n = rng.range(1, max_vertices);
    std::vector<int> vs(static_cast<std::size_t>(n));
    std::iota(vs.begin(), vs.end(), 1);
    std::vector<Arrow> as;
    int next_id = 0;
    auto fresh = [&] { return "a" + std::to_string(next_id++); };
    if (connected) {
        for (int v = 2; v <= n; ++v) {
            int other = rng.range(1, v - 1);
            if (rng.coin())
                as.push_back({fresh(), other, v});
            else
                as.push_back({fresh(), v, other});
        }
    }
    int extra = rng.range(0, max_extra_arrows);
    for (int i = 0; i < extra; ++i) {
        int s = rng.range(1, n), t = rng.range(1, n);
        as.push_back({fresh(), s, t});
    }
    return Quiver::validate(vs, as);
}

Quiver random_multi_component_quiver(Rng& rng, int components, int max_vertices_each) {
    std::vector<int> vs;
    std::vector<Arrow> as;
    int offset = 0;
    int next_id = 0;
    for (int c = 0; c < components; ++c) {
        Quiver piece = random_quiver(rng, max_vertices_each, 2, true);
        for (int v : piece.vertices())
            vs.push_back(v + offset);
        for (const Arrow& a : piece.arrows())
            as.push_back({"c" + std::to_string(next_id++), a.src + offset, a.tgt + offset});
        offset += max_vertices_each + 1;
    }
    return Quiver::validate(vs, as);
}

FinSetRep random_finset_rep(Rng& rng, const Quiver& q, int max_elems, int min_elems) {
    std::map<int, int> sizes;
    for (int v : q.vertices())
        sizes[v] = rng.range(min_elems, max_elems);
    // null propagation: empty targets force empty sources, iterated
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Arrow& a : q.arrows())
            if (sizes[a.tgt] == 0 && sizes[a.src] != 0) {
                sizes[a.src] = 0;
                changed = true;
            }
    }
    std::map<int, std::vector<std::string>> sets;
    for (int v : q.vertices())
        for (int k = 0; k < sizes[v]; ++k)
            sets[v].push_back("v" + std::to_string(v) + "e" + std::to_string(k));
    std::map<std::string, std::map<std::string, std::string>> maps;
    for (const Arrow& a : q.arrows()) {
        maps[a.id] = {};
        for (const std::string& e : sets[a.src])
            maps[a.id][e] = sets[a.tgt][static_cast<std::size_t>(rng.below(sizes[a.tgt]))];
    }
    return validate_finset_rep(q, std::move(sets), std::move(maps));
}

SetMorphism random_set_morphism(Rng& rng, const FinSetRep& source, int min_target_elems) {
    const Quiver& q = source.quiver;
    // 1. a random congruence: seed pairs, close under the arrow maps
    std::map<std::string, std::string> leader;  // union-find over element ids
    std::function<std::string(const std::string&)> find = [&](const std::string& x) {
        auto it = leader.find(x);
        if (it == leader.end() || it->second == x)
            return x;
        std::string root = find(it->second);
        leader[x] = root;
        return root;
    };
    auto unite = [&](const std::string& a, const std::string& b) {
        std::string ra = find(a), rb = find(b);
        if (ra != rb)
            leader[std::max(ra, rb)] = std::min(ra, rb);
    };
    for (int v : q.vertices()) {
        const auto& elems = source.sets.at(v);
        if (elems.size() >= 2) {
            int pairs = rng.range(0, 2);
            for (int i = 0; i < pairs; ++i)
                unite(rng.pick(elems), rng.pick(elems));
        }
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (const Arrow& a : q.arrows()) {
            const auto& elems = source.sets.at(a.src);
            for (const std::string& x : elems)
                for (const std::string& y : elems)
                    if (find(x) == find(y)) {
                        const std::string& fx = source.maps.at(a.id).at(x);
                        const std::string& fy = source.maps.at(a.id).at(y);
                        if (find(fx) != find(fy)) {
                            unite(fx, fy);
                            changed = true;
                        }
                    }
        }
    }
    // 2. the quotient representation on class leaders
    std::map<int, std::vector<std::string>> qsets;
    for (int v : q.vertices()) {
        std::set<std::string> classes;
        for (const std::string& e : source.sets.at(v))
            classes.insert(find(e));
        qsets[v] = std::vector<std::string>(classes.begin(), classes.end());
    }
    std::map<std::string, std::map<std::string, std::string>> qmaps;
    for (const Arrow& a : q.arrows())
        for (const std::string& e : source.sets.at(a.src))
            qmaps[a.id][find(e)] = find(source.maps.at(a.id).at(e));
    FinSetRep quotient = validate_finset_rep(q, qsets, qmaps);

    // 3. pad with an independent random summand so the image can be proper
    FinSetRep target = direct_sum(quotient, random_finset_rep(rng, q, 2, min_target_elems));
    for (int guard = 0; guard < 16; ++guard) {
        bool ok = true;
        for (int v : q.vertices())
            if (static_cast<int>(target.sets.at(v).size()) < min_target_elems)
                ok = false;
        if (ok)
            break;
        target = direct_sum(quotient, random_finset_rep(rng, q, 3, min_target_elems));
    }

    std::map<int, std::map<std::string, std::string>> comps;
    for (int v : q.vertices())
        for (const std::string& e : source.sets.at(v))
            comps[v][e] = find(e) + "#L";
    return validate_set_morphism(source, target, std::move(comps));
}

SimplicialComplex random_connected_space(Rng& rng) {
    switch (rng.below(5)) {
        case 0:
            return SimplicialComplex::point();
        case 1:
            return validate_complex({}, {{0, 1}});
        case 2:
            return SimplicialComplex::polygon(rng.range(3, 6));
        case 3:
            return SimplicialComplex::full_simplex(3);
        default:
            return validate_complex({}, {{0, 1}, {1, 2}});  // path of length 2
    }
}

SimplicialComplex random_space(Rng& rng) {
    if (rng.below(4) == 0) {
        // disconnected: two points, or a point next to a segment
        if (rng.coin())
            return validate_complex({0, 1}, {});
        return validate_complex({5}, {{0, 1}});
    }
    return random_connected_space(rng);
}

std::map<int, int> random_simplicial_vertex_map(Rng& rng, const SimplicialComplex& src,
                                                const SimplicialComplex& tgt) {
    // same polygon: rotations and reflections are always simplicial
    auto polygon_size = [](const SimplicialComplex& k) -> int {
        int n = static_cast<int>(k.vertices().size());
        if (n >= 3 && k == SimplicialComplex::polygon(n))
            return n;
        return 0;
    };
    int ns = polygon_size(src), nt = polygon_size(tgt);
    if (ns != 0 && ns == nt && rng.coin()) {
        int k = rng.below(ns);
        bool reflect = rng.coin();
        std::map<int, int> m;
        for (int i = 0; i < ns; ++i)
            m[i] = reflect ? ((k - i) % ns + ns) % ns : (i + k) % ns;
        return m;
    }
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::map<int, int> m;
        for (int v : src.vertices())
            m[v] = rng.pick(tgt.vertices());
        try {
            validate_simplicial_map(src, tgt, m);
            return m;
        } catch (const ValidationError&) {
        }
    }
    std::map<int, int> constant;
    for (int v : src.vertices())
        constant[v] = tgt.vertices().front();
    return constant;
}

SimplicialRep random_simplicial_rep(Rng& rng, const Quiver& q, bool connected_fibers) {
    std::map<int, SimplicialComplex> spaces;
    for (int v : q.vertices())
        spaces[v] = connected_fibers ? random_connected_space(rng) : random_space(rng);
    std::map<std::string, std::map<int, int>> maps;
    for (const Arrow& a : q.arrows())
        maps[a.id] = random_simplicial_vertex_map(rng, spaces.at(a.src), spaces.at(a.tgt));
    return validate_simplicial_rep(q, std::move(spaces), std::move(maps));
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rng.range(-bound, bound);
    return m;
}

ChainComplex random_chain_complex(Rng& rng, int max_top, int max_rank) {
    int top = rng.range(0, max_top);
    std::vector<std::size_t> ranks{static_cast<std::size_t>(rng.range(1, max_rank))};
    std::vector<IntMatrix> boundaries{IntMatrix(0, ranks[0])};
    for (int n = 1; n <= top; ++n) {
        std::size_t r = static_cast<std::size_t>(rng.range(0, max_rank));
        IntMatrix kernel = kernel_basis(boundaries.back());
        // boundaries land in the kernel one degree down, so dd = 0 is built in
        IntMatrix b = kernel * random_matrix(rng, kernel.cols(), r, 2);
        ranks.push_back(r);
        boundaries.push_back(std::move(b));
    }
    return ChainComplex::validate(std::move(ranks), std::move(boundaries));
}

ChainMap random_chain_map(Rng& rng, const ChainComplex& src, const ChainComplex& tgt,
                          bool allow_scalar) {
    int top = std::max(src.top_degree(), tgt.top_degree());
    std::vector<IntMatrix> e;  // e[n]: src_n -> tgt_{n+1}
    for (int n = 0; n <= top; ++n)
        e.push_back(random_matrix(rng, tgt.rank(n + 1), src.rank(n), 2));
    auto e_at = [&](int n) -> IntMatrix {
        if (n >= 0 && n < static_cast<int>(e.size()))
            return e[static_cast<std::size_t>(n)];
        return IntMatrix(tgt.rank(n + 1), src.rank(n));
    };
    std::vector<IntMatrix> mats;
    bool scalar = allow_scalar && src == tgt;
    Int c = scalar ? Int(rng.range(-2, 2)) : Int(0);
    for (int n = 0; n <= top; ++n) {
        IntMatrix m = tgt.boundary(n + 1) * e_at(n) + e_at(n - 1) * src.boundary(n);
        if (scalar)
            m = m + IntMatrix::identity(src.rank(n)).scaled(c);
        mats.push_back(std::move(m));
    }
    return ChainMap::validate(src, tgt, std::move(mats));
}

FgAbGroup random_fg_group(Rng& rng) {
    std::size_t free_rank = static_cast<std::size_t>(rng.range(0, 2));
    std::vector<Int> torsion;
    int k = rng.range(0, 2);
    Int d = 1;
    for (int i = 0; i < k; ++i) {
        d *= rng.pick(std::vector<int>{2, 2, 3, 4});
        torsion.push_back(d);
    }
    return FgAbGroup::from_invariants(free_rank, torsion);
}

GroupHom random_group_hom(Rng& rng, const FgAbGroup& source, const FgAbGroup& target) {
    // in canonical coordinates the entry constraints are divisibility rules
    const std::vector<Int>& ds = source.smith_diagonal();
    const std::vector<Int>& dt = target.smith_diagonal();
    IntMatrix h(target.n_generators(), source.n_generators());
    for (std::size_t i = 0; i < dt.size(); ++i)
        for (std::size_t j = 0; j < ds.size(); ++j) {
            if (ds[j] == 0) {
                h(i, j) = rng.range(-3, 3);
            } else if (dt[i] == 0) {
                h(i, j) = 0;  // torsion cannot land in a free factor
            } else {
                Int g = boost::multiprecision::gcd(dt[i], ds[j]);
                h(i, j) = (dt[i] / g) * rng.range(-2, 2);
            }
        }
    // back from canonical to generator coordinates
    Snf st = smith_normal_form(target.relations());
    IntMatrix m = st.u_inv * h * source.smith_transform();
    return GroupHom(source, target, m);
}

AbRep random_ab_rep(Rng& rng, const Quiver& q) {
    std::map<int, FgAbGroup> groups;
    for (int v : q.vertices())
        groups.emplace(v, random_fg_group(rng));
    std::map<std::string, GroupHom> homs;
    for (const Arrow& a : q.arrows())
        homs.emplace(a.id, random_group_hom(rng, groups.at(a.src), groups.at(a.tgt)));
    return validate_ab_rep(q, std::move(groups), std::move(homs));
}

// ---------------------------------------------------------------------------
// property suites
// ---------------------------------------------------------------------------

namespace {

using Suite = std::function<void(Rng&, PropertyResult&)>;

void fail(PropertyResult& r, const std::string& what) {
    r.failures++;
    if (r.detail.empty())
        r.detail = what;
}

// roundtrip between set representations and path-semigroup systems
void suite_roundtrip(Rng& rng, PropertyResult& r) {
    Quiver q = random_quiver(rng, 5, 4, rng.coin());
    FinSetRep rep = random_finset_rep(rng, q, 4);
    PGammaSystem sys = to_system(rep);
    if (!(from_system(sys) == rep))
        fail(r, "from_system(to_system(rep)) differs from rep");
    if (!(to_system(from_system(sys)) == sys))
        fail(r, "to_system(from_system(sys)) differs from sys");
    // morphisms transport and compose through the equivalence
    SetMorphism h = random_set_morphism(rng, rep);
    SetMorphism back = from_system(to_system(h));
    if (!(back.components == h.components))
        fail(r, "morphism did not survive the round trip");
    SetMorphism g = random_set_morphism(rng, h.target);
    SystemMorphism lhs = to_system(compose(g, h));
    SystemMorphism rhs = compose(to_system(g), to_system(h));
    if (!(lhs.table == rhs.table))
        fail(r, "system construction is not functorial");
}

void suite_related_exact(Rng& rng, PropertyResult& r) {
    Quiver q = random_quiver(rng, 4, 3, rng.coin());
    // mono side: zero -> T -> T'
    {
        FinSetRep rep = random_finset_rep(rng, q, 3);
        SetMorphism h = random_set_morphism(rng, rep);
        SetMorphism from_zero = validate_set_morphism(empty_rep(q), rep, {});
        bool exact = related_exact_check(from_zero, h).exact;
        bool mono = classify_morphism(h).mono;
        if (exact != mono)
            fail(r, "mono characterization failed");
    }
    // epi side: T -> T' -> zero, with targets of size at least two
    {
        FinSetRep rep = random_finset_rep(rng, q, 4, 1);
        SetMorphism h = random_set_morphism(rng, rep, 2);
        SetMorphism to_zero = SetMorphism::zero_morphism(h.target, empty_rep(q));
        bool exact = related_exact_check(h, to_zero).exact;
        bool epi = classify_morphism(h).epi;
        if (exact != epi)
            fail(r, "epi characterization failed");
    }
}

void suite_grading(Rng& rng, PropertyResult& r) {
    Quiver q = random_quiver(rng, 8, 6, true);
    auto f = arrow_positive_function(q);
    CycleReport cr = cycle_report(q);
    if (f.has_value() != cr.all_symmetric)
        fail(r, "potential existence disagrees with cycle symmetry");
    for (const CycleEntry& c : cr.cycles) {
        if (c.symmetric != (c.clockwise == c.anticlockwise))
            fail(r, "cycle entry misclassified");
        if (f.has_value() && !c.symmetric)
            fail(r, "non-symmetric cycle listed although a potential exists");
    }
    if (f.has_value()) {
        int lo = f->values.begin()->second;
        for (const auto& [v, val] : f->values)
            lo = std::min(lo, val);
        if (lo != 0)
            fail(r, "potential not shifted to minimum zero");
        try {
            vertex_grading(q, *f);
        } catch (const ValidationError&) {
            fail(r, "potential failed the grading law");
        }
        auto again = arrow_positive_function(q);
        if (!again || !(again->values == f->values))
            fail(r, "canonical potential not reproducible");
    }
}

SimplicialRep point_rep(const Quiver& q) {
    std::map<int, SimplicialComplex> spaces;
    std::map<std::string, std::map<int, int>> maps;
    for (int v : q.vertices())
        spaces[v] = SimplicialComplex::point();
    for (const Arrow& a : q.arrows())
        maps[a.id] = {{0, 0}};
    return validate_simplicial_rep(q, spaces, maps);
}

void suite_point_rep(Rng& rng, PropertyResult& r) {
    Quiver q = random_quiver(rng, 5, 3, true);
    LimitComplex lim = rep_limit(s_gamma(point_rep(q)));
    if (!(homology(lim.complex, 0).group.to_string() == "Z"))
        fail(r, "H0 of a point representation is not Z");
    if (!homology(lim.complex, 1).group.is_trivial() ||
        !homology(lim.complex, 2).group.is_trivial())
        fail(r, "higher homology of a point representation does not vanish");
}

SimplicialRep line_of_polygons(int length, int ngon, Rng& rng) {
    std::vector<int> vs;
    std::vector<Arrow> as;
    for (int i = 1; i <= length; ++i)
        vs.push_back(i);
    for (int i = 1; i < length; ++i)
        as.push_back({"a" + std::to_string(i), i, i + 1});
    Quiver q = Quiver::validate(vs, as);
    std::map<int, SimplicialComplex> spaces;
    std::map<std::string, std::map<int, int>> maps;
    for (int i = 1; i <= length; ++i)
        spaces[i] = SimplicialComplex::polygon(ngon);
    for (const Arrow& a : q.arrows()) {
        int k = rng.below(ngon);
        std::map<int, int> m;
        for (int i = 0; i < ngon; ++i)
            m[i] = (i + k) % ngon;
        maps[a.id] = m;
    }
    return validate_simplicial_rep(q, spaces, maps);
}

void suite_line_limit(Rng& rng, PropertyResult& r) {
    int length = rng.range(2, 5);
    SimplicialRep rep = line_of_polygons(length, 6, rng);
    LimitComplex lim = rep_limit(s_gamma(rep));
    if (lim.complex.rank(0) != 6 || lim.complex.rank(1) != 6)
        fail(r, "limit of a line of hexagons has wrong ranks");
    if (homology(lim.complex, 0).group.to_string() != "Z" ||
        homology(lim.complex, 1).group.to_string() != "Z")
        fail(r, "limit of a line of hexagons is not a circle");
    for (int v : rep.quiver.vertices())
        for (int n = 0; n <= 1; ++n) {
            ColumnHnf h = column_hnf(lim.block(n, v, 6));
            if (h.rank() != 6 || !h.basis.is_identity())
                fail(r, "projection to a vertex is not an isomorphism");
        }
}

std::vector<Int> sorted_torsion(const FgAbGroup& g) {
    std::vector<Int> t = g.torsion();
    std::sort(t.begin(), t.end());
    return t;
}

void suite_components(Rng& rng, PropertyResult& r) {
    int parts = rng.range(2, 3);
    Quiver q = random_multi_component_quiver(rng, parts, 3);
    SimplicialRep rep = random_simplicial_rep(rng, q, false);
    ChainRep crep = s_gamma(rep);
    LimitComplex lim = rep_limit(crep);
    for (int n = 0; n <= 2; ++n) {
        FgAbGroup whole = homology(lim.complex, n).group;
        std::size_t free_rank = 0;
        std::vector<Int> torsion;
        for (const auto& comp : q.components()) {
            FgAbGroup piece = homology(rep_limit(crep.restricted_to(comp)).complex, n).group;
            free_rank += piece.free_rank();
            for (const Int& t : piece.torsion())
                torsion.push_back(t);
        }
        std::sort(torsion.begin(), torsion.end());
        if (whole.free_rank() != free_rank || sorted_torsion(whole) != torsion)
            fail(r, "whole homology is not the product of component homologies in degree " +
                        std::to_string(n));
    }
}

void suite_constant_circle_components(Rng& rng, PropertyResult& r) {
    // acyclic quiver with m components, constant circle, identity maps
    int m = rng.range(1, 3);
    std::vector<int> vs;
    std::vector<Arrow> as;
    int offset = 0, id = 0;
    for (int c = 0; c < m; ++c) {
        int len = rng.range(1, 3);
        for (int i = 1; i <= len; ++i)
            vs.push_back(offset + i);
        for (int i = 1; i < len; ++i)
            as.push_back({"a" + std::to_string(id++), offset + i, offset + i + 1});
        offset += len;
    }
    Quiver q = Quiver::validate(vs, as);
    std::map<int, SimplicialComplex> spaces;
    std::map<std::string, std::map<int, int>> maps;
    for (int v : q.vertices())
        spaces[v] = SimplicialComplex::polygon(4);
    for (const Arrow& a : q.arrows()) {
        std::map<int, int> idm;
        for (int i = 0; i < 4; ++i)
            idm[i] = i;
        maps[a.id] = idm;
    }
    LimitComplex lim = rep_limit(s_gamma(validate_simplicial_rep(q, spaces, maps)));
    FgAbGroup h1 = homology(lim.complex, 1).group;
    if (h1.free_rank() != static_cast<std::size_t>(m) || !h1.torsion().empty())
        fail(r, "H1 of a constant-circle representation is not Z^components");
}

ChainRep scalar_cycle_rep(int m, long long total) {
    std::vector<int> vs;
    std::vector<Arrow> as;
    for (int i = 1; i <= m; ++i) {
        vs.push_back(i);
        as.push_back({"a" + std::to_string(i), i, i % m + 1});
    }
    Quiver q = Quiver::validate(vs, as);
    ChainComplex z = ChainComplex::validate({1}, {IntMatrix(0, 1)});
    std::map<int, ChainComplex> complexes;
    std::map<std::string, ChainMap> maps;
    for (int i = 1; i <= m; ++i) {
        complexes[i] = z;
        IntMatrix s(1, 1);
        s(0, 0) = (i == 1) ? total : 1;
        maps.emplace("a" + std::to_string(i), ChainMap::validate(z, z, {s}));
    }
    return validate_chain_rep(q, std::move(complexes), std::move(maps));
}

void suite_cycle_doubling(Rng& rng, PropertyResult& r) {
    for (int m : {1, 2, 3}) {
        CycleFixedLimit cf = cycle_fixed_limit(scalar_cycle_rep(m, 2));
        if (!cf.fixed_chains_certified)
            fail(r, "fixed-chain certification failed on the doubling cycle");
        if (cf.limit.complex.top_degree() != -1 ||
            !homology(cf.limit.complex, 1).group.is_trivial())
            fail(r, "doubling around a cycle left a nonzero limit");
    }
    // acyclic control: a line of circles keeps H1 = Z
    SimplicialRep rep = line_of_polygons(rng.range(2, 4), 6, rng);
    LimitComplex lim = rep_limit(s_gamma(rep));
    if (homology(lim.complex, 1).group.to_string() != "Z")
        fail(r, "acyclic control lost its circle");
}

std::map<int, int> rotation_map(int n, int k) {
    std::map<int, int> m;
    for (int i = 0; i < n; ++i)
        m[i] = (i + k) % n;
    return m;
}

void suite_antipodal(Rng&, PropertyResult& r) {
    Quiver loop = Quiver::validate({1}, {{"a", 1, 1}});
    {
        SimplicialRep rep = validate_simplicial_rep(
            loop, {{1, SimplicialComplex::polygon(6)}}, {{"a", rotation_map(6, 3)}});
        AntipodalQuotient aq = antipodal_quotient_h0(rep);
        if (!aq.odd_oriented_cycle || aq.h0.free_rank() != 0 ||
            aq.h0.torsion() != std::vector<Int>{2})
            fail(r, "odd loop did not produce Z/2");
    }
    {
        Quiver two = Quiver::validate({1, 2}, {{"a", 1, 2}, {"b", 2, 1}});
        SimplicialRep rep = validate_simplicial_rep(
            two,
            {{1, SimplicialComplex::polygon(6)}, {2, SimplicialComplex::polygon(6)}},
            {{"a", rotation_map(6, 3)}, {"b", rotation_map(6, 3)}});
        AntipodalQuotient aq = antipodal_quotient_h0(rep);
        if (aq.odd_oriented_cycle || !aq.h0.is_trivial())
            fail(r, "even cycle did not make the quotient vanish");
    }
    {
        SimplicialRep rep = validate_simplicial_rep(
            loop, {{1, SimplicialComplex::polygon(4)}}, {{"a", rotation_map(4, 2)}});
        AntipodalQuotient aq = antipodal_quotient_h0(rep);
        if (aq.h0.torsion() != std::vector<Int>{2})
            fail(r, "square variant did not produce Z/2");
    }
}

ChainRep direct_sum_chain_rep(const ChainRep& a, const ChainRep& b) {
    std::map<int, ChainComplex> complexes;
    std::map<std::string, ChainMap> maps;
    for (int v : a.quiver.vertices())
        complexes[v] = direct_sum(a.complexes.at(v), b.complexes.at(v));
    for (const Arrow& ar : a.quiver.arrows()) {
        const ChainMap& f = a.maps.at(ar.id);
        const ChainMap& g = b.maps.at(ar.id);
        std::vector<IntMatrix> mats;
        int top = std::max(complexes[ar.src].top_degree(), complexes[ar.tgt].top_degree());
        for (int n = 0; n <= top; ++n)
            mats.push_back(block_diag(f.matrix(n), g.matrix(n)));
        maps.emplace(ar.id,
                     ChainMap::validate(complexes[ar.src], complexes[ar.tgt], std::move(mats)));
    }
    return validate_chain_rep(a.quiver, std::move(complexes), std::move(maps));
}

/// constant chain representation: one complex everywhere, identities on arrows
ChainRep constant_chain_rep(const Quiver& q, const ChainComplex& c) {
    std::map<int, ChainComplex> complexes;
    std::map<std::string, ChainMap> maps;
    for (int v : q.vertices())
        complexes[v] = c;
    for (const Arrow& a : q.arrows())
        maps.emplace(a.id, ChainMap::identity(c));
    return validate_chain_rep(q, std::move(complexes), std::move(maps));
}

ChainRepMorphism constant_morphism(const ChainRep& src, const ChainRep& tgt,
                                   const ChainMap& psi) {
    std::map<int, ChainMap> comps;
    for (int v : src.quiver.vertices())
        comps.emplace(v, psi);
    return validate_chainrep_morphism(src, tgt, std::move(comps));
}

ChainRepMorphism scalar_endomorphism(const ChainRep& rep, long long c) {
    std::map<int, ChainMap> comps;
    for (int v : rep.quiver.vertices()) {
        const ChainComplex& cx = rep.complexes.at(v);
        std::vector<IntMatrix> mats;
        for (int n = 0; n <= cx.top_degree(); ++n)
            mats.push_back(IntMatrix::identity(cx.rank(n)).scaled(Int(c)));
        comps.emplace(v, ChainMap::validate(cx, cx, std::move(mats)));
    }
    return validate_chainrep_morphism(rep, rep, std::move(comps));
}

ChainRepMorphism random_chainrep_morphism(Rng& rng) {
    Quiver q = random_quiver(rng, 4, 3, rng.coin());
    switch (rng.below(4)) {
        case 0: {
            // constant complexes joined by a null-homotopic chain map
            ChainComplex c = random_chain_complex(rng);
            ChainComplex d = random_chain_complex(rng);
            ChainRep src = constant_chain_rep(q, c);
            ChainRep tgt = constant_chain_rep(q, d);
            return constant_morphism(src, tgt, random_chain_map(rng, c, d, false));
        }
        case 1: {
            // scalar endomorphism of a simplicial representation
            ChainRep rep = s_gamma(random_simplicial_rep(rng, q, false));
            return scalar_endomorphism(rep, rng.range(-2, 2));
        }
        case 2: {
            // collapse of a simplicial representation onto points
            SimplicialRep rep = random_simplicial_rep(rng, q, true);
            SimplicialRep pts = point_rep(q);
            std::map<int, ChainMap> comps;
            for (int v : q.vertices()) {
                std::map<int, int> collapse;
                for (int x : rep.spaces.at(v).vertices())
                    collapse[x] = 0;
                comps.emplace(v, chain_map_of(validate_simplicial_map(
                                     rep.spaces.at(v), pts.spaces.at(v), collapse)));
            }
            return validate_chainrep_morphism(s_gamma(rep), s_gamma(pts), std::move(comps));
        }
        default: {
            // diagonal into a doubled representation
            ChainRep rep = s_gamma(random_simplicial_rep(rng, q, false));
            ChainRep doubled = direct_sum_chain_rep(rep, rep);
            std::map<int, ChainMap> comps;
            for (int v : q.vertices()) {
                const ChainComplex& c = rep.complexes.at(v);
                const ChainComplex& d = doubled.complexes.at(v);
                std::vector<IntMatrix> mats;
                for (int n = 0; n <= c.top_degree(); ++n) {
                    IntMatrix m(d.rank(n), c.rank(n));
                    for (std::size_t i = 0; i < c.rank(n); ++i) {
                        m(i, i) = 1;
                        m(c.rank(n) + i, i) = 1;
                    }
                    mats.push_back(std::move(m));
                }
                comps.emplace(v, ChainMap::validate(c, d, std::move(mats)));
            }
            return validate_chainrep_morphism(rep, doubled, std::move(comps));
        }
    }
}

bool rho_is_natural(const ChainRepMorphism& theta, int n) {
    RhoResult rs = rho(theta.source, n);
    RhoResult rt = rho(theta.target, n);
    LimitComplex ls = rep_limit(theta.source);
    LimitComplex lt = rep_limit(theta.target);
    ChainMap lim_theta = limit_map(ls, lt, theta);
    GroupHom top = homology_map(rs.limit_homology, rt.limit_homology, lim_theta.matrix(n));

    std::map<int, Homology> hs, ht;
    std::map<int, GroupHom> comps;
    for (int v : theta.source.quiver.vertices()) {
        hs.emplace(v, homology(theta.source.complexes.at(v), n));
        ht.emplace(v, homology(theta.target.complexes.at(v), n));
        comps.emplace(v,
                      homology_map(hs.at(v), ht.at(v), theta.components.at(v).matrix(n)));
    }
    AbRepMorphism hmor = validate_ab_morphism(homology_rep(theta.source, n),
                                              homology_rep(theta.target, n), std::move(comps));
    GroupHom bottom = limit_hom(rs.class_limit, rt.class_limit, hmor);
    return compose(rt.hom, top).equals(compose(bottom, rs.hom));
}

void suite_rho(Rng& rng, PropertyResult& r) {
    ChainRepMorphism theta = random_chainrep_morphism(rng);
    for (int n = 0; n <= 1; ++n) {
        try {
            if (!rho_is_natural(theta, n))
                fail(r, "rho naturality square failed in degree " + std::to_string(n));
        } catch (const ValidationError& e) {
            fail(r, std::string("rho construction rejected: ") + e.what());
        }
    }
}

struct HomotopyTriple {
    ChainRepMorphism alpha, beta;
    RepHomotopy f;
};

HomotopyTriple random_homotopy_triple(Rng& rng) {
    // at least two connected vertices: perturbing the homotopy at a single
    // vertex then always breaks a compatibility square
    Quiver q = random_quiver(rng, 3, 2, true);
    while (q.vertices().size() < 2)
        q = random_quiver(rng, 3, 2, true);
    ChainComplex c = random_chain_complex(rng, 2, 3);
    ChainComplex d = random_chain_complex(rng, 2, 3);
    while (d.rank(1) == 0)  // keep the homotopy matrices nonempty
        d = random_chain_complex(rng, 2, 3);
    ChainRep src = constant_chain_rep(q, c);
    ChainRep tgt = constant_chain_rep(q, d);
    ChainMap alpha0 = random_chain_map(rng, c, d, true);

    int top = std::max(c.top_degree(), d.top_degree());
    std::vector<IntMatrix> f0;
    for (int n = 0; n <= top; ++n)
        f0.push_back(random_matrix(rng, d.rank(n + 1), c.rank(n), 2));
    auto f_at = [&](int n) -> IntMatrix {
        if (n >= 0 && n < static_cast<int>(f0.size()))
            return f0[static_cast<std::size_t>(n)];
        return IntMatrix(d.rank(n + 1), c.rank(n));
    };
    std::vector<IntMatrix> beta_mats;
    for (int n = 0; n <= top; ++n)
        beta_mats.push_back(alpha0.matrix(n) + d.boundary(n + 1) * f_at(n) +
                            f_at(n - 1) * c.boundary(n));
    ChainMap beta0 = ChainMap::validate(c, d, std::move(beta_mats));

    HomotopyTriple t{constant_morphism(src, tgt, alpha0), constant_morphism(src, tgt, beta0), {}};
    for (int v : q.vertices())
        t.f.mats[v] = f0;
    return t;
}

void suite_homotopy(Rng& rng, PropertyResult& r) {
    HomotopyTriple t = random_homotopy_triple(rng);
    HomotopyReport ok = verify_homotopy(t.alpha, t.beta, t.f);
    if (!ok.valid)
        fail(r, "constructed homotopy rejected: " + ok.failure);
    else if (!ok.limit_homology_agrees)
        fail(r, "homotopic morphisms disagree on limit homology");

    // perturb one entry until the certificate genuinely breaks
    bool any_entries = false;
    for (auto& [v, mats] : t.f.mats)
        for (const IntMatrix& m : mats)
            if (m.rows() > 0 && m.cols() > 0)
                any_entries = true;
    if (!any_entries)
        return;  // nothing to perturb on empty shapes
    bool rejected = false;
    for (int attempt = 0; attempt < 30 && !rejected; ++attempt) {
        RepHomotopy bad = t.f;
        std::vector<int> vertices;
        for (auto& [v, mats] : bad.mats)
            vertices.push_back(v);
        int v = rng.pick(vertices);
        auto& mats = bad.mats[v];
        std::vector<std::size_t> candidates;
        for (std::size_t n = 0; n < mats.size(); ++n)
            if (mats[n].rows() > 0 && mats[n].cols() > 0)
                candidates.push_back(n);
        if (candidates.empty())
            continue;
        std::size_t n = rng.pick(candidates);
        std::size_t i = static_cast<std::size_t>(rng.below(static_cast<int>(mats[n].rows())));
        std::size_t j = static_cast<std::size_t>(rng.below(static_cast<int>(mats[n].cols())));
        mats[n](i, j) += rng.range(1, 3);
        HomotopyReport report = verify_homotopy(t.alpha, t.beta, bad);
        if (!report.valid) {
            rejected = true;
            if (report.failure.empty())
                fail(r, "rejection carried no failure locus");
        }
    }
    if (!rejected)
        fail(r, "no perturbation was rejected");
}

void suite_relative(Rng& rng, PropertyResult& r) {
    // circle over A2 with identity maps and compatible basepoints
    int ngon = rng.pick(std::vector<int>{3, 4, 6});
    Quiver q = Quiver::validate({1, 2}, {{"a", 1, 2}});
    std::map<int, SimplicialComplex> spaces{{1, SimplicialComplex::polygon(ngon)},
                                            {2, SimplicialComplex::polygon(ngon)}};
    std::map<std::string, std::map<int, int>> maps{{"a", rotation_map(ngon, 0)}};
    SimplicialRep rep = validate_simplicial_rep(q, spaces, maps);
    SimplicialRep sub = basepoint_subrep(rep, {{1, 0}, {2, 0}});
    ChainRep crep = s_gamma(rep);
    ChainRep csub = s_gamma(sub);
    std::map<int, ChainMap> comps;
    for (int v : q.vertices())
        comps.emplace(v, chain_map_of(validate_simplicial_map(sub.spaces.at(v),
                                                              rep.spaces.at(v), {{0, 0}})));
    ChainRepMorphism inc = validate_chainrep_morphism(csub, crep, std::move(comps));

    LimitComplex lim = rep_limit(crep);
    for (int n = 1; n <= 2; ++n) {
        FgAbGroup rel = relative_homology(inc, n);
        FgAbGroup plain = homology(lim.complex, n).group;
        if (!rel.same_invariants(plain))
            fail(r, "relative homology differs from plain homology in degree " +
                        std::to_string(n));
    }
    FgAbGroup rel0 = relative_homology(inc, 0);
    FgAbGroup plain0 = homology(lim.complex, 0).group;
    if (!rel0.torsion().empty() || plain0.free_rank() != 1 + rel0.free_rank())
        fail(r, "degree-0 rank bookkeeping failed");
}

void suite_excision(Rng& rng, PropertyResult& r) {
    // a covering pair of closed arcs on a polygon under an identity loop,
    // with a random arc boundary
    int ngon = rng.pick(std::vector<int>{4, 6, 8});
    int cut = rng.range(1, ngon - 1);
    Quiver loop = Quiver::validate({1}, {{"a", 1, 1}});
    SimplicialRep rep = validate_simplicial_rep(
        loop, {{1, SimplicialComplex::polygon(ngon)}}, {{"a", rotation_map(ngon, 0)}});
    std::vector<std::vector<int>> fa, fb;
    for (int i = 0; i < ngon; ++i) {
        std::vector<int> e{i, (i + 1) % ngon};
        std::sort(e.begin(), e.end());
        (i < cut ? fa : fb).push_back(e);
    }
    ExcisionReport er = excision_check(rep, {{1, validate_complex({}, fa)}},
                                       {{1, validate_complex({}, fb)}});
    if (!er.covers)
        fail(r, "arc pair failed the cover condition");
    if (!er.vanishing)
        fail(r, "quotient limit homology did not vanish under a cover");
}

AbRep sum_ab_rep(const AbRep& a, const AbRep& b) {
    std::map<int, FgAbGroup> groups;
    std::map<std::string, GroupHom> homs;
    for (int v : a.quiver.vertices()) {
        const FgAbGroup& ga = a.groups.at(v);
        const FgAbGroup& gb = b.groups.at(v);
        groups.emplace(v, FgAbGroup(ga.n_generators() + gb.n_generators(),
                                    block_diag(ga.relations(), gb.relations())));
    }
    for (const Arrow& ar : a.quiver.arrows())
        homs.emplace(ar.id,
                     GroupHom(groups.at(ar.src), groups.at(ar.tgt),
                              block_diag(a.homs.at(ar.id).matrix(), b.homs.at(ar.id).matrix())));
    return validate_ab_rep(a.quiver, std::move(groups), std::move(homs));
}

void suite_left_exact(Rng& rng, PropertyResult& r) {
    Quiver q = random_quiver(rng, 4, 3, rng.coin());
    if (rng.coin()) {
        // 0 -> B --m--> B -> B/m -> 0 for m coprime to all torsion
        AbRep b = random_ab_rep(rng, q);
        Int m = 5;
        for (int v : q.vertices())
            for (const Int& t : b.groups.at(v).torsion())
                if (boost::multiprecision::gcd(m, t) != 1)
                    m = 7;
        std::map<int, FgAbGroup> cg;
        std::map<std::string, GroupHom> ch;
        for (int v : q.vertices()) {
            const FgAbGroup& gv = b.groups.at(v);
            cg.emplace(v, FgAbGroup(gv.n_generators(),
                                    hstack(gv.relations(),
                                           IntMatrix::identity(gv.n_generators()).scaled(m))));
        }
        for (const Arrow& ar : q.arrows())
            ch.emplace(ar.id,
                       GroupHom(cg.at(ar.src), cg.at(ar.tgt), b.homs.at(ar.id).matrix()));
        AbRep c = validate_ab_rep(q, std::move(cg), std::move(ch));

        std::map<int, GroupHom> alpha_c, beta_c;
        for (int v : q.vertices()) {
            const FgAbGroup& gv = b.groups.at(v);
            alpha_c.emplace(v, GroupHom(gv, gv,
                                        IntMatrix::identity(gv.n_generators()).scaled(m)));
            beta_c.emplace(v, GroupHom(gv, c.groups.at(v),
                                       IntMatrix::identity(gv.n_generators())));
        }
        AbRepMorphism alpha = validate_ab_morphism(b, b, std::move(alpha_c));
        AbRepMorphism beta = validate_ab_morphism(b, c, std::move(beta_c));
        ExactnessReport er = left_exactness_check(alpha, beta);
        if (!er.vertexwise_exact)
            fail(r, "constructed multiplication sequence was not vertexwise exact: " +
                        er.vertexwise_issue);
        else if (!er.left_exact)
            fail(r, "limit functor failed left exactness: " + er.failure);
    } else {
        // split sequence 0 -> A -> A + C -> C -> 0
        AbRep a = random_ab_rep(rng, q);
        AbRep c = random_ab_rep(rng, q);
        AbRep b = sum_ab_rep(a, c);
        std::map<int, GroupHom> alpha_c, beta_c;
        for (int v : q.vertices()) {
            std::size_t na = a.groups.at(v).n_generators();
            std::size_t nc = c.groups.at(v).n_generators();
            IntMatrix inc(na + nc, na);
            for (std::size_t i = 0; i < na; ++i)
                inc(i, i) = 1;
            IntMatrix proj(nc, na + nc);
            for (std::size_t i = 0; i < nc; ++i)
                proj(i, na + i) = 1;
            alpha_c.emplace(v, GroupHom(a.groups.at(v), b.groups.at(v), std::move(inc)));
            beta_c.emplace(v, GroupHom(b.groups.at(v), c.groups.at(v), std::move(proj)));
        }
        AbRepMorphism alpha = validate_ab_morphism(a, b, std::move(alpha_c));
        AbRepMorphism beta = validate_ab_morphism(b, c, std::move(beta_c));
        ExactnessReport er = left_exactness_check(alpha, beta);
        if (!er.vertexwise_exact)
            fail(r, "split sequence was not vertexwise exact: " + er.vertexwise_issue);
        else if (!er.left_exact)
            fail(r, "limit functor failed left exactness on a split sequence: " + er.failure);
    }
}

void suite_at_components(Rng& rng, PropertyResult& r) {
    Quiver q = random_quiver(rng, 6, 5, false);
    SimplicialRep rep = random_simplicial_rep(rng, q, true);
    AtSpace at = at_space(rep);
    if (component_count(at) != q.components().size())
        fail(r, "component count of the attachment space disagrees with the quiver");
}

void suite_split(Rng& rng, PropertyResult& r) {
    Quiver q = random_quiver(rng, 4, 3, rng.coin());
    SimplicialRep a = random_simplicial_rep(rng, q, false);
    SimplicialRep b = random_simplicial_rep(rng, q, false);
    // disjoint union with the second family shifted out of the way
    auto shift_complex = [](const SimplicialComplex& k, int offset) {
        std::vector<std::vector<int>> facets;
        for (int d = 0; d <= k.dim(); ++d)
            for (const auto& s : k.simplices(d)) {
                std::vector<int> t;
                for (int v : s)
                    t.push_back(v + offset);
                facets.push_back(t);
            }
        std::vector<int> vs;
        for (int v : k.vertices())
            vs.push_back(v + offset);
        return validate_complex(vs, facets);
    };
    const int offset = 100;
    std::map<int, SimplicialComplex> spaces, left, right;
    std::map<std::string, std::map<int, int>> maps;
    for (int v : q.vertices()) {
        left[v] = a.spaces.at(v);
        right[v] = shift_complex(b.spaces.at(v), offset);
        std::vector<std::vector<int>> facets;
        for (const SimplicialComplex* k : {&left[v], &right[v]})
            for (int d = 0; d <= k->dim(); ++d)
                for (const auto& s : k->simplices(d))
                    facets.push_back(s);
        std::vector<int> vs = left[v].vertices();
        for (int x : right[v].vertices())
            vs.push_back(x);
        spaces[v] = validate_complex(vs, facets);
    }
    for (const Arrow& ar : q.arrows()) {
        std::map<int, int> vm = a.arrow_maps.at(ar.id);
        for (const auto& [x, y] : b.arrow_maps.at(ar.id))
            vm[x + offset] = y + offset;
        maps[ar.id] = vm;
    }
    SimplicialRep rep = validate_simplicial_rep(q, spaces, maps);
    SplitReport sr = split_analysis(rep, left, right);
    if (!sr.all_ok())
        fail(r, "split analysis rejected a vertex-disjoint decomposition");
}

void suite_sigma(Rng& rng, PropertyResult& r) {
    Quiver q = random_quiver(rng, 4, 3, rng.coin());
    SimplicialRep rep = random_simplicial_rep(rng, q, rng.coin());
    std::vector<SigmaComponent> comps = sigma(rep);
    for (const SigmaComponent& c : comps)
        if (!c.base_independent)
            fail(r, "sigma depends on the chosen vertex");
    // naturality against the collapse onto the point representation
    SimplicialRep pts = point_rep(q);
    std::map<int, std::map<int, int>> collapse;
    for (int v : q.vertices())
        for (int x : rep.spaces.at(v).vertices())
            collapse[v][x] = 0;
    SimplicialRepMorphism theta = validate_rep_morphism(rep, pts, std::move(collapse));
    if (!sigma_is_natural(theta))
        fail(r, "sigma naturality square failed for the collapse morphism");
}

void suite_sigma_instance(Rng&, PropertyResult& r) {
    Quiver loop = Quiver::validate({1}, {{"a", 1, 1}});
    SimplicialRep rep = validate_simplicial_rep(
        loop, {{1, SimplicialComplex::polygon(6)}}, {{"a", rotation_map(6, 3)}});
    GroupHom h = h_natural(rep, 0);
    IntMatrix c = h.canonical_matrix();
    if (c.rows() != 1 || c.cols() != 1 || (c(0, 0) != 2 && c(0, 0) != -2))
        fail(r, "induced degree-0 map of the antipodal loop is not multiplication by 2");
}

struct SuiteSpec {
    const char* name;
    int default_trials;
    Suite body;
};

const std::vector<SuiteSpec>& registry() {
    static const std::vector<SuiteSpec> suites{
        {"thm-2.4-roundtrip", 200, suite_roundtrip},
        {"prop-2.6", 200, suite_related_exact},
        {"thm-3.6", 200, suite_grading},
        {"ex-4.11", 50, suite_point_rep},
        {"ex-4.8", 8, suite_line_limit},
        {"thm-4.20", 100, suite_components},
        {"cor-4.22", 25, suite_constant_circle_components},
        {"thm-4.23", 10, suite_cycle_doubling},
        {"thm-4.25", 1, suite_antipodal},
        {"thm-4.17", 100, suite_rho},
        {"thm-5.5", 50, suite_homotopy},
        {"thm-5.10", 6, suite_relative},
        {"thm-5.12", 30, suite_excision},
        {"cor-5.13", 100, suite_left_exact},
        {"cor-6.8", 100, suite_at_components},
        {"thm-6.9", 50, suite_split},
        {"thm-6.10", 100, suite_sigma},
        {"thm-4.25-sigma", 1, suite_sigma_instance},
    };
    return suites;
}

}  // namespace

std::vector<std::string> property_names() {
    std::vector<std::string> names;
    for (const SuiteSpec& s : registry())
        names.push_back(s.name);
    return names;
}

bool has_property(const std::string& name) {
    for (const SuiteSpec& s : registry())
        if (s.name == name)
            return true;
    return false;
}

PropertyResult run_property(const std::string& name, std::uint64_t seed, int trials) {
    for (const SuiteSpec& s : registry()) {
        if (s.name != name)
            continue;
        PropertyResult result;
        result.name = name;
        int count = trials > 0 ? trials : s.default_trials;
        Rng rng(seed);
        for (int i = 0; i < count; ++i) {
            result.trials++;
            s.body(rng, result);
        }
        return result;
    }
    throw ValidationError("unknown property \"" + name + "\"");
}

}  // namespace quiverhom::checks
