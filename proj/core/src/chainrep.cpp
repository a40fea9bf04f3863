#include "quiverhom/chainrep.hpp"

#include <algorithm>

namespace quiverhom {

int ChainRep::top_degree() const {
    int top = -1;
    for (const auto& [v, c] : complexes)
        top = std::max(top, c.top_degree());
    return top;
}

ChainRep ChainRep::restricted_to(const std::vector<int>& quiver_vertices) const {
    ChainRep out;
    out.quiver = quiver.restricted_to(quiver_vertices);
    for (int v : out.quiver.vertices())
        out.complexes[v] = complexes.at(v);
    for (const Arrow& a : out.quiver.arrows())
        out.maps[a.id] = maps.at(a.id);
    return out;
}

ChainRep validate_chain_rep(Quiver q, std::map<int, ChainComplex> complexes,
                            std::map<std::string, ChainMap> maps) {
    for (int v : q.vertices())
        if (!complexes.count(v))
            throw ValidationError("chain rep: no complex at vertex " + std::to_string(v));
    for (const Arrow& a : q.arrows()) {
        auto it = maps.find(a.id);
        if (it == maps.end())
            throw ValidationError("chain rep: no chain map for arrow \"" + a.id + "\"");
        if (!(it->second.source() == complexes.at(a.src)) ||
            !(it->second.target() == complexes.at(a.tgt)))
            throw ValidationError("chain rep: map at arrow \"" + a.id +
                                  "\" does not match the vertex complexes");
    }
    ChainRep rep;
    rep.quiver = std::move(q);
    rep.complexes = std::move(complexes);
    rep.maps = std::move(maps);
    return rep;
}

ChainRep s_gamma(const SimplicialRep& rep) {
    std::map<int, ChainComplex> complexes;
    for (int v : rep.quiver.vertices())
        complexes[v] = chain_complex_of(rep.spaces.at(v));
    std::map<std::string, ChainMap> maps;
    for (const Arrow& a : rep.quiver.arrows())
        maps[a.id] = chain_map_of(rep.arrow_map(a.id));
    return validate_chain_rep(rep.quiver, std::move(complexes), std::move(maps));
}

IntMatrix LimitComplex::inclusion_at(int n) const {
    if (n >= 0 && n < static_cast<int>(inclusion.size()))
        return inclusion[static_cast<std::size_t>(n)];
    return IntMatrix(0, 0);
}

IntMatrix LimitComplex::block(int n, int vertex, std::size_t vertex_rank) const {
    IntMatrix inc = inclusion_at(n);
    if (n < 0 || n >= static_cast<int>(offsets.size()))
        return IntMatrix(vertex_rank, complex.rank(n));
    std::size_t off = offsets[static_cast<std::size_t>(n)].at(vertex);
    return inc.submatrix(off, 0, vertex_rank, inc.cols());
}

LimitComplex rep_limit(const ChainRep& rep) {
    LimitComplex out;
    const int top = rep.top_degree();
    std::vector<std::size_t> lim_ranks;
    std::vector<IntMatrix> prod_boundaries;  // block diag of vertex boundaries

    for (int n = 0; n <= top; ++n) {
        std::map<int, std::size_t> offsets;
        std::size_t total = 0;
        for (int v : rep.quiver.vertices()) {
            offsets[v] = total;
            total += rep.complexes.at(v).rank(n);
        }
        std::size_t eq_rows = 0;
        for (const Arrow& a : rep.quiver.arrows())
            eq_rows += rep.complexes.at(a.tgt).rank(n);
        IntMatrix sys(eq_rows, total);
        std::size_t row = 0;
        for (const Arrow& a : rep.quiver.arrows()) {
            const IntMatrix phi = rep.maps.at(a.id).matrix(n);
            const std::size_t ns = rep.complexes.at(a.src).rank(n);
            const std::size_t nt = rep.complexes.at(a.tgt).rank(n);
            const std::size_t off_s = offsets.at(a.src);
            const std::size_t off_t = offsets.at(a.tgt);
            for (std::size_t i = 0; i < nt; ++i) {
                for (std::size_t j = 0; j < ns; ++j)
                    sys(row + i, off_s + j) += phi(i, j);
                sys(row + i, off_t + i) -= 1;
            }
            row += nt;
        }
        out.inclusion.push_back(kernel_basis(sys));
        out.offsets.push_back(std::move(offsets));
        lim_ranks.push_back(out.inclusion.back().cols());

        std::vector<IntMatrix> blocks;
        for (int v : rep.quiver.vertices())
            blocks.push_back(rep.complexes.at(v).boundary(n));
        prod_boundaries.push_back(block_diag(blocks));
    }

    // induced boundary: solve inclusion(n-1) * d = prod_d(n) * inclusion(n)
    std::vector<IntMatrix> lim_boundaries(lim_ranks.size());
    std::vector<std::vector<std::string>> labels;
    for (std::size_t n = 0; n < lim_ranks.size(); ++n) {
        std::vector<std::string> lab;
        for (std::size_t j = 0; j < lim_ranks[n]; ++j)
            lab.push_back("l" + std::to_string(n) + "." + std::to_string(j));
        labels.push_back(std::move(lab));
        if (n == 0) {
            lim_boundaries[0] = IntMatrix(0, lim_ranks[0]);
            continue;
        }
        IntMatrix rhs = prod_boundaries[n] * out.inclusion[n];
        lim_boundaries[n] = solve_exact(out.inclusion[n - 1], rhs);
    }
    out.complex = ChainComplex::validate(std::move(lim_ranks), std::move(lim_boundaries),
                                         std::move(labels));
    // inclusion commutation re-check
    for (int n = 1; n <= out.complex.top_degree(); ++n) {
        IntMatrix lhs = out.inclusion[static_cast<std::size_t>(n) - 1] * out.complex.boundary(n);
        IntMatrix rhs = prod_boundaries[static_cast<std::size_t>(n)] *
                        out.inclusion[static_cast<std::size_t>(n)];
        if (!(lhs == rhs))
            internal_error("limit complex inclusion does not commute with boundaries");
    }
    return out;
}

Homology homology(const ChainComplex& c, int n) {
    if (n < 0)
        throw ValidationError("homology: negative degree");
    Homology h;
    h.cycle_basis = kernel_basis(c.boundary(n));
    h.presentation = h.cycle_basis.cols() == 0
                         ? IntMatrix(0, c.rank(n + 1))
                         : solve_exact(h.cycle_basis, c.boundary(n + 1));
    h.group = FgAbGroup(h.cycle_basis.cols(), h.presentation);
    for (const auto& f : h.group.canonical_factors())
        h.generators.emplace_back(f.order, mat_vec(h.cycle_basis, f.generator));
    return h;
}

GroupHom homology_map(const Homology& source, const Homology& target, const IntMatrix& phi_n) {
    IntMatrix mapped = phi_n * source.cycle_basis;
    IntMatrix coords = target.cycle_basis.cols() == 0 && mapped.is_zero()
                           ? IntMatrix(0, mapped.cols())
                           : solve_exact(target.cycle_basis, mapped);
    return GroupHom(source.group, target.group, std::move(coords));
}

AbRep homology_rep(const ChainRep& rep, int n) {
    std::map<int, Homology> vertex_h;
    std::map<int, FgAbGroup> groups;
    for (int v : rep.quiver.vertices()) {
        vertex_h.emplace(v, homology(rep.complexes.at(v), n));
        groups.emplace(v, vertex_h.at(v).group);
    }
    std::map<std::string, GroupHom> homs;
    for (const Arrow& a : rep.quiver.arrows())
        homs.emplace(a.id, homology_map(vertex_h.at(a.src), vertex_h.at(a.tgt),
                                        rep.maps.at(a.id).matrix(n)));
    return validate_ab_rep(rep.quiver, std::move(groups), std::move(homs));
}

ChainRepMorphism validate_chainrep_morphism(ChainRep source, ChainRep target,
                                            std::map<int, ChainMap> components) {
    if (!(source.quiver == target.quiver))
        throw ValidationError("chain rep morphism: quivers differ");
    for (int v : source.quiver.vertices()) {
        auto it = components.find(v);
        if (it == components.end())
            throw ValidationError("chain rep morphism: missing component at vertex " +
                                  std::to_string(v));
        if (!(it->second.source() == source.complexes.at(v)) ||
            !(it->second.target() == target.complexes.at(v)))
            throw ValidationError("chain rep morphism: component at vertex " +
                                  std::to_string(v) + " has wrong complexes");
    }
    for (const Arrow& a : source.quiver.arrows()) {
        int top = std::max(source.top_degree(), target.top_degree());
        for (int nn = 0; nn <= top; ++nn) {
            IntMatrix lhs = components.at(a.tgt).matrix(nn) * source.maps.at(a.id).matrix(nn);
            IntMatrix rhs = target.maps.at(a.id).matrix(nn) * components.at(a.src).matrix(nn);
            if (!(lhs == rhs))
                throw ValidationError("chain rep morphism: square at arrow \"" + a.id +
                                      "\" fails in degree " + std::to_string(nn));
        }
    }
    ChainRepMorphism m;
    m.source = std::move(source);
    m.target = std::move(target);
    m.components = std::move(components);
    return m;
}

ChainRepMorphism chainrep_identity(const ChainRep& rep) {
    std::map<int, ChainMap> comps;
    for (int v : rep.quiver.vertices())
        comps.emplace(v, ChainMap::identity(rep.complexes.at(v)));
    return validate_chainrep_morphism(rep, rep, std::move(comps));
}

namespace {

IntMatrix morphism_block_diag(const ChainRepMorphism& m, int n) {
    std::vector<IntMatrix> blocks;
    for (int v : m.source.quiver.vertices())
        blocks.push_back(m.components.at(v).matrix(n));
    return block_diag(blocks);
}

}  // namespace

ChainMap limit_map(const LimitComplex& source, const LimitComplex& target,
                   const ChainRepMorphism& morphism) {
    int top = std::max(source.complex.top_degree(), target.complex.top_degree());
    std::vector<IntMatrix> mats;
    for (int n = 0; n <= top; ++n) {
        IntMatrix mapped = morphism_block_diag(morphism, n) * source.inclusion_at(n);
        if (target.complex.rank(n) == 0) {
            if (!mapped.is_zero())
                internal_error("limit map: image escapes a zero limit");
            mats.push_back(IntMatrix(0, source.complex.rank(n)));
        } else {
            mats.push_back(solve_exact(target.inclusion_at(n), mapped));
        }
    }
    return ChainMap::validate(source.complex, target.complex, std::move(mats));
}

RhoResult rho(const ChainRep& rep, int n) {
    RhoResult out;
    LimitComplex lim = rep_limit(rep);
    out.limit_homology = homology(lim.complex, n);

    std::map<int, Homology> vertex_h;
    for (int v : rep.quiver.vertices())
        vertex_h.emplace(v, homology(rep.complexes.at(v), n));
    out.class_limit = ab_limit(homology_rep(rep, n));

    // push each cycle-basis generator of the limit through every vertex:
    // express the vertex block as a vertex cycle, then as vertex classes
    const IntMatrix inc = lim.inclusion_at(n);
    const std::size_t k = out.limit_homology.group.n_generators();
    IntMatrix cycles_in_product = inc * out.limit_homology.cycle_basis;
    IntMatrix class_tuples(out.class_limit.total_gens, k);
    for (int v : rep.quiver.vertices()) {
        const std::size_t rank_v = rep.complexes.at(v).rank(n);
        const std::size_t off = n >= 0 && n < static_cast<int>(lim.offsets.size())
                                    ? lim.offsets[static_cast<std::size_t>(n)].at(v)
                                    : 0;
        IntMatrix block = cycles_in_product.rows() == 0
                              ? IntMatrix(rank_v, k)
                              : cycles_in_product.submatrix(off, 0, rank_v, k);
        const Homology& hv = vertex_h.at(v);
        IntMatrix coords = hv.cycle_basis.cols() == 0 && block.is_zero()
                               ? IntMatrix(0, k)
                               : solve_exact(hv.cycle_basis, block);
        std::size_t class_off = out.class_limit.offsets.at(v);
        for (std::size_t i = 0; i < coords.rows(); ++i)
            for (std::size_t j = 0; j < k; ++j)
                class_tuples(class_off + i, j) = coords(i, j);
    }
    IntMatrix in_limit_lattice = out.class_limit.lattice_basis.cols() == 0 &&
                                         class_tuples.is_zero()
                                     ? IntMatrix(0, k)
                                     : solve_exact(out.class_limit.lattice_basis, class_tuples);
    out.hom = GroupHom(out.limit_homology.group, out.class_limit.group,
                       std::move(in_limit_lattice));
    out.injective = out.hom.is_injective();
    out.surjective = out.hom.is_surjective();
    return out;
}

IntMatrix RepHomotopy::at(int vertex, int n, const ChainComplex& src,
                          const ChainComplex& tgt) const {
    auto it = mats.find(vertex);
    if (it != mats.end() && n >= 0 && n < static_cast<int>(it->second.size())) {
        const IntMatrix& m = it->second[static_cast<std::size_t>(n)];
        if (m.rows() != 0 || m.cols() != 0)
            return m;
    }
    return IntMatrix(tgt.rank(n + 1), src.rank(n));
}

HomotopyReport verify_homotopy(const ChainRepMorphism& alpha, const ChainRepMorphism& beta,
                               const RepHomotopy& f) {
    HomotopyReport report;
    if (!(alpha.source == beta.source) || !(alpha.target == beta.target)) {
        report.failure = "morphisms do not share source and target";
        return report;
    }
    const ChainRep& src = alpha.source;
    const ChainRep& tgt = alpha.target;
    const int top = std::max(src.top_degree(), tgt.top_degree());

    // shape check up front
    for (int v : src.quiver.vertices()) {
        const ChainComplex& cs = src.complexes.at(v);
        const ChainComplex& ct = tgt.complexes.at(v);
        auto it = f.mats.find(v);
        if (it == f.mats.end())
            continue;
        for (int n = 0; n < static_cast<int>(it->second.size()); ++n) {
            const IntMatrix& m = it->second[static_cast<std::size_t>(n)];
            if (m.rows() == 0 && m.cols() == 0)
                continue;
            if (m.rows() != ct.rank(n + 1) || m.cols() != cs.rank(n)) {
                report.failure = "homotopy matrix at vertex " + std::to_string(v) +
                                 ", degree " + std::to_string(n) + " has the wrong shape";
                return report;
            }
        }
    }

    // dF + Fd = beta - alpha at every vertex and degree
    for (int v : src.quiver.vertices()) {
        const ChainComplex& cs = src.complexes.at(v);
        const ChainComplex& ct = tgt.complexes.at(v);
        for (int n = 0; n <= top; ++n) {
            IntMatrix lhs = ct.boundary(n + 1) * f.at(v, n, cs, ct) +
                            f.at(v, n - 1, cs, ct) * cs.boundary(n);
            IntMatrix rhs = beta.components.at(v).matrix(n) - alpha.components.at(v).matrix(n);
            if (!(lhs == rhs)) {
                report.failure = "homotopy identity fails at vertex " + std::to_string(v) +
                                 ", degree " + std::to_string(n);
                return report;
            }
        }
    }
    // compatibility square over every arrow
    for (const Arrow& a : src.quiver.arrows()) {
        const ChainComplex& cs_s = src.complexes.at(a.src);
        const ChainComplex& ct_s = tgt.complexes.at(a.src);
        const ChainComplex& cs_t = src.complexes.at(a.tgt);
        const ChainComplex& ct_t = tgt.complexes.at(a.tgt);
        for (int n = 0; n <= top; ++n) {
            IntMatrix lhs = tgt.maps.at(a.id).matrix(n + 1) * f.at(a.src, n, cs_s, ct_s);
            IntMatrix rhs = f.at(a.tgt, n, cs_t, ct_t) * src.maps.at(a.id).matrix(n);
            if (!(lhs == rhs)) {
                report.failure = "compatibility square fails at arrow \"" + a.id +
                                 "\", degree " + std::to_string(n);
                return report;
            }
        }
    }
    report.valid = true;

    // push the homotopy to the limit complexes
    LimitComplex lim_src = rep_limit(src);
    LimitComplex lim_tgt = rep_limit(tgt);
    ChainMap lim_alpha = limit_map(lim_src, lim_tgt, alpha);
    ChainMap lim_beta = limit_map(lim_src, lim_tgt, beta);
    int lim_top = std::max(lim_src.complex.top_degree(), lim_tgt.complex.top_degree());
    for (int n = 0; n <= lim_top; ++n) {
        std::vector<IntMatrix> blocks;
        for (int v : src.quiver.vertices())
            blocks.push_back(f.at(v, n, src.complexes.at(v), tgt.complexes.at(v)));
        IntMatrix mapped = block_diag(blocks) * lim_src.inclusion_at(n);
        IntMatrix coords;
        if (lim_tgt.complex.rank(n + 1) == 0) {
            if (!mapped.is_zero())
                internal_error("limit homotopy escapes a zero limit");
            coords = IntMatrix(0, lim_src.complex.rank(n));
        } else {
            coords = solve_exact(lim_tgt.inclusion_at(n + 1), mapped);
        }
        report.induced_on_limit.push_back(std::move(coords));
        // dF + Fd = lim(beta) - lim(alpha) in the limit coordinates
        IntMatrix prev = (n == 0) ? IntMatrix(lim_tgt.complex.rank(0), 0)
                                  : report.induced_on_limit[static_cast<std::size_t>(n) - 1];
        IntMatrix check = lim_tgt.complex.boundary(n + 1) * report.induced_on_limit.back();
        if (n >= 1)
            check = check + prev * lim_src.complex.boundary(n);
        if (!(check == lim_beta.matrix(n) - lim_alpha.matrix(n)))
            internal_error("induced limit homotopy fails its defining identity");
    }

    report.limit_homology_agrees = true;
    for (int n = 0; n <= lim_top; ++n) {
        Homology hs = homology(lim_src.complex, n);
        Homology ht = homology(lim_tgt.complex, n);
        GroupHom ha = homology_map(hs, ht, lim_alpha.matrix(n));
        GroupHom hb = homology_map(hs, ht, lim_beta.matrix(n));
        if (!ha.equals(hb)) {
            report.limit_homology_agrees = false;
            internal_error("homotopic morphisms induced different maps on limit homology");
        }
    }
    return report;
}

FgAbGroup subquotient_homology(const ChainComplex& c, const std::vector<IntMatrix>& sub_bases,
                               int n) {
    auto sub_at = [&](int m) -> IntMatrix {
        if (m >= 0 && m < static_cast<int>(sub_bases.size()))
            return sub_bases[static_cast<std::size_t>(m)];
        return IntMatrix(c.rank(m), 0);
    };
    // relative cycles: boundary falls into the sublattice one degree down
    IntMatrix z = preimage_lattice(c.boundary(n), sub_at(n - 1));
    // relative boundaries: images from above plus the sublattice itself
    IntMatrix b = lattice_sum(c.boundary(n + 1), sub_at(n));
    if (z.cols() == 0) {
        if (!b.is_zero() && b.cols() != 0)
            internal_error("relative boundaries escape the relative cycles");
        return FgAbGroup(0, IntMatrix(0, 0));
    }
    IntMatrix rel = solve_exact(z, b);
    return FgAbGroup(z.cols(), rel);
}

FgAbGroup relative_homology(const ChainRepMorphism& inclusion, int n) {
    const ChainRep& sub = inclusion.source;
    const ChainRep& rep = inclusion.target;
    for (int v : rep.quiver.vertices()) {
        const ChainMap& comp = inclusion.components.at(v);
        for (int m = 0; m <= sub.complexes.at(v).top_degree(); ++m)
            if (kernel_basis(comp.matrix(m)).cols() != 0)
                throw ValidationError("relative homology: inclusion is not injective at vertex " +
                                      std::to_string(v) + ", degree " + std::to_string(m));
    }
    LimitComplex lim_sub = rep_limit(sub);
    LimitComplex lim = rep_limit(rep);
    ChainMap inc = limit_map(lim_sub, lim, inclusion);
    std::vector<IntMatrix> sub_bases;
    for (int m = 0; m <= lim.complex.top_degree(); ++m)
        sub_bases.push_back(column_hnf(inc.matrix(m)).basis);
    return subquotient_homology(lim.complex, sub_bases, n);
}

ExcisionReport excision_check(const SimplicialRep& rep, const std::map<int, SimplicialComplex>& a,
                              const std::map<int, SimplicialComplex>& b) {
    ExcisionReport report;
    for (int v : rep.quiver.vertices()) {
        if (!a.count(v) || !b.count(v))
            throw ValidationError("excision: missing subcomplex at vertex " + std::to_string(v));
        if (!a.at(v).is_subcomplex_of(rep.spaces.at(v)))
            throw ValidationError("excision: first family is not a subcomplex at vertex " +
                                  std::to_string(v));
        if (!b.at(v).is_subcomplex_of(rep.spaces.at(v)))
            throw ValidationError("excision: second family is not a subcomplex at vertex " +
                                  std::to_string(v));
    }
    auto preserved = [&](const std::map<int, SimplicialComplex>& fam) {
        for (const Arrow& ar : rep.quiver.arrows()) {
            const auto& vm = rep.arrow_maps.at(ar.id);
            const SimplicialComplex& s = fam.at(ar.src);
            const SimplicialComplex& t = fam.at(ar.tgt);
            for (int d = 0; d <= s.dim(); ++d)
                for (const auto& simplex : s.simplices(d)) {
                    std::set<int> img;
                    for (int x : simplex)
                        img.insert(vm.at(x));
                    std::vector<int> tuple(img.begin(), img.end());
                    if (!t.contains(tuple))
                        return false;
                }
        }
        return true;
    };
    if (!preserved(a))
        throw ValidationError("excision: first family is not preserved by the structure maps");
    if (!preserved(b))
        throw ValidationError("excision: second family is not preserved by the structure maps");

    report.covers = true;
    for (int v : rep.quiver.vertices()) {
        const SimplicialComplex& k = rep.spaces.at(v);
        for (int d = 0; d <= k.dim() && report.covers; ++d)
            for (const auto& s : k.simplices(d))
                if (!a.at(v).contains(s) && !b.at(v).contains(s)) {
                    report.covers = false;
                    break;
                }
    }

    // quotient complexes per vertex, with the induced maps on survivors
    std::map<int, QuotientComplex> quotients;
    std::map<int, ChainComplex> complexes;
    for (int v : rep.quiver.vertices()) {
        quotients[v] = quotient_by_subcomplexes(rep.spaces.at(v), a.at(v), b.at(v));
        complexes[v] = quotients[v].complex;
    }
    std::map<std::string, ChainMap> maps;
    for (const Arrow& ar : rep.quiver.arrows()) {
        ChainMap full = chain_map_of(rep.arrow_map(ar.id));
        const QuotientComplex& qs = quotients.at(ar.src);
        const QuotientComplex& qt = quotients.at(ar.tgt);
        std::vector<IntMatrix> mats;
        int top = std::max(qs.complex.top_degree(), qt.complex.top_degree());
        for (int d = 0; d <= top; ++d) {
            IntMatrix m = full.matrix(d);
            std::vector<std::size_t> rows = d < static_cast<int>(qt.kept.size())
                                                ? qt.kept[static_cast<std::size_t>(d)]
                                                : std::vector<std::size_t>{};
            std::vector<std::size_t> cols = d < static_cast<int>(qs.kept.size())
                                                ? qs.kept[static_cast<std::size_t>(d)]
                                                : std::vector<std::size_t>{};
            mats.push_back(m.select_rows(rows).select_cols(cols));
        }
        maps.emplace(ar.id, ChainMap::validate(qs.complex, qt.complex, std::move(mats)));
    }
    ChainRep quotient_rep = validate_chain_rep(rep.quiver, std::move(complexes), std::move(maps));
    LimitComplex lim = rep_limit(quotient_rep);
    report.h0 = homology(lim.complex, 0).group;
    report.h1 = homology(lim.complex, 1).group;
    report.vanishing = report.h0.is_trivial() && report.h1.is_trivial();
    return report;
}

CycleFixedLimit cycle_fixed_limit(const ChainRep& rep) {
    auto order = single_oriented_cycle(rep.quiver);
    if (!order)
        throw ValidationError("cycle limit: quiver is not a single directed cycle");
    CycleFixedLimit out;
    out.limit = rep_limit(rep);

    const int base = rep.quiver.vertices().front();
    const ChainComplex& base_complex = rep.complexes.at(base);
    ChainMap round = ChainMap::identity(base_complex);
    for (const std::string& id : *order)
        round = compose(rep.maps.at(id), round);

    out.fixed_chains_certified = true;
    for (int n = 0; n <= rep.top_degree(); ++n) {
        IntMatrix phi = round.matrix(n);
        out.round_trip.push_back(phi);
        IntMatrix fixed = kernel_basis(phi - IntMatrix::identity(phi.rows()));
        IntMatrix base_block = out.limit.block(n, base, base_complex.rank(n));
        ColumnHnf projected = column_hnf(base_block);
        // the base projection of the limit must be exactly the fixed lattice,
        // and injective (no rank drop)
        if (projected.rank() != out.limit.complex.rank(n) || !(projected.basis == fixed))
            out.fixed_chains_certified = false;
    }
    return out;
}

AntipodalQuotient antipodal_quotient_h0(const SimplicialRep& rep) {
    if (!rep.quiver.is_connected())
        throw ValidationError("antipodal quotient: quiver must be connected");
    const SimplicialComplex& model = rep.spaces.at(rep.quiver.vertices().front());
    const int n_vertices = static_cast<int>(model.vertices().size());
    if (n_vertices < 4 || n_vertices % 2 != 0 ||
        !(model == SimplicialComplex::polygon(n_vertices)))
        throw ValidationError("antipodal quotient: spaces must be one even polygon on 0..n-1");
    for (int v : rep.quiver.vertices())
        if (!(rep.spaces.at(v) == model))
            throw ValidationError("antipodal quotient: all vertex spaces must coincide");
    for (const Arrow& a : rep.quiver.arrows())
        for (int x = 0; x < n_vertices; ++x)
            if (rep.arrow_maps.at(a.id).at(x) != (x + n_vertices / 2) % n_vertices)
                throw ValidationError("antipodal quotient: arrow \"" + a.id +
                                      "\" is not the antipodal map");

    ChainRep crep = s_gamma(rep);
    LimitComplex lim = rep_limit(crep);
    const int base = rep.quiver.vertices().front();
    const ChainComplex& base_complex = crep.complexes.at(base);
    std::vector<IntMatrix> image_bases;
    for (int n = 0; n <= base_complex.top_degree(); ++n)
        image_bases.push_back(column_hnf(lim.block(n, base, base_complex.rank(n))).basis);

    AntipodalQuotient out;
    out.h0 = subquotient_homology(base_complex, image_bases, 0);
    out.odd_oriented_cycle = has_odd_oriented_cycle(rep.quiver);
    return out;
}

}  // namespace quiverhom
