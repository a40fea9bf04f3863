#include "quiverhom/abelian.hpp"

#include <sstream>

namespace quiverhom {

struct FgAbGroup::Canon {
    std::vector<Int> diagonal;  // one entry per generator, divisibility order
    IntMatrix u;                // smith row transform
    std::vector<CanonicalFactor> factors;
    std::vector<Int> torsion;
    std::size_t free_rank = 0;
};

FgAbGroup::FgAbGroup(std::size_t n_generators, IntMatrix relations)
    : n_gens_(n_generators), relations_(std::move(relations)) {
    if (relations_.rows() != n_gens_)
        throw ValidationError("group presentation: relation matrix has " +
                              std::to_string(relations_.rows()) + " rows for " +
                              std::to_string(n_gens_) + " generators");
}

FgAbGroup FgAbGroup::free_group(std::size_t rank) {
    return FgAbGroup(rank, IntMatrix(rank, 0));
}

FgAbGroup FgAbGroup::cyclic(const Int& order) {
    IntMatrix r(1, 1);
    r(0, 0) = order;
    return FgAbGroup(1, std::move(r));
}

FgAbGroup FgAbGroup::from_invariants(std::size_t free_rank, const std::vector<Int>& torsion) {
    std::size_t n = free_rank + torsion.size();
    IntMatrix r(n, torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] <= 1)
            throw ValidationError("group invariants: torsion entries must exceed 1");
        if (i > 0 && torsion[i] % torsion[i - 1] != 0)
            throw ValidationError("group invariants: divisibility chain violated");
        r(i, i) = torsion[i];
    }
    return FgAbGroup(n, std::move(r));
}

const FgAbGroup::Canon& FgAbGroup::canon() const {
    if (!canon_) {
        auto c = std::make_shared<Canon>();
        Snf s = smith_normal_form(relations_);
        c->u = s.u;
        c->diagonal.assign(n_gens_, Int(0));
        std::vector<Int> d = s.diagonal();
        for (std::size_t i = 0; i < d.size() && i < n_gens_; ++i)
            c->diagonal[i] = d[i];
        for (std::size_t i = 0; i < n_gens_; ++i) {
            const Int& di = c->diagonal[i];
            if (di == 1)
                continue;
            CanonicalFactor f;
            f.order = di;
            f.generator = s.u_inv.col(i);
            if (di == 0)
                c->free_rank++;
            else
                c->torsion.push_back(di);
            c->factors.push_back(std::move(f));
        }
        canon_ = std::move(c);
    }
    return *canon_;
}

const ColumnHnf& FgAbGroup::relation_lattice() const {
    if (!lattice_)
        lattice_ = std::make_shared<const ColumnHnf>(column_hnf(relations_));
    return *lattice_;
}

std::size_t FgAbGroup::free_rank() const { return canon().free_rank; }
const std::vector<Int>& FgAbGroup::torsion() const { return canon().torsion; }
const std::vector<FgAbGroup::CanonicalFactor>& FgAbGroup::canonical_factors() const {
    return canon().factors;
}
const IntMatrix& FgAbGroup::smith_transform() const { return canon().u; }
const std::vector<Int>& FgAbGroup::smith_diagonal() const { return canon().diagonal; }

bool FgAbGroup::same_invariants(const FgAbGroup& other) const {
    return free_rank() == other.free_rank() && torsion() == other.torsion();
}

std::string FgAbGroup::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (free_rank() == 1) {
        os << "Z";
        first = false;
    } else if (free_rank() > 1) {
        os << "Z^" << free_rank();
        first = false;
    }
    for (const Int& d : torsion()) {
        if (!first)
            os << " + ";
        os << "Z/" << d;
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

GroupHom::GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.n_generators() || matrix_.cols() != source_.n_generators())
        throw ValidationError("group hom: matrix shape " + std::to_string(matrix_.rows()) + "x" +
                              std::to_string(matrix_.cols()) + " does not match presentations");
    if (!lattice_contains(target_.relation_lattice(), matrix_ * source_.relations()))
        throw ValidationError("group hom: matrix does not map relations into relations");
}

GroupHom GroupHom::identity(const FgAbGroup& g) {
    return GroupHom(g, g, IntMatrix::identity(g.n_generators()));
}

GroupHom GroupHom::zero(FgAbGroup source, FgAbGroup target) {
    IntMatrix m(target.n_generators(), source.n_generators());
    return GroupHom(std::move(source), std::move(target), std::move(m));
}

bool GroupHom::equals(const GroupHom& other) const {
    if (matrix_.rows() != other.matrix_.rows() || matrix_.cols() != other.matrix_.cols())
        return false;
    return lattice_contains(target_.relation_lattice(), matrix_ - other.matrix_);
}

bool GroupHom::is_zero() const {
    return lattice_contains(target_.relation_lattice(), matrix_);
}

bool GroupHom::is_injective() const {
    IntMatrix preimage = preimage_lattice(matrix_, target_.relations());
    return lattices_equal(preimage, source_.relations());
}

bool GroupHom::is_surjective() const {
    ColumnHnf image = column_hnf(hstack(matrix_, target_.relations()));
    return image.rank() == target_.n_generators() && image.basis.is_identity();
}

IntMatrix GroupHom::canonical_matrix() const {
    // full canonical coordinates on both sides
    IntMatrix c = target_.smith_transform() * matrix_;
    // columns: source canonical generators (only nontrivial factors)
    const auto& src_factors = source_.canonical_factors();
    IntMatrix cols(source_.n_generators(), src_factors.size());
    for (std::size_t j = 0; j < src_factors.size(); ++j)
        cols.set_col(j, src_factors[j].generator);
    IntMatrix full = c * cols;
    // keep rows of nontrivial target factors, reduce torsion rows
    const std::vector<Int>& diag = target_.smith_diagonal();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < diag.size(); ++i)
        if (diag[i] != 1)
            keep.push_back(i);
    IntMatrix out = full.select_rows(keep);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        const Int& d = diag[keep[i]];
        if (d == 0)
            continue;
        for (std::size_t j = 0; j < out.cols(); ++j) {
            Int r = out(i, j) % d;
            if (r < 0)
                r += d;
            out(i, j) = r;
        }
    }
    return out;
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
    if (!(g.source() == f.target()))
        throw ValidationError("group hom composition: presentation mismatch");
    return GroupHom(f.source(), g.target(), g.matrix() * f.matrix());
}

AbRep validate_ab_rep(Quiver q, std::map<int, FgAbGroup> groups,
                      std::map<std::string, GroupHom> homs) {
    for (int v : q.vertices())
        if (!groups.count(v))
            throw ValidationError("group rep: no group at vertex " + std::to_string(v));
    for (const Arrow& a : q.arrows()) {
        auto it = homs.find(a.id);
        if (it == homs.end())
            throw ValidationError("group rep: no hom for arrow \"" + a.id + "\"");
        if (!(it->second.source() == groups.at(a.src)) ||
            !(it->second.target() == groups.at(a.tgt)))
            throw ValidationError("group rep: hom at arrow \"" + a.id +
                                  "\" does not match the vertex groups");
    }
    AbRep rep;
    rep.quiver = std::move(q);
    rep.groups = std::move(groups);
    rep.homs = std::move(homs);
    return rep;
}

AbRepMorphism validate_ab_morphism(AbRep source, AbRep target,
                                   std::map<int, GroupHom> components) {
    if (!(source.quiver == target.quiver))
        throw ValidationError("group rep morphism: quivers differ");
    for (int v : source.quiver.vertices()) {
        auto it = components.find(v);
        if (it == components.end())
            throw ValidationError("group rep morphism: missing component at vertex " +
                                  std::to_string(v));
        if (!(it->second.source() == source.groups.at(v)) ||
            !(it->second.target() == target.groups.at(v)))
            throw ValidationError("group rep morphism: component at vertex " +
                                  std::to_string(v) + " has wrong presentations");
    }
    for (const Arrow& a : source.quiver.arrows()) {
        GroupHom lhs = compose(components.at(a.tgt), source.homs.at(a.id));
        GroupHom rhs = compose(target.homs.at(a.id), components.at(a.src));
        if (!lhs.equals(rhs))
            throw ValidationError("group rep morphism: square at arrow \"" + a.id +
                                  "\" does not commute");
    }
    AbRepMorphism m;
    m.source = std::move(source);
    m.target = std::move(target);
    m.components = std::move(components);
    return m;
}

AbLimit ab_limit(const AbRep& rep) {
    AbLimit out;
    std::size_t total = 0;
    for (int v : rep.quiver.vertices()) {
        out.offsets[v] = total;
        total += rep.groups.at(v).n_generators();
    }
    out.total_gens = total;

    // One block row per arrow: F_a x_{s(a)} - x_{t(a)} must fall in the
    // relation lattice of the target group; auxiliary columns absorb it.
    std::size_t eq_rows = 0, aux_cols = 0;
    for (const Arrow& a : rep.quiver.arrows()) {
        eq_rows += rep.groups.at(a.tgt).n_generators();
        aux_cols += rep.groups.at(a.tgt).relations().cols();
    }
    IntMatrix sys(eq_rows, total + aux_cols);
    std::size_t row = 0, aux = total;
    for (const Arrow& a : rep.quiver.arrows()) {
        const GroupHom& h = rep.homs.at(a.id);
        const std::size_t ns = rep.groups.at(a.src).n_generators();
        const std::size_t nt = rep.groups.at(a.tgt).n_generators();
        const std::size_t off_s = out.offsets.at(a.src);
        const std::size_t off_t = out.offsets.at(a.tgt);
        for (std::size_t i = 0; i < nt; ++i) {
            for (std::size_t j = 0; j < ns; ++j)
                sys(row + i, off_s + j) += h.matrix()(i, j);
            sys(row + i, off_t + i) -= 1;
        }
        const IntMatrix& rel = rep.groups.at(a.tgt).relations();
        for (std::size_t i = 0; i < nt; ++i)
            for (std::size_t j = 0; j < rel.cols(); ++j)
                sys(row + i, aux + j) = -rel(i, j);
        row += nt;
        aux += rel.cols();
    }

    IntMatrix ker = kernel_basis(sys);
    IntMatrix lattice_raw = ker.submatrix(0, 0, total, ker.cols());
    ColumnHnf lattice = column_hnf(lattice_raw);
    out.lattice_basis = lattice.basis;

    // relations: images of the vertex relation lattices inside L
    std::size_t rel_cols = 0;
    for (int v : rep.quiver.vertices())
        rel_cols += rep.groups.at(v).relations().cols();
    IntMatrix rels(total, rel_cols);
    std::size_t c = 0;
    for (int v : rep.quiver.vertices()) {
        const IntMatrix& r = rep.groups.at(v).relations();
        std::size_t off = out.offsets.at(v);
        for (std::size_t j = 0; j < r.cols(); ++j) {
            for (std::size_t i = 0; i < r.rows(); ++i)
                rels(off + i, c) = r(i, j);
            ++c;
        }
    }
    IntMatrix presented = solve_exact(out.lattice_basis, rels);
    out.group = FgAbGroup(out.lattice_basis.cols(), presented);

    for (int v : rep.quiver.vertices()) {
        std::size_t off = out.offsets.at(v);
        std::size_t n = rep.groups.at(v).n_generators();
        IntMatrix proj = out.lattice_basis.submatrix(off, 0, n, out.lattice_basis.cols());
        out.projections.emplace(v, GroupHom(out.group, rep.groups.at(v), std::move(proj)));
    }
    return out;
}

GroupHom limit_hom(const AbLimit& source_limit, const AbLimit& target_limit,
                   const AbRepMorphism& morphism) {
    std::vector<IntMatrix> blocks;
    for (int v : morphism.source.quiver.vertices())
        blocks.push_back(morphism.components.at(v).matrix());
    IntMatrix mapped = block_diag(blocks) * source_limit.lattice_basis;
    // the image of L lands in L': the commuting-square defect of the
    // morphism and the source congruences are both absorbed by the target
    // relation lattices, which lie inside L'
    IntMatrix coords = solve_exact(target_limit.lattice_basis, mapped);
    return GroupHom(source_limit.group, target_limit.group, std::move(coords));
}

namespace {

IntMatrix image_lattice_gens(const GroupHom& h) {
    return hstack(h.matrix(), h.target().relations());
}

}  // namespace

ExactnessReport left_exactness_check(const AbRepMorphism& alpha, const AbRepMorphism& beta) {
    ExactnessReport report;
    const AbRep& a = alpha.source;
    const AbRep& b = alpha.target;
    const AbRep& c = beta.target;
    if (!(beta.source.quiver == b.quiver))
        throw ValidationError("left exactness: middle representations differ");
    for (int v : b.quiver.vertices())
        if (!(beta.components.at(v).source() == alpha.components.at(v).target()))
            throw ValidationError("left exactness: middle presentations differ at vertex " +
                                  std::to_string(v));

    // vertexwise short exactness
    for (int v : b.quiver.vertices()) {
        const GroupHom& av = alpha.components.at(v);
        const GroupHom& bv = beta.components.at(v);
        if (!av.is_injective()) {
            report.vertexwise_issue =
                "first map not injective at vertex " + std::to_string(v);
            return report;
        }
        if (!bv.is_surjective()) {
            report.vertexwise_issue =
                "second map not surjective at vertex " + std::to_string(v);
            return report;
        }
        IntMatrix im = image_lattice_gens(av);
        IntMatrix ker = preimage_lattice(bv.matrix(), c.groups.at(v).relations());
        if (!lattices_equal(im, ker)) {
            report.vertexwise_issue = "ker != im at vertex " + std::to_string(v);
            return report;
        }
    }
    report.vertexwise_exact = true;

    AbLimit la = ab_limit(a);
    AbLimit lb = ab_limit(b);
    AbLimit lc = ab_limit(c);
    GroupHom lim_alpha = limit_hom(la, lb, alpha);
    GroupHom lim_beta = limit_hom(lb, lc, beta);

    if (!lim_alpha.is_injective()) {
        report.failure = "limit of the first map is not injective";
        return report;
    }
    IntMatrix im = image_lattice_gens(lim_alpha);
    IntMatrix ker = preimage_lattice(lim_beta.matrix(), lc.group.relations());
    if (!lattices_equal(im, ker)) {
        report.failure = "ker != im at the middle limit";
        // find a witness column: a kernel generator outside the image
        ColumnHnf im_hnf = column_hnf(im);
        ColumnHnf ker_hnf = column_hnf(ker);
        for (std::size_t j = 0; j < ker_hnf.basis.cols(); ++j) {
            IntMatrix v(ker_hnf.basis.rows(), 1);
            for (std::size_t i = 0; i < v.rows(); ++i)
                v(i, 0) = ker_hnf.basis(i, j);
            if (!lattice_contains(im_hnf, v)) {
                std::vector<Int> gen_coords = v.col(0);
                report.witness = mat_vec(lb.lattice_basis, gen_coords);
                break;
            }
        }
        return report;
    }
    report.left_exact = true;
    return report;
}

}  // namespace quiverhom
