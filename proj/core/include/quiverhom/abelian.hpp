#pragma once

#include "quiverhom/normal_forms.hpp"
#include "quiverhom/quiver.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace quiverhom {

/**
 * Finitely generated abelian group presented as Z^n / column-span of a
 * relation matrix.  Canonical data (invariant factors, a Smith basis) is
 * computed lazily; invariant factors equal to 1 are stripped from all
 * reported forms, the free rank is tracked separately.
 */
class FgAbGroup {
public:
    FgAbGroup() : FgAbGroup(0, IntMatrix(0, 0)) {}
    FgAbGroup(std::size_t n_generators, IntMatrix relations);

    static FgAbGroup free_group(std::size_t rank);
    static FgAbGroup cyclic(const Int& order);
    static FgAbGroup from_invariants(std::size_t free_rank, const std::vector<Int>& torsion);

    std::size_t n_generators() const { return n_gens_; }
    const IntMatrix& relations() const { return relations_; }
    const ColumnHnf& relation_lattice() const;

    std::size_t free_rank() const;
    /// nontrivial invariant factors in divisibility order
    const std::vector<Int>& torsion() const;
    bool is_trivial() const { return free_rank() == 0 && torsion().empty(); }
    bool same_invariants(const FgAbGroup& other) const;

    /// generator column (in Z^n) and order of each nontrivial canonical
    /// factor; order 0 means infinite
    struct CanonicalFactor {
        Int order;
        std::vector<Int> generator;
    };
    const std::vector<CanonicalFactor>& canonical_factors() const;

    /// change of basis into canonical coordinates (rows follow the full
    /// Smith diagonal including trivial factors)
    const IntMatrix& smith_transform() const;      // u with u * relations * v diagonal
    const std::vector<Int>& smith_diagonal() const;  // one entry per generator

    std::string to_string() const;  // "Z^2 + Z/2 + Z/4", "0", ...

    bool operator==(const FgAbGroup& o) const {
        return n_gens_ == o.n_gens_ && relations_ == o.relations_;
    }

private:
    struct Canon;
    const Canon& canon() const;

    std::size_t n_gens_;
    IntMatrix relations_;
    mutable std::shared_ptr<const Canon> canon_;
    mutable std::shared_ptr<const ColumnHnf> lattice_;
};

/**
 * Homomorphism between presented groups, given by a matrix on generators.
 * Construction verifies well-definedness: the matrix must carry the source
 * relation lattice into the target relation lattice.
 */
class GroupHom {
public:
    GroupHom() = default;
    GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

    static GroupHom identity(const FgAbGroup& g);
    static GroupHom zero(FgAbGroup source, FgAbGroup target);

    const FgAbGroup& source() const { return source_; }
    const FgAbGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    /// equality as homomorphisms: the difference maps every generator into
    /// the target relation lattice
    bool equals(const GroupHom& other) const;
    bool is_zero() const;
    bool is_injective() const;
    bool is_surjective() const;

    /// matrix on nontrivial canonical factors, torsion rows reduced into
    /// [0, order)
    IntMatrix canonical_matrix() const;

private:
    FgAbGroup source_, target_;
    IntMatrix matrix_;
};

GroupHom compose(const GroupHom& g, const GroupHom& f);

/// Representation of a quiver by f.g. abelian groups and homomorphisms.
struct AbRep {
    Quiver quiver;
    std::map<int, FgAbGroup> groups;
    std::map<std::string, GroupHom> homs;
};

AbRep validate_ab_rep(Quiver q, std::map<int, FgAbGroup> groups,
                      std::map<std::string, GroupHom> homs);

struct AbRepMorphism {
    AbRep source, target;
    std::map<int, GroupHom> components;
};

AbRepMorphism validate_ab_morphism(AbRep source, AbRep target,
                                   std::map<int, GroupHom> components);

/**
 * The limit of a diagram of abelian groups over the quiver: the subgroup of
 * the product cut out by one equation per arrow.  `lattice_basis` is the
 * canonical basis of the lattice L of generator tuples satisfying all arrow
 * congruences; the group is L modulo the direct sum of the vertex relation
 * lattices, and the projections restrict the product coordinates.
 */
struct AbLimit {
    FgAbGroup group;
    std::map<int, GroupHom> projections;
    IntMatrix lattice_basis;          // (sum of n_i) x k
    std::map<int, std::size_t> offsets;  // vertex -> first row of its block
    std::size_t total_gens = 0;
};

AbLimit ab_limit(const AbRep& rep);

/// Map induced on limits by a morphism of representations.
GroupHom limit_hom(const AbLimit& source_limit, const AbLimit& target_limit,
                   const AbRepMorphism& morphism);

struct ExactnessReport {
    bool vertexwise_exact = false;
    std::string vertexwise_issue;
    bool left_exact = false;
    std::string failure;
    /// element of the middle limit (product coordinates) witnessing a
    /// failure of ker = im, when one exists
    std::optional<std::vector<Int>> witness;
};

/**
 * Verifies that 0 -> A -> B -> C -> 0 is short exact at every vertex, then
 * checks exactness of 0 -> lim A -> lim B -> lim C.
 */
ExactnessReport left_exactness_check(const AbRepMorphism& alpha, const AbRepMorphism& beta);

}  // namespace quiverhom
