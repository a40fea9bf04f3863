#pragma once

#include "quiverhom/abelian.hpp"
#include "quiverhom/chain.hpp"
#include "quiverhom/simplicial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quiverhom {

/// Representation of a quiver by chain complexes and chain maps.
struct ChainRep {
    Quiver quiver;
    std::map<int, ChainComplex> complexes;
    std::map<std::string, ChainMap> maps;

    int top_degree() const;
    ChainRep restricted_to(const std::vector<int>& quiver_vertices) const;

    bool operator==(const ChainRep&) const = default;
};

ChainRep validate_chain_rep(Quiver q, std::map<int, ChainComplex> complexes,
                            std::map<std::string, ChainMap> maps);

/// Simplicial chains vertexwise, induced chain maps arrowwise.
ChainRep s_gamma(const SimplicialRep& rep);

/**
 * The degreewise limit of a chain representation, realized as a subcomplex
 * of the product of the vertex complexes.  `inclusion[n]` is the canonical
 * lattice basis of the degree-n limit inside the product, with vertex
 * blocks laid out by `offsets[n]`.
 */
struct LimitComplex {
    ChainComplex complex;
    std::vector<IntMatrix> inclusion;
    std::vector<std::map<int, std::size_t>> offsets;

    IntMatrix inclusion_at(int n) const;
    /// rows of the inclusion belonging to one vertex block
    IntMatrix block(int n, int vertex, std::size_t vertex_rank) const;
};

LimitComplex rep_limit(const ChainRep& rep);

/// Homology of a complex in one degree, with canonical cycle generators.
struct Homology {
    FgAbGroup group;
    IntMatrix cycle_basis;    // rank(n) x k, canonical kernel basis of d_n
    IntMatrix presentation;   // k x rank(n+1): d_{n+1} in the kernel basis
    /// order (0 = infinite) and cycle representative per nontrivial factor
    std::vector<std::pair<Int, std::vector<Int>>> generators;
};

Homology homology(const ChainComplex& c, int n);

/// Map induced on homology by a chain map (degree-n matrix `phi_n`).
GroupHom homology_map(const Homology& source, const Homology& target, const IntMatrix& phi_n);

/// Vertexwise homology with the induced maps on classes.
AbRep homology_rep(const ChainRep& rep, int n);

/// Vertexwise chain maps commuting with the structure maps of both reps.
struct ChainRepMorphism {
    ChainRep source, target;
    std::map<int, ChainMap> components;
};

ChainRepMorphism validate_chainrep_morphism(ChainRep source, ChainRep target,
                                            std::map<int, ChainMap> components);
ChainRepMorphism chainrep_identity(const ChainRep& rep);

/// Chain map induced between limit complexes by a morphism.
ChainMap limit_map(const LimitComplex& source, const LimitComplex& target,
                   const ChainRepMorphism& morphism);

/**
 * The natural comparison map from the homology of the limit complex to the
 * limit of the vertexwise homologies: the class of a limit cycle goes to
 * the tuple of its vertex classes.
 */
struct RhoResult {
    GroupHom hom;
    Homology limit_homology;
    AbLimit class_limit;
    bool injective = false;
    bool surjective = false;
};

RhoResult rho(const ChainRep& rep, int n);

/// Homotopy data: for each quiver vertex i, matrices C(i)_n -> C'(i)_{n+1}.
struct RepHomotopy {
    std::map<int, std::vector<IntMatrix>> mats;

    IntMatrix at(int vertex, int n, const ChainComplex& src, const ChainComplex& tgt) const;
};

struct HomotopyReport {
    bool valid = false;
    std::string failure;  // locus of the first violated identity
    /// filled on success: the homotopy induced between the limit complexes
    std::vector<IntMatrix> induced_on_limit;
    bool limit_homology_agrees = false;
};

/**
 * Decides whether `f` witnesses alpha ~ beta: vertexwise dF + Fd = beta -
 * alpha plus the compatibility square g F = F f over every arrow.  On
 * success the homotopy is pushed to the limit complexes and the equality
 * of the induced maps on limit homology is asserted.
 */
HomotopyReport verify_homotopy(const ChainRepMorphism& alpha, const ChainRepMorphism& beta,
                               const RepHomotopy& f);

/**
 * Homology of the quotient of limit complexes along a degreewise-injective
 * subrepresentation inclusion (source = subrep, target = ambient rep).
 */
FgAbGroup relative_homology(const ChainRepMorphism& inclusion, int n);

struct ExcisionReport {
    bool covers = false;       // every simplex lies in one of the two families
    FgAbGroup h0, h1;
    bool vanishing = false;    // h0 and h1 are both trivial
};

/**
 * Builds the vertexwise quotient by the two preserved subcomplex families,
 * assembles the quotient representation, and computes the homology of its
 * limit in degrees 0 and 1.
 */
ExcisionReport excision_check(const SimplicialRep& rep,
                              const std::map<int, SimplicialComplex>& a,
                              const std::map<int, SimplicialComplex>& b);

/// rep_limit over a single directed cycle, certified against the fixed
/// chains of the round-trip endomorphism.
struct CycleFixedLimit {
    LimitComplex limit;
    std::vector<IntMatrix> round_trip;  // per degree at the base vertex
    bool fixed_chains_certified = false;
};

CycleFixedLimit cycle_fixed_limit(const ChainRep& rep);

/**
 * For a connected quiver carrying one fixed even polygon with the antipodal
 * map on every arrow: the degree-0 homology of the cokernel of the base
 * projection of the limit into the vertex complex.
 */
struct AntipodalQuotient {
    FgAbGroup h0;
    bool odd_oriented_cycle = false;
};

AntipodalQuotient antipodal_quotient_h0(const SimplicialRep& rep);

/// H_n of C/A for a boundary-stable family of sublattices A_n of C_n.
FgAbGroup subquotient_homology(const ChainComplex& c, const std::vector<IntMatrix>& sub_bases,
                               int n);

}  // namespace quiverhom
