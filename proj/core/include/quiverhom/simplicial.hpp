#pragma once

#include "quiverhom/chain.hpp"
#include "quiverhom/quiver.hpp"

#include <map>
#include <string>
#include <vector>

namespace quiverhom {

/**
 * Finite abstract simplicial complex.  Simplices are strictly increasing
 * vertex tuples stored per dimension in lexicographic order; the family is
 * face-closed by construction.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Builds the downward closure of the given facets.  Vertices listed in
    /// `vertices` but not covered by a facet become isolated points.
    static SimplicialComplex from_facets(std::vector<int> vertices,
                                         std::vector<std::vector<int>> facets);

    static SimplicialComplex polygon(int n_vertices);  // simplicial circle on 0..n-1
    static SimplicialComplex point(int vertex = 0);
    static SimplicialComplex full_simplex(int n_vertices);

    const std::vector<int>& vertices() const { return vertices_; }
    int dim() const { return static_cast<int>(simplices_.size()) - 1; }
    std::size_t n_simplices(int d) const;
    const std::vector<std::vector<int>>& simplices(int d) const;
    bool contains(const std::vector<int>& simplex) const;
    std::size_t index_of(const std::vector<int>& simplex) const;

    bool is_subcomplex_of(const SimplicialComplex& other) const;
    bool empty() const { return simplices_.empty(); }

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::vector<int> vertices_;
    std::vector<std::vector<std::vector<int>>> simplices_;  // [dim][index] = tuple
    static const std::vector<std::vector<int>> none_;
};

SimplicialComplex validate_complex(const std::vector<int>& vertices,
                                   const std::vector<std::vector<int>>& facets);

struct SimplicialMap {
    SimplicialComplex source, target;
    std::map<int, int> vertex_map;

    bool operator==(const SimplicialMap&) const = default;
};

/// Checks totality and that every simplex image is a target simplex.
SimplicialMap validate_simplicial_map(SimplicialComplex source, SimplicialComplex target,
                                      std::map<int, int> vertex_map);

/// Simplicial chains with the alternating-facet boundary; deterministic
/// basis order (lexicographic tuples) and labels "{v0,v1,...}".
ChainComplex chain_complex_of(const SimplicialComplex& k);

/// Induced map on simplicial chains; a simplex with a degenerate image maps
/// to 0, otherwise to +-1 times its sorted image (sign = sorting parity).
ChainMap chain_map_of(const SimplicialMap& f);

struct QuotientComplex {
    ChainComplex complex;
    /// per dimension, the indices of the simplices of K that survive
    std::vector<std::vector<std::size_t>> kept;
};

/// Chain complex of K with every simplex lying in A or in B killed.
QuotientComplex quotient_by_subcomplexes(const SimplicialComplex& k, const SimplicialComplex& a,
                                         const SimplicialComplex& b);

/// Representation of a quiver by simplicial complexes and simplicial maps.
struct SimplicialRep {
    Quiver quiver;
    std::map<int, SimplicialComplex> spaces;
    std::map<std::string, std::map<int, int>> arrow_maps;  // arrow id -> vertex map

    SimplicialMap arrow_map(const std::string& arrow_id) const;
    SimplicialRep restricted_to(const std::vector<int>& quiver_vertices) const;

    bool operator==(const SimplicialRep&) const = default;
};

SimplicialRep validate_simplicial_rep(Quiver q, std::map<int, SimplicialComplex> spaces,
                                      std::map<std::string, std::map<int, int>> arrow_maps);

/// Vertexwise simplicial maps commuting with the arrow maps of both reps.
struct SimplicialRepMorphism {
    SimplicialRep source, target;
    std::map<int, std::map<int, int>> components;
};

SimplicialRepMorphism validate_rep_morphism(SimplicialRep source, SimplicialRep target,
                                            std::map<int, std::map<int, int>> components);

/// Subrepresentation on one chosen vertex per space; refuses when the
/// basepoints are not compatible with the arrow maps.
SimplicialRep basepoint_subrep(const SimplicialRep& rep, const std::map<int, int>& basepoints);

}  // namespace quiverhom
