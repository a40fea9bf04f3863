#pragma once

#include "quiverhom/chainrep.hpp"
#include "quiverhom/simplicial.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace quiverhom {

/**
 * Quotient of the disjoint union of the vertex spaces by the equivalence
 * generated by x ~ f_a(x).  Quotient simplices are the class images of the
 * input simplices; a tuple with repeated classes collapses to its support,
 * so the result is the simplicial colimit.
 */
struct AtSpace {
    SimplicialComplex quotient_complex;
    /// (quiver vertex, space vertex) -> quotient vertex id
    std::map<std::pair<int, int>, int> class_of;
    std::size_t generating_pairs = 0;
    std::size_t n_classes = 0;
};

AtSpace at_space(const SimplicialRep& rep);

/// Map induced on attachment spaces by a morphism of representations;
/// well-definedness on classes is re-checked on the generating pairs.
SimplicialMap at_morphism(const SimplicialRepMorphism& theta, const AtSpace& source_at,
                          const AtSpace& target_at);

std::size_t component_count(const AtSpace& at);

struct SplitReport {
    bool left_injective = false;
    bool right_injective = false;
    bool images_disjoint = false;
    bool images_cover = false;
    bool left_iso_image = false;
    bool right_iso_image = false;

    bool all_ok() const {
        return left_injective && right_injective && images_disjoint && images_cover &&
               left_iso_image && right_iso_image;
    }
};

/**
 * For a vertex-disjoint decomposition of every space into two subcomplexes,
 * each preserved by all arrow maps: checks that the two induced maps of
 * attachment spaces are injective, that their images partition the classes,
 * and that each piece is isomorphic to its image subcomplex.
 */
SplitReport split_analysis(const SimplicialRep& rep,
                           const std::map<int, SimplicialComplex>& left,
                           const std::map<int, SimplicialComplex>& right);

/**
 * The comparison chain map from the limit complex into the chains of the
 * attachment space, computed per quiver component by pushing the base
 * vertex block through the quotient projection.  Independence of the
 * chosen vertex and the chain-map identity are verified, not assumed.
 */
struct SigmaComponent {
    std::vector<int> quiver_vertices;
    int base_vertex = 0;
    AtSpace at;
    LimitComplex limit;
    ChainMap sigma;
    bool base_independent = false;
};

std::vector<SigmaComponent> sigma(const SimplicialRep& rep);

/// Naturality square of sigma against a representation morphism, checked
/// componentwise at chain level.
bool sigma_is_natural(const SimplicialRepMorphism& theta);

/// H_n of the assembled comparison map: homology of the limit of the whole
/// representation into the homology of the whole attachment space.
GroupHom h_natural(const SimplicialRep& rep, int n);

}  // namespace quiverhom
