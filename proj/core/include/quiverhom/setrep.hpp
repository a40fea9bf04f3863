#pragma once

#include "quiverhom/quiver.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace quiverhom {

/**
 * Representation of a quiver by finite discrete spaces: an ordered element
 * list per vertex and a total function table per arrow.  Element ids are
 * required to be globally distinct across vertices, which makes the system
 * carrier a literal disjoint union.
 */
struct FinSetRep {
    Quiver quiver;
    std::map<int, std::vector<std::string>> sets;
    std::map<std::string, std::map<std::string, std::string>> maps;

    bool operator==(const FinSetRep&) const = default;
};

FinSetRep validate_finset_rep(Quiver q, std::map<int, std::vector<std::string>> sets,
                              std::map<std::string, std::map<std::string, std::string>> maps);

FinSetRep empty_rep(const Quiver& q);

/// Vertexwise maps making every arrow square commute.  A value with
/// `zero == true` is the formal zero morphism (the only morphism when the
/// target has an empty set under a nonempty source set).
struct SetMorphism {
    bool zero = false;
    FinSetRep source, target;
    std::map<int, std::map<std::string, std::string>> components;

    static SetMorphism zero_morphism(FinSetRep source, FinSetRep target);
};

SetMorphism validate_set_morphism(FinSetRep source, FinSetRep target,
                                  std::map<int, std::map<std::string, std::string>> components);

SetMorphism compose(const SetMorphism& g, const SetMorphism& h);
SetMorphism identity_morphism(const FinSetRep& rep);

/**
 * System over the path semigroup: carrier = disjoint union of the vertex
 * parts plus an implicit absorbing element theta; arrows act by their
 * function tables and paths act by composition.
 */
struct PGammaSystem {
    Quiver quiver;
    std::map<int, std::vector<std::string>> parts;
    std::map<std::string, std::map<std::string, std::string>> action;

    /// action of a semigroup element; nullopt encodes theta in and out
    std::optional<std::string> act(const SemigroupElement& rho,
                                   const std::optional<std::string>& element) const;
    /// vertex whose part contains the element
    int part_of(const std::string& element) const;

    bool operator==(const PGammaSystem&) const = default;
};

PGammaSystem to_system(const FinSetRep& rep);
FinSetRep from_system(const PGammaSystem& sys);

/// Morphism of systems: theta goes to theta, parts map into parts, and the
/// whole semigroup action is respected.
struct SystemMorphism {
    PGammaSystem source, target;
    std::map<std::string, std::string> table;  // on non-theta elements
};

SystemMorphism to_system(const SetMorphism& h);
SetMorphism from_system(const SystemMorphism& phi);
SystemMorphism compose(const SystemMorphism& g, const SystemMorphism& h);

FinSetRep direct_sum(const FinSetRep& a, const FinSetRep& b);
FinSetRep product(const FinSetRep& a, const FinSetRep& b);

/// Grading of the system elements induced by a vertex potential; checks
/// the law that every arrow raises the degree by exactly one.
std::map<std::string, int> grade_system(const PGammaSystem& sys, const ArrowFunction& f);

struct RelatedExactResult {
    bool exact = false;
    /// (vertex, a, b): a pair separating the two sides, when not exact
    std::optional<std::tuple<int, std::string, std::string>> witness;
};

/**
 * Whether (Im h x Im h) united with the diagonal equals the kernel pair of
 * h2, vertex by vertex.
 */
RelatedExactResult related_exact_check(const SetMorphism& h, const SetMorphism& h2);

struct MorphismClass {
    bool mono = false;
    bool epi = false;
    bool iso = false;
};

MorphismClass classify_morphism(const SetMorphism& h);

}  // namespace quiverhom
