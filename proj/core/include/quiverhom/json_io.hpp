#pragma once

#include "quiverhom/abelian.hpp"
#include "quiverhom/chainrep.hpp"
#include "quiverhom/setrep.hpp"
#include "quiverhom/simplicial.hpp"

#include <map>
#include <optional>
#include <string>

namespace quiverhom {

/**
 * One parsed input file.  The top-level "kind" discriminator selects the
 * representation type; a bare {"vertices": ..., "arrows": ...} object is
 * accepted as a quiver.  Simplicial inputs may carry side data for the
 * relative, excision and split commands.
 */
struct ParsedInput {
    enum class Kind { quiver, finset, simplicial, chain, ab };
    Kind kind;

    std::optional<Quiver> quiver;
    std::optional<FinSetRep> finset;
    std::optional<SimplicialRep> simplicial;
    std::optional<ChainRep> chain;
    std::optional<AbRep> ab;

    std::map<int, int> basepoints;
    std::map<int, SimplicialComplex> sub_a, sub_b;
    std::map<int, SimplicialComplex> part_left, part_right;

    const Quiver& any_quiver() const;
};

/// Parses and validates; throws ValidationError with a byte offset on
/// malformed JSON and with the violated invariant on bad content.
ParsedInput parse_input_text(const std::string& text);
ParsedInput parse_input_file(const std::string& path);

}  // namespace quiverhom
