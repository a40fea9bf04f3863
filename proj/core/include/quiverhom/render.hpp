#pragma once

#include "quiverhom/abelian.hpp"
#include "quiverhom/chainrep.hpp"

#include <string>

namespace quiverhom {

/// "Z^r + Z/d1 + ..." with divisibility-ordered torsion; "0" when trivial.
std::string render_group(const FgAbGroup& g);

std::string render_matrix(const IntMatrix& m);

/// big integers render as plain decimal
std::string render_int(const Int& x);

}  // namespace quiverhom
