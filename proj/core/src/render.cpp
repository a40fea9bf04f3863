#include "quiverhom/render.hpp"

#include <sstream>

namespace quiverhom {

std::string render_group(const FgAbGroup& g) { return g.to_string(); }

std::string render_int(const Int& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

std::string render_matrix(const IntMatrix& m) { return m.to_string(); }

}  // namespace quiverhom
