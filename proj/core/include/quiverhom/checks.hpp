#pragma once

#include "quiverhom/atspace.hpp"
#include "quiverhom/chainrep.hpp"
#include "quiverhom/setrep.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace quiverhom::checks {

/// Deterministic source of randomness for the property suites.  All draws
/// go through the raw engine stream so runs are reproducible across
/// platforms for a fixed seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }
    bool coin() { return below(2) == 1; }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(below(static_cast<int>(v.size())))];
    }

private:
    std::mt19937_64 eng_;
};

struct PropertyResult {
    std::string name;
    int trials = 0;
    int failures = 0;
    std::string detail;  // description of the first failure

    bool passed() const { return trials > 0 && failures == 0; }
};

/// Registered property suites, e.g. "thm-2.4-roundtrip", "thm-3.6",
/// "thm-4.20", "thm-4.25", "cor-6.8".
std::vector<std::string> property_names();
bool has_property(const std::string& name);

/// Runs the named suite; `trials == 0` uses the suite's default count.
PropertyResult run_property(const std::string& name, std::uint64_t seed, int trials = 0);

// -- generators shared with the test binaries ------------------------------

Quiver random_quiver(Rng& rng, int max_vertices, int max_extra_arrows, bool connected);
Quiver random_multi_component_quiver(Rng& rng, int components, int max_vertices_each);

FinSetRep random_finset_rep(Rng& rng, const Quiver& q, int max_elems, int min_elems = 0);
/// quotient by a map-compatible congruence followed by a sum embedding;
/// covers the whole mono/epi spectrum
SetMorphism random_set_morphism(Rng& rng, const FinSetRep& source, int min_target_elems = 0);

SimplicialComplex random_connected_space(Rng& rng);
SimplicialComplex random_space(Rng& rng);
std::map<int, int> random_simplicial_vertex_map(Rng& rng, const SimplicialComplex& src,
                                                const SimplicialComplex& tgt);
SimplicialRep random_simplicial_rep(Rng& rng, const Quiver& q, bool connected_fibers);

ChainComplex random_chain_complex(Rng& rng, int max_top = 2, int max_rank = 3);
/// null-homotopic chain map dE + Ed, optionally plus a scalar multiple of
/// the identity when source == target
IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound);
ChainMap random_chain_map(Rng& rng, const ChainComplex& src, const ChainComplex& tgt,
                          bool allow_scalar);

FgAbGroup random_fg_group(Rng& rng);
GroupHom random_group_hom(Rng& rng, const FgAbGroup& source, const FgAbGroup& target);
AbRep random_ab_rep(Rng& rng, const Quiver& q);

}  // namespace quiverhom::checks
