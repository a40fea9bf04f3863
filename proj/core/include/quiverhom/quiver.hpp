#pragma once

#include "quiverhom/intmatrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quiverhom {

struct Arrow {
    std::string id;
    int src = 0;
    int tgt = 0;

    bool operator==(const Arrow&) const = default;
};

/**
 * Finite directed multigraph in canonical form: vertex ids sorted
 * ascending, arrows sorted by id, every arrow endpoint present.
 */
class Quiver {
public:
    Quiver() = default;
    static Quiver validate(std::vector<int> vertices, std::vector<Arrow> arrows);

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    bool has_vertex(int v) const;
    const Arrow& arrow(const std::string& id) const;
    bool has_arrow(const std::string& id) const;
    std::vector<const Arrow*> arrows_from(int v) const;
    std::vector<const Arrow*> arrows_into(int v) const;

    /// Connected components of the underlying undirected graph, each a
    /// sorted vertex list; components ordered by smallest vertex.
    std::vector<std::vector<int>> components() const;
    bool is_connected() const;
    bool is_acyclic() const;

    /// Full subquiver on the given vertex subset.
    Quiver restricted_to(const std::vector<int>& vertex_subset) const;

    bool operator==(const Quiver&) const = default;

private:
    std::vector<int> vertices_;
    std::vector<Arrow> arrows_;
};

/**
 * A path: either the trivial path at a vertex or a non-empty composable
 * arrow sequence stored in application order (arrows[0] acts first).
 */
struct Path {
    std::vector<std::string> arrows;  // empty for a trivial path
    int source = 0;
    int target = 0;

    static Path trivial(int vertex);
    static Path composite(const Quiver& q, std::vector<std::string> arrow_ids);

    bool is_trivial() const { return arrows.empty(); }
    std::size_t length() const { return arrows.size(); }
    std::string to_string() const;

    bool operator==(const Path&) const = default;
};

/// Element of the path semigroup: zero or a path.
struct SemigroupElement {
    std::optional<Path> path;  // nullopt encodes the absorbing zero

    static SemigroupElement zero() { return {}; }
    static SemigroupElement of(Path p) { return {std::move(p)}; }

    bool is_zero() const { return !path.has_value(); }
    std::string to_string() const;

    bool operator==(const SemigroupElement&) const = default;
};

/// Product p*q in P(Gamma): q acts first; zero is absorbing and the
/// product of paths is concatenation when s(p) = t(q), zero otherwise.
SemigroupElement compose_paths(const SemigroupElement& p, const SemigroupElement& q);

/// All paths of length <= max_len, ordered by (length, arrow id sequence);
/// trivial paths come first, ordered by vertex.
std::vector<Path> enumerate_paths(const Quiver& q, int max_len);

struct CycleEntry {
    std::vector<std::string> arrows;  // traversal order
    int clockwise = 0;
    int anticlockwise = 0;
    bool symmetric = false;
    bool oriented = false;

    bool operator==(const CycleEntry&) const = default;
};

struct CycleReport {
    std::vector<CycleEntry> cycles;
    bool all_symmetric = true;
};

/**
 * Classifies a fundamental cycle basis of the underlying undirected
 * multigraph plus the directed cycles up to length `oriented_len_cap`
 * (deduplicated up to rotation).  `all_symmetric` is decided by the
 * potential-function test, which covers every cycle, not just the
 * listed sample.
 */
CycleReport cycle_report(const Quiver& q, std::size_t oriented_len_cap = 8);

/// Vertex potential with F(t(a)) = F(s(a)) + 1, min value 0 per component.
struct ArrowFunction {
    std::map<int, int> values;

    bool operator==(const ArrowFunction&) const = default;
};

/// BFS potential assignment; nullopt iff some cycle is non-symmetric.
std::optional<ArrowFunction> arrow_positive_function(const Quiver& q);

/// Degree of each vertex under F after checking the grading law
/// F(t(a)) = F(s(a)) + 1 for every arrow; throws on an invalid F.
std::map<int, int> vertex_grading(const Quiver& q, const ArrowFunction& f);

bool has_odd_oriented_cycle(const Quiver& q);

/// If the quiver is a single directed cycle visiting every vertex once,
/// the arrows in traversal order starting from the smallest vertex.
std::optional<std::vector<std::string>> single_oriented_cycle(const Quiver& q);

Quiver validate_quiver(const std::vector<int>& vertices, const std::vector<Arrow>& arrows);

}  // namespace quiverhom
