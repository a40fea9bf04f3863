#include "quiverhom/quiver.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace quiverhom {

Quiver Quiver::validate(std::vector<int> vertices, std::vector<Arrow> arrows) {
    if (vertices.empty())
        throw ValidationError("quiver: empty vertex set");
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        if (vertices[i] == vertices[i + 1])
            throw ValidationError("quiver: duplicate vertex id " + std::to_string(vertices[i]));

    std::sort(arrows.begin(), arrows.end(),
              [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
    for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
        if (arrows[i].id == arrows[i + 1].id)
            throw ValidationError("quiver: duplicate arrow id \"" + arrows[i].id + "\"");

    auto known = [&](int v) { return std::binary_search(vertices.begin(), vertices.end(), v); };
    for (const Arrow& a : arrows) {
        if (!known(a.src))
            throw ValidationError("quiver: arrow \"" + a.id + "\" has dangling vertex " +
                                  std::to_string(a.src));
        if (!known(a.tgt))
            throw ValidationError("quiver: arrow \"" + a.id + "\" has dangling vertex " +
                                  std::to_string(a.tgt));
    }

    Quiver q;
    q.vertices_ = std::move(vertices);
    q.arrows_ = std::move(arrows);
    return q;
}

Quiver validate_quiver(const std::vector<int>& vertices, const std::vector<Arrow>& arrows) {
    return Quiver::validate(vertices, arrows);
}

bool Quiver::has_vertex(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Quiver::has_arrow(const std::string& id) const {
    for (const Arrow& a : arrows_)
        if (a.id == id)
            return true;
    return false;
}

const Arrow& Quiver::arrow(const std::string& id) const {
    for (const Arrow& a : arrows_)
        if (a.id == id)
            return a;
    throw ValidationError("quiver: unknown arrow id \"" + id + "\"");
}

std::vector<const Arrow*> Quiver::arrows_from(int v) const {
    std::vector<const Arrow*> out;
    for (const Arrow& a : arrows_)
        if (a.src == v)
            out.push_back(&a);
    return out;
}

std::vector<const Arrow*> Quiver::arrows_into(int v) const {
    std::vector<const Arrow*> out;
    for (const Arrow& a : arrows_)
        if (a.tgt == v)
            out.push_back(&a);
    return out;
}

std::vector<std::vector<int>> Quiver::components() const {
    std::map<int, int> comp;
    int n_comp = 0;
    for (int v : vertices_) {
        if (comp.count(v))
            continue;
        int c = n_comp++;
        std::deque<int> queue{v};
        comp[v] = c;
        while (!queue.empty()) {
            int w = queue.front();
            queue.pop_front();
            for (const Arrow& a : arrows_) {
                int other = -1;
                if (a.src == w)
                    other = a.tgt;
                else if (a.tgt == w)
                    other = a.src;
                else
                    continue;
                if (!comp.count(other)) {
                    comp[other] = c;
                    queue.push_back(other);
                }
            }
        }
    }
    std::vector<std::vector<int>> out(n_comp);
    for (int v : vertices_)
        out[comp[v]].push_back(v);
    return out;
}

bool Quiver::is_connected() const { return components().size() == 1; }

bool Quiver::is_acyclic() const {
    // Kahn peeling on the directed graph
    std::map<int, int> indeg;
    for (int v : vertices_)
        indeg[v] = 0;
    for (const Arrow& a : arrows_)
        indeg[a.tgt]++;
    std::deque<int> queue;
    for (auto& [v, d] : indeg)
        if (d == 0)
            queue.push_back(v);
    std::size_t seen = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        ++seen;
        for (const Arrow& a : arrows_)
            if (a.src == v && --indeg[a.tgt] == 0)
                queue.push_back(a.tgt);
    }
    return seen == vertices_.size();
}

Quiver Quiver::restricted_to(const std::vector<int>& vertex_subset) const {
    std::set<int> keep(vertex_subset.begin(), vertex_subset.end());
    std::vector<int> vs;
    for (int v : vertices_)
        if (keep.count(v))
            vs.push_back(v);
    std::vector<Arrow> as;
    for (const Arrow& a : arrows_)
        if (keep.count(a.src) && keep.count(a.tgt))
            as.push_back(a);
    return Quiver::validate(vs, as);
}

Path Path::trivial(int vertex) {
    Path p;
    p.source = vertex;
    p.target = vertex;
    return p;
}

Path Path::composite(const Quiver& q, std::vector<std::string> arrow_ids) {
    if (arrow_ids.empty())
        throw ValidationError("path: composite path needs at least one arrow");
    Path p;
    const Arrow* first = &q.arrow(arrow_ids.front());
    p.source = first->src;
    int at = first->tgt;
    for (std::size_t i = 1; i < arrow_ids.size(); ++i) {
        const Arrow& a = q.arrow(arrow_ids[i]);
        if (a.src != at)
            throw ValidationError("path: arrows \"" + arrow_ids[i - 1] + "\" and \"" +
                                  arrow_ids[i] + "\" are not composable");
        at = a.tgt;
    }
    p.target = at;
    p.arrows = std::move(arrow_ids);
    return p;
}

std::string Path::to_string() const {
    if (is_trivial())
        return "e" + std::to_string(source);
    // composition order, last applied arrow first
    std::ostringstream os;
    for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) {
        if (it != arrows.rbegin())
            os << "*";
        os << *it;
    }
    return os.str();
}

std::string SemigroupElement::to_string() const { return is_zero() ? "0" : path->to_string(); }

SemigroupElement compose_paths(const SemigroupElement& p, const SemigroupElement& q) {
    if (p.is_zero() || q.is_zero())
        return SemigroupElement::zero();
    if (p.path->source != q.path->target)
        return SemigroupElement::zero();
    if (p.path->is_trivial())
        return q;
    if (q.path->is_trivial())
        return p;
    Path out;
    out.arrows = q.path->arrows;
    out.arrows.insert(out.arrows.end(), p.path->arrows.begin(), p.path->arrows.end());
    out.source = q.path->source;
    out.target = p.path->target;
    return SemigroupElement::of(std::move(out));
}

std::vector<Path> enumerate_paths(const Quiver& q, int max_len) {
    if (max_len < 0)
        throw ValidationError("enumerate_paths: negative length cap");
    std::vector<Path> out;
    for (int v : q.vertices())
        out.push_back(Path::trivial(v));
    std::vector<Path> frontier = out;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Path> next;
        for (const Path& p : frontier)
            for (const Arrow* a : q.arrows_from(p.target)) {
                Path e = p;
                e.arrows.push_back(a->id);
                e.target = a->tgt;
                next.push_back(std::move(e));
            }
        std::sort(next.begin(), next.end(),
                  [](const Path& a, const Path& b) { return a.arrows < b.arrows; });
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
        if (frontier.empty())
            break;
    }
    return out;
}

namespace {

// Potential assignment over the underlying undirected graph: +1 along an
// arrow, -1 against it.  Conflicts are exactly non-symmetric cycles.
std::optional<std::map<int, int>> potential_assignment(const Quiver& q) {
    std::map<int, int> pot;
    for (const std::vector<int>& comp : q.components()) {
        int root = comp.front();
        pot[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (const Arrow& a : q.arrows()) {
                int other;
                int delta;
                if (a.src == v) {
                    other = a.tgt;
                    delta = 1;
                } else if (a.tgt == v) {
                    other = a.src;
                    delta = -1;
                } else {
                    continue;
                }
                int want = pot[v] + delta;
                auto it = pot.find(other);
                if (it == pot.end()) {
                    pot[other] = want;
                    queue.push_back(other);
                } else if (it->second != want) {
                    return std::nullopt;
                }
            }
        }
        // shift each component so its minimum is 0
        int lo = pot[comp.front()];
        for (int v : comp)
            lo = std::min(lo, pot[v]);
        for (int v : comp)
            pot[v] -= lo;
    }
    return pot;
}

struct TraversalStep {
    const Arrow* arrow;
    bool forward;  // traversed src -> tgt
};

CycleEntry classify(const std::vector<TraversalStep>& steps) {
    CycleEntry e;
    for (const TraversalStep& s : steps) {
        e.arrows.push_back(s.arrow->id);
        if (s.forward)
            e.clockwise++;
        else
            e.anticlockwise++;
    }
    // rotating the starting point keeps the traversal and the counts
    std::vector<std::string> best = e.arrows;
    std::vector<std::string> rotated = e.arrows;
    for (std::size_t k = 1; k < e.arrows.size(); ++k) {
        std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
        best = std::min(best, rotated);
    }
    e.arrows = std::move(best);
    e.symmetric = (e.clockwise == e.anticlockwise);
    e.oriented = (e.clockwise == 0 || e.anticlockwise == 0);
    return e;
}

}  // namespace

std::optional<ArrowFunction> arrow_positive_function(const Quiver& q) {
    auto pot = potential_assignment(q);
    if (!pot)
        return std::nullopt;
    return ArrowFunction{*pot};
}

std::map<int, int> vertex_grading(const Quiver& q, const ArrowFunction& f) {
    for (int v : q.vertices())
        if (!f.values.count(v))
            throw ValidationError("vertex_grading: function misses vertex " + std::to_string(v));
    for (const Arrow& a : q.arrows())
        if (f.values.at(a.tgt) != f.values.at(a.src) + 1)
            throw ValidationError("vertex_grading: arrow \"" + a.id +
                                  "\" violates F(t) = F(s) + 1");
    std::map<int, int> degrees;
    for (int v : q.vertices())
        degrees[v] = f.values.at(v);
    return degrees;
}

CycleReport cycle_report(const Quiver& q, std::size_t oriented_len_cap) {
    CycleReport report;
    report.all_symmetric = potential_assignment(q).has_value();

    // --- fundamental cycle basis of the undirected multigraph ---
    std::map<int, const Arrow*> tree_edge;  // vertex -> arrow used to reach it
    std::map<int, int> parent;
    std::set<int> visited;
    std::vector<const Arrow*> non_tree;
    for (const std::vector<int>& comp : q.components()) {
        int root = comp.front();
        visited.insert(root);
        std::deque<int> queue{root};
        std::set<std::string> used;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (const Arrow& a : q.arrows()) {
                int other;
                if (a.src == v)
                    other = a.tgt;
                else if (a.tgt == v)
                    other = a.src;
                else
                    continue;
                if (visited.count(other))
                    continue;
                visited.insert(other);
                used.insert(a.id);
                tree_edge[other] = &a;
                parent[other] = v;
                queue.push_back(other);
            }
        }
        for (const Arrow& a : q.arrows()) {
            bool in_comp = std::binary_search(comp.begin(), comp.end(), a.src);
            if (in_comp && !used.count(a.id))
                non_tree.push_back(&a);
        }
    }
    auto tree_path_up = [&](int from, int to) {
        // walk from `from` toward the root until `to` is hit; both lie on one
        // root path by construction of the caller
        std::vector<TraversalStep> steps;
        int at = from;
        while (at != to) {
            const Arrow* a = tree_edge.at(at);
            bool fwd = (a->tgt == at);
            // walking against discovery direction: reverse orientation flag
            steps.push_back({a, !fwd});
            at = parent.at(at);
        }
        return steps;
    };
    auto depth = [&](int v) {
        int d = 0;
        while (parent.count(v)) {
            v = parent.at(v);
            ++d;
        }
        return d;
    };
    for (const Arrow* a : non_tree) {
        if (a->src == a->tgt) {
            report.cycles.push_back(classify({{a, true}}));
            continue;
        }
        // lowest common ancestor walk
        int x = a->tgt, y = a->src;
        std::vector<int> xs{x}, ys{y};
        int dx = depth(x), dy = depth(y);
        while (dx > dy) {
            x = parent.at(x);
            xs.push_back(x);
            --dx;
        }
        while (dy > dx) {
            y = parent.at(y);
            ys.push_back(y);
            --dy;
        }
        while (x != y) {
            x = parent.at(x);
            y = parent.at(y);
            xs.push_back(x);
            ys.push_back(y);
        }
        // traverse: a forward, then tgt -> lca, then lca -> src
        std::vector<TraversalStep> steps{{a, true}};
        auto up = tree_path_up(a->tgt, x);
        steps.insert(steps.end(), up.begin(), up.end());
        auto down = tree_path_up(a->src, x);
        std::reverse(down.begin(), down.end());
        for (TraversalStep& s : down)
            s.forward = !s.forward;
        steps.insert(steps.end(), down.begin(), down.end());
        report.cycles.push_back(classify(steps));
    }

    // --- directed cycles up to rotation, within the length cap ---
    std::set<std::vector<std::string>> seen;
    std::vector<TraversalStep> stack;
    std::set<int> on_stack;
    auto canonical_rotation = [](std::vector<std::string> ids) {
        std::vector<std::string> best = ids;
        for (std::size_t r = 1; r < ids.size(); ++r) {
            std::rotate(ids.begin(), ids.begin() + 1, ids.end());
            best = std::min(best, ids);
        }
        return best;
    };
    std::function<void(int, int)> dfs = [&](int start, int at) {
        for (const Arrow* a : q.arrows_from(at)) {
            if (a->tgt == start) {
                std::vector<std::string> ids;
                for (const TraversalStep& s : stack)
                    ids.push_back(s.arrow->id);
                ids.push_back(a->id);
                ids = canonical_rotation(std::move(ids));
                if (seen.insert(ids).second) {
                    std::vector<TraversalStep> steps = stack;
                    steps.push_back({a, true});
                    report.cycles.push_back(classify(steps));
                }
            }
            if (stack.size() + 1 >= oriented_len_cap)
                continue;
            if (a->tgt != start && !on_stack.count(a->tgt)) {
                stack.push_back({a, true});
                on_stack.insert(a->tgt);
                dfs(start, a->tgt);
                on_stack.erase(a->tgt);
                stack.pop_back();
            }
        }
    };
    if (oriented_len_cap > 0)
        for (int v : q.vertices()) {
            on_stack = {v};
            stack.clear();
            dfs(v, v);
        }

    // drop duplicates between the basis and the directed list
    std::set<std::multiset<std::string>> listed;
    std::vector<CycleEntry> dedup;
    for (CycleEntry& e : report.cycles) {
        std::multiset<std::string> key(e.arrows.begin(), e.arrows.end());
        if (listed.insert(key).second)
            dedup.push_back(std::move(e));
    }
    report.cycles = std::move(dedup);
    return report;
}

bool has_odd_oriented_cycle(const Quiver& q) {
    // any closed directed walk of odd length decomposes into simple directed
    // cycles, so odd walks exist iff some simple directed cycle is odd
    bool found = false;
    std::set<int> on_stack;
    std::vector<int> stack_len{0};
    std::function<void(int, int, int)> dfs = [&](int start, int at, int len) {
        if (found)
            return;
        for (const Arrow* a : q.arrows_from(at)) {
            if (a->tgt == start && (len + 1) % 2 == 1) {
                found = true;
                return;
            }
            if (a->tgt != start && !on_stack.count(a->tgt)) {
                on_stack.insert(a->tgt);
                dfs(start, a->tgt, len + 1);
                on_stack.erase(a->tgt);
            }
        }
    };
    for (int v : q.vertices()) {
        on_stack = {v};
        dfs(v, v, 0);
        if (found)
            return true;
    }
    return false;
}

std::optional<std::vector<std::string>> single_oriented_cycle(const Quiver& q) {
    if (q.arrows().size() != q.vertices().size() || !q.is_connected())
        return std::nullopt;
    for (int v : q.vertices())
        if (q.arrows_from(v).size() != 1 || q.arrows_into(v).size() != 1)
            return std::nullopt;
    std::vector<std::string> order;
    int start = q.vertices().front();
    int at = start;
    do {
        const Arrow* a = q.arrows_from(at).front();
        order.push_back(a->id);
        at = a->tgt;
    } while (at != start && order.size() <= q.arrows().size());
    if (at != start || order.size() != q.arrows().size())
        return std::nullopt;
    return order;
}

}  // namespace quiverhom
