#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quiverhom/atspace.hpp"

using namespace quiverhom;

namespace {

Quiver a2() { return Quiver::validate({1, 2}, {{"a", 1, 2}}); }
Quiver loop() { return Quiver::validate({1}, {{"a", 1, 1}}); }

std::map<int, int> rotation(int n, int k) {
    std::map<int, int> m;
    for (int i = 0; i < n; ++i)
        m[i] = (i + k) % n;
    return m;
}

SimplicialRep hexagon_antipodal_loop() {
    return validate_simplicial_rep(loop(), {{1, SimplicialComplex::polygon(6)}},
                                   {{"a", rotation(6, 3)}});
}

SimplicialRep point_rep(const Quiver& q) {
    std::map<int, SimplicialComplex> spaces;
    std::map<std::string, std::map<int, int>> maps;
    for (int v : q.vertices())
        spaces[v] = SimplicialComplex::point();
    for (const Arrow& a : q.arrows())
        maps[a.id] = {{0, 0}};
    return validate_simplicial_rep(q, spaces, maps);
}

}  // namespace

TEST_CASE("attachment space basics") {
    SUBCASE("points over a connected quiver collapse to one point") {
        Quiver q = Quiver::validate({1, 2, 3}, {{"a", 1, 2}, {"b", 2, 3}});
        AtSpace at = at_space(point_rep(q));
        CHECK(at.n_classes == 1);
        CHECK(at.quotient_complex.vertices().size() == 1);
    }
    SUBCASE("identity over A2 with two points stays two points") {
        SimplicialComplex two = validate_complex({0, 1}, {});
        SimplicialRep rep = validate_simplicial_rep(a2(), {{1, two}, {2, two}},
                                                    {{"a", {{0, 0}, {1, 1}}}});
        AtSpace at = at_space(rep);
        CHECK(at.n_classes == 2);
        CHECK(at.quotient_complex.n_simplices(0) == 2);
        CHECK(at.quotient_complex.n_simplices(1) == 0);
    }
    SUBCASE("two components stay apart") {
        Quiver q = Quiver::validate({1, 2}, {});
        SimplicialRep rep = point_rep(q);
        AtSpace at = at_space(rep);
        CHECK(at.n_classes == 2);
        CHECK(component_count(at) == 2);
    }
    SUBCASE("hexagon antipodal loop collapses to a triangle") {
        AtSpace at = at_space(hexagon_antipodal_loop());
        CHECK(at.n_classes == 3);
        CHECK(at.quotient_complex.n_simplices(0) == 3);
        CHECK(at.quotient_complex.n_simplices(1) == 3);
        CHECK(component_count(at) == 1);
    }
}

TEST_CASE("component counting matches quiver components under connected fibers") {
    Quiver q = Quiver::validate({1, 2, 3, 4, 5},
                                {{"a", 1, 2}, {"b", 2, 1}, {"c", 4, 5}});
    // components {1,2}, {3}, {4,5}
    std::map<int, SimplicialComplex> spaces;
    std::map<std::string, std::map<int, int>> maps;
    spaces[1] = SimplicialComplex::polygon(3);
    spaces[2] = SimplicialComplex::polygon(3);
    spaces[3] = SimplicialComplex::full_simplex(3);
    spaces[4] = SimplicialComplex::point();
    spaces[5] = SimplicialComplex::polygon(4);
    maps["a"] = rotation(3, 1);
    maps["b"] = rotation(3, 2);
    maps["c"] = {{0, 2}};
    AtSpace at = at_space(validate_simplicial_rep(q, spaces, maps));
    CHECK(component_count(at) == 3);
}

TEST_CASE("disconnected fibers may exceed the quiver component count") {
    SimplicialComplex two = validate_complex({0, 1}, {});
    SimplicialRep rep = validate_simplicial_rep(loop(), {{1, two}}, {{"a", {{0, 0}, {1, 1}}}});
    AtSpace at = at_space(rep);
    CHECK(component_count(at) == 2);
}

TEST_CASE("functoriality of attachment maps") {
    SimplicialRep rep = hexagon_antipodal_loop();
    AtSpace at = at_space(rep);
    SUBCASE("identity morphism gives the identity map") {
        std::map<int, std::map<int, int>> comps{{1, rotation(6, 0)}};
        SimplicialRepMorphism theta = validate_rep_morphism(rep, rep, comps);
        SimplicialMap f = at_morphism(theta, at, at);
        for (int v : f.source.vertices())
            CHECK(f.vertex_map.at(v) == v);
    }
    SUBCASE("collapse to the point representation") {
        SimplicialRep pts = point_rep(rep.quiver);
        std::map<int, std::map<int, int>> comps;
        for (int i = 0; i < 6; ++i)
            comps[1][i] = 0;
        SimplicialRepMorphism theta = validate_rep_morphism(rep, pts, comps);
        AtSpace target = at_space(pts);
        SimplicialMap f = at_morphism(theta, at, target);
        for (int v : f.source.vertices())
            CHECK(f.vertex_map.at(v) == 0);
    }
    SUBCASE("composition is respected") {
        // rotate by 2 (commutes with the antipodal map), then collapse
        std::map<int, std::map<int, int>> rot{{1, rotation(6, 2)}};
        SimplicialRepMorphism theta1 = validate_rep_morphism(rep, rep, rot);
        SimplicialRep pts = point_rep(rep.quiver);
        std::map<int, std::map<int, int>> col;
        for (int i = 0; i < 6; ++i)
            col[1][i] = 0;
        SimplicialRepMorphism theta2 = validate_rep_morphism(rep, pts, col);

        AtSpace at_pts = at_space(pts);
        SimplicialMap f1 = at_morphism(theta1, at, at);
        // compose theta2 after theta1 by hand
        std::map<int, std::map<int, int>> both;
        for (int i = 0; i < 6; ++i)
            both[1][i] = 0;
        SimplicialRepMorphism theta21 = validate_rep_morphism(rep, pts, both);
        SimplicialMap lhs = at_morphism(theta21, at, at_pts);
        SimplicialMap f2 = at_morphism(theta2, at, at_pts);
        for (int v : at.quotient_complex.vertices())
            CHECK(lhs.vertex_map.at(v) == f2.vertex_map.at(f1.vertex_map.at(v)));
    }
}

TEST_CASE("split analysis") {
    SUBCASE("two disjoint hexagons per vertex, trivially preserved") {
        // spaces: hexagon 0..5 plus hexagon 10..15; the loop map is the
        // antipodal on each piece
        std::vector<std::vector<int>> facets;
        for (int i = 0; i < 6; ++i) {
            facets.push_back({i, (i + 1) % 6});
            facets.push_back({10 + i, 10 + (i + 1) % 6});
        }
        for (auto& f : facets)
            std::sort(f.begin(), f.end());
        SimplicialComplex both = validate_complex({}, facets);
        std::map<int, int> vm;
        for (int i = 0; i < 6; ++i) {
            vm[i] = (i + 3) % 6;
            vm[10 + i] = 10 + (i + 3) % 6;
        }
        SimplicialRep rep = validate_simplicial_rep(loop(), {{1, both}}, {{"a", vm}});
        std::vector<std::vector<int>> left_facets, right_facets;
        for (int i = 0; i < 6; ++i) {
            std::vector<int> l{i, (i + 1) % 6};
            std::sort(l.begin(), l.end());
            left_facets.push_back(l);
            std::vector<int> r{10 + i, 10 + (i + 1) % 6};
            std::sort(r.begin(), r.end());
            right_facets.push_back(r);
        }
        SplitReport r = split_analysis(
            rep, {{1, validate_complex({}, left_facets)}},
            {{1, validate_complex({}, right_facets)}});
        CHECK(r.all_ok());
    }
    SUBCASE("trivial partition with an empty right piece") {
        SimplicialRep rep = hexagon_antipodal_loop();
        SplitReport r =
            split_analysis(rep, {{1, SimplicialComplex::polygon(6)}}, {{1, SimplicialComplex{}}});
        CHECK(r.all_ok());
    }
    SUBCASE("overlapping pieces are rejected") {
        SimplicialRep rep = hexagon_antipodal_loop();
        CHECK_THROWS_AS(split_analysis(rep, {{1, SimplicialComplex::polygon(6)}},
                                       {{1, SimplicialComplex::polygon(6)}}),
                        ValidationError);
    }
}

TEST_CASE("sigma on the point representation") {
    Quiver q = Quiver::validate({1, 2, 3}, {{"a", 1, 2}, {"b", 2, 3}});
    std::vector<SigmaComponent> s = sigma(point_rep(q));
    REQUIRE(s.size() == 1);
    CHECK(s[0].base_independent);
    CHECK(s[0].sigma.matrix(0) == IntMatrix::identity(1));
}

TEST_CASE("sigma on a line of isomorphic hexagons is injective") {
    std::vector<int> vs{1, 2, 3};
    std::vector<Arrow> as{{"a", 1, 2}, {"b", 2, 3}};
    Quiver q = Quiver::validate(vs, as);
    std::map<int, SimplicialComplex> spaces;
    std::map<std::string, std::map<int, int>> maps;
    for (int v : vs)
        spaces[v] = SimplicialComplex::polygon(6);
    maps["a"] = rotation(6, 1);
    maps["b"] = rotation(6, 2);
    SimplicialRep rep = validate_simplicial_rep(q, spaces, maps);
    std::vector<SigmaComponent> s = sigma(rep);
    REQUIRE(s.size() == 1);
    CHECK(s[0].base_independent);
    // all six hexagon copies glue into one hexagon; sigma embeds the limit
    for (int n = 0; n <= 1; ++n)
        CHECK(kernel_basis(s[0].sigma.matrix(n)).cols() == 0);
}

TEST_CASE("sigma doubles on the antipodal loop") {
    std::vector<SigmaComponent> s = sigma(hexagon_antipodal_loop());
    REQUIRE(s.size() == 1);
    CHECK(s[0].base_independent);
    // each degree-0 limit generator v_i + v_{i+3} maps to twice a class vertex
    IntMatrix m0 = s[0].sigma.matrix(0);
    REQUIRE(m0.cols() == 3);
    for (std::size_t j = 0; j < m0.cols(); ++j) {
        Int total = 0;
        for (std::size_t i = 0; i < m0.rows(); ++i) {
            CHECK(m0(i, j) % 2 == 0);
            total += m0(i, j);
        }
        CHECK(total == 2);
    }
}

TEST_CASE("sigma naturality for a rotation endomorphism") {
    SimplicialRep rep = hexagon_antipodal_loop();
    std::map<int, std::map<int, int>> rot{{1, rotation(6, 2)}};
    SimplicialRepMorphism theta = validate_rep_morphism(rep, rep, rot);
    CHECK(sigma_is_natural(theta));
}

TEST_CASE("induced map on H0 for the antipodal loop is multiplication by 2") {
    GroupHom h = h_natural(hexagon_antipodal_loop(), 0);
    CHECK(h.source().to_string() == "Z");
    CHECK(h.target().to_string() == "Z");
    IntMatrix c = h.canonical_matrix();
    REQUIRE(c.rows() == 1);
    REQUIRE(c.cols() == 1);
    Int entry = c(0, 0) < 0 ? Int(-c(0, 0)) : c(0, 0);
    CHECK(entry == 2);
}

TEST_CASE("h_natural on the point representation is an isomorphism") {
    Quiver q = Quiver::validate({1, 2}, {{"a", 1, 2}});
    GroupHom h = h_natural(point_rep(q), 0);
    CHECK(h.is_injective());
    CHECK(h.is_surjective());
}

TEST_CASE("h_natural over two components acts blockwise") {
    Quiver q = Quiver::validate({1, 2, 3}, {{"a", 1, 2}});
    // component {1,2}: hexagon with identity; component {3}: lone point
    std::map<int, SimplicialComplex> spaces{{1, SimplicialComplex::polygon(6)},
                                            {2, SimplicialComplex::polygon(6)},
                                            {3, SimplicialComplex::point()}};
    std::map<std::string, std::map<int, int>> maps{{"a", rotation(6, 0)}};
    SimplicialRep rep = validate_simplicial_rep(q, spaces, maps);
    GroupHom h0 = h_natural(rep, 0);
    CHECK(h0.source().free_rank() == 2);
    CHECK(h0.target().free_rank() == 2);
    CHECK(h0.is_injective());
    CHECK(h0.is_surjective());
    GroupHom h1 = h_natural(rep, 1);
    CHECK(h1.source().free_rank() == 1);
    CHECK(h1.is_injective());
}
