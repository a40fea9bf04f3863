#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quiverhom/quiver.hpp"

using namespace quiverhom;

namespace {

Quiver a2() { return Quiver::validate({1, 2}, {{"a", 1, 2}}); }
Quiver a3() { return Quiver::validate({1, 2, 3}, {{"a", 1, 2}, {"b", 2, 3}}); }
Quiver loop() { return Quiver::validate({1}, {{"a", 1, 1}}); }
Quiver oriented_3cycle() {
    return Quiver::validate({1, 2, 3}, {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 1}});
}
Quiver diamond() {
    // 1 -> 2 <- 3 -> 4 <- 1
    return Quiver::validate({1, 2, 3, 4},
                            {{"a", 1, 2}, {"b", 3, 2}, {"c", 3, 4}, {"d", 1, 4}});
}

}  // namespace

TEST_CASE("validation") {
    CHECK(a2().vertices() == std::vector<int>{1, 2});
    CHECK_THROWS_WITH_AS(Quiver::validate({1, 2}, {{"a", 1, 9}}),
                         doctest::Contains("dangling"), ValidationError);
    CHECK_THROWS_AS(Quiver::validate({1, 2}, {{"a", 1, 2}, {"a", 2, 1}}), ValidationError);
    CHECK_THROWS_AS(Quiver::validate({}, {}), ValidationError);
    CHECK_THROWS_AS(Quiver::validate({1, 1}, {}), ValidationError);
}

TEST_CASE("semigroup composition") {
    Quiver q = a2();
    auto e1 = SemigroupElement::of(Path::trivial(1));
    auto e2 = SemigroupElement::of(Path::trivial(2));
    auto a = SemigroupElement::of(Path::composite(q, {"a"}));

    CHECK(compose_paths(e1, e1) == e1);
    CHECK(compose_paths(a, e1) == a);
    CHECK(compose_paths(e2, a) == a);
    CHECK(compose_paths(e2, e1).is_zero());
    CHECK(compose_paths(a, a).is_zero());
    CHECK(compose_paths(a, SemigroupElement::zero()).is_zero());

    Quiver q2 = Quiver::validate({1, 2, 3, 4}, {{"a", 1, 2}, {"b", 3, 4}});
    auto pa = SemigroupElement::of(Path::composite(q2, {"a"}));
    auto pb = SemigroupElement::of(Path::composite(q2, {"b"}));
    CHECK(compose_paths(pa, pb).is_zero());
}

TEST_CASE("associativity and zero absorption over enumerated paths") {
    for (const Quiver& q : {a3(), loop(), oriented_3cycle(), diamond()}) {
        std::vector<SemigroupElement> elems{SemigroupElement::zero()};
        for (const Path& p : enumerate_paths(q, 3))
            elems.push_back(SemigroupElement::of(p));
        for (const auto& p : elems)
            for (const auto& r : elems) {
                CHECK(compose_paths(SemigroupElement::zero(), p).is_zero());
                CHECK(compose_paths(p, SemigroupElement::zero()).is_zero());
                for (const auto& s : elems)
                    CHECK(compose_paths(compose_paths(p, r), s) ==
                          compose_paths(p, compose_paths(r, s)));
            }
    }
}

TEST_CASE("path enumeration order") {
    SUBCASE("A2, cap 1") {
        auto paths = enumerate_paths(a2(), 1);
        REQUIRE(paths.size() == 3);
        CHECK(paths[0] == Path::trivial(1));
        CHECK(paths[1] == Path::trivial(2));
        CHECK(paths[2].arrows == std::vector<std::string>{"a"});
    }
    SUBCASE("loop, cap 3") {
        auto paths = enumerate_paths(loop(), 3);
        REQUIRE(paths.size() == 4);
        for (std::size_t len = 0; len < 4; ++len)
            CHECK(paths[len].length() == len);
    }
    SUBCASE("cap 0 gives the trivial paths only") {
        auto paths = enumerate_paths(oriented_3cycle(), 0);
        CHECK(paths.size() == 3);
        for (const Path& p : paths)
            CHECK(p.is_trivial());
    }
}

TEST_CASE("cycle classification") {
    SUBCASE("oriented 3-cycle") {
        CycleReport r = cycle_report(oriented_3cycle());
        CHECK(!r.all_symmetric);
        bool found = false;
        for (const CycleEntry& c : r.cycles)
            if (c.arrows.size() == 3) {
                CHECK(c.clockwise + c.anticlockwise == 3);
                CHECK(!c.symmetric);
                if (c.oriented)
                    found = true;
            }
        CHECK(found);
    }
    SUBCASE("diamond is symmetric") {
        CycleReport r = cycle_report(diamond());
        CHECK(r.all_symmetric);
        REQUIRE(r.cycles.size() == 1);
        CHECK(r.cycles[0].clockwise == 2);
        CHECK(r.cycles[0].anticlockwise == 2);
        CHECK(r.cycles[0].symmetric);
    }
    SUBCASE("acyclic A3") {
        CycleReport r = cycle_report(a3());
        CHECK(r.all_symmetric);
        CHECK(r.cycles.empty());
    }
    SUBCASE("parallel arrows are a symmetric 2-cycle") {
        Quiver q = Quiver::validate({1, 2}, {{"a", 1, 2}, {"b", 1, 2}});
        CycleReport r = cycle_report(q);
        CHECK(r.all_symmetric);
        REQUIRE(r.cycles.size() == 1);
        CHECK(r.cycles[0].clockwise == 1);
        CHECK(r.cycles[0].anticlockwise == 1);
    }
    SUBCASE("opposite arrows are a non-symmetric oriented 2-cycle") {
        Quiver q = Quiver::validate({1, 2}, {{"a", 1, 2}, {"b", 2, 1}});
        CycleReport r = cycle_report(q);
        CHECK(!r.all_symmetric);
    }
}

TEST_CASE("arrow positive functions") {
    SUBCASE("A3 gets 0,1,2") {
        auto f = arrow_positive_function(a3());
        REQUIRE(f.has_value());
        CHECK(f->values.at(1) == 0);
        CHECK(f->values.at(2) == 1);
        CHECK(f->values.at(3) == 2);
    }
    SUBCASE("oriented cycle has none") {
        CHECK(!arrow_positive_function(oriented_3cycle()).has_value());
        CHECK(!arrow_positive_function(loop()).has_value());
    }
    SUBCASE("diamond") {
        auto f = arrow_positive_function(diamond());
        REQUIRE(f.has_value());
        CHECK(f->values.at(1) == 0);
        CHECK(f->values.at(3) == 0);
        CHECK(f->values.at(2) == 1);
        CHECK(f->values.at(4) == 1);
    }
}

TEST_CASE("grading validates the potential") {
    auto f = arrow_positive_function(a3());
    REQUIRE(f.has_value());
    auto degrees = vertex_grading(a3(), *f);
    CHECK(degrees.at(1) == 0);
    CHECK(degrees.at(3) == 2);

    ArrowFunction bad{{{1, 0}, {2, 5}, {3, 2}}};
    CHECK_THROWS_AS(vertex_grading(a3(), bad), ValidationError);
}

TEST_CASE("single vertex quiver grades everything in degree 0") {
    Quiver q = Quiver::validate({7}, {});
    auto f = arrow_positive_function(q);
    REQUIRE(f.has_value());
    CHECK(vertex_grading(q, *f).at(7) == 0);
}

TEST_CASE("odd oriented cycles") {
    CHECK(has_odd_oriented_cycle(loop()));
    CHECK(has_odd_oriented_cycle(oriented_3cycle()));
    Quiver two_cycle = Quiver::validate({1, 2}, {{"a", 1, 2}, {"b", 2, 1}});
    CHECK(!has_odd_oriented_cycle(two_cycle));
    CHECK(!has_odd_oriented_cycle(a3()));
}

TEST_CASE("single cycle recognition") {
    CHECK(single_oriented_cycle(loop()).has_value());
    auto c = single_oriented_cycle(oriented_3cycle());
    REQUIRE(c.has_value());
    CHECK(c->size() == 3);
    CHECK(!single_oriented_cycle(a3()).has_value());
    CHECK(!single_oriented_cycle(diamond()).has_value());
}
