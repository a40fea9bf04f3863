#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quiverhom/abelian.hpp"

using namespace quiverhom;

namespace {

Quiver a2() { return Quiver::validate({1, 2}, {{"a", 1, 2}}); }
Quiver loop() { return Quiver::validate({1}, {{"a", 1, 1}}); }

GroupHom scalar(const FgAbGroup& g, long long c) {
    return GroupHom(g, g, IntMatrix::identity(g.n_generators()).scaled(Int(c)));
}

}  // namespace

TEST_CASE("group presentations") {
    SUBCASE("cokernel of [2] is Z/2") {
        FgAbGroup g(1, IntMatrix::from_rows({{2}}));
        CHECK(g.free_rank() == 0);
        CHECK(g.torsion() == std::vector<Int>{2});
        CHECK(g.to_string() == "Z/2");
    }
    SUBCASE("no relations is free") {
        FgAbGroup g = FgAbGroup::free_group(3);
        CHECK(g.free_rank() == 3);
        CHECK(g.torsion().empty());
        CHECK(g.to_string() == "Z^3");
    }
    SUBCASE("diag(1,2,0) padding gives Z + Z/2") {
        IntMatrix r(3, 3);
        r(0, 0) = 1;
        r(1, 1) = 2;
        FgAbGroup g(3, r);
        CHECK(g.free_rank() == 1);
        CHECK(g.torsion() == std::vector<Int>{2});
        CHECK(g.to_string() == "Z + Z/2");
    }
    SUBCASE("trivial group renders as 0") {
        FgAbGroup g(2, IntMatrix::identity(2));
        CHECK(g.is_trivial());
        CHECK(g.to_string() == "0");
    }
    SUBCASE("canonical factor generators have the stated orders") {
        IntMatrix r = IntMatrix::from_rows({{2, 0}, {2, 4}});
        FgAbGroup g(2, r);
        for (const auto& f : g.canonical_factors()) {
            if (f.order == 0)
                continue;
            // order * generator must fall into the relation lattice
            IntMatrix v(2, 1);
            v(0, 0) = f.order * f.generator[0];
            v(1, 0) = f.order * f.generator[1];
            CHECK(lattice_contains(g.relation_lattice(), v));
        }
    }
}

TEST_CASE("homs validate well-definedness") {
    FgAbGroup z2 = FgAbGroup::cyclic(2);
    FgAbGroup z4 = FgAbGroup::cyclic(4);
    FgAbGroup z = FgAbGroup::free_group(1);

    CHECK_NOTHROW(GroupHom(z2, z4, IntMatrix::from_rows({{2}})));  // 1 -> 2 is fine
    CHECK_THROWS_AS(GroupHom(z2, z4, IntMatrix::from_rows({{1}})), ValidationError);
    CHECK_NOTHROW(GroupHom(z4, z2, IntMatrix::from_rows({{1}})));  // reduction
    CHECK_THROWS_AS(GroupHom(z2, z, IntMatrix::from_rows({{1}})), ValidationError);
}

TEST_CASE("hom predicates") {
    FgAbGroup z = FgAbGroup::free_group(1);
    FgAbGroup z2 = FgAbGroup::cyclic(2);

    GroupHom two(z, z, IntMatrix::from_rows({{2}}));
    CHECK(two.is_injective());
    CHECK(!two.is_surjective());

    GroupHom reduce(z, z2, IntMatrix::from_rows({{1}}));
    CHECK(!reduce.is_injective());
    CHECK(reduce.is_surjective());

    GroupHom doubled(z2, z2, IntMatrix::from_rows({{2}}));
    CHECK(doubled.is_zero());
    CHECK(doubled.equals(GroupHom::zero(z2, z2)));

    CHECK(GroupHom::identity(z2).canonical_matrix() == IntMatrix::from_rows({{1}}));
}

TEST_CASE("limits over small diagrams") {
    SUBCASE("identity on A2 gives the diagonal Z") {
        FgAbGroup z = FgAbGroup::free_group(1);
        AbRep rep = validate_ab_rep(a2(), {{1, z}, {2, z}}, {{"a", GroupHom::identity(z)}});
        AbLimit lim = ab_limit(rep);
        CHECK(lim.group.to_string() == "Z");
        // projections agree on the single generator
        CHECK(lim.projections.at(1).matrix() == lim.projections.at(2).matrix());
    }
    SUBCASE("doubling loop kills the limit") {
        FgAbGroup z = FgAbGroup::free_group(1);
        AbRep rep = validate_ab_rep(loop(), {{1, z}}, {{"a", scalar(z, 2)}});
        CHECK(ab_limit(rep).group.is_trivial());
    }
    SUBCASE("zero map on A2 gives Z via (x, 0)") {
        FgAbGroup z = FgAbGroup::free_group(1);
        AbRep rep = validate_ab_rep(a2(), {{1, z}, {2, z}}, {{"a", GroupHom::zero(z, z)}});
        AbLimit lim = ab_limit(rep);
        CHECK(lim.group.to_string() == "Z");
        CHECK(lim.projections.at(1).matrix() == IntMatrix::from_rows({{1}}));
        CHECK(lim.projections.at(2).matrix() == IntMatrix::from_rows({{0}}));
    }
    SUBCASE("parallel arrows impose separate constraints") {
        Quiver par = Quiver::validate({1, 2}, {{"a", 1, 2}, {"b", 1, 2}});
        FgAbGroup z = FgAbGroup::free_group(1);
        AbRep rep = validate_ab_rep(par, {{1, z}, {2, z}},
                                    {{"a", GroupHom::identity(z)}, {"b", scalar(z, 2)}});
        // x2 = x1 and x2 = 2 x1 force x1 = 0
        CHECK(ab_limit(rep).group.is_trivial());
    }
    SUBCASE("torsion limit") {
        // loop acting by 3 on Z/8: x = 3x means 2x = 0, so the limit is Z/2...
        // concretely {0, 4} inside Z/8
        FgAbGroup z8 = FgAbGroup::cyclic(8);
        AbRep rep = validate_ab_rep(loop(), {{1, z8}}, {{"a", scalar(z8, 3)}});
        AbLimit lim = ab_limit(rep);
        CHECK(lim.group.free_rank() == 0);
        CHECK(lim.group.torsion() == std::vector<Int>{2});
    }
}

TEST_CASE("limit of a disconnected diagram is the product") {
    Quiver two = Quiver::validate({1, 2, 3, 4}, {{"a", 1, 2}, {"b", 3, 4}});
    FgAbGroup z = FgAbGroup::free_group(1);
    FgAbGroup z6 = FgAbGroup::cyclic(6);
    AbRep rep = validate_ab_rep(two, {{1, z}, {2, z}, {3, z6}, {4, z6}},
                                {{"a", GroupHom::identity(z)}, {"b", scalar(z6, 5)}});
    AbLimit lim = ab_limit(rep);

    AbRep left = validate_ab_rep(Quiver::validate({1, 2}, {{"a", 1, 2}}), {{1, z}, {2, z}},
                                 {{"a", GroupHom::identity(z)}});
    AbRep right = validate_ab_rep(Quiver::validate({3, 4}, {{"b", 3, 4}}), {{3, z6}, {4, z6}},
                                  {{"b", scalar(z6, 5)}});
    AbLimit ll = ab_limit(left);
    AbLimit lr = ab_limit(right);
    CHECK(lim.group.free_rank() == ll.group.free_rank() + lr.group.free_rank());
    // invariant factors of the product = merged factor multiset
    std::vector<Int> merged = ll.group.torsion();
    for (const Int& t : lr.group.torsion())
        merged.push_back(t);
    std::sort(merged.begin(), merged.end());
    std::vector<Int> got = lim.group.torsion();
    std::sort(got.begin(), got.end());
    CHECK(got == merged);
}

TEST_CASE("left exactness of the limit") {
    SUBCASE("multiplication SES over A2 with identity structure maps") {
        // 0 -> Z --2--> Z -> Z/2 -> 0 at both vertices
        FgAbGroup z = FgAbGroup::free_group(1);
        FgAbGroup z2 = FgAbGroup::cyclic(2);
        AbRep reps_a = validate_ab_rep(a2(), {{1, z}, {2, z}}, {{"a", GroupHom::identity(z)}});
        AbRep reps_b = reps_a;
        AbRep reps_c = validate_ab_rep(a2(), {{1, z2}, {2, z2}}, {{"a", GroupHom::identity(z2)}});
        AbRepMorphism alpha = validate_ab_morphism(
            reps_a, reps_b, {{1, scalar(z, 2)}, {2, scalar(z, 2)}});
        AbRepMorphism beta = validate_ab_morphism(
            reps_b, reps_c,
            {{1, GroupHom(z, z2, IntMatrix::identity(1))},
             {2, GroupHom(z, z2, IntMatrix::identity(1))}});
        ExactnessReport r = left_exactness_check(alpha, beta);
        CHECK(r.vertexwise_exact);
        CHECK(r.left_exact);
    }
    SUBCASE("a non-exact input is reported at the vertex stage") {
        FgAbGroup z = FgAbGroup::free_group(1);
        AbRep rep = validate_ab_rep(a2(), {{1, z}, {2, z}}, {{"a", GroupHom::identity(z)}});
        AbRepMorphism alpha =
            validate_ab_morphism(rep, rep, {{1, scalar(z, 2)}, {2, scalar(z, 2)}});
        AbRepMorphism beta =
            validate_ab_morphism(rep, rep, {{1, scalar(z, 0)}, {2, scalar(z, 0)}});
        ExactnessReport r = left_exactness_check(alpha, beta);
        CHECK(!r.vertexwise_exact);
        CHECK(!r.vertexwise_issue.empty());
    }
}

TEST_CASE("limits respect textbook inverse systems on acyclic coherent diagrams") {
    // tower Z/8 -> Z/4 -> Z/2 with reduction maps: inverse limit over the
    // finite stage equals the first stage
    Quiver line = Quiver::validate({1, 2, 3}, {{"a", 1, 2}, {"b", 2, 3}});
    FgAbGroup z8 = FgAbGroup::cyclic(8);
    FgAbGroup z4 = FgAbGroup::cyclic(4);
    FgAbGroup z2 = FgAbGroup::cyclic(2);
    AbRep rep = validate_ab_rep(
        line, {{1, z8}, {2, z4}, {3, z2}},
        {{"a", GroupHom(z8, z4, IntMatrix::identity(1))},
         {"b", GroupHom(z4, z2, IntMatrix::identity(1))}});
    AbLimit lim = ab_limit(rep);
    // brute force: elements of Z/8 x Z/4 x Z/2 with compatible reductions
    int count = 0;
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 4; ++y)
            for (int zl = 0; zl < 2; ++zl)
                if (x % 4 == y && y % 2 == zl)
                    ++count;
    CHECK(count == 8);
    CHECK(lim.group.torsion() == std::vector<Int>{8});
}
