#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "handlebody/covers.hpp"
#include "handlebody/errors.hpp"
#include "handlebody/instances.hpp"

#include <set>

using namespace hb;

namespace {

DegreeHomology free_part(std::size_t rank) { return DegreeHomology{rank, {}}; }

} // namespace

TEST_CASE("double homology of the model instances") {
    {
        DoubleHomology d = double_homology(make_polygon(4), Coefficients::Z);
        REQUIRE(d.total.groups.size() == 3);
        CHECK(d.total.groups[0] == free_part(1));
        CHECK(d.total.groups[1] == free_part(2));
        CHECK(d.total.groups[2] == free_part(1));
        // degree-1 contributions come from the two disjoint facet pairs
        std::set<std::vector<std::string>> deg1;
        for (const auto& c : d.contributions)
            if (!c.per_degree[1].trivial()) deg1.insert(c.subset);
        CHECK(deg1 == std::set<std::vector<std::string>>{{"1", "3"}, {"2", "4"}});
    }
    {
        DoubleHomology d = double_homology(make_polygon(5), Coefficients::Z);
        CHECK(d.total.groups[1] == free_part(10));
        CHECK(d.total.groups[2] == free_part(1));
    }
    {
        DoubleHomology d = double_homology(make_simplex3(), Coefficients::Z);
        CHECK(d.total.groups[0] == free_part(1));
        CHECK(d.total.groups[1] == free_part(0));
        CHECK(d.total.groups[2] == free_part(0));
        CHECK(d.total.groups[3] == free_part(1));
    }
    {
        DoubleHomology d = double_homology(make_interval(), Coefficients::Z);
        CHECK(d.total.groups[0] == free_part(1));
        CHECK(d.total.groups[1] == free_part(1));
    }
    {
        // cube double is the 3-torus
        DoubleHomology d = double_homology(make_cube(), Coefficients::Z);
        CHECK(d.total.groups[1] == free_part(3));
        CHECK(d.total.groups[2] == free_part(3));
        CHECK(d.total.groups[3] == free_part(1));
    }
    {
        // prism3 double is S^2 x S^1
        DoubleHomology d = double_homology(make_prism(3), Coefficients::Z);
        CHECK(d.total.groups[1] == free_part(1));
        CHECK(d.total.groups[2] == free_part(1));
        CHECK(d.total.groups[3] == free_part(1));
    }
    {
        // prism5 double is (genus-5 surface) x S^1
        DoubleHomology d = double_homology(make_prism(5), Coefficients::Z);
        CHECK(d.total.groups[1] == free_part(11));
        CHECK(d.total.groups[2] == free_part(11));
        CHECK(d.total.groups[3] == free_part(1));
    }
}

TEST_CASE("double homology in genus 1 is UCT-consistent") {
    SimpleHandlebody h = make_genus1_square();
    DoubleHomology dz = double_homology(h, Coefficients::Z);
    DoubleHomology d2 = double_homology(h, Coefficients::Z2);
    auto evens = [&](int d) {
        std::size_t e = 0;
        for (const Integer& t : dz.total.groups[d].torsion)
            if (t % 2 == 0) ++e;
        return e;
    };
    for (int d = 0; d <= 3; ++d) {
        std::size_t expect = dz.total.groups[d].free_rank + evens(d) + (d > 0 ? evens(d - 1) : 0);
        CHECK(d2.total.groups[d].free_rank == expect);
    }
    CHECK(dz.total.groups[3] == free_part(1));
    CHECK(dz.total.groups[1].free_rank >= 2);
}

TEST_CASE("universal cover support") {
    CHECK(universal_cover_support(make_cube()).empty());
    CHECK(universal_cover_support(make_dodecahedron()).empty());
    CHECK(universal_cover_support(make_genus1_nocross()).empty());
    {
        auto s = universal_cover_support(make_simplex3());
        REQUIRE(s.size() == 1);
        CHECK(s[0].subset == std::vector<std::string>{"1", "2", "3", "4"});
        CHECK(s[0].per_degree[3] == free_part(1));  // K_T = 2-sphere
    }
    {
        auto s = universal_cover_support(make_prism(3));
        REQUIRE(s.size() == 1);
        CHECK(s[0].subset == std::vector<std::string>{"S1", "S2", "S3"});
        CHECK(s[0].per_degree[2] == free_part(1));  // K_T = 3-cycle
    }
}

TEST_CASE("Theorem A consistency") {
    for (const auto& b : bundled_instances()) {
        INFO(b.name);
        bool flag = is_flag(b.handlebody);
        CHECK(is_aspherical(b.handlebody) == flag);
        CHECK(universal_cover_support(b.handlebody).empty() == flag);
    }
}

TEST_CASE("chamber balls") {
    {
        ChamberBall b = chamber_ball(make_polygon(4), 0);
        CHECK(b.chambers == std::vector<std::string>{"e"});
        CHECK(b.count_by_length == std::vector<std::size_t>{1});
    }
    {
        ChamberBall b = chamber_ball(make_polygon(4), 2);
        CHECK(b.count_by_length == std::vector<std::size_t>{1, 4, 8});
        CHECK(b.interior_count == 1);  // only the base chamber has a full star
        CHECK(b.interior_links_match_nerve);
    }
    {
        // (Z_2)^3: the radius-3 ball closes up with 8 chambers
        ChamberBall b = chamber_ball(make_polygon(3), 3);
        CHECK(b.chambers.size() == 8);
        CHECK(b.closed);
        CHECK(b.interior_count == 8);
        CHECK(b.interior_links_match_nerve);
    }
    {
        // genus-1: belt crossings appear at radius 1
        ChamberBall b = chamber_ball(make_genus1_nocross(), 1);
        CHECK(b.count_by_length[1] == 17);  // 15 reflections + t and t^{-1}
    }
}

TEST_CASE("classification goldens") {
    {
        CurvatureReport r = classify(make_dodecahedron());
        CHECK(r.flag);
        CHECK(r.square_belts == std::size_t(0));
        CHECK(r.hyperbolic == Hyperbolic::Yes);
        CHECK(r.npc_double);
        CHECK(r.negative_curvature == NegativeCurvature::Yes);
        CHECK(r.psc == Verdict::No);
        CHECK(r.aspherical);
    }
    {
        CurvatureReport r = classify(make_cube());
        CHECK(r.npc_double);
        CHECK(r.hyperbolic == Hyperbolic::No);
        CHECK(r.square_belts == std::size_t(3));
        CHECK(r.has_z2 == Verdict::Yes);
        CHECK(r.negative_curvature == NegativeCurvature::No);
    }
    {
        CurvatureReport r = classify(make_simplex3());
        CHECK_FALSE(r.aspherical);
        CHECK(r.psc == Verdict::Yes);
        CHECK(r.two_neighborly);
        CHECK(r.double_simply_connected);
        CHECK(r.double_pi1_infinite == Verdict::No);
        CHECK(r.has_z2 == Verdict::NotDetermined);  // not applicable on non-flag input
    }
    {
        CurvatureReport r = classify(make_prism(3));
        CHECK_FALSE(r.flag);
        CHECK(r.psc == Verdict::Yes);
    }
    {
        CurvatureReport r = classify(make_genus1_nocross());
        CHECK(r.flag);
        CHECK(r.negative_curvature == NegativeCurvature::NecessaryConditionsMet);
        CHECK(r.hyperbolic == Hyperbolic::Yes);
        CHECK(r.double_pi1_infinite == Verdict::Yes);
        CHECK(r.psc == Verdict::NotDetermined);
    }
    {
        CurvatureReport r = classify(make_polygon(5));
        CHECK(r.flag);
        CHECK(r.square_belts == std::size_t(0));
        CHECK(r.negative_curvature == NegativeCurvature::Yes);
        CHECK(r.hyperbolic == Hyperbolic::Unknown);  // the paper speaks for dim >= 3
    }
}

TEST_CASE("classification consistency rules") {
    std::vector<SimpleHandlebody> instances;
    for (const auto& b : bundled_instances()) instances.push_back(b.handlebody);
    for (int seed = 100; seed < 110; ++seed) instances.push_back(random_polytope3(seed, 8));
    for (const auto& h : instances) {
        CurvatureReport r = classify(h);
        CHECK(r.aspherical == r.flag);
        CHECK(r.npc_double == r.flag);
        if (r.flag) {
            REQUIRE(r.square_belts.has_value());
            CHECK((r.has_z2 == Verdict::Yes) == (*r.square_belts > 0));
        }
        if (r.hyperbolic == Hyperbolic::Yes)
            CHECK(r.negative_curvature != NegativeCurvature::No);
        if (r.negative_curvature != NegativeCurvature::No) {
            CHECK(r.npc_double);
            CHECK(r.aspherical);
        }
        CHECK(r.orientable_double);
    }
}

TEST_CASE("subset contributions add up") {
    for (const char* name : {"square", "pentagon", "simplex3", "cube", "prism3", "prism5"}) {
        SimpleHandlebody h = bundled(name);
        DoubleHomology d = double_homology(h, Coefficients::Z2);
        long long chi = 0;
        for (std::size_t k = 0; k < d.total.groups.size(); ++k)
            chi += (k % 2 == 0 ? 1 : -1) * (long long)d.total.groups[k].free_rank;
        long long from_contribs = 1;  // the H_0 ring copy
        for (const auto& c : d.contributions)
            for (std::size_t k = 0; k < c.per_degree.size(); ++k)
                from_contribs += (k % 2 == 0 ? 1 : -1) * (long long)c.per_degree[k].free_rank;
        CHECK(chi == from_contribs);
        if (h.polytope.dim % 2 == 1) CHECK(chi == 0);
    }
}
