#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "handlebody/covers.hpp"
#include "handlebody/errors.hpp"
#include "handlebody/instances.hpp"
#include "handlebody/oracle.hpp"

using namespace hb;

namespace {

bool same_homology(const HomologyResult& a, const HomologyResult& b, int dim) {
    for (int k = 0; k <= dim; ++k)
        if (!(a.at(k) == b.at(k))) return false;
    return true;
}

} // namespace

TEST_CASE("double of the interval is a circle") {
    DoubleComplex c = build_double(make_interval());
    CHECK(c.chamber_count == 4);
    CHECK(c.euler() == 0);
    HomologyResult h = oracle_homology(c, Coefficients::Z);
    CHECK(h.groups[0] == DegreeHomology{1, {}});
    CHECK(h.groups[1] == DegreeHomology{1, {}});
}

TEST_CASE("double of the square is the 2-torus") {
    DoubleComplex c = build_double(make_polygon(4));
    CHECK(c.chamber_count == 16);
    HomologyResult h = oracle_homology(c, Coefficients::Z);
    CHECK(h.groups[0] == DegreeHomology{1, {}});
    CHECK(h.groups[1] == DegreeHomology{2, {}});
    CHECK(h.groups[2] == DegreeHomology{1, {}});
    CHECK(c.euler() == 0);
}

TEST_CASE("double of the 3-simplex is the 3-sphere") {
    DoubleComplex c = build_double(make_simplex3());
    CHECK(c.chamber_count == 16);
    HomologyResult h = oracle_homology(c, Coefficients::Z);
    CHECK(h.groups[0] == DegreeHomology{1, {}});
    CHECK(h.groups[1] == DegreeHomology{0, {}});
    CHECK(h.groups[2] == DegreeHomology{0, {}});
    CHECK(h.groups[3] == DegreeHomology{1, {}});
}

TEST_CASE("oracle equals the subset formula") {
    // over Z including torsion on genus-0 instances
    for (const char* name : {"interval", "square", "pentagon", "simplex3", "cube", "prism3"}) {
        SimpleHandlebody h = bundled(name);
        DoubleComplex c = build_double(h);
        HomologyResult ho = oracle_homology(c, Coefficients::Z);
        DoubleHomology df = double_homology(h, Coefficients::Z);
        INFO(name);
        CHECK(same_homology(ho, df.total, c.dim));
        HomologyResult h2 = oracle_homology(c, Coefficients::Z2);
        DoubleHomology df2 = double_homology(h, Coefficients::Z2);
        CHECK(same_homology(h2, df2.total, c.dim));
    }
    // over Z2 on the m<=10 genus-1 instance
    {
        SimpleHandlebody h = bundled("genus1_nocross");
        DoubleComplex c = build_double(h);
        CHECK(c.chamber_count == 1024);
        HomologyResult h2 = oracle_homology(c, Coefficients::Z2);
        DoubleHomology df2 = double_homology(h, Coefficients::Z2);
        CHECK(same_homology(h2, df2.total, c.dim));
    }
}

TEST_CASE("random polytopes: oracle equals formula over Z") {
    for (int seed = 40; seed < 46; ++seed) {
        SimpleHandlebody h = random_polytope3(seed, 6 + seed % 3);
        DoubleComplex c = build_double(h);
        HomologyResult ho = oracle_homology(c, Coefficients::Z);
        DoubleHomology df = double_homology(h, Coefficients::Z);
        INFO("seed " << seed);
        CHECK(same_homology(ho, df.total, c.dim));
    }
}

TEST_CASE("top homology by orientation propagation") {
    for (const char* name :
         {"interval", "square", "pentagon", "simplex3", "cube", "prism3", "prism5",
          "genus1_nocross"}) {
        SimpleHandlebody h = bundled(name);
        DoubleComplex c = build_double(h);
        TopHomology t = top_homology(c);
        INFO(name);
        CHECK(t.closed);
        CHECK(t.connected);
        CHECK(t.orientable);
        CHECK(t.h_top == DegreeHomology{1, {}});
        // cross-check against the full rank computation
        HomologyResult ho = oracle_homology(c, Coefficients::Z2);
        CHECK(ho.groups[c.dim].free_rank == 1);
    }
}

TEST_CASE("euler characteristic of the double") {
    // chi(M) = 2^m * chi-correction; for odd-dimensional doubles chi = 0,
    // for the surfaces it matches 2 - 2 genus(double)
    CHECK(build_double(make_polygon(4)).euler() == 0);    // torus
    CHECK(build_double(make_polygon(5)).euler() == -8);   // genus-5 surface
    CHECK(build_double(make_simplex3()).euler() == 0);
    CHECK(build_double(make_cube()).euler() == 0);
}

TEST_CASE("oracle caps") {
    CHECK_THROWS_AS(build_double(bundled("dodecahedron"), 10), resource_error);
    CHECK_NOTHROW(build_double(bundled("prism5"), 10));
}

TEST_CASE("gromov link check") {
    for (const auto& b : bundled_instances()) {
        GromovReport g = gromov_link_check(b.handlebody);
        INFO(b.name);
        CHECK(g.closure_ok);
        CHECK(g.npc == is_flag(b.handlebody));
        REQUIRE(g.pieces.size() == std::size_t(1 + 2 * b.handlebody.genus()));
        for (const auto& p : g.pieces) CHECK(p.link_matches_nerve);
        // genus 0: the only link type is N(P_Q)
        if (b.handlebody.genus() == 0) CHECK(g.pieces.size() == 1);
    }
    // collar links of the genus-1 instances are suspensions of circles: flag
    {
        GromovReport g = gromov_link_check(bundled("genus1_nocross"));
        REQUIRE(g.pieces.size() == 3);
        CHECK(g.pieces[1].link_flag);
        CHECK(g.pieces[2].link_flag);
    }
}

TEST_CASE("group ball enumeration") {
    {
        GroupBall g = enumerate_group_ball(make_polygon(3), 10);
        CHECK(g.stabilized);
        CHECK(g.total == 8);
    }
    {
        GroupBall g = enumerate_group_ball(make_simplex3(), 10);
        CHECK(g.stabilized);
        CHECK(g.total == 16);
    }
    {
        GroupBall g = enumerate_group_ball(make_polygon(4), 1);
        CHECK(g.total == 5);  // identity plus four generators
    }
    {
        // counts are monotone under the radius
        GroupBall g2 = enumerate_group_ball(make_polygon(4), 4);
        for (std::size_t r = 1; r < g2.count_by_length.size(); ++r)
            CHECK(g2.count_by_length[r] >= 0);
        CHECK_FALSE(g2.stabilized);
    }
    // finite group: ball total equals the chamber count of the closed
    // chamber complex (= 2^m for these right-angled examples)
    {
        GroupBall g = enumerate_group_ball(make_polygon(3), 10);
        DoubleComplex c = build_double(make_polygon(3));
        CHECK(g.total == c.chamber_count);
    }
}
