#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "handlebody/errors.hpp"
#include "handlebody/h1_map.hpp"
#include "handlebody/simplicial_complex.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace hb;

namespace {

SimplicialComplex cycle(int n) {
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> edges;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    for (int i = 1; i <= n; ++i)
        edges.push_back({std::to_string(i), std::to_string(i % n + 1)});
    return SimplicialComplex(labels, edges);
}

SimplicialComplex boundary_simplex3() {
    std::vector<std::vector<std::string>> tris;
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b)
            for (int c = b + 1; c <= 4; ++c)
                tris.push_back({std::to_string(a), std::to_string(b), std::to_string(c)});
    return SimplicialComplex({"1", "2", "3", "4"}, tris);
}

SimplicialComplex octahedron() {
    // opposite pairs (1,4), (2,5), (3,6)
    std::vector<std::vector<std::string>> tris;
    auto opposite = [](int a, int b) { return a % 3 == b % 3; };
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b)
            for (int c = b + 1; c <= 6; ++c)
                if (!opposite(a, b) && !opposite(a, c) && !opposite(b, c))
                    tris.push_back({std::to_string(a), std::to_string(b), std::to_string(c)});
    std::vector<std::string> labels;
    for (int i = 1; i <= 6; ++i) labels.push_back(std::to_string(i));
    return SimplicialComplex(labels, tris);
}

// minimal projective plane (hemi-icosahedron)
SimplicialComplex rp2() {
    std::vector<std::vector<std::string>> tris;
    for (auto t : {std::vector<int>{1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 6}, {1, 4, 5},
                   {2, 3, 4}, {2, 3, 5}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}}) {
        tris.push_back({std::to_string(t[0]), std::to_string(t[1]), std::to_string(t[2])});
    }
    std::vector<std::string> labels;
    for (int i = 1; i <= 6; ++i) labels.push_back(std::to_string(i));
    return SimplicialComplex(labels, tris);
}

// 3x3 grid torus (directions e1, e2, e1+e2)
SimplicialComplex torus9() {
    auto v = [](int i, int j) {
        return "v" + std::to_string(((i % 3) + 3) % 3) + std::to_string(((j % 3) + 3) % 3);
    };
    std::vector<std::string> labels;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) labels.push_back(v(i, j));
    std::vector<std::vector<std::string>> tris;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            tris.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
            tris.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
        }
    return SimplicialComplex(labels, tris);
}

// brute-force flagness oracle: every clique of the 1-skeleton spans
bool flag_by_brute_force(const SimplicialComplex& k) {
    int n = int(k.vertex_count());
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) vs.push_back(v);
        bool clique = true;
        for (std::size_t i = 0; i < vs.size() && clique; ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (!k.has_edge(vs[i], vs[j])) {
                    clique = false;
                    break;
                }
        if (clique && !k.spans(vs)) return false;
    }
    return true;
}

std::vector<DegreeHomology> groups(const SimplicialComplex& k, Coefficients c) {
    return k.homology(c).groups;
}

} // namespace

TEST_CASE("full subcomplex") {
    SimplicialComplex c4 = cycle(4);
    SimplicialComplex sub = c4.full_subcomplex({"1", "3"});
    CHECK(sub.vertex_count() == 2);
    CHECK(sub.dim() == 0);
    CHECK(sub.maximal_simplices().size() == 2);  // two isolated vertices

    SimplicialComplex empty = c4.full_subcomplex({});
    CHECK(empty.empty());

    SimplicialComplex d3 = boundary_simplex3();
    SimplicialComplex tri = d3.full_subcomplex({"1", "2", "3"});
    CHECK(tri.dim() == 2);
    CHECK(tri.maximal_simplices() == std::vector<std::vector<int>>{{0, 1, 2}});

    CHECK_THROWS_AS(c4.full_subcomplex({"9"}), input_error);

    // identity on the full vertex set
    CHECK(c4.full_subcomplex(c4.vertex_labels()).same_complex(c4));
}

TEST_CASE("link") {
    SimplicialComplex c4 = cycle(4);
    SimplicialComplex lk = c4.link("1");
    CHECK(lk.vertex_count() == 2);
    CHECK(lk.dim() == 0);

    SimplicialComplex oct = octahedron();
    for (std::size_t v = 0; v < oct.vertex_count(); ++v) {
        SimplicialComplex l = oct.link(int(v));
        CHECK(l.vertex_count() == 4);
        CHECK(l.dim() == 1);
        CHECK(l.faces_of_dim(1).size() == 4);
        for (std::size_t u = 0; u < 4; ++u) CHECK(l.adjacency()[u].size() == 2);
    }

    SimplicialComplex d3 = boundary_simplex3();
    SimplicialComplex l1 = d3.link("1");
    CHECK(l1.vertex_count() == 3);
    CHECK(l1.dim() == 1);
    CHECK(l1.faces_of_dim(1).size() == 3);  // boundary of a triangle

    CHECK_THROWS_AS(c4.link("zz"), input_error);
}

TEST_CASE("flagness and empty simplices") {
    CHECK_FALSE(cycle(3).is_flag());
    CHECK(cycle(4).is_flag());
    CHECK(octahedron().is_flag());
    CHECK(flag_by_brute_force(octahedron()));

    SimplicialComplex d3 = boundary_simplex3();
    auto empties = d3.empty_simplices();
    REQUIRE(empties.size() == 1);
    CHECK(empties[0] == std::vector<int>{0, 1, 2, 3});

    CHECK(cycle(4).empty_simplices().empty());
    auto e3 = cycle(3).empty_simplices();
    REQUIRE(e3.size() == 1);
    CHECK(e3[0].size() == 3);
}

TEST_CASE("flagness equivalence on random complexes") {
    std::mt19937 rng(20240811);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 4 + int(rng() % 7);  // up to 10 vertices
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
        std::vector<std::vector<std::string>> gens;
        int m = 2 + int(rng() % 8);
        for (int s = 0; s < m; ++s) {
            std::set<int> simplex;
            int sz = 1 + int(rng() % 4);
            for (int t = 0; t < sz; ++t) simplex.insert(int(rng() % n));
            std::vector<std::string> sl;
            for (int v : simplex) sl.push_back(labels[v]);
            gens.push_back(sl);
        }
        for (int i = 0; i < n; ++i) gens.push_back({labels[i]});  // cover all vertices
        SimplicialComplex k(labels, gens);
        bool flag = k.is_flag();
        CHECK(flag == k.empty_simplices().empty());
        CHECK(flag == flag_by_brute_force(k));
    }
}

TEST_CASE("homology of model spaces") {
    auto circ = groups(cycle(5), Coefficients::Z);
    CHECK(circ[0] == DegreeHomology{1, {}});
    CHECK(circ[1] == DegreeHomology{1, {}});

    auto sphere = groups(boundary_simplex3(), Coefficients::Z);
    CHECK(sphere[0] == DegreeHomology{1, {}});
    CHECK(sphere[1] == DegreeHomology{0, {}});
    CHECK(sphere[2] == DegreeHomology{1, {}});

    auto proj = groups(rp2(), Coefficients::Z);
    CHECK(proj[0] == DegreeHomology{1, {}});
    CHECK(proj[1].free_rank == 0);
    REQUIRE(proj[1].torsion.size() == 1);
    CHECK(proj[1].torsion[0] == 2);
    CHECK(proj[2] == DegreeHomology{0, {}});

    auto proj2 = groups(rp2(), Coefficients::Z2);
    CHECK(proj2[0].free_rank == 1);
    CHECK(proj2[1].free_rank == 1);
    CHECK(proj2[2].free_rank == 1);

    auto torus = groups(torus9(), Coefficients::Z);
    CHECK(torus[0] == DegreeHomology{1, {}});
    CHECK(torus[1] == DegreeHomology{2, {}});
    CHECK(torus[2] == DegreeHomology{1, {}});

    // reduced variant
    auto red = boundary_simplex3().homology(Coefficients::Z, true);
    CHECK(red.groups[0] == DegreeHomology{0, {}});
    CHECK(red.groups[2] == DegreeHomology{1, {}});
}

TEST_CASE("euler characteristic vs Z2 homology") {
    for (const SimplicialComplex& k :
         {cycle(4), cycle(5), boundary_simplex3(), octahedron(), rp2(), torus9()}) {
        long long chi = k.euler_characteristic();
        auto h2 = groups(k, Coefficients::Z2);
        long long alt = 0;
        for (std::size_t d = 0; d < h2.size(); ++d)
            alt += (d % 2 == 0 ? 1 : -1) * (long long)h2[d].free_rank;
        CHECK(chi == alt);
    }
}

TEST_CASE("universal coefficients consistency") {
    for (const SimplicialComplex& k :
         {cycle(4), boundary_simplex3(), octahedron(), rp2(), torus9()}) {
        auto hz = groups(k, Coefficients::Z);
        auto h2 = groups(k, Coefficients::Z2);
        auto evens = [&](std::size_t d) {
            if (d >= hz.size()) return std::size_t(0);
            std::size_t e = 0;
            for (const Integer& t : hz[d].torsion)
                if (t % 2 == 0) ++e;
            return e;
        };
        for (std::size_t d = 0; d < h2.size(); ++d) {
            std::size_t expect = hz[d].free_rank + evens(d) + (d > 0 ? evens(d - 1) : 0);
            CHECK(h2[d].free_rank == expect);
        }
    }
}

TEST_CASE("chordality and completeness") {
    CHECK(boundary_simplex3().one_skeleton_complete());
    CHECK_FALSE(octahedron().one_skeleton_complete());
    CHECK(boundary_simplex3().graph_is_chordal());
    CHECK_FALSE(octahedron().graph_is_chordal());  // induced 4-cycles
    CHECK_FALSE(cycle(5).graph_is_chordal());
    CHECK(cycle(3).graph_is_chordal());
}

TEST_CASE("closed surface recognition") {
    bool orientable = false;
    CHECK(boundary_simplex3().is_closed_surface(orientable));
    CHECK(orientable);
    CHECK(torus9().is_closed_surface(orientable));
    CHECK(orientable);
    CHECK(rp2().is_closed_surface(orientable));
    CHECK_FALSE(orientable);
    CHECK_FALSE(cycle(4).is_closed_surface(orientable));
}

TEST_CASE("induced H1 map") {
    SimplicialComplex t9 = torus9();
    // contractible subcomplex -> zero map
    {
        auto m = induced_h1_map(t9, {0, 1}, {});
        CHECK(m.rank == 0);
        CHECK(m.source_h1.free_rank == 0);
        CHECK(m.target_h1.free_rank == 2);
    }
    // no relations, all vertices -> identity on H_1
    {
        std::vector<int> all;
        for (std::size_t v = 0; v < t9.vertex_count(); ++v) all.push_back(int(v));
        auto m = induced_h1_map(t9, all, {});
        CHECK(m.rank == 2);
        CHECK(m.kernel_rank == 0);
        CHECK(m.cokernel.trivial());
    }
    // kill one meridian: rank-1 map onto Z
    {
        std::vector<int> all;
        for (std::size_t v = 0; v < t9.vertex_count(); ++v) all.push_back(int(v));
        OneChain meridian;
        int a = t9.vertex_id("v00"), b = t9.vertex_id("v01"), c = t9.vertex_id("v02");
        meridian.terms = {{a, b, 1}, {b, c, 1}, {c, a, 1}};
        auto m = induced_h1_map(t9, all, {meridian});
        CHECK(m.target_h1.free_rank == 1);
        CHECK(m.target_h1.torsion.empty());
        CHECK(m.rank == 1);
        CHECK(m.kernel_rank == 1);
        CHECK(m.cokernel.trivial());
    }
    // a non-cycle relation is rejected
    {
        OneChain bad;
        bad.terms = {{0, 1, 1}};
        CHECK_THROWS_AS(induced_h1_map(t9, {0, 1}, {bad}), input_error);
    }
}

TEST_CASE("link and full_subcomplex are stable under recomputation") {
    SimplicialComplex oct = octahedron();
    SimplicialComplex lk = oct.link("1");
    SimplicialComplex lk2 = SimplicialComplex::from_ids(
        lk.vertex_labels(), std::vector<std::vector<int>>(lk.maximal_simplices()));
    CHECK(lk.same_complex(lk2));
    SimplicialComplex sub = oct.full_subcomplex({"1", "2", "3"});
    SimplicialComplex sub2 = sub.full_subcomplex(sub.vertex_labels());
    CHECK(sub.same_complex(sub2));
}
