#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "handlebody/errors.hpp"
#include "handlebody/handlebody.hpp"
#include "handlebody/instances.hpp"

#include <algorithm>
#include <set>

using namespace hb;

namespace {

bool has_issue(const ValidationReport& r, const std::string& code) {
    for (const auto& i : r.issues)
        if (i.code == code) return true;
    return false;
}

std::size_t crossing_count(const std::vector<BeltWitness>& ws) {
    std::size_t n = 0;
    for (const auto& w : ws)
        if (!w.crossing_belts.empty()) ++n;
    return n;
}

// Truncate two opposite vertices of the dodecahedron (stellar subdivision of
// two antipodal icosahedron faces) and use the new triangle facets as belt
// copies with the given pentagon matching.
SimpleHandlebody truncated_dodecahedron_instance() {
    SimpleHandlebody d = make_dodecahedron();
    const auto& nerve = d.polytope.nerve;
    std::vector<std::vector<std::string>> tris;
    // faces {1,2,3} (top) and {12,9,10} (its antipode) get subdivided
    std::vector<std::string> top = {"1", "2", "3"};
    std::vector<std::string> bot = {"9", "10", "12"};
    for (const auto& m : nerve.maximal_simplices()) {
        std::vector<std::string> f;
        for (int v : m) f.push_back(nerve.label(v));
        std::sort(f.begin(), f.end());
        auto key = f;
        std::vector<std::string> ts = top, bs = bot;
        std::sort(ts.begin(), ts.end());
        std::sort(bs.begin(), bs.end());
        if (key == ts) {
            tris.push_back({"Tp", "1", "2"});
            tris.push_back({"Tp", "2", "3"});
            tris.push_back({"Tp", "1", "3"});
        } else if (key == bs) {
            tris.push_back({"Tm", "9", "10"});
            tris.push_back({"Tm", "10", "12"});
            tris.push_back({"Tm", "9", "12"});
        } else {
            tris.push_back(f);
        }
    }
    std::vector<std::string> labels = nerve.vertex_labels();
    labels.push_back("Tp");
    labels.push_back("Tm");
    SimpleHandlebody h;
    h.polytope.dim = 3;
    h.polytope.nerve = SimplicialComplex(labels, tris);
    CuttingBelt b;
    b.label = "T";
    b.plus = "Tp";
    b.minus = "Tm";
    b.matching = {{"1", "9"}, {"2", "10"}, {"3", "12"}};
    h.belts.push_back(std::move(b));
    return h;
}

} // namespace

TEST_CASE("all bundled instances validate") {
    for (const auto& b : bundled_instances()) {
        ValidationReport r = validate(b.handlebody);
        INFO(b.name);
        CHECK(r.valid());
    }
}

TEST_CASE("validator rejects broken instances") {
    // adjacent belt copies
    {
        SimpleHandlebody h = make_prism(5);
        CuttingBelt b;
        b.label = "X";
        b.plus = "T1";
        b.minus = "S1";  // T1 and S1 are adjacent
        h.belts.push_back(b);
        ValidationReport r = validate(h);
        CHECK_FALSE(r.valid());
        CHECK(has_issue(r, "belt-facets-adjacent"));
    }
    // matching with a fixed facet / bad domain
    {
        SimpleHandlebody h = make_genus1_nocross();
        h.belts[0].matching["A0"] = "A0";
        ValidationReport r = validate(h);
        CHECK_FALSE(r.valid());
    }
    // impure nerve
    {
        SimpleHandlebody h;
        h.polytope.dim = 3;
        h.polytope.nerve = SimplicialComplex({"1", "2", "3", "4"},
                                             {{"1", "2", "3"}, {"1", "4"}, {"2", "4"}, {"3", "4"}});
        ValidationReport r = validate(h);
        CHECK(has_issue(r, "nerve-not-pure"));
    }
    // open surface (one triangle missing from the tetrahedron boundary)
    {
        SimpleHandlebody h;
        h.polytope.dim = 3;
        h.polytope.nerve = SimplicialComplex(
            {"1", "2", "3", "4"}, {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}});
        ValidationReport r = validate(h);
        CHECK(has_issue(r, "nerve-not-pseudomanifold"));
    }
    // gluing cycle: prism with its two triangle caps matched (every side facet
    // would become an annulus)
    {
        SimpleHandlebody h = make_prism(3);
        CuttingBelt b;
        b.label = "X";
        b.plus = "T1";
        b.minus = "T2";
        b.matching = {{"S1", "S2"}, {"S2", "S3"}, {"S3", "S1"}};
        h.belts.push_back(b);
        ValidationReport r = validate(h);
        CHECK_FALSE(r.valid());
        CHECK(has_issue(r, "non-disk-facet"));
    }
    // orientation-reversing gluing of the 5/5/5 tube -> Klein bottle quotient
    {
        SimpleHandlebody h = make_genus1_nocross();
        h.belts[0].matching.clear();
        for (int i = 0; i < 5; ++i) {
            std::string a = "A" + std::to_string(i);
            std::string e = "E" + std::to_string(((5 - i) % 5));
            h.belts[0].matching[a] = e;
        }
        ValidationReport r = validate(h);
        CHECK_FALSE(r.valid());
        bool reflection_rejected = has_issue(r, "quotient-not-orientable") ||
                                   has_issue(r, "quotient-duplicate-face") ||
                                   has_issue(r, "quotient-not-surface");
        CHECK(reflection_rejected);
    }
}

TEST_CASE("truncated dodecahedron with opposite-pentagon matching") {
    // Validity is decided by the n=3 surface stage; structural belt checks
    // pass.  The triangle belts force the cut pentagons to collide in the
    // quotient, which the validator must detect and reject.
    SimpleHandlebody h = truncated_dodecahedron_instance();
    ValidationReport r = validate(h);
    CHECK_FALSE(has_issue(r, "belt-unknown-facet"));
    CHECK_FALSE(has_issue(r, "belt-matching-not-isomorphism"));
    CHECK_FALSE(has_issue(r, "nerve-not-pure"));
    // frozen outcome of the surface stage for this instance
    CHECK_FALSE(r.valid());
    bool surface_stage = has_issue(r, "quotient-duplicate-face") ||
                         has_issue(r, "quotient-degenerate-simplex") ||
                         has_issue(r, "quotient-not-surface") ||
                         has_issue(r, "quotient-euler-characteristic") ||
                         has_issue(r, "quotient-not-orientable");
    CHECK(surface_stage);
}

TEST_CASE("quotient nerve") {
    // no belts: unchanged
    {
        SimpleHandlebody h = make_cube();
        Quotient q = quotient_nerve(h);
        CHECK(q.nerve.same_complex(h.polytope.nerve));
        CHECK(q.classes.size() == 6);
    }
    // genus-1: class count and Euler characteristic
    {
        SimpleHandlebody h = make_genus1_nocross();
        Quotient q = quotient_nerve(h);
        CHECK(q.classes.size() == 10);
        CHECK(q.nerve.euler_characteristic() == 0);
        bool orientable = false;
        CHECK(q.nerve.is_closed_surface(orientable));
        CHECK(orientable);
        // 3 #triangles = 2 #edges on a closed surface
        CHECK(3 * q.nerve.face_count(2) == 2 * q.nerve.face_count(1));
        REQUIRE(q.meridian_class_cycles.size() == 1);
        CHECK(q.meridian_class_cycles[0].size() == 5);
    }
    {
        SimpleHandlebody h = make_genus1_square();
        Quotient q = quotient_nerve(h);
        CHECK(q.classes.size() == 12);
        CHECK(q.nerve.euler_characteristic() == 0);
    }
}

TEST_CASE("delta belts") {
    {
        auto ws = delta_belts(make_simplex3());
        REQUIRE(ws.size() == 1);
        CHECK(ws[0].facet_classes == std::vector<std::string>{"1", "2", "3", "4"});
    }
    {
        auto ws = delta_belts(make_prism(3));
        REQUIRE(ws.size() == 1);
        CHECK(ws[0].facet_classes == std::vector<std::string>{"S1", "S2", "S3"});
    }
    CHECK(delta_belts(make_dodecahedron()).empty());
    CHECK(delta_belts(make_cube()).empty());
    CHECK(delta_belts(make_interval()).empty());
}

TEST_CASE("flagness of handlebodies") {
    CHECK(is_flag(make_cube()));
    CHECK_FALSE(is_flag(make_prism(3)));
    CHECK_FALSE(is_flag(make_simplex3()));
    CHECK(is_flag(make_genus1_square()));
    CHECK(is_flag(make_genus1_nocross()));
    // equivalence with delta belts
    for (const auto& b : bundled_instances())
        CHECK(is_flag(b.handlebody) == delta_belts(b.handlebody).empty());
}

TEST_CASE("square belts") {
    {
        auto ws = square_belts(make_cube());
        CHECK(ws.size() == 3);
        std::set<std::set<std::string>> got;
        for (const auto& w : ws)
            got.insert(std::set<std::string>(w.facet_classes.begin(), w.facet_classes.end()));
        std::set<std::set<std::string>> want = {{"1", "2", "4", "5"},
                                                {"1", "3", "4", "6"},
                                                {"2", "3", "5", "6"}};
        CHECK(got == want);
        // Lemma level: four distinct classes per witness
        for (const auto& w : ws) {
            std::set<std::string> cl(w.facet_classes.begin(), w.facet_classes.end());
            CHECK(cl.size() == 4);
        }
    }
    CHECK(square_belts(make_dodecahedron()).empty());
    CHECK(square_belts(make_polygon(5)).empty());
    {
        auto ws = square_belts(make_polygon(4));
        CHECK(ws.size() == 1);
    }
    {
        auto ws = square_belts(make_prism(5));
        CHECK(ws.size() == 5);
        CHECK(crossing_count(ws) == 0);
    }
    {
        auto ws = square_belts(make_genus1_square());
        CHECK(crossing_count(ws) == 4);
        for (const auto& w : ws)
            if (!w.crossing_belts.empty()) {
                CHECK(w.crossing_belts.size() == 1);
                CHECK(w.f1_chain.size() == 2);
                std::set<std::string> cl(w.facet_classes.begin(), w.facet_classes.end());
                CHECK(cl.size() == 4);
            }
    }
    CHECK(square_belts(make_genus1_nocross()).empty());
    CHECK_THROWS_AS(square_belts(make_prism(3)), input_error);  // non-flag precondition
}

TEST_CASE("two neighborly") {
    CHECK(two_neighborly(make_simplex3().polytope));
    CHECK_FALSE(two_neighborly(make_cube().polytope));
    CHECK_FALSE(two_neighborly(make_polygon(5).polytope));
    CHECK(two_neighborly(make_polygon(3).polytope));
}

TEST_CASE("collar nerve is the suspension of the belt link") {
    SimpleHandlebody h = make_genus1_nocross();
    SimplicialComplex c = collar_nerve(h, 0);
    CHECK(c.vertex_count() == 7);  // 5-ring + two suspension points
    CHECK(c.is_flag());
    auto hz = c.homology(Coefficients::Z);
    // suspension of a circle = 2-sphere
    CHECK(hz.groups[2] == DegreeHomology{1, {}});
    CHECK(hz.groups[1] == DegreeHomology{0, {}});
}

TEST_CASE("random polytopes are valid and genus 0") {
    for (int seed = 1; seed <= 25; ++seed) {
        SimpleHandlebody h = random_polytope3(seed, 4 + seed % 6);
        ValidationReport r = validate(h);
        INFO("seed " << seed);
        CHECK(r.valid());
        CHECK(h.genus() == 0);
        CHECK(h.polytope.nerve.euler_characteristic() == 2);
    }
}
