#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "handlebody/errors.hpp"
#include "handlebody/instances.hpp"
#include "handlebody/io.hpp"

using namespace hb;

TEST_CASE("instance round trip") {
    for (const auto& b : bundled_instances()) {
        ordered_json j = serialize_instance(b.handlebody);
        SimpleHandlebody parsed = parse_instance(j);
        ordered_json j2 = serialize_instance(parsed);
        INFO(b.name);
        CHECK(j == j2);
        CHECK(j.dump() == j2.dump());
        SimpleHandlebody parsed2 = parse_instance(j2);
        CHECK(parsed2.polytope.nerve.same_complex(parsed.polytope.nerve));
        CHECK(parsed2.belts.size() == parsed.belts.size());
        for (std::size_t i = 0; i < parsed.belts.size(); ++i) {
            CHECK(parsed2.belts[i].plus == parsed.belts[i].plus);
            CHECK(parsed2.belts[i].minus == parsed.belts[i].minus);
            CHECK(parsed2.belts[i].matching == parsed.belts[i].matching);
        }
    }
}

TEST_CASE("hash is deterministic and input-sensitive") {
    std::string h1 = instance_hash(bundled("cube"));
    std::string h2 = instance_hash(bundled("cube"));
    CHECK(h1 == h2);
    CHECK(h1 != instance_hash(bundled("simplex3")));
}

TEST_CASE("parser diagnostics") {
    ordered_json j;
    j["schema"] = "simple-handlebody/1";
    j["dimension"] = 3;
    j["facets"] = {"1", "2"};
    j["nerve"] = ordered_json::array({ordered_json::array({"1", "9"})});
    CHECK_THROWS_AS(parse_instance(j), input_error);

    ordered_json bad;
    bad["schema"] = "something-else/9";
    CHECK_THROWS_AS(parse_instance(bad), input_error);

    CHECK_THROWS_AS(load_instance("/nonexistent/path.json"), input_error);
}

TEST_CASE("belt labels default to indices") {
    ordered_json j = serialize_instance(bundled("genus1_nocross"));
    j["belts"][0].erase("label");
    SimpleHandlebody h = parse_instance(j);
    CHECK(h.belts[0].label == "1");
}

TEST_CASE("reports are byte-identical across runs") {
    SimpleHandlebody h = bundled("cube");
    auto ws = square_belts(h);
    ordered_json a = ordered_json::array();
    for (const auto& w : ws) a.push_back(to_json(w));
    auto ws2 = square_belts(h);
    ordered_json b = ordered_json::array();
    for (const auto& w : ws2) b.push_back(to_json(w));
    CHECK(a.dump() == b.dump());

    CHECK(to_json(classify(h)).dump() == to_json(classify(h)).dump());
    CHECK(to_json(double_homology(h, Coefficients::Z)).dump() ==
          to_json(double_homology(h, Coefficients::Z)).dump());
}

TEST_CASE("pretty printing of homology groups") {
    DegreeHomology g;
    g.free_rank = 2;
    g.torsion = {Integer(2), Integer(4)};
    CHECK(degree_homology_to_string(g, Coefficients::Z) == "Z^2 + Z/2 + Z/4");
    DegreeHomology zero;
    CHECK(degree_homology_to_string(zero, Coefficients::Z) == "0");
}
