#pragma once

#include "handlebody/handlebody.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hb {

// Canonical instances shipped with the library.  The two genus-1 instances
// are generated combinatorially (torus triangulations cut along a meridian)
// and are re-validated by the test suite.
struct BundledInstance {
    std::string name;
    std::string description;
    SimpleHandlebody handlebody;
};

const std::vector<BundledInstance>& bundled_instances();
const SimpleHandlebody& bundled(const std::string& name);  // input error if unknown

// Individual builders (exposed for tests).
SimpleHandlebody make_interval();
SimpleHandlebody make_polygon(int sides);              // square = 4, pentagon = 5
SimpleHandlebody make_simplex3();                      // Delta^3
SimpleHandlebody make_cube();                          // opposite pairs (1,4),(2,5),(3,6)
SimpleHandlebody make_prism(int sides);                // triangular = 3, pentagonal = 5
SimpleHandlebody make_dodecahedron();
SimpleHandlebody make_genus1_square();                 // 3x4 grid torus cut: crossing squares
SimpleHandlebody make_genus1_nocross();                // 5/4/5 hourglass torus: none

// Random valid genus-0 3-polytopes by stellar subdivisions and 2-2 flips of
// the boundary sphere; deterministic in the seed.
SimpleHandlebody random_polytope3(std::uint64_t seed, int facet_count);

} // namespace hb
