#pragma once

#include "handlebody/covers.hpp"
#include "handlebody/handlebody.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hb {

// Manifold-double coloring: one basis vector of (Z_2)^m per facet class;
// belt copies carry the identity.
struct Coloring {
    std::vector<std::string> class_labels;  // bit i <-> class_labels[i]
};

// The barycentric (cone-on-order-complex) model of the double: 2^m chambers,
// one cone over the order complex of proper faces per chamber, facet stars
// glued across g -> g*e_F and belt facets glued across (B+,g) ~ (B-,g).
// When a belt glues a chamber to itself the result is a Delta-complex (two
// cones can share a boundary simplex); the boundary maps below are the honest
// cellular ones either way.
struct DoubleComplex {
    int dim = 0;
    std::size_t chamber_count = 0;
    Coloring coloring;
    std::vector<std::vector<std::uint64_t>> cells;   // per dim, sorted keys
    std::vector<std::vector<SparseEntry>> boundary;  // boundary[k] : C_k -> C_{k-1}, k >= 1

    std::size_t cell_count(int k) const { return cells[k].size(); }
    long long euler() const;
};

// cap_m bounds the number of facet classes (resource error beyond).
DoubleComplex build_double(const SimpleHandlebody& h, int cap_m = 12);

HomologyResult oracle_homology(const DoubleComplex& c, Coefficients coeff);

// Top homology by orientation propagation: exact for the closed connected
// pseudomanifolds this oracle builds, and cheap enough for every cap size.
struct TopHomology {
    bool closed = false;       // every (n-1)-cell lies in exactly two top cells
    bool connected = false;    // top-cell adjacency graph connected
    bool orientable = false;   // coherent orientation exists
    DegreeHomology h_top;      // Z if closed+connected+orientable, else 0
};

TopHomology top_homology(const DoubleComplex& c);

// ---- Gromov link check on the refined cubical decomposition ----

struct GromovReport {
    struct PieceReport {
        std::string piece;          // "P_Q", "N+(B)", "N-(B)"
        bool link_matches_nerve = false;
        bool link_flag = false;
        std::size_t faces_checked = 0;
        std::size_t vertices_checked = 0;  // chambers of this piece type enumerated
    };
    std::vector<PieceReport> pieces;
    bool npc = false;           // every vertex link flag
    bool closure_ok = false;    // every face lift meets exactly 2^k chambers
};

// Verifies the cube condition around every face of every piece and compares
// each vertex link with the matching nerve.  Enumerates every concrete
// vertex while 2^m stays within cap_m; links at translated vertices are
// isomorphic by construction either way.
GromovReport gromov_link_check(const SimpleHandlebody& h, int cap_m = 12);

// ---- Cayley ball sizes ----

struct GroupBall {
    std::vector<std::size_t> count_by_length;
    bool stabilized = false;
    std::size_t total = 0;
    std::vector<std::string> forms;  // canonical forms, BFS order
};

GroupBall enumerate_group_ball(const SimpleHandlebody& h, int max_length,
                               std::size_t cap = 2'000'000);

} // namespace hb
