#pragma once

#include "handlebody/simplicial_complex.hpp"
#include "handlebody/zmatrix.hpp"

#include <map>
#include <vector>

namespace hb {

// A 1-chain on a complex: edge (u,v) carries coefficient c, meaning
// c * [u,v] with the increasing orientation (u<v after normalization).
struct OneChain {
    struct Term {
        int u, v;
        long long coeff;
    };
    std::vector<Term> terms;
};

// The map H_1(K_J) -> H_1(K)/<relations>, computed simplicially on integer
// cycle bases (spec: induced_h1_map).  GF(2) dimensions are carried along.
struct InducedH1Map {
    std::size_t source_cycles = 0;   // rank of the cycle lattice of K_J
    std::size_t target_cycles = 0;

    AbelianGroup source_h1;          // H_1(K_J)
    AbelianGroup target_h1;          // H_1(K)/<relations>

    ZMatrix matrix;                  // map on cycle bases (target_cycles x source_cycles)

    std::size_t rank = 0;            // rank of the induced map
    std::size_t kernel_rank = 0;     // free rank of its kernel
    std::vector<Integer> kernel_torsion;  // torsion of H_1(K_J); dies in the free target
    AbelianGroup cokernel;

    // GF(2) counterparts (dimensions only)
    std::size_t rank2 = 0;
    std::size_t kernel_dim2 = 0;
    std::size_t cokernel_dim2 = 0;
    std::size_t source_dim2 = 0;
    std::size_t target_dim2 = 0;
};

// Precomputed target-side data for K with a fixed relation set; lets the
// manifold-double formula evaluate all 2^m subsets without redoing the
// target SNF each time.
class H1MapContext {
public:
    H1MapContext(const SimplicialComplex& k, std::vector<OneChain> relations);

    InducedH1Map map_for(const std::vector<int>& j_vertices) const;

    const AbelianGroup& target_h1() const { return target_h1_; }
    std::size_t target_dim2() const { return target_dim2_; }

private:
    const SimplicialComplex& k_;
    std::vector<std::vector<int>> edges_;
    std::map<std::pair<int, int>, std::size_t> edge_index_;
    ZMatrix zk_;        // cycle lattice basis of K (E x target_cycles)
    ZMatrix rk_;        // target relations in zk_ coordinates
    std::size_t rank_rk_ = 0;
    AbelianGroup target_h1_;
    std::vector<std::vector<char>> relk2_;  // target relation vectors mod 2 (edge space)
    std::size_t rank_relk2_ = 0;
    std::size_t target_dim2_ = 0;
    std::vector<std::vector<Integer>> rel_vecs_;
};

// One-shot form (spec operation signature).
InducedH1Map induced_h1_map(const SimplicialComplex& k, const std::vector<int>& j_vertices,
                            const std::vector<OneChain>& relations);

} // namespace hb
