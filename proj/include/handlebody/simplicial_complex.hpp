#pragma once

#include "handlebody/zmatrix.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hb {

// Homology in one degree: free rank plus torsion coefficients, each torsion
// entry dividing the next (Smith normal form convention).
struct DegreeHomology {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const DegreeHomology&) const = default;
};

struct HomologyResult {
    // groups[k] = H_k; size() == dim+1 (possibly all trivial)
    std::vector<DegreeHomology> groups;

    const DegreeHomology& at(std::size_t k) const;
    bool operator==(const HomologyResult&) const = default;
};

enum class Coefficients { Z, Z2 };

// Abstract simplicial complex stored by its maximal simplices.  Vertices are
// identified by string labels; the input label order is the canonical order
// and fixes every output ordering.  Instances are immutable after
// construction and safe to share across threads.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Vertex labels in canonical order plus the maximal simplices (any
    // generating family works: duplicates and dominated simplices are
    // dropped, faces are implied).  Unknown labels inside simplices are an
    // input error; a vertex listed but not covered by any simplex is too.
    SimplicialComplex(std::vector<std::string> vertex_labels,
                      const std::vector<std::vector<std::string>>& simplices);

    static SimplicialComplex from_ids(std::vector<std::string> vertex_labels,
                                      std::vector<std::vector<int>> simplices_by_id);

    std::size_t vertex_count() const { return labels_.size(); }
    const std::vector<std::string>& vertex_labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[v]; }
    int vertex_id(const std::string& label) const;  // input error if unknown

    // Maximal simplices as sorted id lists, lexicographically ordered.
    const std::vector<std::vector<int>>& maximal_simplices() const { return maximal_; }

    bool empty() const { return labels_.empty(); }
    // dim of the complex; -1 when empty.
    int dim() const;
    bool spans(const std::vector<int>& sorted_vertices) const;
    bool has_edge(int u, int v) const;
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }

    // All k-simplices, each sorted, in lexicographic order.
    std::vector<std::vector<int>> faces_of_dim(int k) const;
    // All simplices of every dimension >= 0.
    std::vector<std::vector<int>> all_faces() const;
    std::size_t face_count(int k) const { return faces_of_dim(k).size(); }
    long long euler_characteristic() const;

    SimplicialComplex link(const std::string& vertex) const;
    SimplicialComplex link(int v) const;
    SimplicialComplex full_subcomplex(const std::vector<std::string>& vertices) const;
    SimplicialComplex full_subcomplex_ids(std::vector<int> vertices) const;

    bool is_flag() const;
    // Minimal empty simplices: vertex sets S, |S| >= 3, every proper subset
    // spans but S does not; sorted canonically.
    std::vector<std::vector<int>> empty_simplices() const;

    // Cliques of the 1-skeleton (every size >= 1), canonically ordered.
    std::vector<std::vector<int>> cliques() const;

    bool is_connected() const;
    // True when the 1-skeleton has no chordless cycle of length >= 4.
    bool graph_is_chordal() const;
    bool one_skeleton_complete() const;

    // True iff the complex is a connected closed surface (every edge in two
    // triangles, vertex links single cycles); orientable reports 2-colorable
    // triangle orientation.  For use on 2-dimensional complexes.
    bool is_closed_surface(bool& orientable) const;

    // Vertices of link(v) arranged in cycle order; input error if the link
    // is not a single cycle.
    std::vector<int> link_cycle(int v) const;

    HomologyResult homology(Coefficients coeff, bool reduced = false) const;

    bool same_complex(const SimplicialComplex& other) const;

private:
    void canonicalize();

    std::vector<std::string> labels_;
    std::map<std::string, int> id_;
    std::vector<std::vector<int>> maximal_;
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

} // namespace hb
