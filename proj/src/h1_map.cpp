#include "handlebody/h1_map.hpp"

#include "handlebody/errors.hpp"

#include <algorithm>

namespace hb {

namespace {

ZMatrix d1_matrix(const SimplicialComplex& k, const std::vector<std::vector<int>>& edges) {
    ZMatrix m(k.vertex_count(), edges.size());
    for (std::size_t j = 0; j < edges.size(); ++j) {
        m(edges[j][0], j) -= 1;
        m(edges[j][1], j) += 1;
    }
    return m;
}

ZMatrix d2_matrix(const std::vector<std::vector<int>>& triangles,
                  const std::map<std::pair<int, int>, std::size_t>& edge_index) {
    ZMatrix m(edge_index.size(), triangles.size());
    for (std::size_t j = 0; j < triangles.size(); ++j) {
        const auto& t = triangles[j];
        m(edge_index.at({t[1], t[2]}), j) += 1;
        m(edge_index.at({t[0], t[2]}), j) -= 1;
        m(edge_index.at({t[0], t[1]}), j) += 1;
    }
    return m;
}

// GF(2) rank of a list of edge-space vectors.
std::size_t gf2_span_rank(std::vector<std::vector<char>> vecs) {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    for (auto& v : vecs) {
        for (std::size_t p = 0; p < rank; ++p)
            if (v[pivots[p]])
                for (std::size_t i = 0; i < v.size(); ++i) v[i] ^= vecs[p][i];
        std::size_t lead = v.size();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i]) { lead = i; break; }
        if (lead == v.size()) continue;
        pivots.push_back(lead);
        std::swap(vecs[rank], v);
        ++rank;
    }
    vecs.resize(rank);
    return rank;
}

// Column-reduce vs an existing echelon set, growing it; returns how many of
// the appended vectors were independent.
struct GF2Span {
    std::vector<std::vector<char>> basis;
    std::vector<std::size_t> pivots;

    bool add(std::vector<char> v) {
        for (std::size_t p = 0; p < basis.size(); ++p)
            if (v[pivots[p]])
                for (std::size_t i = 0; i < v.size(); ++i) v[i] ^= basis[p][i];
        std::size_t lead = v.size();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i]) { lead = i; break; }
        if (lead == v.size()) return false;
        pivots.push_back(lead);
        basis.push_back(std::move(v));
        return true;
    }
};

} // namespace

H1MapContext::H1MapContext(const SimplicialComplex& k, std::vector<OneChain> relations)
    : k_(k) {
    edges_ = k.faces_of_dim(1);
    for (std::size_t i = 0; i < edges_.size(); ++i)
        edge_index_[{edges_[i][0], edges_[i][1]}] = i;
    auto triangles = k.faces_of_dim(2);

    ZMatrix d1 = d1_matrix(k, edges_);
    for (const auto& r : relations) {
        std::vector<Integer> v(edges_.size());
        for (const auto& t : r.terms) {
            int a = t.u, b = t.v;
            long long c = t.coeff;
            if (a > b) {
                std::swap(a, b);
                c = -c;
            }
            auto it = edge_index_.find({a, b});
            if (it == edge_index_.end()) throw input_error("relation chain uses a non-edge");
            v[it->second] += c;
        }
        // cycle condition
        for (std::size_t i = 0; i < k.vertex_count(); ++i) {
            Integer s = 0;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (v[j] != 0) s += d1(i, j) * v[j];
            if (s != 0) throw input_error("relation chain is not a cycle");
        }
        rel_vecs_.push_back(std::move(v));
    }

    zk_ = kernel_basis(d1);
    ZMatrix d2 = d2_matrix(triangles, edge_index_);
    rk_ = ZMatrix(zk_.cols(), d2.cols() + rel_vecs_.size());
    auto put_in_basis = [&](const std::vector<Integer>& b, std::size_t col) {
        auto x = solve(zk_, b);
        if (!x) throw inconsistency_error("cycle not in the cycle lattice");
        for (std::size_t i = 0; i < zk_.cols(); ++i) rk_(i, col) = (*x)[i];
    };
    for (std::size_t j = 0; j < d2.cols(); ++j) {
        std::vector<Integer> b(d2.rows());
        for (std::size_t i = 0; i < d2.rows(); ++i) b[i] = d2(i, j);
        put_in_basis(b, j);
    }
    for (std::size_t r = 0; r < rel_vecs_.size(); ++r) put_in_basis(rel_vecs_[r], d2.cols() + r);

    rank_rk_ = zrank(rk_);
    target_h1_ = cokernel(rk_);

    // GF(2): relation span in edge space = boundaries of triangles + relations
    for (std::size_t j = 0; j < d2.cols(); ++j) {
        std::vector<char> v(edges_.size(), 0);
        for (std::size_t i = 0; i < d2.rows(); ++i)
            if (d2(i, j) % 2 != 0) v[i] = 1;
        relk2_.push_back(std::move(v));
    }
    for (const auto& rv : rel_vecs_) {
        std::vector<char> v(edges_.size(), 0);
        for (std::size_t i = 0; i < rv.size(); ++i)
            if (rv[i] % 2 != 0) v[i] = 1;
        relk2_.push_back(std::move(v));
    }
    rank_relk2_ = gf2_span_rank(relk2_);
    // dim of Z2 cycle space of K
    {
        GF2Matrix g(d1.rows(), d1.cols());
        for (std::size_t i = 0; i < d1.rows(); ++i)
            for (std::size_t j = 0; j < d1.cols(); ++j)
                if (d1(i, j) % 2 != 0) g.set(i, j);
        target_dim2_ = edges_.size() - g.rank() - rank_relk2_;
    }
}

InducedH1Map H1MapContext::map_for(const std::vector<int>& j_vertices) const {
    InducedH1Map out;
    SimplicialComplex kj = k_.full_subcomplex_ids(j_vertices);

    auto edges_j = kj.faces_of_dim(1);
    std::map<std::pair<int, int>, std::size_t> eidx_j;
    for (std::size_t i = 0; i < edges_j.size(); ++i)
        eidx_j[{edges_j[i][0], edges_j[i][1]}] = i;
    auto tris_j = kj.faces_of_dim(2);

    ZMatrix d1j = d1_matrix(kj, edges_j);
    ZMatrix zj = kernel_basis(d1j);
    ZMatrix d2j = d2_matrix(tris_j, eidx_j);

    out.target_cycles = zk_.cols();
    out.source_cycles = zj.cols();
    out.target_h1 = target_h1_;

    ZMatrix rj(zj.cols(), d2j.cols());
    for (std::size_t j = 0; j < d2j.cols(); ++j) {
        std::vector<Integer> b(d2j.rows());
        for (std::size_t i = 0; i < d2j.rows(); ++i) b[i] = d2j(i, j);
        auto x = solve(zj, b);
        if (!x) throw inconsistency_error("subcomplex boundary not a cycle");
        for (std::size_t i = 0; i < zj.cols(); ++i) rj(i, j) = (*x)[i];
    }
    out.source_h1 = cokernel(rj);

    std::vector<int> back(kj.vertex_count());
    for (std::size_t v = 0; v < kj.vertex_count(); ++v) back[v] = k_.vertex_id(kj.label(int(v)));

    out.matrix = ZMatrix(zk_.cols(), zj.cols());
    for (std::size_t j = 0; j < zj.cols(); ++j) {
        std::vector<Integer> chain(edges_.size());
        for (std::size_t e = 0; e < edges_j.size(); ++e) {
            if (zj(e, j) == 0) continue;
            int a = back[edges_j[e][0]], b = back[edges_j[e][1]];
            Integer c = zj(e, j);
            if (a > b) {
                std::swap(a, b);
                c = -c;
            }
            chain[edge_index_.at({a, b})] += c;
        }
        auto x = solve(zk_, chain);
        if (!x) throw inconsistency_error("included cycle not in the cycle lattice");
        for (std::size_t i = 0; i < zk_.cols(); ++i) out.matrix(i, j) = (*x)[i];
    }

    ZMatrix both(zk_.cols(), rk_.cols() + out.matrix.cols());
    for (std::size_t i = 0; i < zk_.cols(); ++i) {
        for (std::size_t j = 0; j < rk_.cols(); ++j) both(i, j) = rk_(i, j);
        for (std::size_t j = 0; j < out.matrix.cols(); ++j) both(i, rk_.cols() + j) = out.matrix(i, j);
    }
    out.rank = zrank(both) - rank_rk_;
    out.kernel_rank = out.source_h1.free_rank - out.rank;
    out.kernel_torsion = out.source_h1.torsion;
    out.cokernel = cokernel(both);

    // GF(2): kernel basis of d1j mod 2 by column elimination.
    {
        std::size_t rows = kj.vertex_count(), cols = edges_j.size();
        std::vector<std::vector<char>> colv(cols, std::vector<char>(rows, 0));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (d1j(i, j) % 2 != 0) colv[j][i] = 1;
        std::vector<std::vector<char>> comb(cols, std::vector<char>(cols, 0));
        for (std::size_t j = 0; j < cols; ++j) comb[j][j] = 1;
        std::size_t cur = 0;
        for (std::size_t r = 0; r < rows && cur < cols; ++r) {
            std::size_t piv = cols;
            for (std::size_t j = cur; j < cols; ++j)
                if (colv[j][r]) { piv = j; break; }
            if (piv == cols) continue;
            std::swap(colv[piv], colv[cur]);
            std::swap(comb[piv], comb[cur]);
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == cur || !colv[j][r]) continue;
                for (std::size_t i = 0; i < rows; ++i) colv[j][i] ^= colv[cur][i];
                for (std::size_t i = 0; i < cols; ++i) comb[j][i] ^= comb[cur][i];
            }
            ++cur;
        }
        std::size_t zj2 = cols - cur;

        std::size_t d2j_rank2;
        {
            GF2Matrix g(d2j.rows(), d2j.cols());
            for (std::size_t i = 0; i < d2j.rows(); ++i)
                for (std::size_t j = 0; j < d2j.cols(); ++j)
                    if (d2j(i, j) % 2 != 0) g.set(i, j);
            d2j_rank2 = g.rank();
        }
        out.source_dim2 = zj2 - d2j_rank2;
        out.target_dim2 = target_dim2_;

        GF2Span span;
        for (const auto& v : relk2_) span.add(v);
        std::size_t image = 0;
        for (std::size_t j = cur; j < cols; ++j) {
            std::vector<char> v(edges_.size(), 0);
            for (std::size_t e = 0; e < cols; ++e) {
                if (!comb[j][e]) continue;
                int a = back[edges_j[e][0]], b = back[edges_j[e][1]];
                if (a > b) std::swap(a, b);
                v[edge_index_.at({a, b})] ^= 1;
            }
            if (span.add(std::move(v))) ++image;
        }
        out.rank2 = image;
        out.kernel_dim2 = out.source_dim2 - out.rank2;
        out.cokernel_dim2 = out.target_dim2 - out.rank2;
    }
    return out;
}

InducedH1Map induced_h1_map(const SimplicialComplex& k, const std::vector<int>& j_vertices,
                            const std::vector<OneChain>& relations) {
    H1MapContext ctx(k, std::vector<OneChain>(relations));
    return ctx.map_for(j_vertices);
}

} // namespace hb
