#include "handlebody/simplicial_complex.hpp"

#include "handlebody/errors.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>

namespace hb {

const DegreeHomology& HomologyResult::at(std::size_t k) const {
    static const DegreeHomology trivial{};
    return k < groups.size() ? groups[k] : trivial;
}

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertex_labels,
                                     const std::vector<std::vector<std::string>>& simplices) {
    labels_ = std::move(vertex_labels);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!id_.emplace(labels_[i], int(i)).second)
            throw input_error("duplicate vertex label: " + labels_[i]);
    }
    for (const auto& s : simplices) {
        std::vector<int> ids;
        ids.reserve(s.size());
        for (const auto& l : s) {
            auto it = id_.find(l);
            if (it == id_.end()) throw input_error("unknown vertex label: " + l);
            ids.push_back(it->second);
        }
        maximal_.push_back(std::move(ids));
    }
    canonicalize();
}

SimplicialComplex SimplicialComplex::from_ids(std::vector<std::string> vertex_labels,
                                              std::vector<std::vector<int>> simplices_by_id) {
    SimplicialComplex k;
    k.labels_ = std::move(vertex_labels);
    for (std::size_t i = 0; i < k.labels_.size(); ++i) {
        if (!k.id_.emplace(k.labels_[i], int(i)).second)
            throw input_error("duplicate vertex label: " + k.labels_[i]);
    }
    for (auto& s : simplices_by_id)
        for (int v : s)
            if (v < 0 || v >= int(k.labels_.size()))
                throw input_error("vertex id out of range");
    k.maximal_ = std::move(simplices_by_id);
    k.canonicalize();
    return k;
}

void SimplicialComplex::canonicalize() {
    for (auto& s : maximal_) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    maximal_.erase(std::remove_if(maximal_.begin(), maximal_.end(),
                                  [](const std::vector<int>& s) { return s.empty(); }),
                   maximal_.end());
    std::sort(maximal_.begin(), maximal_.end());
    maximal_.erase(std::unique(maximal_.begin(), maximal_.end()), maximal_.end());
    // Drop dominated simplices.
    std::vector<std::vector<int>> keep;
    for (std::size_t i = 0; i < maximal_.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < maximal_.size() && !dominated; ++j) {
            if (i == j || maximal_[i].size() > maximal_[j].size()) continue;
            if (maximal_[i].size() == maximal_[j].size() && i < j) continue;
            dominated = std::includes(maximal_[j].begin(), maximal_[j].end(),
                                      maximal_[i].begin(), maximal_[i].end());
        }
        if (!dominated) keep.push_back(maximal_[i]);
    }
    maximal_ = std::move(keep);

    std::vector<char> covered(labels_.size(), 0);
    for (const auto& s : maximal_)
        for (int v : s) covered[v] = 1;
    for (std::size_t v = 0; v < covered.size(); ++v)
        if (!covered[v])
            throw input_error("vertex not contained in any simplex: " + labels_[v]);

    adj_.assign(labels_.size(), {});
    std::set<std::pair<int, int>> edges;
    for (const auto& s : maximal_)
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                edges.insert({s[i], s[j]});
    for (auto [u, v] : edges) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int SimplicialComplex::vertex_id(const std::string& label) const {
    auto it = id_.find(label);
    if (it == id_.end()) throw input_error("unknown vertex label: " + label);
    return it->second;
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& s : maximal_) d = std::max(d, int(s.size()) - 1);
    return d;
}

bool SimplicialComplex::spans(const std::vector<int>& sorted_vertices) const {
    for (const auto& m : maximal_)
        if (std::includes(m.begin(), m.end(), sorted_vertices.begin(), sorted_vertices.end()))
            return true;
    return false;
}

bool SimplicialComplex::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::vector<int>> SimplicialComplex::faces_of_dim(int k) const {
    std::set<std::vector<int>> out;
    if (k < 0) return {};
    for (const auto& m : maximal_) {
        if (int(m.size()) < k + 1) continue;
        // all (k+1)-subsets of m
        std::vector<int> idx(k + 1);
        for (int i = 0; i <= k; ++i) idx[i] = i;
        while (true) {
            std::vector<int> face(k + 1);
            for (int i = 0; i <= k; ++i) face[i] = m[idx[i]];
            out.insert(std::move(face));
            int i = k;
            while (i >= 0 && idx[i] == int(m.size()) - (k + 1 - i)) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j <= k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return {out.begin(), out.end()};
}

std::vector<std::vector<int>> SimplicialComplex::all_faces() const {
    std::vector<std::vector<int>> out;
    for (int k = 0; k <= dim(); ++k) {
        auto f = faces_of_dim(k);
        out.insert(out.end(), f.begin(), f.end());
    }
    return out;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    for (int k = 0; k <= dim(); ++k)
        chi += (k % 2 == 0 ? 1LL : -1LL) * (long long)face_count(k);
    return chi;
}

SimplicialComplex SimplicialComplex::link(const std::string& vertex) const {
    return link(vertex_id(vertex));
}

SimplicialComplex SimplicialComplex::link(int v) const {
    std::set<int> verts;
    std::vector<std::vector<int>> gens;
    for (const auto& m : maximal_) {
        if (!std::binary_search(m.begin(), m.end(), v)) continue;
        std::vector<int> s;
        for (int u : m)
            if (u != v) s.push_back(u);
        for (int u : s) verts.insert(u);
        if (!s.empty()) gens.push_back(std::move(s));
    }
    std::vector<std::string> labels;
    std::vector<int> order(verts.begin(), verts.end());
    std::map<int, int> remap;
    for (int u : order) {
        remap[u] = int(labels.size());
        labels.push_back(labels_[u]);
    }
    for (auto& g : gens)
        for (int& u : g) u = remap[u];
    return from_ids(std::move(labels), std::move(gens));
}

SimplicialComplex SimplicialComplex::full_subcomplex(const std::vector<std::string>& vertices) const {
    std::vector<int> ids;
    ids.reserve(vertices.size());
    for (const auto& l : vertices) ids.push_back(vertex_id(l));
    return full_subcomplex_ids(std::move(ids));
}

SimplicialComplex SimplicialComplex::full_subcomplex_ids(std::vector<int> vertices) const {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (int v : vertices)
        if (v < 0 || v >= int(labels_.size())) throw input_error("vertex id out of range");
    std::vector<std::string> labels;
    std::map<int, int> remap;
    for (int v : vertices) {
        remap[v] = int(labels.size());
        labels.push_back(labels_[v]);
    }
    std::vector<std::vector<int>> gens;
    for (const auto& m : maximal_) {
        std::vector<int> s;
        for (int u : m)
            if (remap.count(u)) s.push_back(remap[u]);
        if (!s.empty()) gens.push_back(std::move(s));
    }
    // Isolated leftover vertices are impossible: every vertex of the parent
    // lies in some maximal simplex, whose restriction keeps it.
    return from_ids(std::move(labels), std::move(gens));
}

bool SimplicialComplex::is_flag() const { return empty_simplices().empty(); }

std::vector<std::vector<int>> SimplicialComplex::empty_simplices() const {
    // DFS over spanning cliques in increasing vertex order; a candidate set S
    // is emitted when S is a clique that does not span but all its maximal
    // proper subsets do.  Minimality is automatic.
    std::vector<std::vector<int>> out;
    std::vector<int> clique;

    auto all_facets_span = [&](const std::vector<int>& s) {
        std::vector<int> sub(s.size() - 1);
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
            std::size_t t = 0;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != skip) sub[t++] = s[i];
            if (!spans(sub)) return false;
        }
        return true;
    };

    std::function<void(const std::vector<int>&)> extend = [&](const std::vector<int>& cands) {
        for (std::size_t ci = 0; ci < cands.size(); ++ci) {
            int v = cands[ci];
            clique.push_back(v);
            if (spans(clique)) {
                std::vector<int> next;
                for (std::size_t cj = ci + 1; cj < cands.size(); ++cj)
                    if (has_edge(v, cands[cj])) next.push_back(cands[cj]);
                if (!next.empty()) extend(next);
            } else if (clique.size() >= 3 && all_facets_span(clique)) {
                out.push_back(clique);
            }
            clique.pop_back();
        }
    };

    std::vector<int> all(labels_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = int(i);
    extend(all);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> SimplicialComplex::cliques() const {
    std::vector<std::vector<int>> out;
    std::vector<int> clique;
    std::function<void(const std::vector<int>&)> extend = [&](const std::vector<int>& cands) {
        for (std::size_t ci = 0; ci < cands.size(); ++ci) {
            int v = cands[ci];
            clique.push_back(v);
            out.push_back(clique);
            std::vector<int> next;
            for (std::size_t cj = ci + 1; cj < cands.size(); ++cj)
                if (has_edge(v, cands[cj])) next.push_back(cands[cj]);
            if (!next.empty()) extend(next);
            clique.pop_back();
        }
    };
    std::vector<int> all(labels_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = int(i);
    extend(all);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

bool SimplicialComplex::is_connected() const {
    if (labels_.empty()) return true;
    std::vector<char> seen(labels_.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    std::size_t n = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj_[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++n;
                q.push(v);
            }
    }
    return n == labels_.size();
}

bool SimplicialComplex::graph_is_chordal() const {
    // Maximum cardinality search + perfect elimination ordering check.
    const int n = int(labels_.size());
    if (n == 0) return true;
    std::vector<int> weight(n, 0), order;
    std::vector<char> used(n, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!used[v] && (best == -1 || weight[v] > weight[best])) best = v;
        used[best] = 1;
        order.push_back(best);
        for (int u : adj_[best])
            if (!used[u]) ++weight[u];
    }
    std::reverse(order.begin(), order.end());  // elimination order
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        // later neighbors must form a clique; checking against the earliest
        // later neighbor suffices
        std::vector<int> later;
        for (int u : adj_[v])
            if (pos[u] > i) later.push_back(u);
        if (later.empty()) continue;
        int w = *std::min_element(later.begin(), later.end(),
                                  [&](int a, int b) { return pos[a] < pos[b]; });
        for (int u : later)
            if (u != w && !has_edge(w, u)) return false;
    }
    return true;
}

bool SimplicialComplex::one_skeleton_complete() const {
    const int n = int(labels_.size());
    for (int v = 0; v < n; ++v)
        if (int(adj_[v].size()) != n - 1) return false;
    return true;
}

bool SimplicialComplex::is_closed_surface(bool& orientable) const {
    orientable = false;
    if (dim() != 2 || !is_connected()) return false;
    for (const auto& m : maximal_)
        if (m.size() != 3) return false;
    auto tris = faces_of_dim(2);
    std::map<std::pair<int, int>, std::vector<int>> edge_tris;
    for (std::size_t t = 0; t < tris.size(); ++t) {
        const auto& tr = tris[t];
        edge_tris[{tr[0], tr[1]}].push_back(int(t));
        edge_tris[{tr[0], tr[2]}].push_back(int(t));
        edge_tris[{tr[1], tr[2]}].push_back(int(t));
    }
    for (const auto& [e, ts] : edge_tris)
        if (ts.size() != 2) return false;
    for (std::size_t v = 0; v < labels_.size(); ++v) {
        try {
            link_cycle(int(v));
        } catch (const input_error&) {
            return false;
        }
    }
    // Orientation propagation: +1 means the sorted vertex order, -1 reversed.
    std::vector<int> orient(tris.size(), 0);
    orientable = true;
    for (std::size_t seed = 0; seed < tris.size(); ++seed) {
        if (orient[seed] != 0) continue;
        orient[seed] = 1;
        std::queue<int> q;
        q.push(int(seed));
        while (!q.empty()) {
            int t = q.front();
            q.pop();
            const auto& tr = tris[t];
            const std::pair<int, int> es[3] = {{tr[0], tr[1]}, {tr[0], tr[2]}, {tr[1], tr[2]}};
            // sign of each edge inside the (sorted) triangle orientation:
            // (v0,v1) +, (v0,v2) -, (v1,v2) +
            const int esign[3] = {1, -1, 1};
            for (int k = 0; k < 3; ++k) {
                const auto& ts = edge_tris[es[k]];
                int other = ts[0] == t ? ts[1] : ts[0];
                const auto& tr2 = tris[other];
                const std::pair<int, int> fs[3] = {{tr2[0], tr2[1]}, {tr2[0], tr2[2]}, {tr2[1], tr2[2]}};
                const int fsign[3] = {1, -1, 1};
                int k2 = 0;
                while (fs[k2] != es[k]) ++k2;
                // Coherent orientations induce the edge with opposite signs.
                int need = -orient[t] * esign[k] * fsign[k2];
                if (orient[other] == 0) {
                    orient[other] = need;
                    q.push(other);
                } else if (orient[other] != need) {
                    orientable = false;
                }
            }
        }
    }
    return true;
}

std::vector<int> SimplicialComplex::link_cycle(int v) const {
    SimplicialComplex lk = link(v);
    const int n = int(lk.vertex_count());
    if (n < 3) throw input_error("link of " + labels_[v] + " is not a cycle");
    for (int u = 0; u < n; ++u)
        if (lk.adj_[u].size() != 2) throw input_error("link of " + labels_[v] + " is not a cycle");
    if (lk.dim() != 1) throw input_error("link of " + labels_[v] + " is not a cycle");
    std::vector<int> cyc;
    std::vector<char> seen(n, 0);
    int cur = 0, prev = -1;
    for (int i = 0; i < n; ++i) {
        cyc.push_back(cur);
        seen[cur] = 1;
        int nxt = -1;
        for (int u : lk.adj_[cur])
            if (u != prev && (!seen[u] || (i == n - 1 && u == 0))) nxt = u;
        if (nxt == -1 && i < n - 1) throw input_error("link of " + labels_[v] + " is not a cycle");
        prev = cur;
        cur = nxt;
    }
    // Expressed in parent ids, starting from the smallest, smaller neighbor
    // second (deterministic orientation).
    std::vector<int> ids;
    ids.reserve(cyc.size());
    for (int u : cyc) ids.push_back(vertex_id(lk.label(u)));
    auto mn = std::min_element(ids.begin(), ids.end());
    std::rotate(ids.begin(), mn, ids.end());
    if (ids.size() >= 3 && ids[1] > ids.back())
        std::reverse(ids.begin() + 1, ids.end());
    return ids;
}

namespace {

// boundary matrix faces_{k-1} x faces_k with standard signs
ZMatrix boundary_matrix(const std::vector<std::vector<int>>& lower,
                        const std::vector<std::vector<int>>& upper) {
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = i;
    ZMatrix b(lower.size(), upper.size());
    for (std::size_t j = 0; j < upper.size(); ++j) {
        const auto& s = upper[j];
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
            std::vector<int> face;
            face.reserve(s.size() - 1);
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != skip) face.push_back(s[i]);
            b(index.at(face), j) = (skip % 2 == 0) ? 1 : -1;
        }
    }
    return b;
}

} // namespace

HomologyResult SimplicialComplex::homology(Coefficients coeff, bool reduced) const {
    HomologyResult res;
    const int d = dim();
    if (d < 0) return res;
    res.groups.resize(d + 1);

    std::vector<std::vector<std::vector<int>>> faces(d + 1);
    for (int k = 0; k <= d; ++k) faces[k] = faces_of_dim(k);

    // ranks[k] = rank of boundary C_k -> C_{k-1}; ranks[d+1] = 0
    std::vector<std::size_t> rank(d + 2, 0);
    std::vector<std::vector<Integer>> tors(d + 2);

    for (int k = 1; k <= d; ++k) {
        ZMatrix b = boundary_matrix(faces[k - 1], faces[k]);
        if (coeff == Coefficients::Z) {
            SmithForm s = smith_normal_form(std::move(b), false);
            rank[k] = s.rank;
            for (const Integer& v : s.diagonal)
                if (v > 1) tors[k].push_back(v);
        } else {
            GF2Matrix g(b.rows(), b.cols());
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j)
                    if (b(i, j) % 2 != 0) g.set(i, j);
            rank[k] = g.rank();
        }
    }
    std::size_t aug = reduced && !faces[0].empty() ? 1 : 0;
    for (int k = 0; k <= d; ++k) {
        std::size_t cycles = faces[k].size() - rank[k] - (k == 0 ? aug : 0);
        res.groups[k].free_rank = cycles - rank[k + 1];
        res.groups[k].torsion = tors[k + 1];
    }
    return res;
}

bool SimplicialComplex::same_complex(const SimplicialComplex& other) const {
    if (labels_ != other.labels_) return false;
    return maximal_ == other.maximal_;
}

} // namespace hb
