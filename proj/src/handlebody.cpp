#include "handlebody/handlebody.hpp"

#include "handlebody/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace hb {

namespace {

struct BeltIds {
    int plus = -1, minus = -1;
    std::vector<int> plus_link, minus_link;      // sorted vertex ids
    std::map<int, int> phi, phi_inv;             // facet id maps
};

std::vector<int> sorted_link_ids(const SimplicialComplex& nerve, int v) {
    return nerve.adjacency()[v];
}

// Resolve belts to ids without validating; unknown labels throw.
std::vector<BeltIds> belt_ids(const SimpleHandlebody& h) {
    const auto& nerve = h.polytope.nerve;
    std::vector<BeltIds> out;
    for (const auto& b : h.belts) {
        BeltIds ids;
        ids.plus = nerve.vertex_id(b.plus);
        ids.minus = nerve.vertex_id(b.minus);
        ids.plus_link = sorted_link_ids(nerve, ids.plus);
        ids.minus_link = sorted_link_ids(nerve, ids.minus);
        for (const auto& [from, to] : b.matching) {
            int f = nerve.vertex_id(from);
            int t = nerve.vertex_id(to);
            ids.phi[f] = t;
            ids.phi_inv[t] = f;
        }
        out.push_back(std::move(ids));
    }
    return out;
}

std::vector<char> belt_facet_mask(const SimpleHandlebody& h) {
    const auto& nerve = h.polytope.nerve;
    std::vector<char> mask(nerve.vertex_count(), 0);
    for (const auto& b : h.belts) {
        mask[nerve.vertex_id(b.plus)] = 1;
        mask[nerve.vertex_id(b.minus)] = 1;
    }
    return mask;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

// Simplices of the link complex of vertex v (all dims), as sorted id sets.
std::vector<std::vector<int>> link_simplices(const SimplicialComplex& nerve, int v) {
    SimplicialComplex lk = nerve.link(v);
    std::vector<std::vector<int>> out;
    for (const auto& f : lk.all_faces()) {
        std::vector<int> ids;
        ids.reserve(f.size());
        for (int u : f) ids.push_back(nerve.vertex_id(lk.label(u)));
        std::sort(ids.begin(), ids.end());
        out.push_back(std::move(ids));
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct ClassData {
    std::vector<int> class_of_facet;             // -1 on belt facets
    std::vector<std::vector<int>> classes;       // sorted members
    std::vector<std::string> labels;
};

// Facet classes from the matching closure.  Null when a gluing cycle exists.
std::optional<ClassData> facet_classes(const SimpleHandlebody& h, const std::vector<BeltIds>& belts,
                                       const std::vector<char>& is_belt) {
    const auto& nerve = h.polytope.nerve;
    const int n = int(nerve.vertex_count());
    UnionFind uf(n);
    std::size_t glue_edges = 0;
    bool cycle = false;
    for (const auto& b : belts)
        for (const auto& [f, t] : b.phi) {
            if (f == t) {
                cycle = true;  // fixed facet: annulus
                continue;
            }
            ++glue_edges;
            if (!uf.unite(f, t)) cycle = true;
        }
    (void)glue_edges;
    if (cycle) return std::nullopt;

    ClassData cd;
    cd.class_of_facet.assign(n, -1);
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) {
        if (is_belt[v]) continue;
        groups[uf.find(v)].push_back(v);
    }
    for (auto& [root, members] : groups) {
        int id = int(cd.classes.size());
        for (int m : members) cd.class_of_facet[m] = id;
        cd.labels.push_back(nerve.label(members.front()));
        cd.classes.push_back(std::move(members));
    }
    return cd;
}

// Orbits of non-belt simplices under the belt gluings.
struct SimplexOrbits {
    std::vector<std::vector<int>> simplices;          // sorted id sets, sorted
    std::map<std::vector<int>, int> index;
    std::vector<int> orbit_of;                        // union-find roots flattened
};

SimplexOrbits simplex_orbits(const SimpleHandlebody& h, const std::vector<BeltIds>& belts,
                             const std::vector<char>& is_belt) {
    const auto& nerve = h.polytope.nerve;
    SimplexOrbits so;
    for (const auto& f : nerve.all_faces()) {
        bool touches = false;
        for (int v : f)
            if (is_belt[v]) touches = true;
        if (!touches) so.simplices.push_back(f);
    }
    std::sort(so.simplices.begin(), so.simplices.end());
    for (std::size_t i = 0; i < so.simplices.size(); ++i) so.index[so.simplices[i]] = int(i);

    UnionFind uf(so.simplices.size());
    for (std::size_t bi = 0; bi < belts.size(); ++bi) {
        const auto& b = belts[bi];
        SimplicialComplex lk = nerve.link(b.plus);
        for (const auto& f : lk.all_faces()) {
            std::vector<int> sigma, tau;
            for (int u : f) {
                int id = nerve.vertex_id(lk.label(u));
                sigma.push_back(id);
                auto it = b.phi.find(id);
                if (it == b.phi.end()) throw input_error("belt matching misses a link facet");
                tau.push_back(it->second);
            }
            std::sort(sigma.begin(), sigma.end());
            std::sort(tau.begin(), tau.end());
            auto i1 = so.index.find(sigma);
            auto i2 = so.index.find(tau);
            if (i1 == so.index.end() || i2 == so.index.end())
                throw input_error("belt matching is not a simplicial isomorphism");
            uf.unite(i1->second, i2->second);
        }
    }
    so.orbit_of.resize(so.simplices.size());
    for (std::size_t i = 0; i < so.simplices.size(); ++i) so.orbit_of[i] = uf.find(int(i));
    return so;
}

std::vector<int> class_set(const std::vector<int>& simplex, const ClassData& cd) {
    std::vector<int> cs;
    cs.reserve(simplex.size());
    for (int v : simplex) cs.push_back(cd.class_of_facet[v]);
    std::sort(cs.begin(), cs.end());
    return cs;
}

} // namespace

ValidationReport validate(const SimpleHandlebody& h) {
    ValidationReport rep;
    auto issue = [&](const std::string& code, const std::string& msg) {
        rep.issues.push_back({code, msg});
    };

    const auto& nerve = h.polytope.nerve;
    const int n = h.polytope.dim;

    if (n < 1) {
        issue("dimension", "dimension must be a positive integer");
        return rep;
    }
    if (nerve.vertex_count() == 0) {
        issue("nerve-empty", "nerve has no facets");
        return rep;
    }

    bool pure = true;
    for (const auto& m : nerve.maximal_simplices())
        if (int(m.size()) != n) pure = false;
    if (!pure) issue("nerve-not-pure", "nerve is not pure of dimension n-1");

    if (pure) {
        // pseudomanifold: every (n-2)-simplex lies in exactly two maximal simplices
        if (n == 1) {
            if (nerve.maximal_simplices().size() != 2)
                issue("nerve-not-pseudomanifold", "a 1-polytope has exactly two facets");
        } else {
            for (const auto& f : nerve.faces_of_dim(n - 2)) {
                int count = 0;
                for (const auto& m : nerve.maximal_simplices())
                    if (std::includes(m.begin(), m.end(), f.begin(), f.end())) ++count;
                if (count != 2) {
                    issue("nerve-not-pseudomanifold",
                          "an (n-2)-simplex does not lie in exactly two maximal simplices");
                    break;
                }
            }
        }
    }

    if (n >= 2 && !nerve.is_connected()) issue("nerve-disconnected", "nerve is not connected");

    if (n == 3 && pure) {
        for (std::size_t v = 0; v < nerve.vertex_count(); ++v) {
            try {
                nerve.link_cycle(int(v));
            } catch (const input_error&) {
                issue("vertex-link-not-cycle",
                      "link of facet " + nerve.label(int(v)) + " is not a single cycle");
            }
        }
        if (nerve.euler_characteristic() != 2)
            issue("nerve-euler-characteristic", "nerve Euler characteristic is not 2");
    }

    // ---- belts ----
    std::vector<int> belt_vertices;
    bool belts_resolved = true;
    for (const auto& b : h.belts) {
        try {
            belt_vertices.push_back(nerve.vertex_id(b.plus));
            belt_vertices.push_back(nerve.vertex_id(b.minus));
        } catch (const input_error&) {
            issue("belt-unknown-facet", "belt " + b.label + " names an unknown facet");
            belts_resolved = false;
        }
    }
    if (!belts_resolved) return rep;

    {
        auto sorted = belt_vertices;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            issue("belt-facets-not-distinct", "the 2g belt facet labels are not pairwise distinct");
        for (std::size_t i = 0; i < belt_vertices.size(); ++i)
            for (std::size_t j = i + 1; j < belt_vertices.size(); ++j)
                if (nerve.has_edge(belt_vertices[i], belt_vertices[j])) {
                    issue("belt-facets-adjacent", "belt facets are pairwise adjacent in the nerve");
                    i = belt_vertices.size();
                    break;
                }
    }

    std::vector<BeltIds> belts = belt_ids(h);
    bool matchings_ok = true;
    for (std::size_t bi = 0; bi < h.belts.size(); ++bi) {
        const auto& spec = h.belts[bi];
        const auto& b = belts[bi];
        std::set<int> dom, img;
        bool bad = false;
        for (const auto& [f, t] : b.phi) {
            dom.insert(f);
            img.insert(t);
            if (f == t) issue("belt-matching-fixed-facet",
                              "belt " + spec.label + " matching fixes facet " +
                                  nerve.label(f));
        }
        if (img.size() != b.phi.size()) {
            issue("belt-matching-not-bijective", "belt " + spec.label + " matching is not a bijection");
            bad = true;
        }
        std::set<int> plus_set(b.plus_link.begin(), b.plus_link.end());
        std::set<int> minus_set(b.minus_link.begin(), b.minus_link.end());
        if (dom != plus_set || img != minus_set) {
            issue("belt-matching-domain",
                  "belt " + spec.label + " matching is not defined on exactly the links of its copies");
            bad = true;
        }
        if (!bad) {
            // simplicial isomorphism of the two link complexes
            auto plus_faces = link_simplices(nerve, b.plus);
            auto minus_faces = link_simplices(nerve, b.minus);
            std::set<std::vector<int>> minus_lookup(minus_faces.begin(), minus_faces.end());
            bool iso = plus_faces.size() == minus_faces.size();
            for (const auto& f : plus_faces) {
                std::vector<int> img_f;
                img_f.reserve(f.size());
                for (int v : f) img_f.push_back(b.phi.at(v));
                std::sort(img_f.begin(), img_f.end());
                if (!minus_lookup.count(img_f)) {
                    iso = false;
                    break;
                }
            }
            if (!iso) {
                issue("belt-matching-not-isomorphism",
                      "belt " + spec.label + " matching is not a simplicial isomorphism of the links");
                matchings_ok = false;
            }
        } else {
            matchings_ok = false;
        }
    }

    if (!rep.valid() || !matchings_ok) return rep;

    auto is_belt = belt_facet_mask(h);
    auto cd = facet_classes(h, belts, is_belt);
    if (!cd) {
        issue("non-disk-facet", "a facet class has a gluing cycle (non-disk facet)");
        return rep;
    }

    // quotient simplicial structure
    SimplexOrbits so;
    try {
        so = simplex_orbits(h, belts, is_belt);
    } catch (const input_error& e) {
        issue("quotient-structure", e.what());
        return rep;
    }
    std::map<int, std::vector<int>> orbit_members;
    for (std::size_t i = 0; i < so.simplices.size(); ++i)
        orbit_members[so.orbit_of[i]].push_back(int(i));

    bool simplicial = true;
    std::map<std::vector<int>, int> seen_class_sets;  // class set -> orbit root
    for (const auto& [root, members] : orbit_members) {
        auto cs = class_set(so.simplices[members.front()], *cd);
        for (int m : members)
            if (class_set(so.simplices[m], *cd) != cs) {
                issue("quotient-structure", "glued simplices land on different facet classes");
                simplicial = false;
            }
        if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) {
            issue("quotient-degenerate-simplex",
                  "a quotient simplex repeats a facet class (vertex self-loop)");
            simplicial = false;
            continue;
        }
        auto [it, fresh] = seen_class_sets.emplace(cs, root);
        if (!fresh) {
            issue("quotient-duplicate-face",
                  "two distinct face classes join the same facet classes");
            simplicial = false;
        }
    }
    if (!simplicial) return rep;

    if (n == 3 && h.genus() > 0) {
        Quotient q;
        try {
            q = quotient_nerve(h);
        } catch (const input_error& e) {
            issue("quotient-structure", e.what());
            return rep;
        }
        bool orientable = false;
        if (!q.nerve.is_closed_surface(orientable)) {
            issue("quotient-not-surface", "quotient nerve is not a closed surface complex");
        } else {
            if (!orientable)
                issue("quotient-not-orientable", "quotient nerve is a non-orientable surface");
            if (q.nerve.euler_characteristic() != 2 - 2 * h.genus())
                issue("quotient-euler-characteristic",
                      "quotient nerve Euler characteristic is not 2-2g");
        }
    }

    return rep;
}

void ensure_valid(const SimpleHandlebody& h) {
    ValidationReport rep = validate(h);
    if (rep.valid()) return;
    std::ostringstream os;
    os << "invalid instance:";
    for (const auto& i : rep.issues) os << " [" << i.code << "] " << i.message << ";";
    throw input_error(os.str());
}

Quotient quotient_nerve(const SimpleHandlebody& h) {
    const auto& nerve = h.polytope.nerve;
    auto belts = belt_ids(h);
    auto is_belt = belt_facet_mask(h);
    auto cd = facet_classes(h, belts, is_belt);
    if (!cd) throw input_error("non-disk facet");

    Quotient q;
    q.class_of_facet = cd->class_of_facet;
    q.classes = cd->classes;
    q.class_labels = cd->labels;

    std::vector<std::vector<int>> gens;
    for (const auto& m : nerve.maximal_simplices()) {
        std::vector<int> cs;
        for (int v : m)
            if (!is_belt[v]) cs.push_back(cd->class_of_facet[v]);
        if (!cs.empty()) gens.push_back(std::move(cs));
    }
    q.nerve = SimplicialComplex::from_ids(cd->labels, std::move(gens));

    if (h.polytope.dim == 3) {
        for (const auto& b : belts) {
            auto cycle = nerve.link_cycle(b.plus);
            std::vector<int> classes;
            classes.reserve(cycle.size());
            for (int v : cycle) classes.push_back(cd->class_of_facet[v]);
            q.meridian_class_cycles.push_back(std::move(classes));
        }
    }
    return q;
}

std::vector<BeltWitness> delta_belts(const SimpleHandlebody& h) {
    ensure_valid(h);
    const auto& nerve = h.polytope.nerve;
    auto is_belt = belt_facet_mask(h);
    Quotient q = quotient_nerve(h);

    std::vector<BeltWitness> out;
    for (const auto& s : nerve.empty_simplices()) {
        for (int v : s)
            if (is_belt[v])
                throw input_error("empty simplex touches belt facet " + nerve.label(v) +
                                  " (violates the B-belt hypothesis)");
        BeltWitness w;
        w.kind = BeltWitness::Kind::Delta;
        for (int v : s) w.facet_classes.push_back(q.class_labels[q.class_of_facet[v]]);
        out.push_back(std::move(w));
    }
    return out;
}

bool is_flag(const SimpleHandlebody& h) {
    ensure_valid(h);
    return h.polytope.nerve.is_flag();
}

namespace {

struct CrossState {
    int u, v;                       // current pair (facet ids of P_Q)
    std::vector<int> chain_u, chain_v;
    std::vector<int> belt_seq;      // belt indices
    std::vector<int> dir_seq;       // +1 plus->minus
};

std::vector<int> common_nonbelt_neighbors(const SimplicialComplex& nerve,
                                          const std::vector<char>& is_belt, int a, int b) {
    std::vector<int> out;
    const auto& na = nerve.adjacency()[a];
    const auto& nb = nerve.adjacency()[b];
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
    out.erase(std::remove_if(out.begin(), out.end(), [&](int v) { return bool(is_belt[v]); }),
              out.end());
    return out;
}

std::string encode_crossing(const SimpleHandlebody& h, const SimplicialComplex& nerve, int f2,
                            const std::vector<int>& cu, const std::vector<int>& cv, int f4,
                            const std::vector<int>& beltseq, const std::vector<int>& dirs) {
    std::ostringstream os;
    os << nerve.label(f2) << "|";
    for (std::size_t i = 0; i < cu.size(); ++i) os << nerve.label(cu[i]) << ",";
    os << "|";
    for (std::size_t i = 0; i < cv.size(); ++i) os << nerve.label(cv[i]) << ",";
    os << "|" << nerve.label(f4) << "|";
    for (std::size_t i = 0; i < beltseq.size(); ++i)
        os << h.belts[beltseq[i]].label << (dirs[i] > 0 ? "+" : "-") << ",";
    return os.str();
}

} // namespace

std::vector<BeltWitness> square_belts(const SimpleHandlebody& h) {
    ensure_valid(h);
    const auto& nerve = h.polytope.nerve;
    if (!nerve.is_flag())
        throw input_error("precondition violated: square_belts requires a flag instance");
    auto is_belt = belt_facet_mask(h);
    auto belts = belt_ids(h);
    Quotient q = quotient_nerve(h);

    auto cls = [&](int f) { return q.class_of_facet[f]; };
    auto cls_label = [&](int f) { return q.class_labels[q.class_of_facet[f]]; };

    std::vector<BeltWitness> out;

    // (a) intra-polytope squares: diagonal pairs {a,c} and {b,d}
    const int nv = int(nerve.vertex_count());
    std::set<std::vector<int>> intra_seen;
    for (int a = 0; a < nv; ++a) {
        if (is_belt[a]) continue;
        for (int c = a + 1; c < nv; ++c) {
            if (is_belt[c] || nerve.has_edge(a, c) || cls(a) == cls(c)) continue;
            auto common = common_nonbelt_neighbors(nerve, is_belt, a, c);
            for (std::size_t i = 0; i < common.size(); ++i)
                for (std::size_t j = i + 1; j < common.size(); ++j) {
                    int b = common[i], d = common[j];
                    if (nerve.has_edge(b, d) || cls(b) == cls(d)) continue;
                    std::vector<int> key = {std::min(a, b), a, b, c, d};
                    std::vector<int> norm = {a, c, b, d};
                    std::sort(norm.begin(), norm.begin() + 2);
                    std::sort(norm.begin() + 2, norm.end());
                    if (std::vector<int>{norm[0], norm[1]} > std::vector<int>{norm[2], norm[3]})
                        std::swap_ranges(norm.begin(), norm.begin() + 2, norm.begin() + 2);
                    if (!intra_seen.insert(norm).second) continue;
                    (void)key;
                    BeltWitness w;
                    w.kind = BeltWitness::Kind::Square;
                    // cyclic order [F1,F2,F3,F4] with F1 the overall minimum
                    int f1 = norm[0], f3 = norm[1], f2 = std::min(norm[2], norm[3]),
                        f4 = std::max(norm[2], norm[3]);
                    if (norm[2] < norm[0]) {
                        f1 = norm[2];
                        f3 = norm[3];
                        f2 = std::min(norm[0], norm[1]);
                        f4 = std::max(norm[0], norm[1]);
                    }
                    w.facet_classes = {cls_label(f1), cls_label(f2), cls_label(f3), cls_label(f4)};
                    w.f1_chain = {nerve.label(f1)};
                    w.f3_chain = {nerve.label(f3)};
                    w.f2 = nerve.label(f2);
                    w.f4 = nerve.label(f4);
                    out.push_back(std::move(w));
                }
        }
    }

    // (b) belt-crossing squares by chain search
    const int cap = 4 * std::max(1, h.genus());
    std::set<std::string> crossing_seen;
    if (!h.belts.empty()) {
        for (int a = 0; a < nv; ++a) {
            if (is_belt[a]) continue;
            for (int c = a + 1; c < nv; ++c) {
                if (is_belt[c] || nerve.has_edge(a, c) || cls(a) == cls(c)) continue;
                auto f2s = common_nonbelt_neighbors(nerve, is_belt, a, c);
                if (f2s.empty()) continue;

                std::set<std::pair<int, int>> visited;
                visited.insert({a, c});
                std::queue<CrossState> bfs;
                bfs.push({a, c, {a}, {c}, {}, {}});
                while (!bfs.empty()) {
                    CrossState st = bfs.front();
                    bfs.pop();
                    if (!st.belt_seq.empty()) {
                        // completions
                        auto f4s = common_nonbelt_neighbors(nerve, is_belt, st.u, st.v);
                        for (int f2 : f2s)
                            for (int f4 : f4s) {
                                if (cls(f2) == cls(f4)) continue;
                                int c2 = cls(f2), c4 = cls(f4);
                                if (q.nerve.has_edge(c2, c4)) continue;
                                // canonical encoding over the four symmetries
                                auto rev_dirs = st.dir_seq;
                                for (int& d : rev_dirs) d = -d;
                                std::reverse(rev_dirs.begin(), rev_dirs.end());
                                auto rev_belts = st.belt_seq;
                                std::reverse(rev_belts.begin(), rev_belts.end());
                                auto ru = st.chain_u;
                                std::reverse(ru.begin(), ru.end());
                                auto rv = st.chain_v;
                                std::reverse(rv.begin(), rv.end());
                                std::vector<std::string> encodings = {
                                    encode_crossing(h, nerve, f2, st.chain_u, st.chain_v, f4,
                                                    st.belt_seq, st.dir_seq),
                                    encode_crossing(h, nerve, f2, st.chain_v, st.chain_u, f4,
                                                    st.belt_seq, st.dir_seq),
                                    encode_crossing(h, nerve, f4, ru, rv, f2, rev_belts, rev_dirs),
                                    encode_crossing(h, nerve, f4, rv, ru, f2, rev_belts, rev_dirs)};
                                std::string canon = *std::min_element(encodings.begin(), encodings.end());
                                if (!crossing_seen.insert(canon).second) continue;
                                BeltWitness w;
                                w.kind = BeltWitness::Kind::Square;
                                w.facet_classes = {cls_label(st.chain_u.front()), cls_label(f2),
                                                   cls_label(st.chain_v.front()), cls_label(f4)};
                                for (int x : st.chain_u) w.f1_chain.push_back(nerve.label(x));
                                for (int x : st.chain_v) w.f3_chain.push_back(nerve.label(x));
                                w.f2 = nerve.label(f2);
                                w.f4 = nerve.label(f4);
                                for (int bi : st.belt_seq) w.crossing_belts.push_back(h.belts[bi].label);
                                w.crossing_dirs = st.dir_seq;
                                out.push_back(std::move(w));
                            }
                    }
                    if (int(st.belt_seq.size()) >= cap) continue;
                    for (std::size_t bi = 0; bi < belts.size(); ++bi) {
                        const auto& b = belts[bi];
                        for (int dir : {+1, -1}) {
                            const auto& side = dir > 0 ? b.plus_link : b.minus_link;
                            if (!std::binary_search(side.begin(), side.end(), st.u)) continue;
                            if (!std::binary_search(side.begin(), side.end(), st.v)) continue;
                            const auto& m = dir > 0 ? b.phi : b.phi_inv;
                            int nu = m.at(st.u), nv2 = m.at(st.v);
                            if (nerve.has_edge(nu, nv2)) continue;
                            auto keypair = std::minmax(nu, nv2);
                            if (!visited.insert({keypair.first, keypair.second}).second) continue;
                            CrossState nxt = st;
                            nxt.u = nu;
                            nxt.v = nv2;
                            nxt.chain_u.push_back(nu);
                            nxt.chain_v.push_back(nv2);
                            nxt.belt_seq.push_back(int(bi));
                            nxt.dir_seq.push_back(dir);
                            bfs.push(std::move(nxt));
                        }
                    }
                }
            }
        }
    }

    std::sort(out.begin(), out.end(), [](const BeltWitness& x, const BeltWitness& y) {
        if (x.crossing_belts.size() != y.crossing_belts.size())
            return x.crossing_belts.size() < y.crossing_belts.size();
        if (x.facet_classes != y.facet_classes) return x.facet_classes < y.facet_classes;
        return x.crossing_belts < y.crossing_belts;
    });
    return out;
}

bool two_neighborly(const SimplePolytope& p) { return p.nerve.one_skeleton_complete(); }

SimplicialComplex collar_nerve(const SimpleHandlebody& h, std::size_t belt_index) {
    const auto& nerve = h.polytope.nerve;
    const auto& belt = h.belts.at(belt_index);
    SimplicialComplex lk = nerve.link(nerve.vertex_id(belt.plus));
    std::vector<std::string> labels = lk.vertex_labels();
    int bottom = int(labels.size());
    labels.push_back(belt.label + ":B0");
    int top = int(labels.size());
    labels.push_back(belt.label + ":B1");
    std::vector<std::vector<int>> gens;
    for (const auto& m : lk.maximal_simplices()) {
        auto s0 = m;
        s0.push_back(bottom);
        auto s1 = m;
        s1.push_back(top);
        gens.push_back(std::move(s0));
        gens.push_back(std::move(s1));
    }
    if (gens.empty()) gens = {{bottom}, {top}};
    return SimplicialComplex::from_ids(std::move(labels), std::move(gens));
}

} // namespace hb
