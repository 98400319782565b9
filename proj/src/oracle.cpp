#include "handlebody/oracle.hpp"

#include "handlebody/errors.hpp"
#include "handlebody/words.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace hb {

long long DoubleComplex::euler() const {
    long long chi = 0;
    for (std::size_t k = 0; k < cells.size(); ++k)
        chi += (k % 2 == 0 ? 1LL : -1LL) * (long long)cells[k].size();
    return chi;
}

namespace {

// Cell keys pack [apex flag][chamber g][face-id chain], 9 bits per face id,
// at most 5 chain slots, so dimensions up to 5 and up to 510 faces fit.
constexpr std::uint64_t kSlotEmpty = 0x1FF;

struct DoubleBuilder {
    const SimpleHandlebody& h;
    const SimplicialComplex& nerve;
    Quotient q;
    int n;
    int m;
    int gbits;

    std::vector<std::vector<int>> faces;            // all simplices, global ids
    std::map<std::vector<int>, int> face_index;
    std::vector<std::uint32_t> face_mask;           // class-color bits of non-belt members
    std::vector<int> face_norm;                     // phi^{-1} image when the face holds a B-,
                                                    // else itself
    std::vector<std::vector<int>> chains_by_len;    // flattened chains, len 1..n
    std::vector<std::vector<std::vector<int>>> chains;  // chains[len] = list of face-id chains

    explicit DoubleBuilder(const SimpleHandlebody& hh) : h(hh), nerve(hh.polytope.nerve) {
        ensure_valid(h);
        q = quotient_nerve(h);
        n = h.polytope.dim;
        m = int(q.classes.size());
        if (n > 5) throw resource_error("oracle supports dimension <= 5");
        gbits = m;

        faces = nerve.all_faces();
        if (faces.size() >= kSlotEmpty) throw resource_error("too many polytope faces for the oracle");
        for (std::size_t i = 0; i < faces.size(); ++i) face_index[faces[i]] = int(i);

        std::vector<char> is_belt(nerve.vertex_count(), 0);
        std::vector<int> minus_belt(nerve.vertex_count(), -1);
        std::vector<std::map<int, int>> phi_inv(h.belts.size());
        std::vector<int> plus_id(h.belts.size()), minus_id(h.belts.size());
        for (std::size_t bi = 0; bi < h.belts.size(); ++bi) {
            plus_id[bi] = nerve.vertex_id(h.belts[bi].plus);
            minus_id[bi] = nerve.vertex_id(h.belts[bi].minus);
            is_belt[plus_id[bi]] = is_belt[minus_id[bi]] = 1;
            minus_belt[minus_id[bi]] = int(bi);
            for (const auto& [f, t] : h.belts[bi].matching)
                phi_inv[bi][nerve.vertex_id(t)] = nerve.vertex_id(f);
        }

        face_mask.assign(faces.size(), 0);
        face_norm.assign(faces.size(), -1);
        for (std::size_t fi = 0; fi < faces.size(); ++fi) {
            int belt = -1;
            for (int v : faces[fi])
                if (minus_belt[v] >= 0) belt = minus_belt[v];
            if (belt < 0) {
                face_norm[fi] = int(fi);
            } else {
                std::vector<int> img;
                for (int v : faces[fi]) {
                    if (v == minus_id[belt])
                        img.push_back(plus_id[belt]);
                    else
                        img.push_back(phi_inv[belt].at(v));
                }
                std::sort(img.begin(), img.end());
                face_norm[fi] = face_index.at(img);
            }
        }
        for (std::size_t fi = 0; fi < faces.size(); ++fi) {
            std::uint32_t mask = 0;
            for (int v : faces[fi])
                if (!is_belt[v]) mask |= (std::uint32_t(1) << q.class_of_facet[v]);
            face_mask[fi] = mask;
        }

        // strictly increasing chains under set inclusion
        std::vector<std::vector<int>> supersets(faces.size());
        for (std::size_t a = 0; a < faces.size(); ++a)
            for (std::size_t b = 0; b < faces.size(); ++b) {
                if (a == b || faces[a].size() >= faces[b].size()) continue;
                if (std::includes(faces[b].begin(), faces[b].end(), faces[a].begin(),
                                  faces[a].end()))
                    supersets[a].push_back(int(b));
            }
        chains.assign(n + 1, {});
        std::vector<int> cur;
        std::function<void(int)> extend = [&](int last) {
            if (int(cur.size()) >= 1) chains[cur.size()].push_back(cur);
            if (int(cur.size()) == n) return;
            for (int nxt : supersets[last]) {
                cur.push_back(nxt);
                extend(nxt);
                cur.pop_back();
            }
        };
        for (std::size_t f = 0; f < faces.size(); ++f) {
            cur = {int(f)};
            extend(int(f));
            cur.clear();
        }
    }

    std::uint64_t pack(bool apex, std::uint32_t g, const std::vector<int>& chain) const {
        std::uint64_t key = apex ? 1 : 0;
        key |= (std::uint64_t(g) << 1);
        int shift = 1 + gbits;
        for (std::size_t i = 0; i < 5; ++i) {
            std::uint64_t slot = i < chain.size() ? std::uint64_t(chain[i]) : kSlotEmpty;
            key |= (slot << shift);
            shift += 9;
        }
        return key;
    }

    void unpack(std::uint64_t key, bool& apex, std::uint32_t& g, std::vector<int>& chain) const {
        apex = key & 1;
        g = std::uint32_t((key >> 1) & ((std::uint64_t(1) << gbits) - 1));
        chain.clear();
        int shift = 1 + gbits;
        for (std::size_t i = 0; i < 5; ++i) {
            std::uint64_t slot = (key >> shift) & 0x1FF;
            shift += 9;
            if (slot != kSlotEmpty) chain.push_back(int(slot));
        }
    }

    // canonical key of a boundary (no-apex) cell
    std::uint64_t boundary_key(std::uint32_t g, const std::vector<int>& chain) const {
        std::vector<int> c = chain;
        if (face_norm[c[0]] != c[0])
            for (int& f : c) f = face_norm[f];
        std::uint32_t gm = g & ~face_mask[c[0]];
        return pack(false, gm, c);
    }

    std::uint64_t apex_key(std::uint32_t g, const std::vector<int>& chain) const {
        return pack(true, g, chain);
    }
};

std::uint32_t find_cell(const std::vector<std::uint64_t>& sorted, std::uint64_t key) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), key);
    if (it == sorted.end() || *it != key) throw inconsistency_error("oracle cell lookup failed");
    return std::uint32_t(it - sorted.begin());
}

} // namespace

DoubleComplex build_double(const SimpleHandlebody& h, int cap_m) {
    DoubleBuilder b(h);
    if (b.m > cap_m)
        throw resource_error("facet class count " + std::to_string(b.m) +
                             " exceeds the oracle cap " + std::to_string(cap_m));
    if (b.m > 16) throw resource_error("oracle supports at most 16 facet classes");

    DoubleComplex out;
    out.dim = b.n;
    out.chamber_count = std::size_t(1) << b.m;
    out.coloring.class_labels = b.q.class_labels;
    out.cells.assign(b.n + 1, {});
    out.boundary.assign(b.n + 1, {});

    const std::uint32_t gmax = std::uint32_t(out.chamber_count);

    // cells of dim d: apex cells over chains of length d (length 0 = apex
    // vertex) and boundary cells over chains of length d+1
    for (int d = 0; d <= b.n; ++d) {
        auto& cell_keys = out.cells[d];
        if (d == 0) {
            for (std::uint32_t g = 0; g < gmax; ++g) cell_keys.push_back(b.pack(true, g, {}));
        } else {
            for (const auto& chain : b.chains[d])
                for (std::uint32_t g = 0; g < gmax; ++g)
                    cell_keys.push_back(b.apex_key(g, chain));
        }
        if (d + 1 <= b.n)
            for (const auto& chain : b.chains[d + 1])
                for (std::uint32_t g = 0; g < gmax; ++g)
                    cell_keys.push_back(b.boundary_key(g, chain));
        std::sort(cell_keys.begin(), cell_keys.end());
        cell_keys.erase(std::unique(cell_keys.begin(), cell_keys.end()), cell_keys.end());
    }

    // boundaries
    for (int d = 1; d <= b.n; ++d) {
        auto& entries = out.boundary[d];
        const auto& rows = out.cells[d - 1];
        for (std::uint32_t ci = 0; ci < out.cells[d].size(); ++ci) {
            std::uint64_t key = out.cells[d][ci];
            bool apex;
            std::uint32_t g;
            std::vector<int> chain;
            b.unpack(key, apex, g, chain);
            if (apex) {
                // vertex order (apex, b1, ..., bd)
                entries.push_back({find_cell(rows, b.boundary_key(g, chain)), ci, +1});
                std::vector<int> sub;
                for (std::size_t drop = 0; drop < chain.size(); ++drop) {
                    sub.clear();
                    for (std::size_t i = 0; i < chain.size(); ++i)
                        if (i != drop) sub.push_back(chain[i]);
                    long long sign = (drop + 1) % 2 == 0 ? +1 : -1;
                    entries.push_back({find_cell(rows, b.apex_key(g, sub)), ci, sign});
                }
            } else {
                std::vector<int> sub;
                for (std::size_t drop = 0; drop < chain.size(); ++drop) {
                    sub.clear();
                    for (std::size_t i = 0; i < chain.size(); ++i)
                        if (i != drop) sub.push_back(chain[i]);
                    long long sign = drop % 2 == 0 ? +1 : -1;
                    entries.push_back({find_cell(rows, b.boundary_key(g, sub)), ci, sign});
                }
            }
        }
    }
    return out;
}

HomologyResult oracle_homology(const DoubleComplex& c, Coefficients coeff) {
    HomologyResult res;
    res.groups.resize(c.dim + 1);
    std::vector<std::size_t> rank(c.dim + 2, 0);
    std::vector<std::vector<Integer>> tors(c.dim + 2);
    for (int k = 1; k <= c.dim; ++k) {
        if (coeff == Coefficients::Z) {
            SparseSmith s = sparse_smith(c.cells[k - 1].size(), c.cells[k].size(), c.boundary[k]);
            rank[k] = s.rank;
            tors[k] = s.torsion;
        } else {
            rank[k] = sparse_gf2_rank(c.cells[k - 1].size(), c.cells[k].size(), c.boundary[k]);
        }
    }
    for (int k = 0; k <= c.dim; ++k) {
        res.groups[k].free_rank = c.cells[k].size() - rank[k] - rank[k + 1];
        res.groups[k].torsion = tors[k + 1];
        std::sort(res.groups[k].torsion.begin(), res.groups[k].torsion.end());
    }
    return res;
}

TopHomology top_homology(const DoubleComplex& c) {
    TopHomology t;
    const int n = c.dim;
    const std::size_t tops = c.cells[n].size();
    // face -> (top cell, sign) incidences
    std::vector<std::vector<std::pair<std::uint32_t, int>>> inc(c.cells[n - 1].size());
    for (const auto& e : c.boundary[n]) inc[e.row].push_back({e.col, int(e.val)});
    t.closed = true;
    for (auto& v : inc) {
        // accumulate repeated (cell,face) incidences
        if (v.size() != 2 || v[0].second * v[1].second == 0 || std::abs(v[0].second) != 1 ||
            std::abs(v[1].second) != 1) {
            t.closed = false;
            break;
        }
    }
    if (!t.closed) return t;

    std::vector<int> eps(tops, 0);
    t.orientable = true;
    std::size_t seen = 0;
    std::queue<std::uint32_t> bfs;
    eps[0] = 1;
    bfs.push(0);
    ++seen;
    std::vector<std::vector<std::pair<std::uint32_t, int>>> nbrs(tops);
    for (const auto& v : inc) {
        auto [c1, s1] = v[0];
        auto [c2, s2] = v[1];
        int rel = -s1 * s2;  // eps[c2] = rel * eps[c1]
        nbrs[c1].push_back({c2, rel});
        nbrs[c2].push_back({c1, rel});
    }
    while (!bfs.empty()) {
        std::uint32_t u = bfs.front();
        bfs.pop();
        for (auto [v, rel] : nbrs[u]) {
            int want = rel * eps[u];
            if (eps[v] == 0) {
                eps[v] = want;
                bfs.push(v);
                ++seen;
            } else if (eps[v] != want) {
                t.orientable = false;
            }
        }
    }
    t.connected = seen == tops;
    if (t.closed && t.connected && t.orientable) t.h_top.free_rank = 1;
    return t;
}

// ---- Gromov link check ----

namespace {

// Piece 0 is P_Q; pieces 1+2i, 2+2i are the collars N+(B_i), N-(B_i).
// Walls are identified by nerve facet ids for P_Q; for collars, side walls
// carry the id of the P_Q facet whose class meets the collar on that side,
// and two virtual walls INTERFACE_P / INTERFACE_MID are the product ends.
struct GromovContext {
    const SimpleHandlebody& h;
    const SimplicialComplex& nerve;
    Quotient q;
    int m;
    std::vector<char> is_belt;
    std::vector<int> belt_of, sign_of;
    std::vector<std::map<int, int>> phi, phi_inv;

    static constexpr int kInterfaceP = -1;    // end that touches P_Q
    static constexpr int kInterfaceMid = -2;  // end that touches the other collar

    explicit GromovContext(const SimpleHandlebody& hh) : h(hh), nerve(hh.polytope.nerve) {
        ensure_valid(h);
        q = quotient_nerve(h);
        m = int(q.classes.size());
        is_belt.assign(nerve.vertex_count(), 0);
        belt_of.assign(nerve.vertex_count(), -1);
        sign_of.assign(nerve.vertex_count(), 0);
        phi.resize(h.belts.size());
        phi_inv.resize(h.belts.size());
        for (std::size_t bi = 0; bi < h.belts.size(); ++bi) {
            int plus = nerve.vertex_id(h.belts[bi].plus);
            int minus = nerve.vertex_id(h.belts[bi].minus);
            is_belt[plus] = is_belt[minus] = 1;
            belt_of[plus] = belt_of[minus] = int(bi);
            sign_of[plus] = +1;
            sign_of[minus] = -1;
            for (const auto& [f, t] : h.belts[bi].matching) {
                phi[bi][nerve.vertex_id(f)] = nerve.vertex_id(t);
                phi_inv[bi][nerve.vertex_id(t)] = nerve.vertex_id(f);
            }
        }
    }

    std::uint32_t color(int facet) const {
        return std::uint32_t(1) << q.class_of_facet[facet];
    }

    int piece_count() const { return 1 + 2 * int(h.belts.size()); }

    // nerve of a piece, with collar walls labelled by P_Q facets plus the
    // two interface labels
    SimplicialComplex piece_nerve(int piece) const {
        if (piece == 0) return nerve;
        int bi = (piece - 1) / 2;
        bool plus_side = ((piece - 1) % 2) == 0;
        int center = nerve.vertex_id(plus_side ? h.belts[bi].plus : h.belts[bi].minus);
        SimplicialComplex lk = nerve.link(center);
        std::vector<std::string> labels = lk.vertex_labels();
        int ip = int(labels.size());
        labels.push_back("@P");
        int imid = int(labels.size());
        labels.push_back("@MID");
        std::vector<std::vector<int>> gens;
        for (const auto& mx : lk.maximal_simplices()) {
            auto a = mx;
            a.push_back(ip);
            auto b2 = mx;
            b2.push_back(imid);
            gens.push_back(a);
            gens.push_back(b2);
        }
        if (gens.empty()) gens = {{ip}, {imid}};
        return SimplicialComplex::from_ids(std::move(labels), std::move(gens));
    }

    // Crossing wall `wall` (facet id, or interface code) from chamber
    // (piece, g); returns the neighbor and maps the face view.
    std::pair<int, std::uint32_t> cross(int piece, std::uint32_t g, int wall,
                                        std::vector<int>& view) const {
        if (piece == 0) {
            if (!is_belt[wall]) {
                // reflection; view unchanged
                return {0, g ^ color(wall)};
            }
            int bi = belt_of[wall];
            bool plus_side = sign_of[wall] > 0;
            int collar = 1 + 2 * bi + (plus_side ? 0 : 1);
            // wall B+- becomes @P; other facets keep their labels
            for (int& f : view)
                if (f == wall) f = kInterfaceP;
            return {collar, g};
        }
        int bi = (piece - 1) / 2;
        bool plus_side = ((piece - 1) % 2) == 0;
        if (wall == kInterfaceP) {
            int center = nerve.vertex_id(plus_side ? h.belts[bi].plus : h.belts[bi].minus);
            for (int& f : view)
                if (f == kInterfaceP) f = center;
            return {0, g};
        }
        if (wall == kInterfaceMid) {
            // into the opposite collar; side walls map along the matching
            int other = 1 + 2 * bi + (plus_side ? 1 : 0);
            for (int& f : view) {
                if (f == kInterfaceMid) continue;
                if (f == kInterfaceP) continue;  // cannot happen: opposite ends
                f = plus_side ? phi[bi].at(f) : phi_inv[bi].at(f);
            }
            return {other, g};
        }
        // side reflection
        return {piece, g ^ color(wall)};
    }
};

} // namespace

GromovReport gromov_link_check(const SimpleHandlebody& h, int cap_m) {
    GromovContext ctx(h);
    if (ctx.m > 26) throw resource_error("too many facet classes for the Gromov check");
    GromovReport rep;
    rep.closure_ok = true;
    rep.npc = true;

    const bool full = ctx.m <= cap_m;
    const std::uint32_t gmax = full ? (std::uint32_t(1) << ctx.m) : 1;

    for (int piece = 0; piece < ctx.piece_count(); ++piece) {
        SimplicialComplex pn = ctx.piece_nerve(piece);
        GromovReport::PieceReport pr;
        if (piece == 0)
            pr.piece = "P_Q";
        else
            pr.piece = std::string(((piece - 1) % 2) == 0 ? "N+(" : "N-(") +
                       h.belts[(piece - 1) / 2].label + ")";

        // faces of the piece in wall coordinates
        auto to_walls = [&](const std::vector<int>& simplex) {
            std::vector<int> walls;
            for (int v : simplex) {
                const std::string& lab = pn.label(v);
                if (lab == "@P")
                    walls.push_back(GromovContext::kInterfaceP);
                else if (lab == "@MID")
                    walls.push_back(GromovContext::kInterfaceMid);
                else
                    walls.push_back(ctx.nerve.vertex_id(lab));
            }
            std::sort(walls.begin(), walls.end());
            return walls;
        };

        auto faces = pn.all_faces();
        std::vector<std::vector<int>> wall_sets;
        wall_sets.reserve(faces.size());
        for (const auto& f : faces) wall_sets.push_back(to_walls(f));

        // packed walk state: piece | g | sorted wall view (interface codes
        // mapped above the facet range)
        const int wall_code_base = int(ctx.nerve.vertex_count());
        auto wall_code = [&](int wall) {
            if (wall == GromovContext::kInterfaceP) return wall_code_base;
            if (wall == GromovContext::kInterfaceMid) return wall_code_base + 1;
            return wall;
        };
        auto encode = [&](int pc, std::uint32_t gg, const std::vector<int>& view) {
            unsigned __int128 key = std::uint32_t(pc);
            key = (key << 32) | gg;
            for (int w : view) key = (key << 10) | unsigned(wall_code(w) + 1);
            return key;
        };

        bool piece_ok = true;
        std::vector<unsigned __int128> states;
        std::vector<std::uint64_t> chambers;
        std::vector<std::pair<std::pair<int, std::uint32_t>, std::vector<int>>> queue;
        for (std::uint32_t g = 0; g < gmax; ++g) {
            for (const auto& walls : wall_sets) {
                const std::size_t want = std::size_t(1) << walls.size();
                states.clear();
                chambers.clear();
                queue.clear();
                queue.push_back({{piece, g}, walls});
                std::size_t head = 0;
                while (head < queue.size()) {
                    auto [pg, view] = queue[head++];
                    auto [pc, gg] = pg;
                    unsigned __int128 key = encode(pc, gg, view);
                    if (std::find(states.begin(), states.end(), key) != states.end()) continue;
                    states.push_back(key);
                    std::uint64_t ch = (std::uint64_t(pc) << 32) | gg;
                    if (std::find(chambers.begin(), chambers.end(), ch) == chambers.end())
                        chambers.push_back(ch);
                    if (states.size() > 2 * want) break;
                    for (int wall : view) {
                        std::vector<int> nview = view;
                        auto [np, ng] = ctx.cross(pc, gg, wall, nview);
                        std::sort(nview.begin(), nview.end());
                        queue.push_back({{np, ng}, std::move(nview)});
                    }
                }
                if (chambers.size() != want || states.size() != want) {
                    piece_ok = false;
                    rep.closure_ok = false;
                }
            }
            pr.vertices_checked++;
        }
        pr.faces_checked = faces.size();
        if (!piece_ok)
            throw inconsistency_error("a vertex link in the cubical double matches neither nerve");
        // assembled link = the face set of the piece nerve; compare + flagness
        pr.link_matches_nerve = true;
        pr.link_flag = pn.is_flag();
        rep.npc = rep.npc && pr.link_flag;
        rep.pieces.push_back(std::move(pr));
    }
    return rep;
}

GroupBall enumerate_group_ball(const SimpleHandlebody& h, int max_length, std::size_t cap) {
    Presentation p = Presentation::from_handlebody(h);
    Ball ball = enumerate_ball(p, max_length, cap);
    GroupBall out;
    for (const auto& layer : ball.by_length) out.count_by_length.push_back(layer.size());
    out.stabilized = ball.stabilized;
    out.total = ball.total();
    for (const auto& layer : ball.by_length)
        for (const Word& w : layer) {
            std::ostringstream os;
            if (w.empty()) os << "e";
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i) os << " ";
                const Letter& l = w[i];
                if (l.kind == Letter::Kind::S)
                    os << "sF" << p.letter_label(l.id);
                else
                    os << "tB" << p.belt_label(l.id) << (l.sign < 0 ? "^-1" : "");
            }
            out.forms.push_back(os.str());
        }
    return out;
}

} // namespace hb
