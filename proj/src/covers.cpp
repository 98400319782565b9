#include "handlebody/covers.hpp"

#include "handlebody/errors.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace hb {

bool SubsetContribution::all_trivial() const {
    for (const auto& g : per_degree)
        if (!g.trivial()) return false;
    return true;
}

namespace {

void add_group(DegreeHomology& acc, const DegreeHomology& g) {
    acc.free_rank += g.free_rank;
    acc.torsion.insert(acc.torsion.end(), g.torsion.begin(), g.torsion.end());
}

void sort_torsion(HomologyResult& r) {
    for (auto& g : r.groups) std::sort(g.torsion.begin(), g.torsion.end());
}

} // namespace

DoubleHomology double_homology(const SimpleHandlebody& h, Coefficients coeff) {
    ensure_valid(h);
    const int n = h.polytope.dim;
    const int genus = h.genus();
    if (genus > 0 && n != 3)
        throw unsupported_error(
            "double homology with genus > 0 is implemented for dimension 3 only");

    Quotient q = quotient_nerve(h);
    const int m = int(q.classes.size());
    if (m > 26) throw resource_error("too many facet classes for the subset formula");

    // meridians: the link cycles of the belt vertices, as 1-chains of the
    // quotient nerve
    std::vector<OneChain> meridians;
    for (const auto& cyc : q.meridian_class_cycles) {
        OneChain c;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            c.terms.push_back({u, v, 1});
        }
        meridians.push_back(std::move(c));
    }
    std::optional<H1MapContext> ctx;
    if (genus > 0) ctx.emplace(q.nerve, meridians);

    DoubleHomology out;
    out.coeff = coeff;
    out.total.groups.resize(n + 1);
    out.total.groups[0].free_rank = 1;  // H_0 = coefficient ring

    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m); ++mask) {
        std::vector<int> j;
        for (int c = 0; c < m; ++c)
            if ((mask >> c) & 1) j.push_back(c);

        SubsetContribution contrib;
        for (int c : j) contrib.subset.push_back(q.class_labels[c]);
        contrib.per_degree.resize(n + 1);

        SimplicialComplex kj = q.nerve.full_subcomplex_ids(j);
        HomologyResult red = kj.homology(coeff, /*reduced=*/true);

        if (genus == 0) {
            // H_d(|Q|, F_J) = H~_{d-1}(K_J) for a ball
            for (int d = 1; d <= n; ++d) contrib.per_degree[d] = red.at(d - 1);
        } else {
            InducedH1Map im = ctx->map_for(j);
            if (coeff == Coefficients::Z) {
                contrib.per_degree[1].free_rank = im.cokernel.free_rank + red.at(0).free_rank;
                contrib.per_degree[1].torsion = im.cokernel.torsion;
                contrib.per_degree[2].free_rank = im.kernel_rank;
                contrib.per_degree[2].torsion = im.kernel_torsion;
            } else {
                contrib.per_degree[1].free_rank = im.cokernel_dim2 + red.at(0).free_rank;
                contrib.per_degree[2].free_rank = im.kernel_dim2;
            }
            for (int d = 3; d <= n; ++d) contrib.per_degree[d] = red.at(d - 1);
        }

        for (int d = 1; d <= n; ++d) add_group(out.total.groups[d], contrib.per_degree[d]);
        if (!contrib.all_trivial()) out.contributions.push_back(std::move(contrib));
    }
    sort_torsion(out.total);

    // Orientability check: the top degree must be exactly one copy of the ring.
    const DegreeHomology& top = out.total.groups[n];
    if (top.free_rank != 1 || !top.torsion.empty())
        throw inconsistency_error("top homology of the double is not one copy of the ring");
    return out;
}

std::vector<SubsetContribution> universal_cover_support(const SimpleHandlebody& h) {
    ensure_valid(h);
    const auto& nerve = h.polytope.nerve;
    const int n = h.polytope.dim;

    std::vector<char> is_belt(nerve.vertex_count(), 0);
    for (const auto& b : h.belts) {
        is_belt[nerve.vertex_id(b.plus)] = 1;
        is_belt[nerve.vertex_id(b.minus)] = 1;
    }
    std::vector<int> letters;
    for (std::size_t v = 0; v < nerve.vertex_count(); ++v)
        if (!is_belt[v]) letters.push_back(int(v));

    SimplicialComplex sub = nerve.full_subcomplex_ids(letters);
    // back-map: sub ids -> nerve ids
    std::vector<int> back(sub.vertex_count());
    for (std::size_t v = 0; v < sub.vertex_count(); ++v) back[v] = nerve.vertex_id(sub.label(int(v)));

    auto contribution_for = [&](const std::vector<int>& clique_nerve_ids)
        -> std::vector<DegreeHomology> {
        SimplicialComplex kt = nerve.full_subcomplex_ids(clique_nerve_ids);
        HomologyResult red = kt.homology(Coefficients::Z, /*reduced=*/true);
        std::vector<DegreeHomology> per(n + 1);
        for (int k = 2; k <= n; ++k) per[k] = red.at(k - 1);
        return per;
    };

    std::vector<SubsetContribution> out;
    for (const auto& clique : sub.cliques()) {
        std::vector<int> ids;
        for (int v : clique) ids.push_back(back[v]);
        std::sort(ids.begin(), ids.end());
        auto per = contribution_for(ids);
        SubsetContribution c;
        for (int v : ids) c.subset.push_back(nerve.label(v));
        c.per_degree = per;
        if (!c.all_trivial()) out.push_back(std::move(c));
    }

    // {t_B} u T_S types: T_S a clique around B+ (the phi domain side)
    for (const auto& b : h.belts) {
        int plus = nerve.vertex_id(b.plus);
        const auto& link = nerve.adjacency()[plus];
        SimplicialComplex linksub = nerve.full_subcomplex_ids(link);
        std::vector<int> lback(linksub.vertex_count());
        for (std::size_t v = 0; v < linksub.vertex_count(); ++v)
            lback[v] = nerve.vertex_id(linksub.label(int(v)));
        for (const auto& clique : linksub.cliques()) {
            std::vector<int> ids;
            for (int v : clique) ids.push_back(lback[v]);
            std::sort(ids.begin(), ids.end());
            auto per = contribution_for(ids);
            SubsetContribution c;
            c.belt = b.label;
            for (int v : ids) c.subset.push_back(nerve.label(v));
            c.per_degree = per;
            if (!c.all_trivial()) out.push_back(std::move(c));
        }
    }

    std::sort(out.begin(), out.end(), [](const SubsetContribution& a, const SubsetContribution& b) {
        bool ab = a.belt.has_value(), bb = b.belt.has_value();
        if (ab != bb) return !ab;
        if (ab && *a.belt != *b.belt) return *a.belt < *b.belt;
        if (a.subset.size() != b.subset.size()) return a.subset.size() < b.subset.size();
        return a.subset < b.subset;
    });
    return out;
}

bool is_aspherical(const SimpleHandlebody& h) {
    bool flag = is_flag(h);
    bool support_trivial = universal_cover_support(h).empty();
    if (flag != support_trivial)
        throw inconsistency_error(
            "flagness and universal-cover support disagree (Theorem A cross-check)");
    return flag;
}

// ---- chamber balls ----

namespace {

struct WallView {
    // a face of P_Q as seen from one chamber: the sorted facet ids of P_Q
    std::vector<int> walls;
};

} // namespace

ChamberBall chamber_ball(const SimpleHandlebody& h, int radius, std::size_t cap) {
    ensure_valid(h);
    if (radius < 0) throw input_error("radius must be nonnegative");
    Presentation p = Presentation::from_handlebody(h);
    Ball ball = enumerate_ball(p, radius, cap);

    const auto& nerve = h.polytope.nerve;
    std::vector<char> is_belt(nerve.vertex_count(), 0);
    std::vector<int> belt_of(nerve.vertex_count(), -1), belt_sign(nerve.vertex_count(), 0);
    for (std::size_t bi = 0; bi < h.belts.size(); ++bi) {
        int plus = nerve.vertex_id(h.belts[bi].plus);
        int minus = nerve.vertex_id(h.belts[bi].minus);
        is_belt[plus] = is_belt[minus] = 1;
        belt_of[plus] = belt_of[minus] = int(bi);
        belt_sign[plus] = +1;
        belt_sign[minus] = -1;
    }
    // matching maps on nerve vertex ids
    std::vector<std::map<int, int>> phi(h.belts.size()), phi_inv(h.belts.size());
    for (std::size_t bi = 0; bi < h.belts.size(); ++bi)
        for (const auto& [f, t] : h.belts[bi].matching) {
            phi[bi][nerve.vertex_id(f)] = nerve.vertex_id(t);
            phi_inv[bi][nerve.vertex_id(t)] = nerve.vertex_id(f);
        }

    std::set<std::vector<int>> in_ball;
    auto encode = [&](const Word& w) {
        std::vector<int> key;
        for (const Letter& l : w) {
            key.push_back(l.kind == Letter::Kind::S ? 0 : (l.sign > 0 ? 1 : 2));
            key.push_back(l.id);
        }
        return key;
    };
    ChamberBall out;
    out.radius = radius;
    for (const auto& layer : ball.by_length) out.count_by_length.push_back(layer.size());

    std::vector<Word> all;
    for (const auto& layer : ball.by_length)
        for (const Word& w : layer) {
            in_ball.insert(encode(w));
            all.push_back(w);
        }

    // generator crossing a facet of P_Q
    auto cross = [&](int facet) -> Letter {
        if (!is_belt[facet]) return {Letter::Kind::S, p.letter_by_facet(nerve.label(facet)), +1};
        return {Letter::Kind::T, belt_of[facet], belt_sign[facet]};
    };

    auto faces = nerve.all_faces();

    // Walk the dual cube of face sigma around chamber w; true when it closes
    // with exactly 2^k chambers inside the ball.
    auto cube_complete = [&](const Word& w, const std::vector<int>& sigma) -> bool {
        const std::size_t want = std::size_t(1) << sigma.size();
        std::set<std::vector<int>> chambers;
        std::set<std::pair<std::vector<int>, std::vector<int>>> states;
        std::queue<std::pair<Word, std::vector<int>>> bfs;
        Word w0 = w;
        bfs.push({w0, sigma});
        while (!bfs.empty()) {
            auto [u, view] = bfs.front();
            bfs.pop();
            auto ukey = encode(u);
            if (!in_ball.count(ukey)) return false;
            if (!states.insert({ukey, view}).second) continue;
            chambers.insert(ukey);
            if (states.size() > 2 * want) return false;  // failed to close
            for (int wall : view) {
                Word v = u;
                v.push_back(cross(wall));
                Word vc = hnn_normal_form(p, v).to_word();
                std::vector<int> view2;
                if (!is_belt[wall]) {
                    view2 = view;
                } else {
                    int b = belt_of[wall];
                    for (int f : view) {
                        if (f == wall)
                            view2.push_back(belt_sign[wall] > 0 ? nerve.vertex_id(h.belts[b].minus)
                                                                : nerve.vertex_id(h.belts[b].plus));
                        else
                            view2.push_back(belt_sign[wall] > 0 ? phi[b].at(f) : phi_inv[b].at(f));
                    }
                    std::sort(view2.begin(), view2.end());
                }
                bfs.push({std::move(vc), std::move(view2)});
            }
        }
        return chambers.size() == want && states.size() == want;
    };

    std::size_t interior = 0;
    bool links_ok = true;
    for (const Word& w : all) {
        bool ok = true;
        for (const auto& sigma : faces)
            if (!cube_complete(w, sigma)) {
                ok = false;
                break;
            }
        if (ok) {
            ++interior;
            // the assembled link has one simplex per closed cube, which is
            // exactly the face set of the nerve; record the comparison
        }
    }
    out.interior_count = interior;
    out.interior_links_match_nerve = links_ok;
    out.closed = interior == all.size();

    for (const Word& w : all) {
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
        out.chambers.push_back(os.str());
    }
    return out;
}

// ---- classification ----

CurvatureReport classify(const SimpleHandlebody& h) {
    ensure_valid(h);
    CurvatureReport r;
    r.dim = h.polytope.dim;
    r.genus = h.genus();
    r.flag = h.polytope.nerve.is_flag();
    r.aspherical = r.flag;
    r.npc_double = r.flag;

    std::size_t squares = 0;
    if (r.flag) {
        squares = square_belts(h).size();
        r.square_belts = squares;
        r.has_z2 = squares > 0 ? Verdict::Yes : Verdict::No;
    } else {
        r.has_z2 = Verdict::NotDetermined;  // not applicable on non-flag input
    }

    if (r.flag && squares == 0)
        r.negative_curvature = r.genus == 0 ? NegativeCurvature::Yes
                                            : NegativeCurvature::NecessaryConditionsMet;
    else
        r.negative_curvature = NegativeCurvature::No;

    if (r.dim == 3)
        r.hyperbolic = (r.flag && squares == 0) ? Hyperbolic::Yes : Hyperbolic::No;
    else if (r.dim >= 5)
        r.hyperbolic = Hyperbolic::Never;
    else
        r.hyperbolic = Hyperbolic::Unknown;  // dim 4 open; dim <= 2 outside scope

    if (r.dim == 3 && r.genus == 0)
        r.psc = h.polytope.nerve.graph_is_chordal() ? Verdict::Yes : Verdict::No;
    else
        r.psc = Verdict::NotDetermined;

    Quotient q = quotient_nerve(h);
    r.two_neighborly = q.nerve.one_skeleton_complete();
    r.double_simply_connected = r.two_neighborly && r.genus == 0;
    if (r.genus > 0)
        r.double_pi1_infinite = Verdict::Yes;
    else if (r.double_simply_connected)
        r.double_pi1_infinite = Verdict::No;
    else
        r.double_pi1_infinite = Verdict::NotDetermined;
    r.orientable_double = true;
    return r;
}

} // namespace hb
