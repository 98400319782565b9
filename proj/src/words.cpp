#include "handlebody/words.hpp"

#include "handlebody/errors.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace hb {

Word inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (Letter& l : out)
        if (l.kind == Letter::Kind::T) l.sign = -l.sign;
    return out;
}

Presentation Presentation::from_handlebody(const SimpleHandlebody& h) {
    ensure_valid(h);
    const auto& nerve = h.polytope.nerve;
    Presentation p;
    std::vector<char> is_belt(nerve.vertex_count(), 0);
    for (const auto& b : h.belts) {
        is_belt[nerve.vertex_id(b.plus)] = 1;
        is_belt[nerve.vertex_id(b.minus)] = 1;
    }
    p.letter_of_facet_.assign(nerve.vertex_count(), -1);
    for (std::size_t v = 0; v < nerve.vertex_count(); ++v) {
        if (is_belt[v]) continue;
        p.letter_of_facet_[v] = int(p.letter_labels_.size());
        p.letter_labels_.push_back(nerve.label(int(v)));
    }
    if (p.letter_labels_.size() > 64)
        throw resource_error("presentations are limited to 64 involutive letters");

    p.commute_.assign(p.letter_labels_.size(), 0);
    for (std::size_t v = 0; v < nerve.vertex_count(); ++v) {
        if (is_belt[v]) continue;
        for (int u : nerve.adjacency()[int(v)]) {
            if (is_belt[u]) continue;
            p.commute_[p.letter_of_facet_[v]] |= (std::uint64_t(1) << p.letter_of_facet_[u]);
        }
    }
    for (const auto& b : h.belts) {
        int bi = int(p.belt_labels_.size());
        p.belt_labels_.push_back(b.label);
        p.dom_.push_back(0);
        p.img_.push_back(0);
        p.phi_.emplace_back(p.letter_labels_.size(), -1);
        p.phi_inv_.emplace_back(p.letter_labels_.size(), -1);
        for (const auto& [from, to] : b.matching) {
            int lf = p.letter_of_facet_[nerve.vertex_id(from)];
            int lt = p.letter_of_facet_[nerve.vertex_id(to)];
            p.dom_[bi] |= (std::uint64_t(1) << lf);
            p.img_[bi] |= (std::uint64_t(1) << lt);
            p.phi_[bi][lf] = lt;
            p.phi_inv_[bi][lt] = lf;
        }
    }
    return p;
}

int Presentation::letter_by_facet(const std::string& facet_label) const {
    for (std::size_t i = 0; i < letter_labels_.size(); ++i)
        if (letter_labels_[i] == facet_label) return int(i);
    throw input_error("unknown involutive letter: sF" + facet_label);
}

int Presentation::belt_by_label(const std::string& label) const {
    for (std::size_t i = 0; i < belt_labels_.size(); ++i)
        if (belt_labels_[i] == label) return int(i);
    throw input_error("unknown belt letter: tB" + label);
}

std::vector<Word> Presentation::relators() const {
    std::vector<Word> out;
    auto s = [](int i) { return Letter{Letter::Kind::S, i, +1}; };
    auto t = [](int b, int sign) { return Letter{Letter::Kind::T, b, sign}; };
    for (int i = 0; i < num_letters(); ++i) out.push_back({s(i), s(i)});
    for (auto [i, j] : commutation_edges()) out.push_back({s(i), s(j), s(i), s(j)});
    for (int b = 0; b < num_belts(); ++b)
        for (int i = 0; i < num_letters(); ++i)
            if ((dom_[b] >> i) & 1) out.push_back({s(i), t(b, +1), s(phi_[b][i]), t(b, -1)});
    return out;
}

std::vector<std::pair<int, int>> Presentation::commutation_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < num_letters(); ++i)
        for (int j = i + 1; j < num_letters(); ++j)
            if (commute(i, j)) out.emplace_back(i, j);
    return out;
}

// ---- Coxeter layer ----

namespace {

// Stack reduction: append letters, cancelling against the latest visible
// occurrence (complete for right-angled groups by Tits' theorem).
std::vector<int> stack_reduce(const Presentation& p, const std::vector<int>& letters) {
    std::vector<int> out;
    for (int s : letters) {
        bool cancelled = false;
        for (int j = int(out.size()) - 1; j >= 0; --j) {
            if (out[j] == s) {
                out.erase(out.begin() + j);
                cancelled = true;
                break;
            }
            if (!p.commute(out[j], s)) break;
        }
        if (!cancelled) out.push_back(s);
    }
    return out;
}

bool has_right_descent(const Presentation& p, const std::vector<int>& reduced, int s) {
    for (int j = int(reduced.size()) - 1; j >= 0; --j) {
        if (reduced[j] == s) return true;
        if (!p.commute(reduced[j], s)) return false;
    }
    return false;
}

} // namespace

std::vector<int> coxeter_canonical(const Presentation& p, std::vector<int> letters) {
    std::vector<int> reduced = stack_reduce(p, letters);
    // lexicographically least linearization of the heap
    std::vector<int> out;
    out.reserve(reduced.size());
    while (!reduced.empty()) {
        std::size_t best = reduced.size();
        for (std::size_t pos = 0; pos < reduced.size(); ++pos) {
            bool source = true;
            for (std::size_t k = 0; k < pos && source; ++k)
                if (!p.commute(reduced[k], reduced[pos])) source = false;
            if (source && (best == reduced.size() || reduced[pos] < reduced[best])) best = pos;
        }
        out.push_back(reduced[best]);
        reduced.erase(reduced.begin() + best);
    }
    return out;
}

std::uint64_t support_mask(const Presentation&, const std::vector<int>& canonical) {
    std::uint64_t m = 0;
    for (int s : canonical) m |= (std::uint64_t(1) << s);
    return m;
}

bool in_parabolic(const Presentation& p, const std::vector<int>& canonical, std::uint64_t t_mask) {
    return (support_mask(p, canonical) & ~t_mask) == 0;
}

std::pair<std::vector<int>, std::vector<int>> coset_decompose(const Presentation& p,
                                                              const std::vector<int>& word,
                                                              std::uint64_t t_mask) {
    std::vector<int> u = coxeter_canonical(p, word);
    std::vector<int> t_part;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 0; s < p.num_letters(); ++s) {
            if (!((t_mask >> s) & 1)) continue;
            if (has_right_descent(p, u, s)) {
                u.push_back(s);
                u = stack_reduce(p, u);
                t_part.insert(t_part.begin(), s);
                changed = true;
                break;
            }
        }
    }
    return {coxeter_canonical(p, u), coxeter_canonical(p, t_part)};
}

std::pair<std::vector<int>, std::vector<int>> coset_decompose_left(const Presentation& p,
                                                                   const std::vector<int>& word,
                                                                   std::uint64_t t_mask) {
    std::vector<int> rev(word.rbegin(), word.rend());
    auto [rmin, rt] = coset_decompose(p, rev, t_mask);
    std::vector<int> w_min(rmin.rbegin(), rmin.rend());
    std::vector<int> w_t(rt.rbegin(), rt.rend());
    return {coxeter_canonical(p, w_t), coxeter_canonical(p, w_min)};  // (w_T, w_min)
}

// ---- HNN layer ----

std::size_t NormalForm::length() const {
    std::size_t n = g0.size();
    for (const auto& s : segments) n += 1 + s.g.size();
    return n;
}

Word NormalForm::to_word() const {
    Word w;
    auto s = [](int i) { return Letter{Letter::Kind::S, i, +1}; };
    for (int i : g0) w.push_back(s(i));
    for (const auto& seg : segments) {
        w.push_back(Letter{Letter::Kind::T, seg.belt, seg.sign});
        for (int i : seg.g) w.push_back(s(i));
    }
    return w;
}

NormalForm hnn_normal_form(const Presentation& p, const Word& w) {
    // split into segments
    std::vector<std::vector<int>> segs(1);
    std::vector<std::pair<int, int>> ts;  // (belt, sign)
    for (const Letter& l : w) {
        if (l.kind == Letter::Kind::S) {
            if (l.id < 0 || l.id >= p.num_letters()) throw input_error("letter out of range");
            segs.back().push_back(l.id);
        } else {
            if (l.id < 0 || l.id >= p.num_belts()) throw input_error("belt letter out of range");
            if (l.sign != 1 && l.sign != -1) throw input_error("bad t exponent");
            ts.emplace_back(l.id, l.sign);
            segs.emplace_back();
        }
    }

    auto map_letters = [&](const std::vector<int>& g, int belt, bool forward) {
        std::vector<int> out;
        out.reserve(g.size());
        for (int s : g) {
            int m = forward ? p.phi(belt, s) : p.phi_inv(belt, s);
            if (m < 0) throw inconsistency_error("conjugation table miss");
            out.push_back(m);
        }
        return out;
    };

    // Britton pinches: t^e g t^{-e} with g in the side parabolic.
    bool pinched = true;
    while (pinched) {
        pinched = false;
        for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
            if (ts[i].first != ts[i + 1].first || ts[i].second != -ts[i + 1].second) continue;
            int belt = ts[i].first;
            int eps = ts[i].second;
            std::vector<int> mid = coxeter_canonical(p, segs[i + 1]);
            std::uint64_t side = eps == -1 ? p.dom_mask(belt) : p.img_mask(belt);
            if (!in_parabolic(p, mid, side)) continue;
            std::vector<int> mapped = map_letters(mid, belt, eps == -1);
            // merge into segs[i]
            std::vector<int> merged = segs[i];
            merged.insert(merged.end(), mapped.begin(), mapped.end());
            merged.insert(merged.end(), segs[i + 2].begin(), segs[i + 2].end());
            segs[i] = std::move(merged);
            segs.erase(segs.begin() + i + 1, segs.begin() + i + 3);
            ts.erase(ts.begin() + i, ts.begin() + i + 2);
            pinched = true;
            break;
        }
    }

    // Coset sweep: pull the side-parabolic prefix of each g_i through its t.
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 1; i <= ts.size(); ++i) {
            int belt = ts[i - 1].first;
            int eps = ts[i - 1].second;
            std::uint64_t side = eps == +1 ? p.img_mask(belt) : p.dom_mask(belt);
            auto [w_t, w_min] = coset_decompose_left(p, segs[i], side);
            if (w_t.empty()) continue;
            std::vector<int> mapped = map_letters(w_t, belt, eps == -1);
            std::vector<int> grown = segs[i - 1];
            grown.insert(grown.end(), mapped.begin(), mapped.end());
            segs[i - 1] = coxeter_canonical(p, grown);
            segs[i] = w_min;
            moved = true;
        }
    }

    NormalForm nf;
    nf.g0 = coxeter_canonical(p, segs[0]);
    for (std::size_t i = 0; i < ts.size(); ++i)
        nf.segments.push_back({ts[i].first, ts[i].second, coxeter_canonical(p, segs[i + 1])});
    return nf;
}

std::size_t word_length(const Presentation& p, const Word& w) {
    return hnn_normal_form(p, w).length();
}

bool is_identity(const Presentation& p, const Word& w) {
    return hnn_normal_form(p, w).identity();
}

bool equal(const Presentation& p, const Word& u, const Word& v) {
    Word w = u;
    Word vi = inverse(v);
    w.insert(w.end(), vi.begin(), vi.end());
    return is_identity(p, w);
}

bool commutes(const Presentation& p, const Word& u, const Word& v) {
    Word w = u;
    w.insert(w.end(), v.begin(), v.end());
    Word ui = inverse(u), vi = inverse(v);
    w.insert(w.end(), ui.begin(), ui.end());
    w.insert(w.end(), vi.begin(), vi.end());
    return is_identity(p, w);
}

namespace {

std::vector<Letter> generator_list(const Presentation& p) {
    std::vector<Letter> gens;
    for (int i = 0; i < p.num_letters(); ++i) gens.push_back({Letter::Kind::S, i, +1});
    for (int b = 0; b < p.num_belts(); ++b) {
        gens.push_back({Letter::Kind::T, b, +1});
        gens.push_back({Letter::Kind::T, b, -1});
    }
    return gens;
}

} // namespace

Word cyclic_reduce(const Presentation& p, const Word& w) {
    Word cur = hnn_normal_form(p, w).to_word();
    auto gens = generator_list(p);
    bool improved = true;
    while (improved) {
        improved = false;
        std::size_t len = word_length(p, cur);
        for (const Letter& g : gens) {
            Word cand;
            Letter gi = g;
            if (gi.kind == Letter::Kind::T) gi.sign = -gi.sign;
            cand.push_back(gi);
            cand.insert(cand.end(), cur.begin(), cur.end());
            cand.push_back(g);
            NormalForm nf = hnn_normal_form(p, cand);
            if (nf.length() < len) {
                cur = nf.to_word();
                improved = true;
                break;
            }
        }
    }
    return cur;
}

std::vector<Letter> descent_set(const Presentation& p, const Word& w) {
    std::vector<Letter> out;
    std::size_t len = word_length(p, w);
    for (const Letter& g : generator_list(p)) {
        Word cand = w;
        cand.push_back(g);
        if (word_length(p, cand) < len) out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

TorsionStatus torsion_status(const Presentation& p, const Word& w) {
    Word c = cyclic_reduce(p, w);
    if (c.empty()) return TorsionStatus::Finite;
    std::vector<int> letters;
    for (const Letter& l : c) {
        if (l.kind == Letter::Kind::T) return TorsionStatus::Infinite;
        letters.push_back(l.id);
    }
    std::vector<int> canon = coxeter_canonical(p, letters);
    for (std::size_t i = 0; i < canon.size(); ++i)
        for (std::size_t j = i + 1; j < canon.size(); ++j)
            if (!p.commute(canon[i], canon[j])) return TorsionStatus::Infinite;
    return TorsionStatus::Finite;
}

// ---- Theorem B ----

std::optional<Z2Witness> z2_witness(const SimpleHandlebody& h) {
    auto squares = square_belts(h);
    if (squares.empty()) return std::nullopt;
    Presentation p = Presentation::from_handlebody(h);
    const BeltWitness& w = squares.front();

    auto s = [&](const std::string& facet) {
        return Letter{Letter::Kind::S, p.letter_by_facet(facet), +1};
    };
    Z2Witness out;
    out.from = w;
    out.x = {s(w.f1_chain.front()), s(w.f3_chain.front())};
    out.y.push_back(s(w.f2));
    std::vector<Letter> ts;
    for (std::size_t i = 0; i < w.crossing_belts.size(); ++i)
        ts.push_back({Letter::Kind::T, p.belt_by_label(w.crossing_belts[i]), w.crossing_dirs[i]});
    for (const Letter& t : ts) out.y.push_back(t);
    out.y.push_back(s(w.f4));
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        Letter t = *it;
        t.sign = -t.sign;
        out.y.push_back(t);
    }

    if (!commutes(p, out.x, out.y))
        throw inconsistency_error("square witness and word engine disagree: [x,y] != 1");
    for (int a = -4; a <= 4; ++a) {
        if (a == 0) continue;
        for (int b = -4; b <= 4; ++b) {
            if (b == 0) continue;
            Word pw;
            Word xa = a > 0 ? out.x : inverse(out.x);
            Word yb = b > 0 ? out.y : inverse(out.y);
            for (int i = 0; i < std::abs(a); ++i) pw.insert(pw.end(), xa.begin(), xa.end());
            for (int i = 0; i < std::abs(b); ++i) pw.insert(pw.end(), yb.begin(), yb.end());
            if (is_identity(p, pw))
                throw inconsistency_error("square witness fails bounded-power independence");
        }
    }
    return out;
}

bool has_Z2(const SimpleHandlebody& h) { return !square_belts(h).empty(); }

// ---- ball enumeration ----

std::size_t Ball::total() const {
    std::size_t n = 0;
    for (const auto& layer : by_length) n += layer.size();
    return n;
}

namespace {

std::vector<int> encode_word(const Word& w) {
    std::vector<int> key;
    key.reserve(w.size() * 2);
    for (const Letter& l : w) {
        key.push_back(l.kind == Letter::Kind::S ? 0 : (l.sign > 0 ? 1 : 2));
        key.push_back(l.id);
    }
    return key;
}

} // namespace

Ball enumerate_ball(const Presentation& p, int radius, std::size_t cap) {
    Ball ball;
    ball.by_length.resize(radius + 1);
    std::set<std::vector<int>> seen;
    Word eps;
    seen.insert(encode_word(eps));
    ball.by_length[0].push_back(eps);
    auto gens = generator_list(p);
    std::size_t count = 1;
    for (int r = 1; r <= radius; ++r) {
        for (const Word& w : ball.by_length[r - 1]) {
            for (const Letter& g : gens) {
                Word cand = w;
                cand.push_back(g);
                NormalForm nf = hnn_normal_form(p, cand);
                if (int(nf.length()) != r) continue;
                Word cw = nf.to_word();
                if (!seen.insert(encode_word(cw)).second) continue;
                ball.by_length[r].push_back(std::move(cw));
                if (++count > cap) throw resource_error("ball enumeration exceeded the element cap");
            }
        }
        if (ball.by_length[r].empty()) {
            ball.stabilized = true;
            break;
        }
    }
    return ball;
}

} // namespace hb
