#include "handlebody/instances.hpp"

#include "handlebody/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace hb {

namespace {

std::vector<std::string> num_labels(int n, const std::string& prefix = "") {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

SimpleHandlebody polytope_only(int dim, std::vector<std::string> labels,
                               std::vector<std::vector<std::string>> simplices) {
    SimpleHandlebody h;
    h.polytope.dim = dim;
    h.polytope.nerve = SimplicialComplex(std::move(labels), simplices);
    return h;
}

} // namespace

SimpleHandlebody make_interval() {
    return polytope_only(1, {"1", "2"}, {{"1"}, {"2"}});
}

SimpleHandlebody make_polygon(int sides) {
    if (sides < 3) throw input_error("a polygon needs at least 3 sides");
    std::vector<std::vector<std::string>> edges;
    for (int i = 1; i <= sides; ++i)
        edges.push_back({std::to_string(i), std::to_string(i % sides + 1)});
    return polytope_only(2, num_labels(sides), std::move(edges));
}

SimpleHandlebody make_simplex3() {
    std::vector<std::vector<std::string>> tris;
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b)
            for (int c = b + 1; c <= 4; ++c)
                tris.push_back({std::to_string(a), std::to_string(b), std::to_string(c)});
    return polytope_only(3, num_labels(4), std::move(tris));
}

SimpleHandlebody make_cube() {
    // octahedron boundary; facets i and i+3 are the opposite pairs
    auto opposite = [](int a, int b) { return (a % 3) == (b % 3); };
    std::vector<std::vector<std::string>> tris;
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b)
            for (int c = b + 1; c <= 6; ++c) {
                if (opposite(a, b) || opposite(a, c) || opposite(b, c)) continue;
                tris.push_back({std::to_string(a), std::to_string(b), std::to_string(c)});
            }
    return polytope_only(3, num_labels(6), std::move(tris));
}

SimpleHandlebody make_prism(int sides) {
    if (sides < 3) throw input_error("a prism needs at least 3 sides");
    std::vector<std::string> labels = {"T1", "T2"};
    for (int i = 1; i <= sides; ++i) labels.push_back("S" + std::to_string(i));
    std::vector<std::vector<std::string>> tris;
    for (int i = 1; i <= sides; ++i) {
        std::string a = "S" + std::to_string(i);
        std::string b = "S" + std::to_string(i % sides + 1);
        tris.push_back({"T1", a, b});
        tris.push_back({"T2", a, b});
    }
    return polytope_only(3, std::move(labels), std::move(tris));
}

SimpleHandlebody make_dodecahedron() {
    // nerve = icosahedron: 1 = top cap, 2..6 upper ring, 7..11 lower ring,
    // 12 = bottom cap
    auto u = [](int i) { return std::to_string(2 + (i % 5)); };
    auto l = [](int i) { return std::to_string(7 + (i % 5)); };
    std::vector<std::vector<std::string>> tris;
    for (int i = 0; i < 5; ++i) {
        tris.push_back({"1", u(i), u(i + 1)});
        tris.push_back({"12", l(i), l(i + 1)});
        tris.push_back({u(i), u(i + 1), l(i + 1)});
        tris.push_back({u(i), l(i), l(i + 1)});
    }
    return polytope_only(3, num_labels(12), std::move(tris));
}

SimpleHandlebody make_genus1_square() {
    // 3x4 triangulated grid torus (directions e1, e2, e1+e2) cut along the
    // column i=0; columns P (plus copy), M, N, Q (minus copy), rings of 4.
    auto P = [](int j) { return "P" + std::to_string(((j % 4) + 4) % 4); };
    auto M = [](int j) { return "M" + std::to_string(((j % 4) + 4) % 4); };
    auto N = [](int j) { return "N" + std::to_string(((j % 4) + 4) % 4); };
    auto Q = [](int j) { return "Q" + std::to_string(((j % 4) + 4) % 4); };

    std::vector<std::string> labels = {"Bp", "Bm"};
    for (int j = 0; j < 4; ++j) labels.push_back(P(j));
    for (int j = 0; j < 4; ++j) labels.push_back(M(j));
    for (int j = 0; j < 4; ++j) labels.push_back(N(j));
    for (int j = 0; j < 4; ++j) labels.push_back(Q(j));

    std::vector<std::vector<std::string>> tris;
    for (int j = 0; j < 4; ++j) {
        tris.push_back({"Bp", P(j), P(j + 1)});
        tris.push_back({"Bm", Q(j), Q(j + 1)});
        // band between columns i and i+1: {x_j, y_j, y_{j+1}} and {x_j, x_{j+1}, y_{j+1}}
        tris.push_back({P(j), M(j), M(j + 1)});
        tris.push_back({P(j), P(j + 1), M(j + 1)});
        tris.push_back({M(j), N(j), N(j + 1)});
        tris.push_back({M(j), M(j + 1), N(j + 1)});
        tris.push_back({N(j), Q(j), Q(j + 1)});
        tris.push_back({N(j), N(j + 1), Q(j + 1)});
    }
    SimpleHandlebody h = polytope_only(3, std::move(labels), std::move(tris));
    CuttingBelt belt;
    belt.label = "B";
    belt.plus = "Bp";
    belt.minus = "Bm";
    for (int j = 0; j < 4; ++j) belt.matching[P(j)] = Q(j);
    h.belts.push_back(std::move(belt));
    return h;
}

SimpleHandlebody make_genus1_nocross() {
    // Tube of three 5-rings; the lower antiprism band is shifted two steps.
    // Every middle vertex sees only consecutive ring vertices on each side,
    // so belt-crossing chain completions always collide in one facet class.
    auto A = [](int i) { return "A" + std::to_string(((i % 5) + 5) % 5); };
    auto M = [](int i) { return "M" + std::to_string(((i % 5) + 5) % 5); };
    auto E = [](int i) { return "E" + std::to_string(((i % 5) + 5) % 5); };

    std::vector<std::string> labels = {"Bp", "Bm"};
    for (int i = 0; i < 5; ++i) labels.push_back(A(i));
    for (int i = 0; i < 5; ++i) labels.push_back(M(i));
    for (int i = 0; i < 5; ++i) labels.push_back(E(i));

    std::vector<std::vector<std::string>> tris;
    for (int k = 0; k < 5; ++k) {
        tris.push_back({"Bp", A(k), A(k + 1)});
        tris.push_back({"Bm", E(k), E(k + 1)});
        tris.push_back({A(k), A(k + 1), M(k)});
        tris.push_back({A(k + 1), M(k), M(k + 1)});
        tris.push_back({M(k), E(k + 2), E(k + 3)});
        tris.push_back({M(k), M(k + 1), E(k + 3)});
    }

    SimpleHandlebody h = polytope_only(3, std::move(labels), std::move(tris));
    CuttingBelt belt;
    belt.label = "B";
    belt.plus = "Bp";
    belt.minus = "Bm";
    for (int i = 0; i < 5; ++i) belt.matching[A(i)] = E(i);
    h.belts.push_back(std::move(belt));
    return h;
}

SimpleHandlebody random_polytope3(std::uint64_t seed, int facet_count) {
    if (facet_count < 4) throw input_error("a simple 3-polytope has at least 4 facets");
    std::mt19937_64 rng(seed);

    // triangulated sphere as a set of sorted triangles on 0..v-1
    std::set<std::vector<int>> tris;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            for (int c = b + 1; c < 4; ++c) tris.insert({a, b, c});
    int v = 4;

    auto degree = [&](int x) {
        int d = 0;
        for (const auto& t : tris)
            if (std::binary_search(t.begin(), t.end(), x)) ++d;
        return d;  // triangles at x == edges at x on a sphere
    };
    auto has_edge = [&](int a, int b) {
        for (const auto& t : tris)
            if (std::binary_search(t.begin(), t.end(), a) &&
                std::binary_search(t.begin(), t.end(), b))
                return true;
        return false;
    };

    auto flip_random_edge = [&]() {
        // collect edges with their two triangles
        std::map<std::pair<int, int>, std::vector<std::vector<int>>> et;
        for (const auto& t : tris) {
            et[{t[0], t[1]}].push_back(t);
            et[{t[0], t[2]}].push_back(t);
            et[{t[1], t[2]}].push_back(t);
        }
        std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> flippable;
        for (const auto& [e, ts] : et) {
            if (ts.size() != 2) continue;
            std::vector<int> others;
            for (const auto& t : ts)
                for (int x : t)
                    if (x != e.first && x != e.second) others.push_back(x);
            int c = others[0], d = others[1];
            if (c == d || has_edge(c, d)) continue;
            if (degree(e.first) <= 3 || degree(e.second) <= 3) continue;
            flippable.push_back({e, {std::min(c, d), std::max(c, d)}});
        }
        if (flippable.empty()) return;
        auto [e, cd] = flippable[rng() % flippable.size()];
        auto [a, bb] = e;
        auto [c, d] = cd;
        std::vector<int> t1 = {a, bb, c}, t2 = {a, bb, d};
        std::sort(t1.begin(), t1.end());
        std::sort(t2.begin(), t2.end());
        tris.erase(t1);
        tris.erase(t2);
        std::vector<int> n1 = {a, c, d}, n2 = {bb, c, d};
        std::sort(n1.begin(), n1.end());
        std::sort(n2.begin(), n2.end());
        tris.insert(n1);
        tris.insert(n2);
    };

    while (v < facet_count) {
        // stellar subdivision of a random triangle (dual: cut a vertex)
        auto it = tris.begin();
        std::advance(it, rng() % tris.size());
        std::vector<int> t = *it;
        tris.erase(it);
        for (int i = 0; i < 3; ++i) {
            std::vector<int> nt = {t[i], t[(i + 1) % 3], v};
            std::sort(nt.begin(), nt.end());
            tris.insert(nt);
        }
        ++v;
        int flips = int(rng() % 3);
        for (int i = 0; i < flips; ++i) flip_random_edge();
    }

    std::vector<std::vector<std::string>> simplices;
    for (const auto& t : tris)
        simplices.push_back({std::to_string(t[0] + 1), std::to_string(t[1] + 1),
                             std::to_string(t[2] + 1)});
    return polytope_only(3, num_labels(v), std::move(simplices));
}

const std::vector<BundledInstance>& bundled_instances() {
    static const std::vector<BundledInstance> kInstances = [] {
        std::vector<BundledInstance> v;
        v.push_back({"interval", "1-polytope; the double is a circle", make_interval()});
        v.push_back({"square", "square 2-polytope; the double is the 2-torus", make_polygon(4)});
        v.push_back({"pentagon", "pentagon 2-polytope; the double is a genus-5 surface",
                     make_polygon(5)});
        v.push_back({"simplex3", "3-simplex; not flag, the double is the 3-sphere",
                     make_simplex3()});
        v.push_back({"cube", "cube; flag with three quadrilateral girdles", make_cube()});
        v.push_back({"prism3", "triangular prism; one Delta^2-belt", make_prism(3)});
        v.push_back({"prism5", "pentagonal prism; flag with five square belts", make_prism(5)});
        v.push_back({"dodecahedron", "dodecahedron; flag, no square belts", make_dodecahedron()});
        v.push_back({"genus1_square",
                     "genus-1 handlebody from a cut 3x4 grid torus; has belt-crossing squares",
                     make_genus1_square()});
        v.push_back({"genus1_nocross",
                     "genus-1 handlebody from a shifted 5/5/5 tube torus; no square belts",
                     make_genus1_nocross()});
        return v;
    }();
    return kInstances;
}

const SimpleHandlebody& bundled(const std::string& name) {
    for (const auto& b : bundled_instances())
        if (b.name == name) return b.handlebody;
    throw input_error("unknown bundled instance: " + name);
}

} // namespace hb
