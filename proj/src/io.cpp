#include "handlebody/io.hpp"

#include "handlebody/errors.hpp"

#include <fstream>
#include <sstream>

namespace hb {

namespace {

constexpr const char* kInstanceSchema = "simple-handlebody/1";

} // namespace

SimpleHandlebody parse_instance(const ordered_json& j) {
    try {
        if (!j.is_object()) throw input_error("instance file is not a JSON object");
        if (j.contains("schema") && j.at("schema").get<std::string>() != kInstanceSchema)
            throw input_error("unknown instance schema");
        SimpleHandlebody h;
        h.polytope.dim = j.at("dimension").get<int>();
        std::vector<std::string> facets = j.at("facets").get<std::vector<std::string>>();
        std::vector<std::vector<std::string>> nerve =
            j.at("nerve").get<std::vector<std::vector<std::string>>>();
        h.polytope.nerve = SimplicialComplex(std::move(facets), nerve);
        if (j.contains("belts")) {
            int index = 0;
            for (const auto& bj : j.at("belts")) {
                CuttingBelt b;
                ++index;
                b.label = bj.contains("label") ? bj.at("label").get<std::string>()
                                               : std::to_string(index);
                b.plus = bj.at("plus").get<std::string>();
                b.minus = bj.at("minus").get<std::string>();
                for (const auto& [from, to] : bj.at("matching").items())
                    b.matching[from] = to.get<std::string>();
                h.belts.push_back(std::move(b));
            }
        }
        return h;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("malformed instance file: ") + e.what());
    }
}

SimpleHandlebody load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open instance file: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("instance file is not valid JSON: ") + e.what());
    }
    return parse_instance(j);
}

ordered_json serialize_instance(const SimpleHandlebody& h) {
    ordered_json j;
    j["schema"] = kInstanceSchema;
    j["dimension"] = h.polytope.dim;
    j["facets"] = h.polytope.nerve.vertex_labels();
    ordered_json nerve = ordered_json::array();
    for (const auto& m : h.polytope.nerve.maximal_simplices()) {
        ordered_json s = ordered_json::array();
        for (int v : m) s.push_back(h.polytope.nerve.label(v));
        nerve.push_back(std::move(s));
    }
    j["nerve"] = std::move(nerve);
    ordered_json belts = ordered_json::array();
    for (const auto& b : h.belts) {
        ordered_json bj;
        bj["label"] = b.label;
        bj["plus"] = b.plus;
        bj["minus"] = b.minus;
        ordered_json match;
        for (const auto& [from, to] : b.matching) match[from] = to;
        bj["matching"] = std::move(match);
        belts.push_back(std::move(bj));
    }
    j["belts"] = std::move(belts);
    return j;
}

std::string instance_hash(const SimpleHandlebody& h) {
    std::string s = serialize_instance(h).dump();
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : s) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << hash;
    return os.str();
}

// ---- word syntax ----

Word parse_word(const Presentation& p, const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok.rfind("sF", 0) == 0) {
            w.push_back({Letter::Kind::S, p.letter_by_facet(tok.substr(2)), +1});
        } else if (tok.rfind("tB", 0) == 0) {
            std::string rest = tok.substr(2);
            int sign = +1;
            if (rest.size() >= 3 && rest.substr(rest.size() - 3) == "^-1") {
                sign = -1;
                rest = rest.substr(0, rest.size() - 3);
            }
            w.push_back({Letter::Kind::T, p.belt_by_label(rest), sign});
        } else {
            throw input_error("cannot parse word token: " + tok);
        }
    }
    return w;
}

std::string print_word(const Presentation& p, const Word& w) {
    if (w.empty()) return "e";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << " ";
        const Letter& l = w[i];
        if (l.kind == Letter::Kind::S)
            os << "sF" << p.letter_label(l.id);
        else
            os << "tB" << p.belt_label(l.id) << (l.sign < 0 ? "^-1" : "");
    }
    return os.str();
}

std::string print_normal_form(const Presentation& p, const NormalForm& nf) {
    return print_word(p, nf.to_word());
}

// ---- payloads ----

ordered_json to_json(const ValidationReport& rep) {
    ordered_json j;
    j["valid"] = rep.valid();
    ordered_json issues = ordered_json::array();
    for (const auto& i : rep.issues) {
        ordered_json ij;
        ij["code"] = i.code;
        ij["message"] = i.message;
        issues.push_back(std::move(ij));
    }
    j["violations"] = std::move(issues);
    return j;
}

std::string degree_homology_to_string(const DegreeHomology& g, Coefficients coeff) {
    const char* ring = coeff == Coefficients::Z ? "Z" : "Z2";
    std::ostringstream os;
    bool first = true;
    if (g.free_rank > 0) {
        os << ring;
        if (g.free_rank > 1) os << "^" << g.free_rank;
        first = false;
    }
    for (const Integer& t : g.torsion) {
        if (!first) os << " + ";
        os << "Z/" << t;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

ordered_json degree_json(const DegreeHomology& g, Coefficients coeff) {
    ordered_json j;
    j["free_rank"] = g.free_rank;
    ordered_json tors = ordered_json::array();
    for (const Integer& t : g.torsion) tors.push_back(t.str());
    j["torsion"] = std::move(tors);
    j["pretty"] = degree_homology_to_string(g, coeff);
    return j;
}

} // namespace

ordered_json to_json(const HomologyResult& h, Coefficients coeff) {
    ordered_json j = ordered_json::array();
    for (const auto& g : h.groups) j.push_back(degree_json(g, coeff));
    return j;
}

ordered_json to_json(const BeltWitness& w) {
    ordered_json j;
    if (w.kind == BeltWitness::Kind::Delta) {
        j["kind"] = "Delta" + std::to_string(int(w.facet_classes.size()) - 1);
        j["facet_classes"] = w.facet_classes;
    } else {
        j["kind"] = "Square";
        j["facet_classes"] = w.facet_classes;
        j["crossing_belts"] = w.crossing_belts;
        if (!w.crossing_belts.empty()) {
            j["f1_chain"] = w.f1_chain;
            j["f3_chain"] = w.f3_chain;
            j["f2"] = w.f2;
            j["f4"] = w.f4;
            ordered_json dirs = ordered_json::array();
            for (int d : w.crossing_dirs) dirs.push_back(d > 0 ? "+" : "-");
            j["crossing_directions"] = std::move(dirs);
        }
    }
    return j;
}

ordered_json to_json(const DoubleHomology& d) {
    ordered_json j;
    j["coefficients"] = d.coeff == Coefficients::Z ? "Z" : "Z2";
    j["homology"] = to_json(d.total, d.coeff);
    ordered_json contribs = ordered_json::array();
    for (const auto& c : d.contributions) {
        ordered_json cj;
        cj["subset"] = c.subset;
        ordered_json per;
        for (std::size_t k = 0; k < c.per_degree.size(); ++k)
            if (!c.per_degree[k].trivial())
                per["H" + std::to_string(k)] = degree_json(c.per_degree[k], d.coeff);
        cj["contributes"] = std::move(per);
        contribs.push_back(std::move(cj));
    }
    j["contributions"] = std::move(contribs);
    return j;
}

ordered_json to_json(const std::vector<SubsetContribution>& support, int dim) {
    ordered_json j = ordered_json::array();
    for (const auto& c : support) {
        ordered_json cj;
        if (c.belt) cj["t_belt"] = *c.belt;
        cj["letters"] = c.subset;
        ordered_json per;
        for (int k = 2; k <= dim && k < int(c.per_degree.size()); ++k)
            if (!c.per_degree[k].trivial())
                per["H" + std::to_string(k)] = degree_json(c.per_degree[k], Coefficients::Z);
        cj["contributes"] = std::move(per);
        cj["multiplicity"] = "per element with S(w) = T";
        j.push_back(std::move(cj));
    }
    return j;
}

namespace {

std::string verdict(Verdict v, const char* nd = "not-determined") {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        default: return nd;
    }
}

} // namespace

ordered_json to_json(const CurvatureReport& r) {
    ordered_json j;
    j["dim"] = r.dim;
    j["genus"] = r.genus;
    j["flag"] = r.flag;
    if (r.square_belts)
        j["square_belts"] = *r.square_belts;
    else
        j["square_belts"] = nullptr;
    j["aspherical"] = r.aspherical;
    j["npc_double"] = r.npc_double;
    j["has_Z2"] = verdict(r.has_z2, "not-applicable");
    switch (r.negative_curvature) {
        case NegativeCurvature::Yes: j["negative_curvature"] = "yes"; break;
        case NegativeCurvature::No: j["negative_curvature"] = "no"; break;
        case NegativeCurvature::NecessaryConditionsMet:
            j["negative_curvature"] = "necessary-conditions-met";
            break;
    }
    switch (r.hyperbolic) {
        case Hyperbolic::Yes: j["hyperbolic"] = "yes"; break;
        case Hyperbolic::No: j["hyperbolic"] = "no"; break;
        case Hyperbolic::Unknown: j["hyperbolic"] = "unknown"; break;
        case Hyperbolic::Never: j["hyperbolic"] = "never"; break;
    }
    j["psc"] = verdict(r.psc);
    j["two_neighborly"] = r.two_neighborly;
    j["double_simply_connected"] = r.double_simply_connected;
    j["double_pi1_infinite"] = verdict(r.double_pi1_infinite);
    j["orientable_double"] = r.orientable_double;
    return j;
}

ordered_json to_json(const ChamberBall& b) {
    ordered_json j;
    j["radius"] = b.radius;
    j["count_by_length"] = b.count_by_length;
    j["total"] = b.chambers.size();
    j["interior_chambers"] = b.interior_count;
    j["interior_links_match_nerve"] = b.interior_links_match_nerve;
    j["closed"] = b.closed;
    j["chambers"] = b.chambers;
    return j;
}

ordered_json to_json(const GromovReport& g) {
    ordered_json j;
    j["npc"] = g.npc;
    j["closure_ok"] = g.closure_ok;
    ordered_json pieces = ordered_json::array();
    for (const auto& p : g.pieces) {
        ordered_json pj;
        pj["piece"] = p.piece;
        pj["link_matches_nerve"] = p.link_matches_nerve;
        pj["link_flag"] = p.link_flag;
        pj["faces_checked"] = p.faces_checked;
        pj["vertices_checked"] = p.vertices_checked;
        pieces.push_back(std::move(pj));
    }
    j["pieces"] = std::move(pieces);
    return j;
}

ordered_json to_json(const GroupBall& g) {
    ordered_json j;
    j["count_by_length"] = g.count_by_length;
    j["total"] = g.total;
    j["stabilized"] = g.stabilized;
    j["forms"] = g.forms;
    return j;
}

} // namespace hb
