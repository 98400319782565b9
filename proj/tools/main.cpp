// Batch front end: analyses of simple-handlebody instance files with
// machine-readable reports.  Exit codes: 0 ok, 1 invalid instance, 2
// unsupported configuration, 3 resource cap exceeded, 4 internal
// inconsistency.

#include "CLI11.hpp"
#include "handlebody/covers.hpp"
#include "handlebody/errors.hpp"
#include "handlebody/instances.hpp"
#include "handlebody/io.hpp"
#include "handlebody/oracle.hpp"
#include "handlebody/words.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace hb;

namespace {

struct Options {
    std::string format = "text";
    std::string coeff = "z";
    std::string space = "double";
    int radius = 2;
    int cap_m = 12;
    int cap_length = 10;
};

Coefficients parse_coeff(const std::string& s) {
    if (s == "z" || s == "Z") return Coefficients::Z;
    if (s == "z2" || s == "Z2") return Coefficients::Z2;
    throw input_error("unknown coefficient ring: " + s + " (use z or z2)");
}

void emit(const Options& opt, const std::string& command, const std::string& instance_path,
          const SimpleHandlebody* h, const ordered_json& result,
          const std::vector<std::string>& diagnostics = {}) {
    if (opt.format == "json") {
        ordered_json rep;
        rep["schema"] = "handlebody-report/1";
        rep["command"] = command;
        rep["instance"] = instance_path;
        if (h) rep["hash"] = instance_hash(*h);
        rep["result"] = result;
        rep["diagnostics"] = diagnostics;
        std::cout << rep.dump(2) << "\n";
    } else {
        std::cout << "# " << command;
        if (!instance_path.empty()) std::cout << " " << instance_path;
        if (h) std::cout << " (hash " << instance_hash(*h) << ")";
        std::cout << "\n";
        std::cout << result.dump(2) << "\n";
        for (const auto& d : diagnostics) std::cout << "note: " << d << "\n";
    }
}

SimpleHandlebody load(const std::string& path) {
    // bundled instances are addressable by name with the bundled: prefix
    if (path.rfind("bundled:", 0) == 0) return bundled(path.substr(8));
    return load_instance(path);
}

ordered_json homology_text(const HomologyResult& h, Coefficients c) { return to_json(h, c); }

int run(int argc, char** argv) {
    CLI::App app{"Combinatorial analysis of simple handlebodies"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "Output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--coeff", opt.coeff, "Coefficients: z|z2")
        ->check(CLI::IsMember({"z", "z2"}));
    app.add_option("--space", opt.space, "Homology space: double|universal")
        ->check(CLI::IsMember({"double", "universal"}));
    app.add_option("--radius", opt.radius, "Chamber ball radius");
    app.add_option("--cap-m", opt.cap_m, "Facet class cap for the oracle");
    app.add_option("--cap-length", opt.cap_length, "Length cap for ball enumeration");

    std::string path, word1, word2, dir = ".";

    auto* validate_cmd = app.add_subcommand("validate", "Check every instance invariant");
    validate_cmd->add_option("instance", path)->required();

    auto* nerve_cmd = app.add_subcommand("nerve", "Quotient nerve on facet classes");
    nerve_cmd->add_option("instance", path)->required();

    auto* belts_cmd = app.add_subcommand("belts", "Delta^k and square belt witnesses");
    belts_cmd->add_option("instance", path)->required();

    auto* flag_cmd = app.add_subcommand("flag", "Flagness of the handlebody");
    flag_cmd->add_option("instance", path)->required();

    auto* group_cmd = app.add_subcommand("group", "Presentation of pi_1^orb");
    group_cmd->add_option("instance", path)->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "Normal form of a word");
    reduce_cmd->add_option("instance", path)->required();
    reduce_cmd->add_option("word", word1)->required();

    auto* equal_cmd = app.add_subcommand("equal", "Word equality");
    equal_cmd->add_option("instance", path)->required();
    equal_cmd->add_option("word1", word1)->required();
    equal_cmd->add_option("word2", word2)->required();

    auto* commute_cmd = app.add_subcommand("commute", "Commutation of two words");
    commute_cmd->add_option("instance", path)->required();
    commute_cmd->add_option("word1", word1)->required();
    commute_cmd->add_option("word2", word2)->required();

    auto* homology_cmd = app.add_subcommand("homology", "Homology of the double or cover support");
    homology_cmd->add_option("instance", path)->required();

    auto* ball_cmd = app.add_subcommand("ball", "Chamber ball in the universal cover");
    ball_cmd->add_option("instance", path)->required();

    auto* classify_cmd = app.add_subcommand("classify", "Curvature classification report");
    classify_cmd->add_option("instance", path)->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force double + Gromov cross-check");
    oracle_cmd->add_option("instance", path)->required();

    auto* instances_cmd = app.add_subcommand("instances", "List or export bundled instances");
    std::string write_dir;
    instances_cmd->add_option("--write", write_dir, "Write instance files into a directory");

    CLI11_PARSE(app, argc, argv);

    if (instances_cmd->parsed()) {
        ordered_json j = ordered_json::array();
        for (const auto& b : bundled_instances()) {
            ordered_json bj;
            bj["name"] = b.name;
            bj["description"] = b.description;
            bj["facets"] = b.handlebody.polytope.nerve.vertex_count();
            bj["genus"] = b.handlebody.genus();
            j.push_back(std::move(bj));
            if (!write_dir.empty()) {
                std::filesystem::create_directories(write_dir);
                std::ofstream out(write_dir + "/" + b.name + ".json");
                out << serialize_instance(b.handlebody).dump(2) << "\n";
            }
        }
        emit(opt, "instances", write_dir, nullptr, j);
        return 0;
    }

    SimpleHandlebody h = load(path);

    if (validate_cmd->parsed()) {
        ValidationReport rep = validate(h);
        std::vector<std::string> diags;
        for (const auto& i : rep.issues) diags.push_back(i.message);
        emit(opt, "validate", path, &h, to_json(rep), diags);
        return rep.valid() ? 0 : 1;
    }

    // every other command requires a valid instance
    {
        ValidationReport rep = validate(h);
        if (!rep.valid()) {
            std::vector<std::string> diags;
            for (const auto& i : rep.issues) diags.push_back(i.message);
            emit(opt, "invalid", path, &h, to_json(rep), diags);
            return 1;
        }
    }

    if (nerve_cmd->parsed()) {
        Quotient q = quotient_nerve(h);
        ordered_json j;
        ordered_json classes = ordered_json::array();
        for (std::size_t c = 0; c < q.classes.size(); ++c) {
            ordered_json cj;
            cj["label"] = q.class_labels[c];
            ordered_json members = ordered_json::array();
            for (int f : q.classes[c]) members.push_back(h.polytope.nerve.label(f));
            cj["members"] = std::move(members);
            classes.push_back(std::move(cj));
        }
        j["classes"] = std::move(classes);
        ordered_json simplices = ordered_json::array();
        for (const auto& m : q.nerve.maximal_simplices()) {
            ordered_json s = ordered_json::array();
            for (int v : m) s.push_back(q.nerve.label(v));
            simplices.push_back(std::move(s));
        }
        j["quotient_nerve"] = std::move(simplices);
        j["euler_characteristic"] = q.nerve.euler_characteristic();
        emit(opt, "nerve", path, &h, j);
        return 0;
    }

    if (belts_cmd->parsed()) {
        ordered_json j;
        ordered_json deltas = ordered_json::array();
        for (const auto& w : delta_belts(h)) deltas.push_back(to_json(w));
        j["delta_belts"] = std::move(deltas);
        std::vector<std::string> diags;
        if (h.polytope.nerve.is_flag()) {
            ordered_json squares = ordered_json::array();
            for (const auto& w : square_belts(h)) squares.push_back(to_json(w));
            j["square_belts"] = std::move(squares);
            if (h.polytope.dim >= 4)
                diags.push_back("square criterion applied at the facet level (n >= 4)");
        } else {
            j["square_belts"] = nullptr;
            diags.push_back("square belts are defined for flag instances only");
        }
        emit(opt, "belts", path, &h, j, diags);
        return 0;
    }

    if (flag_cmd->parsed()) {
        ordered_json j;
        j["flag"] = is_flag(h);
        emit(opt, "flag", path, &h, j);
        return 0;
    }

    if (group_cmd->parsed()) {
        Presentation p = Presentation::from_handlebody(h);
        ordered_json j;
        ordered_json gens = ordered_json::array();
        for (int i = 0; i < p.num_letters(); ++i) gens.push_back("sF" + p.letter_label(i));
        j["involutive_generators"] = std::move(gens);
        ordered_json ts = ordered_json::array();
        for (int b = 0; b < p.num_belts(); ++b) ts.push_back("tB" + p.belt_label(b));
        j["free_generators"] = std::move(ts);
        ordered_json rels = ordered_json::array();
        for (const auto& r : p.relators()) rels.push_back(print_word(p, r));
        j["relators"] = std::move(rels);
        ordered_json conj = ordered_json::array();
        for (int b = 0; b < p.num_belts(); ++b) {
            ordered_json cj;
            cj["belt"] = p.belt_label(b);
            ordered_json table;
            for (int i = 0; i < p.num_letters(); ++i)
                if ((p.dom_mask(b) >> i) & 1)
                    table["sF" + p.letter_label(i)] = "sF" + p.letter_label(p.phi(b, i));
            cj["conjugation"] = std::move(table);
            conj.push_back(std::move(cj));
        }
        j["conjugation_tables"] = std::move(conj);
        emit(opt, "group", path, &h, j);
        return 0;
    }

    if (reduce_cmd->parsed()) {
        Presentation p = Presentation::from_handlebody(h);
        Word w = parse_word(p, word1);
        NormalForm nf = hnn_normal_form(p, w);
        ordered_json j;
        j["input"] = word1;
        j["normal_form"] = print_normal_form(p, nf);
        j["length"] = nf.length();
        j["t_length"] = nf.t_length();
        j["identity"] = nf.identity();
        emit(opt, "reduce", path, &h, j);
        return 0;
    }

    if (equal_cmd->parsed() || commute_cmd->parsed()) {
        Presentation p = Presentation::from_handlebody(h);
        Word u = parse_word(p, word1);
        Word v = parse_word(p, word2);
        ordered_json j;
        if (equal_cmd->parsed())
            j["equal"] = equal(p, u, v);
        else
            j["commute"] = commutes(p, u, v);
        emit(opt, equal_cmd->parsed() ? "equal" : "commute", path, &h, j);
        return 0;
    }

    if (homology_cmd->parsed()) {
        Coefficients c = parse_coeff(opt.coeff);
        if (opt.space == "double") {
            DoubleHomology d = double_homology(h, c);
            emit(opt, "homology --space double", path, &h, to_json(d));
        } else {
            auto support = universal_cover_support(h);
            ordered_json j;
            j["contributions"] = to_json(support, h.polytope.dim);
            j["aspherical"] = is_aspherical(h);
            emit(opt, "homology --space universal", path, &h, j);
        }
        return 0;
    }

    if (ball_cmd->parsed()) {
        ChamberBall b = chamber_ball(h, opt.radius);
        emit(opt, "ball", path, &h, to_json(b));
        return 0;
    }

    if (classify_cmd->parsed()) {
        CurvatureReport r = classify(h);
        emit(opt, "classify", path, &h, to_json(r));
        return 0;
    }

    if (oracle_cmd->parsed()) {
        ordered_json j;
        std::vector<std::string> diags;
        DoubleComplex dc = build_double(h, opt.cap_m);
        j["chambers"] = dc.chamber_count;
        ordered_json counts = ordered_json::array();
        for (int k = 0; k <= dc.dim; ++k) counts.push_back(dc.cell_count(k));
        j["cells_per_dim"] = std::move(counts);
        j["euler_characteristic"] = dc.euler();

        TopHomology top = top_homology(dc);
        j["closed"] = top.closed;
        j["orientable"] = top.orientable;

        const int m = int(dc.coloring.class_labels.size());
        bool compare_z = m <= 10 && h.genus() == 0;
        Coefficients cc = compare_z ? Coefficients::Z : Coefficients::Z2;
        if (m <= 10) {
            HomologyResult ho = oracle_homology(dc, cc);
            DoubleHomology df = double_homology(h, cc);
            bool match = true;
            for (int k = 0; k <= dc.dim; ++k)
                if (!(ho.at(k) == df.total.at(k))) match = false;
            j["coefficients"] = cc == Coefficients::Z ? "Z" : "Z2";
            j["oracle_homology"] = to_json(ho, cc);
            j["formula_homology"] = to_json(df.total, cc);
            j["formula_equals_oracle"] = match ? "PASS" : "FAIL";
            if (!match) throw inconsistency_error("subset formula and oracle homology disagree");
        } else {
            diags.push_back("homology comparison skipped: more than 10 facet classes");
        }

        GromovReport g = gromov_link_check(h, opt.cap_m);
        j["gromov"] = to_json(g);
        bool flag = h.polytope.nerve.is_flag();
        j["npc_equals_flag"] = g.npc == flag ? "PASS" : "FAIL";
        if (g.npc != flag)
            throw inconsistency_error("Gromov link verdict disagrees with flagness");
        emit(opt, "oracle", path, &h, j, diags);
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const input_error& e) {
        std::cerr << "error (invalid instance): " << e.what() << "\n";
        return 1;
    } catch (const unsupported_error& e) {
        std::cerr << "error (unsupported configuration): " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "error (resource cap): " << e.what() << "\n";
        return 3;
    } catch (const inconsistency_error& e) {
        std::cerr << "error (internal inconsistency): " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
