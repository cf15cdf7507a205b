#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cordalg/cordring.hpp"
#include "cordalg/diagram.hpp"
#include "cordalg/errors.hpp"
#include "cordalg/homsep.hpp"
#include "cordalg/json_io.hpp"
#include "cordalg/monodromy.hpp"
#include "cordalg/ncalg.hpp"
#include "cordalg/skein.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr const char* kSchema = "cordalg-report/1";

// exit 1: requested mathematical object not found within bounds
struct NotFound : cordalg::Error {
    using Error::Error;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cordalg::MalformedDocument("cannot open input: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

nlohmann::json parse_json(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw cordalg::MalformedDocument(std::string("invalid JSON: ") + e.what());
    }
}

struct Session {
    std::string subcommand;
    std::uint64_t digest = 0;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void emit(const nlohmann::json& payload) const {
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
        nlohmann::json report;
        report["schema"] = kSchema;
        report["version"] = kVersion;
        report["subcommand"] = subcommand;
        std::ostringstream dg;
        dg << std::hex << digest;
        report["input_digest"] = dg.str();
        report["payload"] = payload;
        report["timing_ms"] = elapsed;
        std::cout << report.dump(2) << "\n";
    }
};

cordalg::KnotDiagram load_diagram(const std::string& path, Session& session) {
    std::string text = read_input(path);
    session.digest = cordalg::fnv1a(text);
    return cordalg::diagram_from_document(parse_json(text));
}

std::vector<int> parse_braid_tokens(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    std::vector<int> word;
    while (is >> tok) {
        bool inv = false;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
            inv = true;
            tok = tok.substr(0, tok.size() - 3);
        }
        if (tok.size() < 2 || tok[0] != 's')
            throw cordalg::MalformedDocument("bad braid token: " + tok);
        int k = 0;
        try {
            k = std::stoi(tok.substr(1));
        } catch (const std::exception&) {
            throw cordalg::MalformedDocument("bad braid token: " + tok);
        }
        if (k < 1) throw cordalg::MalformedDocument("bad braid token: " + tok);
        word.push_back(inv ? -k : k);
    }
    return word;
}

nlohmann::json monodromy_payload(const cordalg::CordRing& ring, const cordalg::Monodromy& mono,
                                 bool certify, const cordalg::Target& target, int limit,
                                 bool& found_certificate) {
    nlohmann::json payload;
    nlohmann::json fixed = nlohmann::json::array();
    nlohmann::json moved = nlohmann::json::array();
    const int n = ring.diagram().num_arcs();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            cordalg::Generator g{i, j};
            if (mono.moves(i, j)) {
                moved.push_back({{"generator", g.str()}, {"image", mono.image(i, j).str()}});
            } else {
                fixed.push_back(g.str());
            }
        }
    }
    payload["fixed"] = fixed;
    payload["moved"] = moved;
    payload["verdict"] = moved.empty() ? "trivial" : "nontrivial";
    found_certificate = true;
    if (certify && !moved.empty()) {
        auto homs = cordalg::search_homs(ring, target, limit, 1000000);
        auto cert = cordalg::separate(ring, mono, homs, target);
        if (cert) {
            cordalg::Generator g{cert->i, cert->j};
            payload["certificate"] = {
                {"generator", g.str()},
                {"hom", cordalg::assignment_to_document(cert->phi, target)},
                {"value_before", target.str(cert->before)},
                {"value_after", target.str(cert->after)},
            };
        } else {
            found_certificate = false;
        }
    }
    return payload;
}

int run(int argc, char** argv) {
    CLI::App app{"cord algebra toolkit"};
    app.require_subcommand(1);

    std::string input, action_text, target_name = "z", word_text, assignment_path,
                relators_path, pd_text, braid_text, convention = "ltr", hom_path,
                projection_path;
    int limit = 1, order = 3, at = 1;
    std::uint64_t budget_spairs = cordalg::Budget{}.max_spairs;
    bool certify = false;
    std::size_t max_results = 10;

    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget", budget_spairs, "S-pair budget for basis computation");
    };

    auto* parse_cmd = app.add_subcommand("parse", "validate a diagram and echo its canonical form");
    parse_cmd->add_option("input", input, "diagram document (- for stdin)");
    parse_cmd->add_option("--pd", pd_text, "planar-diagram code: JSON list of 4-tuples");
    parse_cmd->add_option("--braid", braid_text, "braid word tokens, e.g. 's1 s1 s1'");

    auto* algebra_cmd = app.add_subcommand("algebra", "present the cord algebra of a diagram");
    algebra_cmd->add_option("input", input)->required();
    add_budget(algebra_cmd);

    auto* reduce_cmd = app.add_subcommand("reduce", "normal form of a pass word");
    reduce_cmd->add_option("input", input)->required();
    reduce_cmd->add_option("word", word_text, "pass word, e.g. '3 [1 2] 4' or 'loop: 2 6 1'")
        ->required();
    add_budget(reduce_cmd);

    auto* mono_cmd = app.add_subcommand("monodromy", "apply a loop action to all cord classes");
    mono_cmd->add_option("input", input)->required();
    mono_cmd->add_option("--action", action_text, "action descriptor JSON")->required();
    mono_cmd->add_flag("--certify", certify, "attach a separating-hom certificate");
    mono_cmd->add_option("--target", target_name, "certificate target: z, z^k or bool");
    mono_cmd->add_option("--limit", limit, "degree bound for certificate hom search");
    mono_cmd->add_option("--hom", hom_path,
                         "assignment document: certify non-triviality through this "
                         "homomorphism alone, without building the algebra");
    add_budget(mono_cmd);

    auto* hom_cmd = app.add_subcommand("hom", "verify or search ring homomorphisms");
    auto* hom_verify = hom_cmd->add_subcommand("verify");
    hom_verify->add_option("input", input)->required();
    hom_verify->add_option("--assignment", assignment_path, "assignment document")->required();
    hom_verify->add_option("--target", target_name);
    add_budget(hom_verify);
    auto* hom_search = hom_cmd->add_subcommand("search");
    hom_search->add_option("input", input)->required();
    hom_search->add_option("--target", target_name, "finite target: z^k or bool");
    hom_search->add_option("--limit", max_results, "maximum number of homs returned");
    add_budget(hom_search);
    auto* hom_pullback = hom_cmd->add_subcommand(
        "pullback", "pull a companion assignment back onto a cable diagram");
    hom_pullback->add_option("input", input, "cable diagram document")->required();
    hom_pullback->add_option("--projection", projection_path, "projection file from `cable`")
        ->required();
    hom_pullback->add_option("--assignment", assignment_path, "companion assignment document")
        ->required();
    hom_pullback->add_option("--target", target_name, "target ring (use a truncated one)");
    hom_cmd->require_subcommand(1);

    auto* nc_cmd = app.add_subcommand("nc", "noncommutative trefoil suite");
    nc_cmd->add_option("relators", relators_path,
                       "optional JSON list of relator literals (default: built-in suite)");
    nc_cmd->add_option("--matrix-convention", convention, "ltr or rtl")
        ->check(CLI::IsMember({"ltr", "rtl"}));

    auto* cable_cmd = app.add_subcommand("cable", "cable a diagram");
    cable_cmd->add_option("input", input)->required();
    cable_cmd->add_option("--order", order, "number of parallel copies (odd)");
    cable_cmd->add_option("--at", at, "arc carrying the shift gadget");
    cable_cmd->add_option("--projection", projection_path,
                          "write the cable-arc -> companion-arc projection to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    cordalg::Budget budget;
    budget.max_spairs = budget_spairs;

    Session session;
    session.subcommand = app.get_subcommands().front()->get_name();

    if (parse_cmd->parsed()) {
        std::optional<cordalg::KnotDiagram> d;
        if (!pd_text.empty()) {
            session.digest = cordalg::fnv1a(pd_text);
            auto code = parse_json(pd_text);
            if (!code.is_array()) throw cordalg::MalformedDocument("PD code must be a list");
            std::vector<std::array<int, 4>> tuples;
            for (const auto& t : code) {
                if (!t.is_array() || t.size() != 4)
                    throw cordalg::MalformedDocument("PD entry must be a 4-tuple");
                tuples.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>(),
                                  t[3].get<int>()});
            }
            d = cordalg::KnotDiagram::from_pd_code(tuples);
        } else if (!braid_text.empty()) {
            session.digest = cordalg::fnv1a(braid_text);
            d = cordalg::KnotDiagram::from_braid_word(parse_braid_tokens(braid_text));
        } else if (!input.empty()) {
            d = load_diagram(input, session);
        } else {
            throw cordalg::MalformedDocument("parse needs an input document, --pd or --braid");
        }
        session.emit(cordalg::diagram_to_document(*d));
        return 0;
    }

    if (algebra_cmd->parsed()) {
        cordalg::CordRing ring(load_diagram(input, session), budget);
        nlohmann::json payload;
        nlohmann::json gens = nlohmann::json::array();
        for (int i = 1; i <= ring.diagram().num_arcs(); ++i)
            for (int j = i + 1; j <= ring.diagram().num_arcs(); ++j)
                gens.push_back(cordalg::Generator{i, j}.str());
        payload["generators"] = gens;
        nlohmann::json basis = nlohmann::json::array();
        for (const auto& p : ring.basis().polys()) basis.push_back(p.str());
        payload["basis"] = basis;
        session.emit(payload);
        return 0;
    }

    if (reduce_cmd->parsed()) {
        cordalg::CordRing ring(load_diagram(input, session), budget);
        auto w = cordalg::password_from_text(word_text, ring.diagram().basepoint());
        nlohmann::json payload;
        payload["word"] = word_text;
        payload["normal_form"] = cordalg::reduce_nf(w, ring).str();
        session.emit(payload);
        return 0;
    }

    if (mono_cmd->parsed()) {
        auto d = load_diagram(input, session);
        auto action = cordalg::action_from_document(parse_json(action_text), d);
        if (!hom_path.empty()) {
            // homomorphism-only certification: no basis computation, so this
            // works on diagrams beyond the budget of the full report
            auto target = cordalg::parse_target_name(target_name);
            auto phi = cordalg::assignment_from_document(parse_json(read_input(hom_path)));
            if (!cordalg::verify_hom(d, phi, target))
                throw cordalg::MalformedDocument(
                    "assignment is not a homomorphism on this diagram");
            auto cert = cordalg::certify_action(d, action, phi, target);
            nlohmann::json payload;
            payload["mode"] = "hom-certificate";
            if (cert) {
                cordalg::Generator g{cert->i, cert->j};
                payload["verdict"] = "nontrivial";
                payload["certificate"] = {
                    {"generator", g.str()},
                    {"hom", cordalg::assignment_to_document(cert->phi, target)},
                    {"value_before", target.str(cert->before)},
                    {"value_after", target.str(cert->after)},
                };
            } else {
                payload["verdict"] = "inconclusive";
            }
            session.emit(payload);
            return cert ? 0 : 1;
        }
        cordalg::CordRing ring(std::move(d), budget);
        cordalg::Monodromy mono(ring, action);
        auto target = cordalg::parse_target_name(target_name);
        bool found = true;
        auto payload = monodromy_payload(ring, mono, certify, target, limit, found);
        session.emit(payload);
        return found ? 0 : 1;
    }

    if (hom_verify->parsed()) {
        cordalg::CordRing ring(load_diagram(input, session), budget);
        auto phi = cordalg::assignment_from_document(parse_json(read_input(assignment_path)));
        auto target = cordalg::parse_target_name(target_name);
        // report the first failing relation, if any
        nlohmann::json payload;
        bool ok = true;
        for (const auto& rel : cordalg::CordRing::crossing_relations(ring.diagram())) {
            if (cordalg::evaluate(rel, phi, target) != 0) {
                payload["failing_relation"] = rel.str();
                ok = false;
                break;
            }
        }
        payload["verified"] = ok;
        session.emit(payload);
        return ok ? 0 : 1;
    }

    if (hom_pullback->parsed()) {
        auto d = load_diagram(input, session);
        auto target = cordalg::parse_target_name(target_name);
        auto base_phi = cordalg::assignment_from_document(parse_json(read_input(assignment_path)));
        auto proj = parse_json(read_input(projection_path));
        if (!proj.contains("strand_of") || !proj["strand_of"].is_object())
            throw cordalg::MalformedDocument("projection file needs a strand_of map");
        std::vector<int> strand_of(static_cast<std::size_t>(d.num_arcs()) + 1, 0);
        for (auto& [key, val] : proj["strand_of"].items()) {
            int arc = std::stoi(key);
            if (arc < 1 || arc > d.num_arcs())
                throw cordalg::MalformedDocument("projection arc out of range");
            strand_of[static_cast<std::size_t>(arc)] = val.get<int>();
        }
        int base_arcs = 0;
        for (auto& [pair, e] : base_phi) base_arcs = std::max(base_arcs, pair.second);
        for (int arc = 1; arc <= d.num_arcs(); ++arc)
            base_arcs = std::max(base_arcs, strand_of[static_cast<std::size_t>(arc)]);
        auto phi = cordalg::pullback_assignment(d, strand_of, base_arcs, base_phi, target);
        nlohmann::json payload;
        bool ok = cordalg::verify_hom(d, phi, target);
        payload["verified"] = ok;
        payload["assignment"] = cordalg::assignment_to_document(phi, target);
        session.emit(payload);
        return ok ? 0 : 1;
    }

    if (hom_search->parsed()) {
        cordalg::CordRing ring(load_diagram(input, session), budget);
        auto target = cordalg::parse_target_name(target_name);
        if (target.name() == "z")
            throw cordalg::MalformedDocument("hom search needs a finite target (z^k or bool)");
        auto homs = cordalg::search_homs(ring, target, 62, max_results);
        nlohmann::json payload;
        payload["homs"] = nlohmann::json::array();
        for (const auto& phi : homs)
            payload["homs"].push_back(cordalg::assignment_to_document(phi, target));
        session.emit(payload);
        return homs.empty() ? 1 : 0;
    }

    if (nc_cmd->parsed()) {
        using namespace cordalg::nc;
        auto conv = convention == "ltr" ? MatrixConvention::LeftToRight
                                        : MatrixConvention::RightToLeft;
        auto rep = trefoil_matrix_rep();
        auto phi = trefoil_embedding();
        nlohmann::json payload;
        payload["matrix_convention"] = convention;

        // braid relation in the representation
        auto mam = NcPoly::sym("m") * NcPoly::sym("a") * NcPoly::sym("m");
        auto ama = NcPoly::sym("a") * NcPoly::sym("m") * NcPoly::sym("a");
        payload["braid_relation_holds"] = eval(mam, rep, conv) == eval(ama, rep, conv);

        auto sample = (NcPoly::one() + NcPoly::sym("m")) *
                      (NcPoly::sym("a") + NcPoly::sym("m"));
        payload["sample_value"] = eval(sample, rep, conv).str();

        std::vector<NcPoly> relators;
        if (!relators_path.empty()) {
            std::string text = read_input(relators_path);
            session.digest = cordalg::fnv1a(text);
            auto doc = parse_json(text);
            if (!doc.is_array())
                throw cordalg::MalformedDocument("relator document must be a list");
            for (const auto& entry : doc) {
                if (!entry.is_string())
                    throw cordalg::MalformedDocument("relator literal must be a string");
                // literal: word terms joined by '+', each word as space
                // separated symbols with optional ^k
                NcPoly sum;
                std::istringstream terms(entry.get<std::string>());
                std::string term;
                while (std::getline(terms, term, '+')) {
                    NcPoly w = NcPoly::one();
                    std::istringstream ls(term);
                    std::string letter;
                    while (ls >> letter) {
                        if (letter == "1") continue;
                        auto caret = letter.find('^');
                        std::string name = letter.substr(0, caret);
                        int exp = 1;
                        if (caret != std::string::npos) {
                            try {
                                exp = std::stoi(letter.substr(caret + 1));
                            } catch (const std::exception&) {
                                throw cordalg::MalformedDocument("bad letter: " + letter);
                            }
                        }
                        w = w * NcPoly::sym(name, exp);
                    }
                    sum = sum + w;
                }
                relators.push_back(sum);
            }
        } else {
            relators = trefoil_relators();
        }

        bool all_zero = true;
        payload["relators"] = nlohmann::json::array();
        for (const auto& rel : relators) {
            auto image = substitute(rel, phi);
            bool zero = group_algebra_equal(image, NcPoly::zero());
            all_zero = all_zero && zero;
            payload["relators"].push_back({{"relator", rel.str()},
                                           {"image", image.str()},
                                           {"vanishes", zero}});
        }
        payload["all_relators_vanish"] = all_zero;
        session.emit(payload);
        return all_zero ? 0 : 1;
    }

    if (cable_cmd->parsed()) {
        auto d = load_diagram(input, session);
        std::vector<int> strand_of;
        auto c = d.cable(order, at, projection_path.empty() ? nullptr : &strand_of);
        if (!projection_path.empty()) {
            nlohmann::json proj;
            proj["arcs"] = c.num_arcs();
            nlohmann::json map = nlohmann::json::object();
            for (int arc = 1; arc <= c.num_arcs(); ++arc)
                map[std::to_string(arc)] = strand_of[static_cast<std::size_t>(arc)];
            proj["strand_of"] = map;
            std::ofstream out(projection_path);
            if (!out) throw cordalg::MalformedDocument("cannot open " + projection_path);
            out << proj.dump(2) << "\n";
        }
        session.emit(cordalg::diagram_to_document(c));
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const cordalg::ResourceBudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const NotFound& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const cordalg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
