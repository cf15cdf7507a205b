#include "cordalg/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "cordalg/errors.hpp"

namespace cordalg {

namespace {

int require_int(const nlohmann::json& v, const char* what) {
    if (!v.is_number_integer()) throw MalformedDocument(std::string(what) + " must be an integer");
    return v.get<int>();
}

}  // namespace

KnotDiagram diagram_from_document(const nlohmann::json& doc) {
    if (!doc.is_object()) throw MalformedDocument("diagram document must be an object");
    if (!doc.contains("arcs")) throw MalformedDocument("missing field: arcs");
    int n = require_int(doc.at("arcs"), "arcs");
    if (n < 1) throw InvalidDiagram("diagram needs at least one arc");

    std::vector<int> succ(static_cast<std::size_t>(n));
    if (doc.contains("traversal")) {
        const auto& tr = doc.at("traversal");
        if (!tr.is_array() || tr.size() != static_cast<std::size_t>(n))
            throw MalformedDocument("traversal must list every arc once");
        std::vector<int> order;
        for (const auto& v : tr) order.push_back(require_int(v, "traversal entry"));
        for (std::size_t k = 0; k < order.size(); ++k) {
            int from = order[k], to = order[(k + 1) % order.size()];
            if (from < 1 || from > n) throw MalformedDocument("traversal arc out of range");
            succ[static_cast<std::size_t>(from) - 1] = to;
        }
    } else {
        for (int a = 1; a <= n; ++a) succ[static_cast<std::size_t>(a) - 1] = a % n + 1;
    }

    std::vector<Crossing> crossings;
    if (doc.contains("crossings")) {
        if (!doc.at("crossings").is_array())
            throw MalformedDocument("crossings must be a list");
        for (const auto& c : doc.at("crossings")) {
            if (!c.is_object()) throw MalformedDocument("crossing must be an object");
            crossings.push_back({require_int(c.at("over"), "over"),
                                 require_int(c.at("under_in"), "under_in"),
                                 require_int(c.at("under_out"), "under_out")});
        }
    }

    std::map<int, std::string> tags;
    if (doc.contains("tags")) {
        if (!doc.at("tags").is_object()) throw MalformedDocument("tags must be a map");
        for (const auto& [key, value] : doc.at("tags").items()) {
            int arc = 0;
            try {
                arc = std::stoi(key);
            } catch (const std::exception&) {
                throw MalformedDocument("tag key is not an arc number: " + key);
            }
            if (!value.is_string()) throw MalformedDocument("tag label must be a string");
            tags[arc] = value.get<std::string>();
        }
    } else {
        for (int a = 1; a <= n; ++a) tags[a] = "K";
    }

    int basepoint = doc.contains("basepoint") ? require_int(doc.at("basepoint"), "basepoint") : 1;

    std::vector<std::string> summands;
    if (doc.contains("summands")) {
        if (!doc.at("summands").is_array()) throw MalformedDocument("summands must be a list");
        for (const auto& s : doc.at("summands")) {
            if (!s.is_string()) throw MalformedDocument("summand label must be a string");
            summands.push_back(s.get<std::string>());
        }
    }

    return KnotDiagram(n, std::move(succ), std::move(crossings), std::move(tags), basepoint,
                       std::move(summands));
}

nlohmann::json diagram_to_document(const KnotDiagram& d) {
    nlohmann::json doc;
    doc["arcs"] = d.num_arcs();
    std::vector<int> traversal;
    int cur = 1;
    for (int k = 0; k < d.num_arcs(); ++k) {
        traversal.push_back(cur);
        cur = d.successor(cur);
    }
    doc["traversal"] = traversal;
    auto crossings = d.crossings();
    std::sort(crossings.begin(), crossings.end(),
              [](const Crossing& a, const Crossing& b) { return a.under_in < b.under_in; });
    doc["crossings"] = nlohmann::json::array();
    for (const auto& c : crossings)
        doc["crossings"].push_back(
            {{"over", c.over}, {"under_in", c.under_in}, {"under_out", c.under_out}});
    nlohmann::json tags = nlohmann::json::object();
    for (int a = 1; a <= d.num_arcs(); ++a) tags[std::to_string(a)] = d.tag(a);
    doc["tags"] = tags;
    doc["basepoint"] = d.basepoint();
    doc["summands"] = d.summands();
    return doc;
}

LoopAction action_from_document(const nlohmann::json& doc, const KnotDiagram& d) {
    if (!doc.is_object() || !doc.contains("type"))
        throw MalformedDocument("action descriptor needs a type");
    std::string type = doc.at("type").get<std::string>();
    if (type == "blue-box") {
        if (!doc.contains("summand")) throw MalformedDocument("blue-box action needs a summand");
        return LoopAction::blue_box(d, doc.at("summand").get<std::string>());
    }
    if (type == "gramain") return LoopAction::gramain(d);
    if (type == "identity") return LoopAction::identity();
    if (type == "compose") {
        if (!doc.contains("of") || !doc.at("of").is_array())
            throw MalformedDocument("compose action needs a list under 'of'");
        // listed outermost first, applied right to left
        LoopAction acc = LoopAction::identity();
        for (auto it = doc.at("of").rbegin(); it != doc.at("of").rend(); ++it)
            acc = LoopAction::compose(action_from_document(*it, d), acc);
        return acc;
    }
    if (type == "power") {
        if (!doc.contains("base") || !doc.contains("n"))
            throw MalformedDocument("power action needs base and n");
        int n = require_int(doc.at("n"), "n");
        if (n < 0) throw MalformedDocument("power exponent must be nonnegative");
        return action_from_document(doc.at("base"), d).power(n);
    }
    throw MalformedDocument("unknown action type: " + type);
}

Target::Elem parse_target_elem(const std::string& text) {
    if (text == "0") return 0;
    Target::Elem e = 0;
    std::istringstream is(text);
    std::string term;
    while (std::getline(is, term, '+')) {
        // trim spaces
        auto a = term.find_first_not_of(" \t");
        auto b = term.find_last_not_of(" \t");
        if (a == std::string::npos) throw MalformedDocument("empty term in element literal");
        term = term.substr(a, b - a + 1);
        if (term == "1") e ^= 1;
        else if (term == "z") e ^= 2;
        else if (term.rfind("z^", 0) == 0) {
            int k = 0;
            try {
                k = std::stoi(term.substr(2));
            } catch (const std::exception&) {
                throw MalformedDocument("bad exponent in element literal: " + term);
            }
            if (k < 0 || k > 62) throw MalformedDocument("exponent out of range: " + term);
            e ^= Target::Elem{1} << k;
        } else {
            throw MalformedDocument("bad term in element literal: " + term);
        }
    }
    return e;
}

Target parse_target_name(const std::string& name) {
    if (name == "z") return Target::poly_z();
    if (name == "bool") return Target::boolean();
    if (name.rfind("z^", 0) == 0) {
        int k = 0;
        try {
            k = std::stoi(name.substr(2));
        } catch (const std::exception&) {
            throw MalformedDocument("bad target name: " + name);
        }
        if (k < 0) throw MalformedDocument("bad target name: " + name);
        return Target::truncated(k);
    }
    throw MalformedDocument("unknown target: " + name);
}

Assignment assignment_from_document(const nlohmann::json& doc) {
    if (!doc.is_object()) throw MalformedDocument("assignment document must be a map");
    Assignment phi;
    for (const auto& [key, value] : doc.items()) {
        int i = 0, j = 0;
        if (std::sscanf(key.c_str(), "a_{%d,%d}", &i, &j) != 2)
            throw MalformedDocument("bad generator name: " + key);
        auto g = Generator::make(i, j);
        if (!g) throw MalformedDocument("degenerate generator: " + key);
        if (!value.is_string()) throw MalformedDocument("element literal must be a string");
        phi[{g->i, g->j}] = parse_target_elem(value.get<std::string>());
    }
    return phi;
}

nlohmann::json assignment_to_document(const Assignment& phi, const Target& target) {
    nlohmann::json doc = nlohmann::json::object();
    for (const auto& [gen, elem] : phi) {
        Generator g{gen.first, gen.second};
        doc[g.str()] = target.str(elem);
    }
    return doc;
}

PassWord password_from_text(const std::string& text, int basepoint) {
    PassWord w;
    std::istringstream is(text);
    if (text.find("loop:") != std::string::npos) {
        std::string head;
        is >> head;
        if (head != "loop:") throw MalformedDocument("bad pass-word literal: " + text);
        w.start = w.end = basepoint;
        int s;
        while (is >> s) w.passes.push_back(s);
        if (!is.eof()) throw MalformedDocument("bad pass-word literal: " + text);
        return w;
    }
    // "i [s1 s2 ...] j"
    std::string tok;
    std::vector<std::string> toks;
    while (is >> tok) toks.push_back(tok);
    if (toks.size() < 3 || toks[1].front() != '[' || toks[toks.size() - 2].back() != ']') {
        // also accept "i [] j" where the brackets arrive as one token
        if (toks.size() == 3 && toks[1] == "[]") {
            try {
                w.start = std::stoi(toks[0]);
                w.end = std::stoi(toks[2]);
            } catch (const std::exception&) {
                throw MalformedDocument("bad pass-word literal: " + text);
            }
            return w;
        }
        throw MalformedDocument("bad pass-word literal: " + text);
    }
    try {
        w.start = std::stoi(toks.front());
        w.end = std::stoi(toks.back());
        for (std::size_t k = 1; k + 1 < toks.size(); ++k) {
            std::string t = toks[k];
            if (k == 1) t = t.substr(1);
            if (k == toks.size() - 2) {
                if (t.empty() || t.back() != ']')
                    throw MalformedDocument("bad pass-word literal: " + text);
                t.pop_back();
            }
            if (!t.empty()) w.passes.push_back(std::stoi(t));
        }
    } catch (const MalformedDocument&) {
        throw;
    } catch (const std::exception&) {
        throw MalformedDocument("bad pass-word literal: " + text);
    }
    return w;
}

std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace cordalg
