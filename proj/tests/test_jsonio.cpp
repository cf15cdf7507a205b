#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cordalg/errors.hpp"
#include "cordalg/json_io.hpp"

using namespace cordalg;

namespace {

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return nlohmann::json::parse(os.str());
}

}  // namespace

TEST_CASE("diagram documents round-trip byte for byte") {
    for (const char* path : {"fixtures/square_knot.json", "fixtures/trefoil.json",
                             "fixtures/square_knot_cable3.json"}) {
        CAPTURE(path);
        auto doc = load_json(path);
        auto d = diagram_from_document(doc);
        auto out = diagram_to_document(d);
        // canonical form is a fixed point of parse/serialize
        CHECK(diagram_to_document(diagram_from_document(out)).dump() == out.dump());
        // and preserves the mathematical content of the original
        auto d2 = diagram_from_document(out);
        CHECK(d2.num_arcs() == d.num_arcs());
        CHECK(d2.basepoint() == d.basepoint());
        auto sorted = [](std::vector<Crossing> cs) {
            std::sort(cs.begin(), cs.end(),
                      [](const Crossing& a, const Crossing& b) { return a.under_in < b.under_in; });
            return cs;
        };
        CHECK(sorted(d2.crossings()) == sorted(d.crossings()));
        CHECK(d2.summands() == d.summands());
    }
}

TEST_CASE("diagram documents defaults") {
    // traversal, tags, basepoint and summands are all optional
    auto d = diagram_from_document(nlohmann::json::parse(
        R"({"arcs": 3, "crossings": [
             {"over": 3, "under_in": 1, "under_out": 2},
             {"over": 1, "under_in": 2, "under_out": 3},
             {"over": 2, "under_in": 3, "under_out": 1}]})"));
    CHECK(d.num_arcs() == 3);
    CHECK(d.basepoint() == 1);
    CHECK(d.successor(1) == 2);
    CHECK(d.tag(1) == d.tag(2));
}

TEST_CASE("malformed diagram documents") {
    CHECK_THROWS_AS(diagram_from_document(nlohmann::json::parse("[]")), MalformedDocument);
    CHECK_THROWS_AS(diagram_from_document(nlohmann::json::parse("{}")), MalformedDocument);
    CHECK_THROWS_AS(diagram_from_document(nlohmann::json::parse(R"({"arcs": "three"})")),
                    MalformedDocument);
    CHECK_THROWS_AS(diagram_from_document(nlohmann::json::parse(R"({"arcs": 0})")),
                    InvalidDiagram);
    CHECK_THROWS_AS(diagram_from_document(nlohmann::json::parse(
                        R"({"arcs": 2, "traversal": [1, 3], "crossings": []})")),
                    MalformedDocument);
    // syntactically fine but geometrically invalid
    CHECK_THROWS_AS(diagram_from_document(nlohmann::json::parse(
                        R"({"arcs": 2, "crossings": []})")),
                    InvalidDiagram);
}

TEST_CASE("action descriptors") {
    auto d = diagram_from_document(load_json("fixtures/square_knot.json"));
    auto bb = action_from_document(nlohmann::json::parse(R"({"type":"blue-box","summand":"L1"})"), d);
    CHECK(!bb.subst.empty());
    auto gr = action_from_document(nlohmann::json::parse(R"({"type":"gramain"})"), d);
    CHECK((!gr.prefix.empty() || !gr.suffix.empty()));
    auto composed = action_from_document(nlohmann::json::parse(
        R"({"type":"compose","of":[{"type":"gramain"},{"type":"blue-box","summand":"L1"}]})"), d);
    PassWord w;
    w.start = w.end = d.basepoint();
    w.passes = {1, 4};
    CHECK(composed.apply(w, d.basepoint()).passes ==
          LoopAction::compose(gr, bb).apply(w, d.basepoint()).passes);
    auto squared = action_from_document(nlohmann::json::parse(
        R"({"type":"power","base":{"type":"gramain"},"n":2})"), d);
    CHECK(squared.apply(w, d.basepoint()).passes == gr.power(2).apply(w, d.basepoint()).passes);

    CHECK_THROWS_AS(action_from_document(nlohmann::json::parse(R"({"type":"spin"})"), d),
                    MalformedDocument);
    CHECK_THROWS_AS(action_from_document(nlohmann::json::parse(R"({"type":"blue-box"})"), d),
                    MalformedDocument);
    CHECK_THROWS_AS(
        action_from_document(nlohmann::json::parse(R"({"type":"blue-box","summand":"L9"})"), d),
        UnknownTag);
}

TEST_CASE("target element literals") {
    CHECK(parse_target_elem("0") == 0);
    CHECK(parse_target_elem("1") == 1);
    CHECK(parse_target_elem("z") == 2);
    CHECK(parse_target_elem("z+1") == 3);
    CHECK(parse_target_elem("z^3+z") == 10);
    Target t = Target::poly_z();
    for (Target::Elem e : {Target::Elem{0}, Target::Elem{1}, Target::Elem{6}, Target::Elem{13}})
        CHECK(parse_target_elem(t.str(e)) == e);
    CHECK_THROWS_AS(parse_target_elem("q+1"), MalformedDocument);
    CHECK_THROWS_AS(parse_target_elem("z^99"), MalformedDocument);

    CHECK(parse_target_name("z").name() == "z");
    CHECK(parse_target_name("z^5").name() == "z^5");
    CHECK(parse_target_name("bool").name() == "bool");
    CHECK_THROWS_AS(parse_target_name("gf4"), MalformedDocument);
}

TEST_CASE("assignment documents") {
    auto doc = load_json("fixtures/square_knot_table1.json");
    auto phi = assignment_from_document(doc);
    CHECK(phi.size() == 15);
    CHECK(phi.at({2, 4}) == 2);
    CHECK(phi.at({3, 6}) == 0);
    // serialization round-trips
    Target t = Target::poly_z();
    CHECK(assignment_from_document(assignment_to_document(phi, t)) == phi);

    CHECK_THROWS_AS(assignment_from_document(nlohmann::json::parse("[]")), MalformedDocument);
    CHECK_THROWS_AS(assignment_from_document(nlohmann::json::parse(R"({"b_{1,2}": "z"})")),
                    MalformedDocument);
    CHECK_THROWS_AS(assignment_from_document(nlohmann::json::parse(R"({"a_{2,2}": "z"})")),
                    MalformedDocument);
}

TEST_CASE("pass-word literals") {
    PassWord w = password_from_text("3 [1 2] 4", 1);
    CHECK(w.start == 3);
    CHECK(w.passes == std::vector<int>{1, 2});
    CHECK(w.end == 4);
    PassWord empty = password_from_text("2 [] 5", 1);
    CHECK(empty.passes.empty());
    PassWord loop = password_from_text("loop: 2 6 1", 3);
    CHECK(loop.start == 3);
    CHECK(loop.end == 3);
    CHECK(loop.passes == std::vector<int>{2, 6, 1});
    PassWord bare = password_from_text("loop:", 3);
    CHECK(bare.is_loop_at(3));
    CHECK(bare.passes.empty());
    CHECK_THROWS_AS(password_from_text("3 1 2 4", 1), MalformedDocument);
    CHECK_THROWS_AS(password_from_text("[1 2]", 1), MalformedDocument);
    CHECK_THROWS_AS(password_from_text("loop 1 2", 1), MalformedDocument);
}

TEST_CASE("input digest") {
    // FNV-1a 64-bit reference values
    CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a("hello") != fnv1a("hellp"));
}
