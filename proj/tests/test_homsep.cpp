#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "cordalg/cordring.hpp"
#include "cordalg/errors.hpp"
#include "cordalg/homsep.hpp"
#include "cordalg/json_io.hpp"
#include "cordalg/monodromy.hpp"
#include "cordalg/skein.hpp"

using namespace cordalg;

namespace {

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return nlohmann::json::parse(os.str());
}

KnotDiagram load_diagram(const std::string& path) {
    return diagram_from_document(load_json(path));
}

Assignment table1() { return assignment_from_document(load_json("fixtures/square_knot_table1.json")); }

constexpr Target::Elem kZ = 2;  // bitmask of the polynomial z

}  // namespace

TEST_CASE("target arithmetic is carryless") {
    Target t = Target::poly_z();
    CHECK(t.add(kZ, kZ) == 0);
    CHECK(t.mul(kZ, kZ) == 4);                  // z * z = z^2
    CHECK(t.mul(kZ | 1, kZ | 1) == 5);          // (z+1)^2 = z^2+1
    CHECK(t.mul(0, kZ) == 0);
    CHECK(t.mul(7, 1) == 7);
    CHECK(t.str(0) == "0");
    CHECK(t.str(1) == "1");
    CHECK(t.str(kZ | 1) == "z+1");
    CHECK(t.str(6) == "z^2+z");
    CHECK(t.name() == "z");
}

TEST_CASE("truncated targets discard high powers") {
    Target t2 = Target::truncated(2);
    CHECK(t2.mul(4, kZ) == 0);                  // z^3 truncates away
    CHECK(t2.mul(kZ | 1, kZ | 1) == 5);
    CHECK(t2.name() == "z^2");
    Target b = Target::boolean();
    CHECK(b.mul(1, 1) == 1);
    CHECK(b.mul(kZ, 1) == 0);                   // z itself truncates to 0... as an input mask
    CHECK(b.name() == "bool");
    CHECK(Target::boolean().candidates(62) == std::vector<Target::Elem>{0, 1});
    // candidates come ordered by degree
    auto c = t2.candidates(62);
    CHECK(c.front() == 0);
    CHECK(c.size() == 8);
}

TEST_CASE("untruncated products refuse to overflow silently") {
    Target t = Target::poly_z();
    Target::Elem big = Target::Elem{1} << 40;
    CHECK_THROWS_AS(t.mul(big, big), Error);
    CHECK(Target::truncated(8).mul(big, big) == 0);
}

TEST_CASE("evaluation under an assignment") {
    Target t = Target::poly_z();
    Assignment phi{{{1, 2}, kZ}, {{1, 3}, 1}};
    Gf2Poly p = Gf2Poly::var(1, 2) * Gf2Poly::var(1, 2) + Gf2Poly::var(1, 3);
    CHECK(evaluate(p, phi, t) == 5);            // z^2 + 1
    CHECK(evaluate(Gf2Poly::one(), phi, t) == 1);
    CHECK(evaluate(Gf2Poly::zero(), phi, t) == 0);
    CHECK_THROWS_AS(evaluate(Gf2Poly::var(2, 3), phi, t), IncompleteAssignment);
}

TEST_CASE("the frozen square-knot assignment is a homomorphism") {
    CordRing ring(load_diagram("fixtures/square_knot.json"));
    Target t = Target::poly_z();
    Assignment phi = table1();
    CHECK(verify_hom(ring, phi, t));
    CHECK(verify_hom(ring.diagram(), phi, t));
    // breaking one image breaks the verification
    Assignment broken = phi;
    broken[{3, 6}] = 1;
    CHECK(!verify_hom(ring, broken, t));
}

TEST_CASE("hom search returns verified assignments and finds the frozen one") {
    CordRing ring(load_diagram("fixtures/square_knot.json"));
    Target t = Target::poly_z();
    auto homs = search_homs(ring, t, 1, 1u << 20);
    CHECK(!homs.empty());
    for (const auto& phi : homs) CHECK(verify_hom(ring, phi, t));
    CHECK(std::find(homs.begin(), homs.end(), table1()) != homs.end());

    CordRing unknot(KnotDiagram::from_braid_word({}));
    CHECK(search_homs(unknot, t, 1, 10).size() == 1);  // only the empty assignment
}

TEST_CASE("separation certificate for the blue box") {
    CordRing ring(load_diagram("fixtures/square_knot.json"));
    Target t = Target::poly_z();
    Assignment phi = table1();
    Monodromy bb(ring, LoopAction::blue_box(ring.diagram(), "L1"));

    auto cert = separate(ring, bb, {phi}, t);
    REQUIRE(cert.has_value());
    CHECK(cert->i == 1);
    CHECK(cert->j == 4);
    CHECK(t.str(cert->before) == "z+1");
    CHECK(t.str(cert->after) == "z");

    // the values the certificate reports really are the evaluations
    CHECK(evaluate(ring.nf(Gf2Poly::var(cert->i, cert->j)), phi, t) == cert->before);
    CHECK(evaluate(bb.image(cert->i, cert->j), phi, t) == cert->after);

    // a trivial action yields no certificate through any hom
    Monodromy gr(ring, LoopAction::gramain(ring.diagram()));
    CHECK(!separate(ring, gr, {phi}, t).has_value());
}

TEST_CASE("scalar word evaluation matches the polynomial recurrence") {
    CordRing ring(load_diagram("fixtures/square_knot.json"));
    Target t = Target::poly_z();
    Assignment phi = table1();
    std::mt19937 rng(401);
    std::uniform_int_distribution<int> arc(1, 6);
    std::uniform_int_distribution<int> len(0, 6);
    for (int k = 0; k < 100; ++k) {
        PassWord w;
        w.start = arc(rng);
        w.end = arc(rng);
        w.passes.resize(static_cast<std::size_t>(len(rng)));
        for (auto& s : w.passes) s = arc(rng);
        CHECK(evaluate_word(w, 6, phi, t) == evaluate(reduce(w), phi, t));
    }
    PassWord bad;
    bad.start = 9;
    bad.end = 1;
    CHECK_THROWS_AS(evaluate_word(bad, 6, phi, t), EndpointMismatch);
}

TEST_CASE("basis-free certification agrees with the basis route") {
    auto d = load_diagram("fixtures/square_knot.json");
    Target t = Target::poly_z();
    Assignment phi = table1();
    LoopAction bb = LoopAction::blue_box(d, "L1");

    auto cert = certify_action(d, bb, phi, t);
    REQUIRE(cert.has_value());
    CHECK(cert->i == 1);
    CHECK(cert->j == 4);
    CHECK(t.str(cert->before) == "z+1");
    CHECK(t.str(cert->after) == "z");

    CHECK(!certify_action(d, LoopAction::gramain(d), phi, t).has_value());
    CHECK(!certify_action(d, LoopAction::identity(), phi, t).has_value());
}

TEST_CASE("pullback onto the 3-cable certifies the blue box") {
    auto sq = load_diagram("fixtures/square_knot.json");
    std::vector<int> strand_of;
    auto c3 = sq.cable(3, 3, &strand_of);
    Target t = Target::truncated(8);

    Assignment phi = pullback_assignment(c3, strand_of, 6, table1(), t);
    CHECK(phi.size() == 56u * 55u / 2u);
    CHECK(verify_hom(c3, phi, t));

    auto cert = certify_action(c3, LoopAction::blue_box(c3, "L1"), phi, t);
    REQUIRE(cert.has_value());
    CHECK(cert->i == 2);
    CHECK(cert->j == 11);
    CHECK(t.str(cert->before) == "z+1");
    CHECK(t.str(cert->after) == "z");

    CHECK(!certify_action(c3, LoopAction::gramain(c3), phi, t).has_value());

    // a projection of the wrong shape is rejected
    std::vector<int> short_proj(10, 1);
    CHECK_THROWS_AS(pullback_assignment(c3, short_proj, 6, table1(), t), MalformedDocument);
}

TEST_CASE("pullback along the 1-cable is faithful") {
    auto sq = load_diagram("fixtures/square_knot.json");
    std::vector<int> strand_of;
    auto c1 = sq.cable(1, 3, &strand_of);
    Target t = Target::poly_z();
    Assignment phi = pullback_assignment(c1, strand_of, 6, table1(), t);
    CHECK(verify_hom(c1, phi, t));
    auto cert = certify_action(c1, LoopAction::blue_box(c1, "L1"), phi, t);
    CHECK(cert.has_value());
}
