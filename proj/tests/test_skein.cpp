#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "cordalg/cordring.hpp"
#include "cordalg/errors.hpp"
#include "cordalg/json_io.hpp"
#include "cordalg/skein.hpp"

using namespace cordalg;

namespace {

KnotDiagram load_fixture(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return diagram_from_document(nlohmann::json::parse(os.str()));
}

Gf2Poly v(int i, int j) { return Gf2Poly::var(i, j); }

// leftmost-recursion reference for the under-pass recurrence:
//   f(i, [], j)     = a_{i,j}
//   f(i, s:rest, j) = a_{i,s} * f(s, rest, j) + f(i, rest, j)
Gf2Poly reduce_reference(int start, const std::vector<int>& passes, std::size_t at, int end) {
    if (at == passes.size()) return v(start, end);
    int s = passes[at];
    return v(start, s) * reduce_reference(s, passes, at + 1, end) +
           reduce_reference(start, passes, at + 1, end);
}

PassWord word(int start, std::vector<int> passes, int end) {
    PassWord w;
    w.start = start;
    w.passes = std::move(passes);
    w.end = end;
    return w;
}

PassWord random_word(std::mt19937& rng, int n, int max_len) {
    std::uniform_int_distribution<int> arc(1, n);
    std::uniform_int_distribution<int> len(0, max_len);
    std::vector<int> passes(static_cast<std::size_t>(len(rng)));
    for (auto& s : passes) s = arc(rng);
    return word(arc(rng), std::move(passes), arc(rng));
}

PassWord random_loop(std::mt19937& rng, int n, int bp, int max_len) {
    PassWord w = random_word(rng, n, max_len);
    w.start = bp;
    w.end = bp;
    return w;
}

}  // namespace

TEST_CASE("recurrence base cases") {
    CHECK(reduce(word(2, {}, 5)) == v(2, 5));
    CHECK(reduce(word(2, {}, 2)).is_zero());
    CHECK(reduce(word(1, {3}, 4)) == v(1, 3) * v(3, 4) + v(1, 4));
}

TEST_CASE("vectorized reduce equals the leftmost recursion") {
    std::mt19937 rng(101);
    for (int k = 0; k < 200; ++k) {
        PassWord w = random_word(rng, 6, 6);
        CHECK(reduce(w) == reduce_reference(w.start, w.passes, 0, w.end));
    }
}

TEST_CASE("reverse and concat") {
    PassWord w = word(1, {3, 5, 2}, 4);
    PassWord r = reverse(w);
    CHECK(r.start == 4);
    CHECK(r.end == 1);
    CHECK(r.passes == std::vector<int>{2, 5, 3});
    // the recurrence is symmetric over a commutative ring
    CHECK(reduce(r) == reduce(w));

    PassWord joined = concat(word(1, {2}, 3), word(3, {4}, 5));
    CHECK(joined.start == 1);
    CHECK(joined.end == 5);
    CHECK(joined.passes == std::vector<int>{2, 4});
    CHECK_THROWS_AS(concat(word(1, {}, 3), word(4, {}, 5)), EndpointMismatch);
}

TEST_CASE("reduce_nf equals nf of reduce") {
    for (const char* path : {"fixtures/square_knot.json", "fixtures/trefoil.json"}) {
        CordRing ring(load_fixture(path));
        const int n = ring.diagram().num_arcs();
        std::mt19937 rng(211);
        for (int k = 0; k < 50; ++k) {
            PassWord w = random_word(rng, n, 6);
            CHECK(reduce_nf(w, ring) == ring.nf(reduce(w)));
        }
    }
}

TEST_CASE("skein invariance properties") {
    for (const char* path : {"fixtures/square_knot.json", "fixtures/trefoil.json"}) {
        CAPTURE(path);
        CordRing ring(load_fixture(path));
        const KnotDiagram& d = ring.diagram();
        const int n = d.num_arcs();
        const int bp = d.basepoint();
        std::mt19937 rng(307);
        std::uniform_int_distribution<int> arc(1, n);

        for (int k = 0; k < 100; ++k) {
            // double-pass cancellation: a raw polynomial identity
            PassWord w = random_word(rng, n, 6);
            int s = arc(rng);
            std::uniform_int_distribution<std::size_t> pos(0, w.passes.size());
            PassWord doubled = w;
            std::size_t p = pos(rng);
            doubled.passes.insert(doubled.passes.begin() + static_cast<std::ptrdiff_t>(p), {s, s});
            CHECK(reduce(doubled) == reduce(w));

            // meridian absorption on based loops, both sides
            PassWord loop = random_loop(rng, n, bp, 6);
            PassWord left = loop, right = loop;
            left.passes.insert(left.passes.begin(), bp);
            right.passes.push_back(bp);
            CHECK(ring.equivalent(reduce(left), reduce(loop)));
            CHECK(ring.equivalent(reduce(right), reduce(loop)));

            // longitude absorption: holds in the quotient only
            PassWord ell = word(bp, d.longitude_passes(""), bp);
            CHECK(ring.equivalent(reduce(concat(ell, loop)), reduce(loop)));
            CHECK(ring.equivalent(reduce(concat(loop, ell)), reduce(loop)));

            // squared meridian insertion anywhere in a loop is vacuous
            PassWord u = random_loop(rng, n, bp, 3);
            std::uniform_int_distribution<std::size_t> upos(0, u.passes.size());
            PassWord mm = u;
            std::size_t q = upos(rng);
            mm.passes.insert(mm.passes.begin() + static_cast<std::ptrdiff_t>(q), {bp, bp});
            CHECK(reduce(mm) == reduce(u));
        }

        // endpoint-slide: each generator's standard based-loop lift reduces
        // back to the generator in the quotient
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                PassWord g = lift(d, i, j);
                CHECK(g.is_loop_at(bp));
                CHECK(ring.equivalent(reduce(g), v(i, j)));
            }
        }
    }
}
