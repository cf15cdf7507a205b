#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cordalg/errors.hpp"
#include "cordalg/gf2poly.hpp"

using namespace cordalg;

namespace {

Gf2Poly v(int i, int j) { return Gf2Poly::var(i, j); }

// GF(2) span membership oracle: does p lie in the span of all products
// g * m with deg(g * m) <= degree_cap?  Every span member is an ideal
// member, and for the small random ideals used here the cap is generous
// enough to witness every ideal member the basis claims.
bool in_span(const Gf2Poly& p, const std::vector<Gf2Poly>& gens,
             const std::vector<VarId>& vars, std::uint32_t degree_cap) {
    // enumerate monomials in `vars` up to the cap
    std::vector<Monomial> mons{Monomial::one()};
    for (std::size_t k = 0; k < mons.size(); ++k) {
        if (mons[k].degree() >= degree_cap) continue;
        for (VarId var : vars) {
            Monomial m = mons[k].times(Monomial::var(var));
            if (std::find(mons.begin(), mons.end(), m) == mons.end()) mons.push_back(m);
        }
    }
    // gaussian elimination with rows keyed by their grevlex-leading monomial
    std::map<std::string, Gf2Poly> pivot;
    auto reduce_row = [&](Gf2Poly row) {
        while (!row.is_zero()) {
            auto it = pivot.find(row.leading().str());
            if (it == pivot.end()) break;
            row += it->second;
        }
        return row;
    };
    for (const auto& g : gens) {
        for (const auto& m : mons) {
            if (g.is_zero() || g.leading().degree() + m.degree() > degree_cap) continue;
            Gf2Poly row = reduce_row(g.shifted(m));
            if (!row.is_zero()) pivot.emplace(row.leading().str(), row);
        }
    }
    return reduce_row(p).is_zero();
}

Gf2Poly random_poly(std::mt19937& rng, const std::vector<VarId>& vars, int max_terms,
                    std::uint32_t max_degree) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    std::uniform_int_distribution<std::uint32_t> deg(0, max_degree);
    std::vector<Monomial> terms;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m = Monomial::one();
        std::uint32_t d = deg(rng);
        for (std::uint32_t e = 0; e < d; ++e) m = m.times(Monomial::var(vars[pick(rng)]));
        terms.push_back(m);
    }
    return Gf2Poly::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("generator normalization") {
    CHECK(!Generator::make(2, 2).has_value());
    auto g = Generator::make(5, 3);
    REQUIRE(g.has_value());
    CHECK(g->i == 3);
    CHECK(g->j == 5);
    CHECK(g->str() == "a_{3,5}");
    CHECK(var_gen(var_id(*g)) == *g);
}

TEST_CASE("monomial arithmetic") {
    Monomial x = Monomial::var(var_id({1, 2}));
    Monomial y = Monomial::var(var_id({1, 3}));
    Monomial xy = x.times(y);
    CHECK(xy.degree() == 2);
    CHECK(xy.divide(x).has_value());
    CHECK(*xy.divide(x) == y);
    CHECK(!x.divide(xy).has_value());
    CHECK(x.coprime(y));
    CHECK(!xy.coprime(y));
    CHECK(Monomial::lcm(x, xy) == xy);
    Monomial x2 = x.times(x);
    CHECK(Monomial::lcm(x2, xy) == x2.times(y));
    CHECK(Monomial::one().is_one());
}

TEST_CASE("grevlex order") {
    Monomial one = Monomial::one();
    Monomial x = Monomial::var(var_id({1, 2}));
    Monomial y = Monomial::var(var_id({1, 3}));
    // degree dominates
    CHECK(grevlex_less(one, x));
    CHECK(grevlex_less(y, x.times(y)));
    // within a degree, the variable with the smaller id is the greater one
    CHECK(grevlex_less(y, x));
    CHECK(grevlex_less(x.times(y), x.times(x)));

    // strict weak order on random monomials
    std::mt19937 rng(7);
    std::vector<VarId> vars{var_id({1, 2}), var_id({1, 3}), var_id({2, 3})};
    std::vector<Monomial> ms;
    for (int k = 0; k < 40; ++k) {
        Gf2Poly p = random_poly(rng, vars, 1, 4);
        if (!p.is_zero()) ms.push_back(p.leading());
    }
    std::sort(ms.begin(), ms.end(), grevlex_less);
    for (std::size_t a = 0; a + 1 < ms.size(); ++a)
        CHECK(!grevlex_less(ms[a + 1], ms[a]));
    for (const auto& m : ms) CHECK(!grevlex_less(m, m));
}

TEST_CASE("polynomial ring axioms over GF(2)") {
    CHECK(v(2, 2).is_zero());
    CHECK(v(3, 1) == v(1, 3));
    CHECK((v(1, 2) + v(1, 2)).is_zero());
    // from_terms cancels duplicates pairwise
    Monomial x = Monomial::var(var_id({1, 2}));
    CHECK(Gf2Poly::from_terms({x, x, x}) == Gf2Poly(x));
    CHECK(Gf2Poly::from_terms({x, x}).is_zero());

    std::mt19937 rng(11);
    std::vector<VarId> vars{var_id({1, 2}), var_id({1, 3}), var_id({2, 3}), var_id({3, 4})};
    for (int k = 0; k < 50; ++k) {
        Gf2Poly a = random_poly(rng, vars, 4, 3);
        Gf2Poly b = random_poly(rng, vars, 4, 3);
        Gf2Poly c = random_poly(rng, vars, 4, 3);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * Gf2Poly::one()) == a);
        CHECK((a + a).is_zero());
    }
}

TEST_CASE("polynomial text form") {
    CHECK(Gf2Poly::zero().str() == "0");
    CHECK(Gf2Poly::one().str() == "1");
    CHECK((v(1, 2) * v(1, 2) + v(3, 4) + Gf2Poly::one()).str() == "a_{1,2}^2+a_{3,4}+1");
    auto vars = (v(1, 2) * v(2, 3) + v(1, 2)).variables();
    CHECK(vars == std::vector<VarId>{var_id({1, 2}), var_id({2, 3})});
}

TEST_CASE("groebner basis of simple ideals") {
    // <x + y, y> reduces to <x, y>
    auto gb = GroebnerBasis::compute({v(1, 2) + v(1, 3), v(1, 3)});
    REQUIRE(gb.polys().size() == 2);
    CHECK(gb.normal_form(v(1, 2)).is_zero());
    CHECK(gb.normal_form(v(1, 3)).is_zero());
    CHECK(gb.normal_form(v(2, 3)) == v(2, 3));

    // unit ideal
    auto unit = GroebnerBasis::compute({Gf2Poly::one() + v(1, 2), v(1, 2)});
    CHECK(unit.normal_form(Gf2Poly::one()).is_zero());

    // zero ideal
    auto zero = GroebnerBasis::compute({Gf2Poly::zero()});
    CHECK(zero.polys().empty());
    CHECK(zero.normal_form(v(1, 2) * v(1, 2)) == v(1, 2) * v(1, 2));
}

TEST_CASE("groebner basis properties on random ideals") {
    std::mt19937 rng(23);
    std::vector<VarId> vars{var_id({1, 2}), var_id({1, 3}), var_id({2, 3})};
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Gf2Poly> gens;
        for (int k = 0; k < 3; ++k) {
            Gf2Poly g = random_poly(rng, vars, 3, 2);
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        auto gb = GroebnerBasis::compute(gens);

        // reduced basis: no term of any element divisible by another's lead
        for (std::size_t a = 0; a < gb.polys().size(); ++a)
            for (std::size_t b = 0; b < gb.polys().size(); ++b) {
                if (a == b) continue;
                for (const auto& t : gb.polys()[a].terms())
                    CHECK(!t.divide(gb.polys()[b].leading()).has_value());
            }

        // buchberger criterion: every S-polynomial reduces to zero
        for (std::size_t a = 0; a < gb.polys().size(); ++a)
            for (std::size_t b = a + 1; b < gb.polys().size(); ++b) {
                const auto& f = gb.polys()[a];
                const auto& g = gb.polys()[b];
                Monomial l = Monomial::lcm(f.leading(), g.leading());
                Gf2Poly s = f.shifted(*l.divide(f.leading())) + g.shifted(*l.divide(g.leading()));
                CHECK(gb.normal_form(s).is_zero());
            }

        // the generators themselves are members
        for (const auto& g : gens) CHECK(gb.normal_form(g).is_zero());

        // random combinations of generators are members
        for (int k = 0; k < 5; ++k) {
            Gf2Poly member;
            for (const auto& g : gens) member += random_poly(rng, vars, 2, 2) * g;
            CHECK(gb.normal_form(member).is_zero());
        }

        // normal form is sound and idempotent
        for (int k = 0; k < 5; ++k) {
            Gf2Poly p = random_poly(rng, vars, 3, 2);
            Gf2Poly r = gb.normal_form(p);
            CHECK(gb.normal_form(r) == r);
            CHECK(gb.normal_form(p + r).is_zero());
            bool member = in_span(p, gens, vars, 8);
            if (member) CHECK(gb.normal_form(p).is_zero());
            if (gb.normal_form(p).is_zero()) CHECK(member);
        }
    }
}

TEST_CASE("budget exhaustion raises instead of running away") {
    std::vector<Gf2Poly> gens{v(1, 2) * v(2, 3) + v(1, 3), v(1, 3) * v(2, 3) + v(1, 2)};
    Budget no_pairs;
    no_pairs.max_spairs = 0;
    CHECK_THROWS_AS(GroebnerBasis::compute(gens, no_pairs), ResourceBudgetExceeded);
    Budget no_work;
    no_work.max_monomials = 1;
    CHECK_THROWS_AS(GroebnerBasis::compute(gens, no_work), ResourceBudgetExceeded);
}
