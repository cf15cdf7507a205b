#include "cordalg/homsep.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "cordalg/errors.hpp"
#include "cordalg/skein.hpp"

namespace cordalg {

Target Target::poly_z() { return Target(62, false); }
Target Target::truncated(int k) { return Target(std::min(k, 62), true); }
Target Target::boolean() { return Target(0, true); }

Target::Elem Target::mul(Elem a, Elem b) const {
    if (!truncate_ && a && b &&
        std::bit_width(a) + std::bit_width(b) - 2 > static_cast<unsigned>(cutoff_))
        throw Error("target element degree exceeds the representable range; use a truncated target");
    Elem r = 0;
    for (int k = 0; b; ++k, b >>= 1)
        if (b & 1) r ^= a << k;  // carryless shift-and-add
    if (truncate_) r &= (Elem{2} << cutoff_) - 1;
    return r;
}

std::vector<Target::Elem> Target::candidates(int degree_limit) const {
    int top = truncate_ ? std::min(cutoff_, degree_limit) : degree_limit;
    if (top < 0) top = 0;
    std::vector<Elem> out;
    for (Elem e = 0; e < (Elem{2} << top); ++e) out.push_back(e);
    // order by (degree, numeric value); the numeric order already refines
    // degree except that 0 sorts before 1
    std::stable_sort(out.begin(), out.end(), [](Elem a, Elem b) {
        int da = a ? std::bit_width(a) - 1 : -1;
        int db = b ? std::bit_width(b) - 1 : -1;
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

std::string Target::str(Elem e) const {
    if (e == 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = std::bit_width(e) - 1; k >= 0; --k) {
        if (!((e >> k) & 1)) continue;
        if (!first) os << "+";
        first = false;
        if (k == 0) os << "1";
        else if (k == 1) os << "z";
        else os << "z^" << k;
    }
    return os.str();
}

std::string Target::name() const {
    if (!truncate_) return "z";
    if (cutoff_ == 0) return "bool";
    return "z^" + std::to_string(cutoff_);
}

Target::Elem evaluate(const Gf2Poly& p, const Assignment& phi, const Target& target) {
    Target::Elem r = 0;
    for (const auto& m : p.terms()) {
        Target::Elem t = 1;
        for (auto& [v, e] : m.factors) {
            Generator g = var_gen(v);
            auto it = phi.find({g.i, g.j});
            if (it == phi.end())
                throw IncompleteAssignment("no image for generator " + g.str());
            for (std::uint32_t k = 0; k < e; ++k) t = target.mul(t, it->second);
        }
        r = target.add(r, t);
    }
    return r;
}

bool verify_hom(const CordRing& ring, const Assignment& phi, const Target& target) {
    return verify_hom(ring.diagram(), phi, target);
}

bool verify_hom(const KnotDiagram& d, const Assignment& phi, const Target& target) {
    for (const auto& rel : CordRing::crossing_relations(d))
        if (evaluate(rel, phi, target) != 0) return false;
    return true;
}

namespace {

Target::Elem phi_at(const Assignment& phi, int i, int j) {
    if (i == j) return 0;
    if (i > j) std::swap(i, j);
    auto it = phi.find({i, j});
    if (it == phi.end())
        throw IncompleteAssignment("no image for generator " + Generator{i, j}.str());
    return it->second;
}

}  // namespace

Target::Elem evaluate_word(const PassWord& w, int num_arcs, const Assignment& phi,
                           const Target& target) {
    if (w.start < 1 || w.end < 1 || w.start > num_arcs || w.end > num_arcs)
        throw EndpointMismatch("pass word endpoint out of range");
    // g[u] = value of f(u, remaining passes, end), built back to front
    std::vector<Target::Elem> g(static_cast<std::size_t>(num_arcs) + 1, 0);
    for (int u = 1; u <= num_arcs; ++u) g[static_cast<std::size_t>(u)] = phi_at(phi, u, w.end);
    for (auto it = w.passes.rbegin(); it != w.passes.rend(); ++it) {
        int s = *it;
        if (s < 1 || s > num_arcs) throw EndpointMismatch("pass arc out of range");
        Target::Elem gs = g[static_cast<std::size_t>(s)];
        for (int u = 1; u <= num_arcs; ++u) {
            auto& gu = g[static_cast<std::size_t>(u)];
            gu = target.add(gu, target.mul(phi_at(phi, u, s), gs));
        }
    }
    return g[static_cast<std::size_t>(w.start)];
}

Assignment pullback_assignment(const KnotDiagram& satellite, const std::vector<int>& strand_of,
                               int base_arcs, const Assignment& base_phi, const Target& target) {
    const int n = satellite.num_arcs();
    if (strand_of.size() != static_cast<std::size_t>(n) + 1)
        throw MalformedDocument("strand projection must cover every satellite arc");
    auto project = [&](int arc) {
        int b = strand_of[static_cast<std::size_t>(arc)];
        if (b < 1 || b > base_arcs) throw MalformedDocument("strand projection arc out of range");
        return b;
    };
    Assignment out;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            PassWord w = lift(satellite, u, v);
            PassWord p;
            p.start = project(w.start);
            p.end = project(w.end);
            p.passes.reserve(w.passes.size());
            for (int s : w.passes) p.passes.push_back(project(s));
            out[{u, v}] = evaluate_word(p, base_arcs, base_phi, target);
        }
    }
    return out;
}

std::vector<Assignment> search_homs(const CordRing& ring, const Target& target,
                                    int degree_limit, std::size_t max_results) {
    const int n = ring.diagram().num_arcs();
    std::vector<std::pair<int, int>> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) gens.emplace_back(i, j);

    auto relations = CordRing::crossing_relations(ring.diagram());
    // for pruning: the last generator (in assignment order) occurring in
    // each relation; the relation is checked once that one is assigned
    auto gen_index = [&](VarId v) {
        Generator g = var_gen(v);
        return std::lower_bound(gens.begin(), gens.end(), std::make_pair(g.i, g.j)) -
               gens.begin();
    };
    std::vector<std::vector<const Gf2Poly*>> check_at(gens.size());
    for (const auto& rel : relations) {
        std::size_t last = 0;
        for (VarId v : rel.variables()) last = std::max(last, static_cast<std::size_t>(gen_index(v)));
        if (last < check_at.size()) check_at[last].push_back(&rel);
    }

    auto candidates = target.candidates(degree_limit);
    std::vector<Assignment> results;
    Assignment phi;
    auto dfs = [&](auto&& self, std::size_t k) -> void {
        if (results.size() >= max_results) return;
        if (k == gens.size()) {
            results.push_back(phi);
            return;
        }
        for (Target::Elem e : candidates) {
            phi[gens[k]] = e;
            bool ok = true;
            for (const Gf2Poly* rel : check_at[k])
                if (evaluate(*rel, phi, target) != 0) {
                    ok = false;
                    break;
                }
            if (ok) self(self, k + 1);
            if (results.size() >= max_results) break;
        }
        phi.erase(gens[k]);
    };
    dfs(dfs, 0);
    return results;
}

std::optional<SeparationCertificate> separate(const CordRing& ring, const Monodromy& mono,
                                              const std::vector<Assignment>& homs,
                                              const Target& target) {
    const int n = ring.diagram().num_arcs();
    for (const auto& phi : homs) {
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                Target::Elem before = evaluate(ring.nf(Gf2Poly::var(i, j)), phi, target);
                Target::Elem after = evaluate(mono.image(i, j), phi, target);
                if (before != after)
                    return SeparationCertificate{phi, i, j, before, after};
            }
        }
    }
    return std::nullopt;
}

std::optional<SeparationCertificate> certify_action(const KnotDiagram& d,
                                                    const LoopAction& action,
                                                    const Assignment& phi, const Target& target) {
    const int n = d.num_arcs();
    if (n == 1) return std::nullopt;
    const int bp = d.basepoint();
    using Elem = Target::Elem;
    using Vec = std::vector<Elem>;  // indexed 1..n

    // scalar image of one under-pass matrix M(t) = I + E(t),
    // E(t)[u][v] = phi(a_{u,t}) [v == t]
    auto row_step = [&](Vec& r, int t) {  // r <- r * M(t)
        Elem acc = 0;
        for (int u = 1; u <= n; ++u)
            acc = target.add(acc, target.mul(r[static_cast<std::size_t>(u)], phi_at(phi, u, t)));
        auto& rt = r[static_cast<std::size_t>(t)];
        rt = target.add(rt, acc);
    };
    auto col_step = [&](Vec& c, int t) {  // c <- M(t) * c
        const Elem ct = c[static_cast<std::size_t>(t)];
        for (int u = 1; u <= n; ++u) {
            auto& cu = c[static_cast<std::size_t>(u)];
            cu = target.add(cu, target.mul(phi_at(phi, u, t), ct));
        }
    };
    auto letters_of_arc = [&](int arc) {
        std::vector<int> one{*d.over_at_start(arc)};
        return action.substitute(one);
    };

    std::vector<Vec> rows(static_cast<std::size_t>(n) + 1);
    Vec r(static_cast<std::size_t>(n) + 1, 0);
    r[static_cast<std::size_t>(bp)] = 1;
    for (int t : action.prefix) row_step(r, t);
    rows[static_cast<std::size_t>(bp)] = r;
    for (int i = d.successor(bp); i != bp; i = d.successor(i)) {
        for (int t : letters_of_arc(i)) row_step(r, t);
        rows[static_cast<std::size_t>(i)] = r;
    }

    std::vector<int> pred(static_cast<std::size_t>(n) + 1);
    for (int a = 1; a <= n; ++a) pred[static_cast<std::size_t>(d.successor(a))] = a;
    std::vector<Vec> cols(static_cast<std::size_t>(n) + 1);
    Vec c(static_cast<std::size_t>(n) + 1, 0);
    for (int u = 1; u <= n; ++u) c[static_cast<std::size_t>(u)] = phi_at(phi, u, bp);
    for (auto it = action.suffix.rbegin(); it != action.suffix.rend(); ++it) col_step(c, *it);
    cols[static_cast<std::size_t>(bp)] = c;
    for (int j = pred[static_cast<std::size_t>(bp)]; j != bp; j = pred[static_cast<std::size_t>(j)]) {
        auto letters = letters_of_arc(d.successor(j));
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) col_step(c, *it);
        cols[static_cast<std::size_t>(j)] = c;
    }

    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            Elem after = 0;
            for (int u = 1; u <= n; ++u)
                after = target.add(after,
                                   target.mul(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)],
                                              cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(u)]));
            Elem before = phi_at(phi, i, j);
            if (before != after) return SeparationCertificate{phi, i, j, before, after};
        }
    }
    return std::nullopt;
}

}  // namespace cordalg
