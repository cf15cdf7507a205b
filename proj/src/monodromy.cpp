#include "cordalg/monodromy.hpp"

#include "cordalg/errors.hpp"

namespace cordalg {

LoopAction LoopAction::blue_box(const KnotDiagram& d, const std::string& label) {
    if (!d.has_summand(label)) throw UnknownTag("unknown summand label: " + label);
    std::vector<int> l = d.longitude_passes(label);
    std::vector<int> rev(l.rbegin(), l.rend());
    LoopAction act;
    for (int s = 1; s <= d.num_arcs(); ++s) {
        if (d.tag(s) != label) continue;
        std::vector<int> w = rev;
        w.push_back(s);
        w.insert(w.end(), l.begin(), l.end());
        act.subst[s] = std::move(w);
    }
    return act;
}

LoopAction LoopAction::gramain(const KnotDiagram& d) {
    LoopAction act;
    act.prefix = {d.basepoint()};
    act.suffix = {d.basepoint()};
    return act;
}

std::vector<int> LoopAction::substitute(const std::vector<int>& passes) const {
    std::vector<int> out;
    for (int s : passes) {
        auto it = subst.find(s);
        if (it == subst.end()) out.push_back(s);
        else out.insert(out.end(), it->second.begin(), it->second.end());
    }
    return out;
}

LoopAction LoopAction::compose(const LoopAction& f, const LoopAction& g) {
    LoopAction r;
    r.prefix = f.prefix;
    auto gp = f.substitute(g.prefix);
    r.prefix.insert(r.prefix.end(), gp.begin(), gp.end());
    for (const auto& [s, w] : g.subst) r.subst[s] = f.substitute(w);
    for (const auto& [s, w] : f.subst)
        if (!g.subst.count(s)) r.subst[s] = w;
    r.suffix = f.substitute(g.suffix);
    r.suffix.insert(r.suffix.end(), f.suffix.begin(), f.suffix.end());
    return r;
}

LoopAction LoopAction::power(int n) const {
    if (n < 0) throw Error("loop action powers must be nonnegative");
    LoopAction r = identity();
    for (int k = 0; k < n; ++k) r = compose(*this, r);
    return r;
}

PassWord LoopAction::apply(const PassWord& w, int basepoint) const {
    if (!w.is_loop_at(basepoint))
        throw NotABasedLoop("loop actions apply to loops based at the basepoint arc");
    PassWord out;
    out.start = out.end = basepoint;
    out.passes = prefix;
    auto mid = substitute(w.passes);
    out.passes.insert(out.passes.end(), mid.begin(), mid.end());
    out.passes.insert(out.passes.end(), suffix.begin(), suffix.end());
    return out;
}

Monodromy::Monodromy(const CordRing& ring, const LoopAction& action)
    : ring_(ring), n_(ring.diagram().num_arcs()) {
    const KnotDiagram& d = ring_.diagram();
    images_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), std::nullopt);
    if (n_ == 1) return;  // only the zero cord a_{1,1}

    const int bp = d.basepoint();
    auto nf = [&](const Gf2Poly& p) { return ring_.nf(p); };

    // one under-pass through arc t is the matrix M(t) = I + E(t) with
    // E(t)[u][v] = a_{u,t} [v == t]; a pass word is the product of its
    // letters' matrices
    auto row_step = [&](Vec& r, int t) {  // r <- r * M(t)
        Gf2Poly acc;
        for (int u = 1; u <= n_; ++u)
            acc += r[static_cast<std::size_t>(u)] * Gf2Poly::var(u, t);
        auto& rt = r[static_cast<std::size_t>(t)];
        rt = nf(rt + acc);
    };
    auto col_step = [&](Vec& c, int t) {  // c <- M(t) * c
        const Gf2Poly ct = c[static_cast<std::size_t>(t)];
        for (int u = 1; u <= n_; ++u) {
            auto& cu = c[static_cast<std::size_t>(u)];
            cu = nf(cu + Gf2Poly::var(u, t) * ct);
        }
    };
    auto letters_of_arc = [&](int arc) {
        std::vector<int> one{*d.over_at_start(arc)};
        return action.substitute(one);
    };

    // row vectors r(i) = e_bp * M(prefix) * M(subst(segment bp -> i))
    std::vector<Vec>& rows = rows_;
    rows.resize(static_cast<std::size_t>(n_) + 1);
    Vec r(static_cast<std::size_t>(n_) + 1, Gf2Poly());
    r[static_cast<std::size_t>(bp)] = Gf2Poly::one();
    for (int t : action.prefix) row_step(r, t);
    rows[static_cast<std::size_t>(bp)] = r;
    for (int i = d.successor(bp); i != bp; i = d.successor(i)) {
        for (int t : letters_of_arc(i)) row_step(r, t);
        rows[static_cast<std::size_t>(i)] = r;
    }

    // column vectors c(j) = M(subst(segment j -> bp)) * M(suffix) * v,
    // v[u] = a_{u,bp}
    std::vector<int> pred(static_cast<std::size_t>(n_) + 1);
    for (int a = 1; a <= n_; ++a) pred[static_cast<std::size_t>(d.successor(a))] = a;
    std::vector<Vec>& cols = cols_;
    cols.resize(static_cast<std::size_t>(n_) + 1);
    Vec c(static_cast<std::size_t>(n_) + 1, Gf2Poly());
    for (int u = 1; u <= n_; ++u)
        c[static_cast<std::size_t>(u)] = nf(Gf2Poly::var(u, bp));
    for (auto it = action.suffix.rbegin(); it != action.suffix.rend(); ++it) col_step(c, *it);
    cols[static_cast<std::size_t>(bp)] = c;
    for (int j = pred[static_cast<std::size_t>(bp)]; j != bp;
         j = pred[static_cast<std::size_t>(j)]) {
        auto letters = letters_of_arc(d.successor(j));
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) col_step(c, *it);
        cols[static_cast<std::size_t>(j)] = c;
    }

}

const Gf2Poly& Monodromy::image(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw EndpointMismatch("generator arc out of range");
    auto& slot = images_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
                         static_cast<std::size_t>(j - 1)];
    if (!slot) {
        if (n_ == 1) {
            slot = Gf2Poly::zero();
        } else {
            Gf2Poly acc;
            for (int u = 1; u <= n_; ++u)
                acc += rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)] *
                       cols_[static_cast<std::size_t>(j)][static_cast<std::size_t>(u)];
            slot = ring_.nf(acc);
        }
    }
    return *slot;
}

bool Monodromy::moves(int i, int j) const {
    return !ring_.equivalent(image(i, j), Gf2Poly::var(i, j));
}

std::optional<std::pair<int, int>> Monodromy::first_moved() const {
    if (n_ == 1) return std::nullopt;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (moves(i, j)) return std::make_pair(i, j);
    return std::nullopt;
}

std::vector<std::pair<int, int>> Monodromy::moved() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (moves(i, j)) out.emplace_back(i, j);
    return out;
}

}  // namespace cordalg
