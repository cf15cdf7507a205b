#include "cordalg/skein.hpp"

#include "cordalg/errors.hpp"

namespace cordalg {

namespace {

template <typename NfFn>
Gf2Poly reduce_impl(const PassWord& w, int num_arcs, NfFn&& nf) {
    if (w.start < 1 || w.end < 1 || w.start > num_arcs || w.end > num_arcs)
        throw EndpointMismatch("pass word endpoint out of range");
    // g[u] = f(u, remaining passes, end), built back to front
    std::vector<Gf2Poly> g(static_cast<std::size_t>(num_arcs) + 1);
    for (int u = 1; u <= num_arcs; ++u)
        g[static_cast<std::size_t>(u)] = nf(Gf2Poly::var(u, w.end));
    for (auto it = w.passes.rbegin(); it != w.passes.rend(); ++it) {
        int s = *it;
        if (s < 1 || s > num_arcs) throw EndpointMismatch("pass arc out of range");
        Gf2Poly gs = g[static_cast<std::size_t>(s)];
        for (int u = 1; u <= num_arcs; ++u) {
            auto& gu = g[static_cast<std::size_t>(u)];
            gu = nf(Gf2Poly::var(u, s) * gs + gu);
        }
    }
    return g[static_cast<std::size_t>(w.start)];
}

}  // namespace

Gf2Poly reduce(const PassWord& w) {
    int n = std::max(w.start, w.end);
    for (int s : w.passes) n = std::max(n, s);
    return reduce_impl(w, n, [](Gf2Poly p) { return p; });
}

Gf2Poly reduce_nf(const PassWord& w, const CordRing& ring) {
    return reduce_impl(w, ring.diagram().num_arcs(),
                       [&](const Gf2Poly& p) { return ring.nf(p); });
}

PassWord reverse(const PassWord& w) {
    PassWord r;
    r.start = w.end;
    r.end = w.start;
    r.passes.assign(w.passes.rbegin(), w.passes.rend());
    return r;
}

PassWord concat(const PassWord& w1, const PassWord& w2) {
    if (w1.end != w2.start)
        throw EndpointMismatch("pass words do not share an endpoint arc");
    PassWord r;
    r.start = w1.start;
    r.end = w2.end;
    r.passes = w1.passes;
    r.passes.insert(r.passes.end(), w2.passes.begin(), w2.passes.end());
    return r;
}

PassWord lift(const KnotDiagram& d, int i, int j) {
    if (i < 1 || i > d.num_arcs() || j < 1 || j > d.num_arcs())
        throw EndpointMismatch("generator arc out of range");
    auto segment = [&](int from, int to) {
        std::vector<int> out;
        int cur = from;
        while (cur != to) {
            cur = d.successor(cur);
            out.push_back(*d.over_at_start(cur));
        }
        return out;
    };
    PassWord w;
    w.start = d.basepoint();
    w.end = d.basepoint();
    w.passes = segment(d.basepoint(), i);
    auto back = segment(j, d.basepoint());
    w.passes.insert(w.passes.end(), back.begin(), back.end());
    return w;
}

}  // namespace cordalg
