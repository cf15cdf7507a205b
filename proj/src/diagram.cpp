#include "cordalg/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "cordalg/errors.hpp"

namespace cordalg {

namespace {

int uf_find(std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
    }
    return x;
}

void uf_union(std::vector<int>& parent, int a, int b) {
    parent[static_cast<std::size_t>(uf_find(parent, a))] = uf_find(parent, b);
}

}  // namespace

KnotDiagram::KnotDiagram(int num_arcs, std::vector<int> successor,
                         std::vector<Crossing> crossings, std::map<int, std::string> tags,
                         int basepoint, std::vector<std::string> summands)
    : n_(num_arcs),
      succ_(std::move(successor)),
      crossings_(std::move(crossings)),
      tags_(std::move(tags)),
      summands_(std::move(summands)),
      basepoint_(basepoint) {
    if (n_ < 1) throw InvalidDiagram("diagram needs at least one arc");
    if (succ_.size() != static_cast<std::size_t>(n_))
        throw InvalidDiagram("successor list length must equal the arc count");
    auto in_range = [&](int a) { return a >= 1 && a <= n_; };
    for (int s : succ_)
        if (!in_range(s)) throw InvalidDiagram("successor out of range");

    // the traversal must be a single cycle through all arcs
    {
        std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
        int cur = 1;
        for (int step = 0; step < n_; ++step) {
            if (seen[static_cast<std::size_t>(cur)])
                throw InvalidDiagram("traversal is not a single cycle");
            seen[static_cast<std::size_t>(cur)] = 1;
            cur = succ_[static_cast<std::size_t>(cur) - 1];
        }
        if (cur != 1) throw InvalidDiagram("traversal is not a single cycle");
    }

    if (n_ == 1) {
        if (!crossings_.empty())
            throw InvalidDiagram("a one-arc diagram cannot have crossings");
    } else {
        if (crossings_.size() != static_cast<std::size_t>(n_))
            throw InvalidDiagram("crossing count must equal the arc count");
    }
    std::vector<char> cut(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& c : crossings_) {
        if (!in_range(c.over) || !in_range(c.under_in) || !in_range(c.under_out))
            throw InvalidDiagram("crossing arc out of range");
        if (c.under_in == c.under_out)
            throw InvalidDiagram("under strand must change arcs at a crossing");
        if (succ_[static_cast<std::size_t>(c.under_in) - 1] != c.under_out)
            throw InvalidDiagram("under_out must be the traversal successor of under_in");
        if (cut[static_cast<std::size_t>(c.under_in)])
            throw InvalidDiagram("an arc can end at only one crossing");
        cut[static_cast<std::size_t>(c.under_in)] = 1;
        over_at_start_[c.under_out] = c.over;
    }

    if (tags_.size() != static_cast<std::size_t>(n_))
        throw InvalidDiagram("every arc needs exactly one tag");
    for (auto& [arc, label] : tags_) {
        if (!in_range(arc)) throw InvalidDiagram("tagged arc out of range");
        if (label.empty()) throw InvalidDiagram("empty tag label");
    }
    if (summands_.empty()) {
        std::set<std::string> labels;
        for (auto& [arc, label] : tags_) labels.insert(label);
        summands_.assign(labels.begin(), labels.end());
    } else {
        std::set<std::string> declared(summands_.begin(), summands_.end());
        if (declared.size() != summands_.size())
            throw InvalidDiagram("duplicate summand label");
        for (auto& [arc, label] : tags_)
            if (!declared.count(label))
                throw InvalidDiagram("arc tag not among the declared summands");
    }
    if (!in_range(basepoint_)) throw InvalidDiagram("basepoint out of range");
}

bool KnotDiagram::has_summand(const std::string& label) const {
    return std::find(summands_.begin(), summands_.end(), label) != summands_.end();
}

std::optional<int> KnotDiagram::over_at_start(int arc) const {
    auto it = over_at_start_.find(arc);
    if (it == over_at_start_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> KnotDiagram::longitude_passes(const std::string& label) const {
    if (!label.empty() && !has_summand(label))
        throw UnknownTag("unknown summand label: " + label);
    std::vector<int> out;
    int cur = basepoint_;
    for (int step = 0; step < n_; ++step) {
        cur = successor(cur);
        if (n_ == 1) break;
        if (label.empty() || tag(cur) == label) out.push_back(*over_at_start(cur));
    }
    return out;
}

KnotDiagram KnotDiagram::from_pd_code(const std::vector<std::array<int, 4>>& code) {
    if (code.empty()) {
        return KnotDiagram(1, {1}, {}, {{1, "K"}}, 1);
    }
    const int n = static_cast<int>(code.size());
    const int edges = 2 * n;
    std::vector<int> count(static_cast<std::size_t>(edges) + 1, 0);
    for (const auto& t : code)
        for (int e : t) {
            if (e < 1 || e > edges) throw InvalidPdCode("edge label out of range");
            ++count[static_cast<std::size_t>(e)];
        }
    for (int e = 1; e <= edges; ++e)
        if (count[static_cast<std::size_t>(e)] != 2)
            throw InvalidPdCode("each edge label must occur exactly twice");

    // over strands run through: the two over edges of a crossing belong to
    // the same arc
    std::vector<int> parent(static_cast<std::size_t>(edges) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& [a, b, c, d] : code) uf_union(parent, b, d);

    std::map<int, int> arc_of_class;  // uf class -> provisional arc id
    auto arc_of = [&](int e) {
        int r = uf_find(parent, e);
        auto [it, fresh] = arc_of_class.emplace(r, static_cast<int>(arc_of_class.size()) + 1);
        return it->second;
    };

    struct Prov {
        int over, under_in, under_out;
    };
    std::vector<Prov> prov;
    std::map<int, int> succ_arc;
    for (const auto& [a, b, c, d] : code) {
        if (uf_find(parent, a) == uf_find(parent, c))
            throw InvalidPdCode("reducible kink: under strand re-enters its own arc");
        int ui = arc_of(a), uo = arc_of(c), ov = arc_of(b);
        if (succ_arc.count(ui)) throw InvalidPdCode("under edge used twice as incoming");
        succ_arc[ui] = uo;
        prov.push_back({ov, ui, uo});
    }
    if (static_cast<int>(arc_of_class.size()) != n)
        throw InvalidPdCode("arc count does not match crossing count");

    // relabel arcs along the traversal starting from the arc of edge 1
    std::map<int, int> relabel;
    int cur = arc_of(1);
    for (int k = 1; k <= n; ++k) {
        if (relabel.count(cur)) throw MultiComponent("planar code describes a link");
        relabel[cur] = k;
        auto it = succ_arc.find(cur);
        if (it == succ_arc.end()) throw MultiComponent("planar code describes a link");
        cur = it->second;
    }
    if (relabel.at(cur) != 1) throw MultiComponent("planar code describes a link");

    std::vector<int> succ(static_cast<std::size_t>(n));
    for (auto& [a, b] : succ_arc) succ[static_cast<std::size_t>(relabel.at(a)) - 1] = relabel.at(b);
    std::vector<Crossing> crossings;
    for (const auto& p : prov)
        crossings.push_back({relabel.at(p.over), relabel.at(p.under_in), relabel.at(p.under_out)});
    std::map<int, std::string> tags;
    for (int k = 1; k <= n; ++k) tags[k] = "K";
    return KnotDiagram(n, std::move(succ), std::move(crossings), std::move(tags), 1);
}

KnotDiagram KnotDiagram::from_braid_word(const std::vector<int>& word,
                                         std::optional<int> strands) {
    int s = strands.value_or(1);
    for (int letter : word) {
        if (letter == 0) throw MalformedDocument("braid letter 0");
        s = std::max(s, std::abs(letter) + 1);
    }
    if (strands && *strands < s) throw MalformedDocument("braid letter exceeds strand count");
    if (word.empty() && s > 1)
        throw EmptyBraidOnMultipleStrands("empty braid closes to a link on >1 strands");
    if (word.empty()) return KnotDiagram(1, {1}, {}, {{1, "K"}}, 1);

    // simulate: each strand position carries a segment id; the under
    // strand of a letter is cut, the over strand keeps its segment
    int next_seg = 0;
    std::vector<int> pos(static_cast<std::size_t>(s));
    std::vector<int> initial(static_cast<std::size_t>(s));
    for (int p = 0; p < s; ++p) pos[static_cast<std::size_t>(p)] = initial[static_cast<std::size_t>(p)] = next_seg++;

    struct Prov {
        int over, under_in, under_out;
    };
    std::vector<Prov> prov;
    for (int letter : word) {
        int k = std::abs(letter);
        int &lo = pos[static_cast<std::size_t>(k) - 1], &hi = pos[static_cast<std::size_t>(k)];
        // positive letter: the strand at position k crosses over position k+1
        int over = letter > 0 ? lo : hi;
        int& under = letter > 0 ? hi : lo;
        int cutseg = next_seg++;
        prov.push_back({over, under, cutseg});
        under = cutseg;
        std::swap(lo, hi);
    }

    // closure: the segment ending at the top of position p is the segment
    // that started at position p
    std::vector<int> parent(static_cast<std::size_t>(next_seg));
    std::iota(parent.begin(), parent.end(), 0);
    for (int p = 0; p < s; ++p)
        uf_union(parent, pos[static_cast<std::size_t>(p)], initial[static_cast<std::size_t>(p)]);

    std::map<int, int> succ_arc;
    std::set<int> classes;
    for (int seg = 0; seg < next_seg; ++seg) classes.insert(uf_find(parent, seg));
    for (const auto& p : prov) {
        int ui = uf_find(parent, p.under_in), uo = uf_find(parent, p.under_out);
        if (ui == uo) throw InvalidDiagram("reducible kink in braid closure");
        if (succ_arc.count(ui)) throw InvalidDiagram("braid closure arc cut twice");
        succ_arc[ui] = uo;
    }
    const int n = static_cast<int>(classes.size());
    if (n != static_cast<int>(prov.size()))
        throw MultiComponent("braid closes to a link");

    std::map<int, int> relabel;
    int cur = uf_find(parent, initial[0]);
    for (int k = 1; k <= n; ++k) {
        if (relabel.count(cur)) throw MultiComponent("braid closes to a link");
        auto it = succ_arc.find(cur);
        if (it == succ_arc.end()) throw MultiComponent("braid closes to a link");
        relabel[cur] = k;
        cur = it->second;
    }
    if (relabel.at(cur) != 1) throw MultiComponent("braid closes to a link");

    std::vector<int> succ(static_cast<std::size_t>(n));
    for (auto& [a, b] : succ_arc) succ[static_cast<std::size_t>(relabel.at(a)) - 1] = relabel.at(b);
    std::vector<Crossing> crossings;
    for (const auto& p : prov)
        crossings.push_back({relabel.at(uf_find(parent, p.over)),
                             relabel.at(uf_find(parent, p.under_in)),
                             relabel.at(uf_find(parent, p.under_out))});
    std::map<int, std::string> tags;
    for (int k = 1; k <= n; ++k) tags[k] = "K";
    return KnotDiagram(n, std::move(succ), std::move(crossings), std::move(tags), 1);
}

KnotDiagram KnotDiagram::connected_sum(const KnotDiagram& d1, int a1, const KnotDiagram& d2,
                                       int a2) {
    if (a1 < 1 || a1 > d1.num_arcs() || a2 < 1 || a2 > d2.num_arcs())
        throw InvalidDiagram("splice arc out of range");

    auto relabel_whole = [](const KnotDiagram& d, int a, const std::string& label) {
        // summing with a crossingless unknot only stretches the spliced
        // arc; relabel the survivor starting after the splice point
        const int n = d.num_arcs();
        std::map<int, int> m;
        int cur = d.successor(a);
        for (int k = 1; k <= n; ++k) {
            m[cur] = k;
            cur = d.successor(cur);
        }
        std::vector<int> succ(static_cast<std::size_t>(n));
        for (int arc = 1; arc <= n; ++arc)
            succ[static_cast<std::size_t>(m.at(arc)) - 1] = m.at(d.successor(arc));
        std::vector<Crossing> cr;
        for (const auto& c : d.crossings())
            cr.push_back({m.at(c.over), m.at(c.under_in), m.at(c.under_out)});
        std::map<int, std::string> tags;
        for (int arc = 1; arc <= n; ++arc) tags[m.at(arc)] = label;
        return KnotDiagram(n, std::move(succ), std::move(cr), std::move(tags), m.at(a),
                           {"L1", "L2"});
    };
    if (d2.num_arcs() == 1) return relabel_whole(d1, a1, "L1");
    if (d1.num_arcs() == 1) return relabel_whole(d2, a2, "L2");

    const int n1 = d1.num_arcs(), n2 = d2.num_arcs();
    const int n = n1 + n2;
    // new traversal: succ1(a1) .. a1-first-half (arc X), then succ2(a2) ..
    // a2-first-half (arc Y), closing back to succ1(a1)
    std::map<int, int> m1, m2;
    int id = 0;
    {
        int cur = d1.successor(a1);
        while (cur != a1) {
            m1[cur] = ++id;
            cur = d1.successor(cur);
        }
    }
    const int X = ++id;  // first half of a1 joined to second half of a2
    {
        int cur = d2.successor(a2);
        while (cur != a2) {
            m2[cur] = ++id;
            cur = d2.successor(cur);
        }
    }
    const int Y = ++id;  // first half of a2 joined to second half of a1

    std::vector<int> succ(static_cast<std::size_t>(n));
    auto set_succ = [&](int from, int to) { succ[static_cast<std::size_t>(from) - 1] = to; };
    for (int k = 1; k < n; ++k) set_succ(k, k + 1);
    set_succ(n, 1);

    std::vector<Crossing> crossings;
    for (const auto& c : d1.crossings()) {
        Crossing nc;
        nc.over = c.over == a1 ? Y : m1.at(c.over);
        nc.under_in = c.under_in == a1 ? Y : m1.at(c.under_in);
        nc.under_out = c.under_out == a1 ? X : m1.at(c.under_out);
        crossings.push_back(nc);
    }
    for (const auto& c : d2.crossings()) {
        Crossing nc;
        nc.over = c.over == a2 ? X : m2.at(c.over);
        nc.under_in = c.under_in == a2 ? X : m2.at(c.under_in);
        nc.under_out = c.under_out == a2 ? Y : m2.at(c.under_out);
        crossings.push_back(nc);
    }

    std::map<int, std::string> tags;
    for (auto& [arc, k] : m1) tags[k] = "L1";
    tags[X] = "L1";
    for (auto& [arc, k] : m2) tags[k] = "L2";
    tags[Y] = "L2";
    return KnotDiagram(n, std::move(succ), std::move(crossings), std::move(tags), X,
                       {"L1", "L2"});
}

KnotDiagram KnotDiagram::cable(int order, int at, std::vector<int>* strand_of) const {
    if (order < 1) throw InvalidDiagram("cable order must be positive");
    if (order % 2 == 0) throw EvenCableOrder("even cable order closes to a link");
    if (at < 1 || at > n_) throw InvalidDiagram("cable gadget arc out of range");
    const int m = order;

    if (n_ == 1) {
        if (m == 1) {
            if (strand_of) *strand_of = {0, 1};
            return *this;
        }
        // crossingless base: only the gadget remains.  The mover piece
        // wraps around and re-enters as the last lane, so there are m-1
        // arcs, each cut once by the mover passing over it.
        const int k = m - 1;
        std::vector<int> succ(static_cast<std::size_t>(k));
        std::vector<Crossing> crossings;
        std::map<int, std::string> tags;
        // piece ids 1..k with succ(E_l) = E_{l-1} cyclically; basepoint E_1
        for (int l = 1; l <= k; ++l) tags[l] = tag(1);
        succ.assign(static_cast<std::size_t>(k), 0);
        for (int l = 2; l <= m; ++l) {
            int under_in = l == m ? 1 : l;
            crossings.push_back({1, under_in, l - 1});
        }
        // fix succ to match crossings: succ(under_in) = under_out
        for (const auto& c : crossings) succ[static_cast<std::size_t>(c.under_in) - 1] = c.under_out;
        if (strand_of) strand_of->assign(static_cast<std::size_t>(k) + 1, 1), (*strand_of)[0] = 0;
        return KnotDiagram(k, std::move(succ), std::move(crossings), std::move(tags), 1,
                           summands_);
    }

    // piece ids: main(a, lane) runs from the start of original arc a until
    // its first cut; grid(a, lane, q) are the cuts of lane `lane` inside
    // the terminal crossing grid of arc a (q = 1..m-1); gpost(lane) are the
    // pieces behind the gadget at the end of arc `at`.
    int next_id = 0;
    std::map<std::pair<int, int>, int> main_id;
    std::map<std::tuple<int, int, int>, int> grid_id;
    std::map<int, int> gpost_id;
    for (int a = 1; a <= n_; ++a)
        for (int l = 1; l <= m; ++l) main_id[{a, l}] = ++next_id;
    for (int a = 1; a <= n_; ++a)
        for (int l = 1; l <= m; ++l)
            for (int q = 1; q < m; ++q) grid_id[{a, l, q}] = ++next_id;
    for (int l = 1; l < m; ++l) gpost_id[l] = ++next_id;

    std::map<int, int> over_of;  // terminal crossing over arc, by under_in arc
    for (const auto& c : crossings_) over_of[c.under_in] = c.over;

    std::vector<Crossing> crossings;
    std::map<int, std::string> piece_tag;
    for (int a = 1; a <= n_; ++a) {
        const int over_arc = over_of.at(a);
        for (int l = 1; l <= m; ++l) {
            piece_tag[main_id.at({a, l})] = tag(a);
            // piece entering the terminal grid of arc a in lane l
            int entering;
            if (a == at) {
                entering = l == m ? main_id.at({at, 1}) : gpost_id.at(l);
            } else {
                entering = main_id.at({a, l});
            }
            int cur = entering;
            for (int q = 1; q <= m; ++q) {
                int nxt = q == m ? main_id.at({successor(a), l}) : grid_id.at({a, l, q});
                crossings.push_back({main_id.at({over_arc, q}), cur, nxt});
                if (q < m) piece_tag[nxt] = tag(successor(a));
                cur = nxt;
            }
        }
    }
    // gadget at the end of arc `at`: the lane-1 mover passes over lanes
    // 2..m and comes out in lane m; every other lane shifts down by one
    for (int l = 2; l <= m; ++l) {
        crossings.push_back({main_id.at({at, 1}), main_id.at({at, l}), gpost_id.at(l - 1)});
        piece_tag[gpost_id.at(l - 1)] = tag(at);
    }

    // renumber pieces along the traversal starting at the basepoint lane-1
    // piece
    std::map<int, int> succ_piece;
    for (const auto& c : crossings) succ_piece[c.under_in] = c.under_out;
    std::map<int, int> renumber;
    int cur = main_id.at({basepoint_, 1});
    for (int k = 1; k <= next_id; ++k) {
        if (renumber.count(cur)) throw InvalidDiagram("cable traversal is not a single cycle");
        renumber[cur] = k;
        cur = succ_piece.at(cur);
    }

    std::vector<int> succ(static_cast<std::size_t>(next_id));
    std::vector<Crossing> out;
    for (const auto& c : crossings) {
        Crossing nc{renumber.at(c.over), renumber.at(c.under_in), renumber.at(c.under_out)};
        succ[static_cast<std::size_t>(nc.under_in) - 1] = nc.under_out;
        out.push_back(nc);
    }
    std::map<int, std::string> tags;
    for (auto& [piece, label] : piece_tag) tags[renumber.at(piece)] = label;
    if (strand_of) {
        strand_of->assign(static_cast<std::size_t>(next_id) + 1, 0);
        for (auto& [key, piece] : main_id)
            (*strand_of)[static_cast<std::size_t>(renumber.at(piece))] = key.first;
        for (auto& [key, piece] : grid_id)
            (*strand_of)[static_cast<std::size_t>(renumber.at(piece))] = successor(std::get<0>(key));
        for (auto& [lane, piece] : gpost_id)
            (*strand_of)[static_cast<std::size_t>(renumber.at(piece))] = at;
    }
    return KnotDiagram(next_id, std::move(succ), std::move(out), std::move(tags), 1, summands_);
}

}  // namespace cordalg
