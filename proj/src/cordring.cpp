#include "cordalg/cordring.hpp"

namespace cordalg {

std::vector<Gf2Poly> CordRing::crossing_relations(const KnotDiagram& d) {
    std::vector<Gf2Poly> rels;
    for (const auto& c : d.crossings()) {
        for (int l = 1; l <= d.num_arcs(); ++l) {
            Gf2Poly r = Gf2Poly::var(l, c.under_in) + Gf2Poly::var(l, c.under_out) +
                        Gf2Poly::var(l, c.over) * Gf2Poly::var(c.over, c.under_in);
            if (!r.is_zero()) rels.push_back(std::move(r));
        }
    }
    return rels;
}

CordRing::CordRing(KnotDiagram diagram, const Budget& budget)
    : diagram_(std::move(diagram)),
      basis_(GroebnerBasis::compute(crossing_relations(diagram_), budget)) {}

}  // namespace cordalg
