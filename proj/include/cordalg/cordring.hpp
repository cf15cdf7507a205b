#pragma once

#include "cordalg/diagram.hpp"
#include "cordalg/gf2poly.hpp"

namespace cordalg {

/// The commutative cord ring of a diagram: polynomials in the a_{i,j}
/// modulo the crossing relations, represented by a reduced Groebner basis
/// of the relation ideal.
class CordRing {
public:
    explicit CordRing(KnotDiagram diagram, const Budget& budget = {});

    const KnotDiagram& diagram() const { return diagram_; }
    const GroebnerBasis& basis() const { return basis_; }

    /// Canonical representative of p in the quotient.
    Gf2Poly nf(const Gf2Poly& p) const { return basis_.normal_form(p); }
    bool equivalent(const Gf2Poly& p, const Gf2Poly& q) const { return nf(p + q).is_zero(); }

    /// One relation a_{l,ui} + a_{l,uo} + a_{l,o} * a_{o,ui} per crossing
    /// (o; ui, uo) and arc l, zero relations dropped.
    static std::vector<Gf2Poly> crossing_relations(const KnotDiagram& d);

private:
    KnotDiagram diagram_;
    GroebnerBasis basis_;
};

}  // namespace cordalg
