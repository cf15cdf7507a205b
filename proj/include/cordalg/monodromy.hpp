#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cordalg/cordring.hpp"
#include "cordalg/skein.hpp"

namespace cordalg {

/// An automorphism of based loops in resolved form: a based loop with pass
/// word w maps to prefix ++ subst(w) ++ suffix, where subst replaces each
/// pass through arc s by the word subst[s] (default [s]).  Closed under
/// composition and powers.
struct LoopAction {
    std::vector<int> prefix;
    std::map<int, std::vector<int>> subst;
    std::vector<int> suffix;

    static LoopAction identity() { return {}; }

    /// Drags every pass through the tagged summand around that summand's
    /// longitude: s becomes reverse(l) ++ [s] ++ l for l the longitude
    /// pass word of the summand.  Throws UnknownTag for undeclared labels.
    static LoopAction blue_box(const KnotDiagram& d, const std::string& label);

    /// Conjugates every based loop by the meridian of the basepoint arc.
    static LoopAction gramain(const KnotDiagram& d);

    /// Composition: result.apply(w) == f.apply(g.apply(w)).
    static LoopAction compose(const LoopAction& f, const LoopAction& g);

    LoopAction power(int n) const;

    std::vector<int> substitute(const std::vector<int>& passes) const;

    /// Applies to a based loop; throws NotABasedLoop when the word is not
    /// based at the given arc.
    PassWord apply(const PassWord& w, int basepoint) const;
};

/// Images of all cord generators under a loop action, computed against a
/// cord ring.  Uses an incremental transfer-matrix sweep along the knot so
/// that long substituted words stay polynomial-sized (every intermediate
/// value is kept in normal form).
class Monodromy {
public:
    Monodromy(const CordRing& ring, const LoopAction& action);

    /// nf of the image of the cord a_{i,j}; i, j arbitrary arcs.
    const Gf2Poly& image(int i, int j) const;

    /// Whether a_{i,j} is moved in the quotient ring.
    bool moves(int i, int j) const;

    /// First moved generator in lexicographic (i, j) order, if any.
    std::optional<std::pair<int, int>> first_moved() const;

    bool is_identity() const { return !first_moved().has_value(); }

    /// All moved generators (i < j).
    std::vector<std::pair<int, int>> moved() const;

private:
    const CordRing& ring_;
    int n_;
    using Vec = std::vector<Gf2Poly>;  // indexed 1..n
    std::vector<Vec> rows_;  // rows_[i]: basepoint row through segment bp -> i
    std::vector<Vec> cols_;  // cols_[j]: segment j -> bp column times suffix
    // lazily filled image cache, slot (i-1)*n + (j-1)
    mutable std::vector<std::optional<Gf2Poly>> images_;
};

}  // namespace cordalg
