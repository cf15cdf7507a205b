#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cordalg {

/// One crossing of an oriented knot diagram, with the over strand and the
/// incoming/outgoing under arcs.  Signs play no role over GF(2) and are
/// never stored.
struct Crossing {
    int over = 0;
    int under_in = 0;
    int under_out = 0;

    bool operator==(const Crossing&) const = default;
};

/// Combinatorial knot diagram: arcs 1..n with a single cyclic traversal
/// order, one crossing ending each arc (for n > 1), a summand tag on every
/// arc, and a distinguished basepoint arc.
class KnotDiagram {
public:
    /// Validates and builds.  `summands` defaults to the distinct tag
    /// values; passing it explicitly allows summand labels whose arc class
    /// is empty (e.g. after summing with an unknot).
    KnotDiagram(int num_arcs, std::vector<int> successor, std::vector<Crossing> crossings,
                std::map<int, std::string> tags, int basepoint,
                std::vector<std::string> summands = {});

    int num_arcs() const { return n_; }
    int successor(int arc) const { return succ_.at(static_cast<std::size_t>(arc) - 1); }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::string& tag(int arc) const { return tags_.at(arc); }
    const std::vector<std::string>& summands() const { return summands_; }
    int basepoint() const { return basepoint_; }
    bool has_summand(const std::string& label) const;

    /// Over strand of the crossing at which `arc` starts (under_out ==
    /// arc); nullopt only for the crossingless unknot.
    std::optional<int> over_at_start(int arc) const;

    /// Over arcs recorded while walking the full traversal cycle from the
    /// basepoint, keeping the crossings that belong to the named summand
    /// (crossing belongs to T iff tag(under_out) == T).  Empty label means
    /// the whole diagram.  Throws UnknownTag for an undeclared label.
    std::vector<int> longitude_passes(const std::string& label) const;

    /// Builds from a planar-diagram code: each entry (a, b, c, d) has
    /// incoming under-edge a, outgoing under-edge c, and over-edges b, d.
    static KnotDiagram from_pd_code(const std::vector<std::array<int, 4>>& code);

    /// Builds the closure of a braid word (letters +-k for the k-th
    /// elementary braid).  The strand count is inferred unless given.
    static KnotDiagram from_braid_word(const std::vector<int>& word,
                                       std::optional<int> strands = std::nullopt);

    /// Connected sum spliced at arc a1 of d1 and arc a2 of d2; the two
    /// factors become summands "L1" and "L2" and the basepoint sits on the
    /// spliced arc carrying the tag L1.
    static KnotDiagram connected_sum(const KnotDiagram& d1, int a1, const KnotDiagram& d2,
                                     int a2);

    /// Replaces the knot by `order` parallel copies joined into a single
    /// curve by a permutation gadget at the end of arc `at`.  `order` must
    /// be odd (even orders yield links, which are rejected).  When
    /// `strand_of` is non-null it receives, per cable arc (1-based), the
    /// arc of this diagram whose parallel copy the cable arc runs along.
    KnotDiagram cable(int order, int at, std::vector<int>* strand_of = nullptr) const;

private:
    int n_;
    std::vector<int> succ_;  // succ_[k] = successor of arc k+1
    std::vector<Crossing> crossings_;
    std::map<int, std::string> tags_;
    std::vector<std::string> summands_;
    int basepoint_;
    std::map<int, int> over_at_start_;  // under_out arc -> over arc
};

}  // namespace cordalg
