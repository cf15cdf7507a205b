#pragma once

#include <vector>

#include "cordalg/cordring.hpp"
#include "cordalg/diagram.hpp"
#include "cordalg/gf2poly.hpp"

namespace cordalg {

/// A cord recorded combinatorially: it starts on arc `start`, passes under
/// the listed arcs in order, and ends on arc `end`.
struct PassWord {
    int start = 0;
    std::vector<int> passes;
    int end = 0;

    bool is_loop_at(int basepoint) const { return start == basepoint && end == basepoint; }
};

/// Resolves a pass word to a polynomial via the under-pass recurrence
///   f(i, [], j)      = a_{i,j}
///   f(i, s:rest, j)  = a_{i,s} * f(s, rest, j) + f(i, rest, j)
/// processed back to front over all start arcs at once.
Gf2Poly reduce(const PassWord& w);

/// Same recurrence, but every intermediate polynomial is replaced by its
/// normal form modulo the ring.  Equal to nf(reduce(w)) while avoiding the
/// exponential blowup of long words.
Gf2Poly reduce_nf(const PassWord& w, const CordRing& ring);

/// Flips start/end and reverses the pass list.
PassWord reverse(const PassWord& w);

/// Joins two pass words; throws EndpointMismatch unless w1 ends where w2
/// starts.
PassWord concat(const PassWord& w1, const PassWord& w2);

/// The standard cord for the generator a_{i,j}: start at the basepoint,
/// run along the knot to arc i, jump, return along the knot from arc j to
/// the basepoint, recording every under-pass.
PassWord lift(const KnotDiagram& d, int i, int j);

}  // namespace cordalg
