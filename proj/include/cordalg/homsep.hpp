#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cordalg/cordring.hpp"
#include "cordalg/monodromy.hpp"

namespace cordalg {

/// Commutative target rings for separating homomorphisms.  Elements are
/// GF(2)[z] polynomials packed as bitmasks (bit k = coefficient of z^k);
/// the truncated targets discard powers above the cutoff, and the boolean
/// target is the degree-0 truncation GF(2) itself.
class Target {
public:
    using Elem = std::uint64_t;

    static Target poly_z();            // GF(2)[z]
    static Target truncated(int k);    // GF(2)[z] / z^(k+1)
    static Target boolean();           // GF(2)

    Elem add(Elem a, Elem b) const { return a ^ b; }
    Elem mul(Elem a, Elem b) const;

    /// Candidate images ordered by (degree, numeric value).  For the full
    /// polynomial ring the enumeration is capped at `degree_limit`.
    std::vector<Elem> candidates(int degree_limit) const;

    std::string str(Elem e) const;  // "0", "1", "z", "z+1", "z^2+z", ...
    std::string name() const;

private:
    Target(int cutoff, bool truncate) : cutoff_(cutoff), truncate_(truncate) {}
    int cutoff_;      // highest retained power when truncating
    bool truncate_;
};

/// A ring homomorphism candidate: one target element per generator a_{i,j}
/// with i < j.
using Assignment = std::map<std::pair<int, int>, Target::Elem>;

/// Evaluates p under the assignment; throws IncompleteAssignment when a
/// variable of p has no image.
Target::Elem evaluate(const Gf2Poly& p, const Assignment& phi, const Target& target);

/// Checks that every crossing relation of the ring maps to zero.
bool verify_hom(const CordRing& ring, const Assignment& phi, const Target& target);

/// Same check straight off the diagram's crossing relations; needs no
/// Groebner basis, so it works on diagrams whose basis computation would
/// exhaust its budget.
bool verify_hom(const KnotDiagram& d, const Assignment& phi, const Target& target);

/// Evaluates the under-pass recurrence of a pass word directly in the
/// target ring under the assignment (the scalar image of the word's skein
/// reduction).  num_arcs bounds the arc indices of w.
Target::Elem evaluate_word(const PassWord& w, int num_arcs, const Assignment& phi,
                           const Target& target);

/// Candidate assignment on a satellite diagram pulled back from an
/// assignment on the pattern's companion: each generator lifts to a based
/// loop, the loop's passes project through strand_of onto companion arcs,
/// and the projected word is evaluated under base_phi.  The result must be
/// gated through verify_hom before any use as a homomorphism.
Assignment pullback_assignment(const KnotDiagram& satellite, const std::vector<int>& strand_of,
                               int base_arcs, const Assignment& base_phi, const Target& target);

/// Depth-first search for homomorphisms to the target, assigning the
/// generators in lexicographic (i, j) order and pruning with every
/// relation whose variables are already assigned.  Returns at most
/// `max_results` assignments in search order.
std::vector<Assignment> search_homs(const CordRing& ring, const Target& target,
                                    int degree_limit, std::size_t max_results);

/// A certificate that a loop action moves some generator in a way visible
/// to a homomorphism: phi is a valid hom with phi(image(i,j)) != phi(a_ij).
struct SeparationCertificate {
    Assignment phi;
    int i = 0, j = 0;
    Target::Elem before = 0;
    Target::Elem after = 0;
};

/// Finds the first certificate in hom-major order (homs in the given
/// order, generator pairs in lexicographic order within each hom).  The
/// homs are assumed verified.
std::optional<SeparationCertificate> separate(const CordRing& ring, const Monodromy& mono,
                                              const std::vector<Assignment>& homs,
                                              const Target& target);

/// Certifies non-triviality of a loop action without a Groebner basis: the
/// transfer-matrix recursion is evaluated in the target ring through the
/// (verified) assignment, and the first generator whose image value differs
/// from its own value yields a certificate.  A certificate proves the
/// action moves that generator; absence of one proves nothing.  Use a
/// truncated target: intermediate values multiply many generator images.
std::optional<SeparationCertificate> certify_action(const KnotDiagram& d,
                                                    const LoopAction& action,
                                                    const Assignment& phi, const Target& target);

}  // namespace cordalg
