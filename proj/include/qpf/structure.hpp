#pragma once

#include "qpf/subspace.hpp"

namespace qpf {

/// Ungraded Jacobson radical of a finite dimensional algebra: the largest
/// nilpotent two-sided ideal. Route: kernel of the associative trace form,
/// certified nilpotent (which pins it to the radical in any characteristic);
/// over GF(p) with a degenerate trace form, a Frobenius-kernel fallback for
/// commutative algebras. Throws InvariantError when no certified route
/// applies (never on admissible-type inputs).
SubspaceFamily radical_bruteforce(const Algebra& a);

/// Graded radical via the arrow ideal: the span of all normal monomials of
/// length >= 1, valid when that ideal is nilpotent (admissible case, checked);
/// otherwise falls back to radical_by_criterion.
SubspaceFamily radical_arrow_image(const AlgebraHandle& h);

/// Graded radical from the elementwise invertibility criterion: a homogeneous
/// x in e_iA_he_j lies in J iff e_j - yx is invertible in e_jA_0e_j for every
/// y in e_jA_{-h}e_i; equivalently (and linearly) iff (e_jA_{-h}e_i) x lands
/// in the radical of the corner e_jA_0e_j. The result is certified: two-sided
/// homogeneous ideal, nilpotent, radical-free quotient, and the invertibility
/// statement is re-verified on all basis pairs.
SubspaceFamily radical_by_criterion(const Algebra& a);

enum class Side { left, right };

/// Right socle {x : xJ = 0} or left socle {x : Jx = 0}, per graded piece.
SubspaceFamily socle(const Algebra& a, const SubspaceFamily& J, Side side);

struct Classification {
    bool weakly_basic = false;
    bool basic = false;
    bool split = false;
    bool connected = false;
    std::vector<int> local_dim;      // dim e_i A_0 e_i
    std::vector<int> local_rad_dim;  // dim of its radical
    std::vector<std::string> notes;  // violation witnesses, human readable
    int division_dim(int v) const { return local_dim[v] - local_rad_dim[v]; }
};

Classification classify(const Algebra& a, const SubspaceFamily& J);

/// Gabriel-quiver extraction: vertices = idempotents, arrows = lifted basis of
/// e_i(J/J^2)_h e_j, relations = canonical kernel basis of the induced map
/// from the new path algebra, computed per graded piece up to the nilpotency
/// length of J. Requires a split basic algebra.
Presentation extract_presentation(const Algebra& a, const SubspaceFamily& J,
                                  const Classification& cls);

}  // namespace qpf
