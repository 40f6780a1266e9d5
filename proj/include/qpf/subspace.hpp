#pragma once

#include "qpf/algebra.hpp"

namespace qpf {

/// A graded subspace of an algebra that decomposes into its piece
/// intersections: for each (i, j, h) an ordered basis of a subspace of
/// e_i A_h e_j, held in reduced row-echelon form over the piece basis.
/// Canonical: two families are equal iff their blocks compare equal.
class SubspaceFamily {
  public:
    SubspaceFamily() = default;

    /// Inserts a global vector supported on a single piece (checked).
    void add_piece_vector(const Algebra& a, const Vec& v);
    /// Splits an arbitrary global vector into piece components and adds them
    /// all. Valid for subspaces that split by pieces (two-sided ideals do).
    void add_split_vector(const Algebra& a, const Vec& v);

    int dim() const;
    bool empty() const { return dim() == 0; }
    const std::map<PieceKey, Matrix>& blocks() const { return blocks_; }
    int block_dim(const PieceKey& k) const;

    /// All spanning vectors as global coordinate vectors, deterministic order.
    std::vector<Vec> global_vectors(const Algebra& a) const;

    bool contains(const Algebra& a, const Vec& v) const;
    bool contains_family(const Algebra& a, const SubspaceFamily& other) const;
    bool operator==(const SubspaceFamily& o) const { return blocks_ == o.blocks_; }

    /// Canonical representative of v modulo this family (per-piece elimination
    /// against the rref blocks). Zero iff v is in the family span.
    Vec reduce(const Algebra& a, const Vec& v) const;

    SubspaceFamily sum(const Algebra& a, const SubspaceFamily& o) const;
    /// Span of all pairwise products x*y, x in this, y in o.
    SubspaceFamily product(const Algebra& a, const SubspaceFamily& o) const;
    /// Is some power of this family zero? (Powers descend for an ideal.)
    bool is_nilpotent(const Algebra& a, int* index = nullptr) const;
    /// Closed under left/right multiplication by every algebra basis element.
    bool is_two_sided_ideal(const Algebra& a) const;

    static SubspaceFamily whole_algebra(const Algebra& a);
    static SubspaceFamily from_vectors(const Algebra& a, const std::vector<Vec>& vs,
                                       bool split = true);

  private:
    std::map<PieceKey, Matrix> blocks_;  // rref rows, piece coordinates
};

/// Quotient of an algebra by a two-sided ideal family: basis = the non-pivot
/// piece coordinates, multiplication = multiply then reduce.
Algebra quotient_algebra(const Algebra& a, const SubspaceFamily& ideal);

}  // namespace qpf
