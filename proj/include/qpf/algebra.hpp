#pragma once

#include <compare>

#include "qpf/groebner.hpp"
#include "qpf/matrix.hpp"

namespace qpf {

/// Identifies one graded piece e_i A_h e_j.
struct PieceKey {
    int src;
    int tgt;
    Degree deg;
    auto operator<=>(const PieceKey&) const = default;
};

using SparseVec = std::vector<std::pair<int, Scalar>>;  // (basis index, coefficient)

/// A finite dimensional H-graded algebra with enough idempotents, given by an
/// explicit basis compatible with the decomposition into pieces e_i A_h e_j,
/// and a full multiplication table. This is the common carrier behind
/// presented quotient algebras, skew group algebras and orbit algebras.
class Algebra {
  public:
    struct BasisElem {
        int src;
        int tgt;
        Degree deg;
        std::string label;
    };

    Algebra(Field f, int grading_rank, std::vector<std::string> vertex_names,
            std::vector<BasisElem> basis, std::vector<int> idempotent_index,
            std::vector<std::vector<SparseVec>> mult);

    const Field& field() const { return field_; }
    int grading_rank() const { return rank_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    const std::string& vertex_name(int v) const { return vertex_names_[v]; }
    const BasisElem& basis_elem(int k) const { return basis_[k]; }
    int idempotent(int v) const { return idem_[v]; }

    const std::map<PieceKey, std::vector<int>>& pieces() const { return pieces_; }
    /// Basis indices spanning e_i A_h e_j (empty when the piece is zero).
    const std::vector<int>& piece(int src, int tgt, const Degree& h) const;
    PieceKey piece_of(int basis_index) const;

    const SparseVec& mul_basis(int i, int j) const { return mult_[i][j]; }
    Vec mul(const Vec& x, const Vec& y) const;
    Vec unit_vec(int basis_index) const;
    Vec idempotent_vec(int v) const { return unit_vec(idem_[v]); }

    /// Left regular representation of the element x on the whole algebra.
    Matrix left_mult_matrix(const Vec& x) const;
    Matrix right_mult_matrix(const Vec& x) const;

    std::string elem_str(const Vec& x) const;

    bool is_trivially_graded() const { return rank_ == 0; }

  private:
    Field field_;
    int rank_;
    std::vector<std::string> vertex_names_;
    std::vector<BasisElem> basis_;
    std::vector<int> idem_;
    std::vector<std::vector<SparseVec>> mult_;
    std::map<PieceKey, std::vector<int>> pieces_;
    std::vector<int> empty_;
};

/// A presented algebra KQ/<relations> with its completed Groebner basis,
/// canonical normal-monomial basis and multiplication in normal form.
struct AlgebraHandle {
    Presentation pres;
    GroebnerBasis gb;
    std::vector<Path> monomials;  // global path order; index = basis index
    std::map<Path, int, PathLess> index_of;
    Algebra alg;

    AlgElement to_element(const Vec& v) const;
    Vec to_vec(const AlgElement& x) const;  // applies normal_form first
};

/// Completes the relations and enumerates the canonical basis.
/// Throws CapError when completion or the monomial enumeration hits the cap.
AlgebraHandle build_algebra(const Presentation& p, std::size_t length_cap = 64);

/// The subalgebra spanned by a subset of basis elements that is closed under
/// multiplication (corners, degree-zero parts). Vertex set: the vertices
/// whose idempotents are among the chosen elements.
Algebra subalgebra(const Algebra& a, const std::vector<int>& basis_indices,
                   bool trivially_graded);

/// e_v A_0 e_v as a unital algebra (trivially graded).
Algebra corner_algebra(const Algebra& a, int v);

/// A_0 = sum of all e_i A_0 e_j, as a trivially graded algebra.
Algebra degree_zero_part(const Algebra& a);

}  // namespace qpf
