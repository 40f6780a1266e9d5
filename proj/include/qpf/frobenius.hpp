#pragma once

#include "qpf/structure.hpp"

namespace qpf {

/// Outcome of the pseudo-Frobenius test, with the data the test produces
/// along the way (socles, permutation, default degree map, witnesses).
struct PFReport {
    bool is_pf = false;
    std::vector<int> nu;      // vertex -> vertex, valid iff is_pf
    std::vector<int> nu_inv;  // inverse permutation (from the left socles)
    std::vector<Degree> h;    // default degree map: lex-least socle support degree

    SubspaceFamily socle_right;  // {x : xJ = 0}
    SubspaceFamily socle_left;   // {x : Jx = 0}
    bool socles_match = false;   // equal as families (a theorem under PF)

    struct SupportEntry {
        int tgt;
        Degree deg;
        int dim;
    };
    std::vector<std::vector<SupportEntry>> right_support;  // per source vertex
    std::vector<std::string> witnesses;                    // failure descriptions
};

/// Decides the pseudo-Frobenius property of a finite dimensional weakly basic
/// graded algebra: each projective e_iA and Ae_i must have a graded-simple
/// (automatically essential) socle, and the two induced vertex maps must be
/// mutually inverse bijections. Throws PreconditionError when not weakly basic.
PFReport pf_check(const Algebra& a, const SubspaceFamily& J, const Classification& cls);

/// A (B, h) choice: per vertex a degree from the socle support and a basis of
/// e_iA_{h_i}e_{nu(i)} containing exactly one socle element.
struct FormBasis {
    std::vector<Degree> h;
    std::vector<std::vector<Vec>> bases;  // global coordinate vectors
};

/// Canonical choice: lex-least h_i; canonical piece basis with the socle
/// vector swapped into the position of the basis monomial it eliminates.
FormBasis default_form_basis(const Algebra& a, const PFReport& r);

/// A graded Nakayama form, stored blockwise: block (i, j, hd) is the pairing
/// matrix of e_iA_{hd}e_j  x  e_jA_{h_i-hd}e_{nu(i)} over the canonical bases.
struct BilinearForm {
    std::vector<int> nu;
    std::vector<Degree> h;
    std::map<PieceKey, Matrix> blocks;
    // The (B, h) data the form was built from (empty for transported forms).
    std::vector<std::vector<Vec>> bases;
    std::vector<Vec> socle_vecs;  // w_i per vertex

    /// Full evaluation (x, y): bilinear extension of the blocks, zero between
    /// pieces the degree and vertex conditions exclude.
    Scalar eval(const Algebra& a, const Vec& x, const Vec& y) const;
};

/// Checks the Nakayama form axioms: every piece has a pairing block, blocks
/// are square and invertible, and (ab, c) = (a, bc) on all composable basis
/// triples. Throws InvariantError on failure.
void verify_nakayama_form(const Algebra& a, const BilinearForm& f, const char* who);

/// The graded Nakayama form associated to (B, h): (a,b) is the w_i-coefficient
/// of ab over B_i on the prescribed blocks, zero elsewhere. All form axioms
/// (associativity, degree condition, blockwise nondegeneracy) are verified
/// before returning. Throws PreconditionError (not split / not PF) or
/// InputError (bad basis).
BilinearForm nakayama_form_from_basis(const Algebra& a, const PFReport& r,
                                      const Classification& cls, const FormBasis& fb);

/// A bijective multiplicative self-map given by its images on the basis.
struct AlgebraAutomorphism {
    Matrix matrix;  // column k = image of basis element k
    std::vector<int> vertex_map;
    Vec apply(const Algebra&, const Vec& x) const { return matrix.apply(x); }
};

/// The Nakayama automorphism: the unique eta with (x, -) = (-, eta(x)),
/// solved per graded piece through the invertible pairing blocks; verified
/// multiplicative, bijective, with eta(e_i) = e_{nu(i)} and homogeneous
/// images of degree deg(x) + h_j - h_i.
AlgebraAutomorphism nakayama_automorphism(const Algebra& a, const BilinearForm& f);

struct ConstantDegreeResult {
    bool passed = false;
    std::string witness;      // failed hypothesis, when not passed
    std::int64_t value = 0;   // the constant degree, when passed
};

/// For connected, positively Z-graded algebras with semisimple degree-0 part
/// generated in degree 1: checks the degree map is constant and that eta
/// preserves the degree of degree-1 elements; returns the constant.
ConstantDegreeResult constant_degree_check(const Algebra& a, const SubspaceFamily& J,
                                           const BilinearForm& f,
                                           const AlgebraAutomorphism& eta);

}  // namespace qpf
