#pragma once

#include "qpf/frobenius.hpp"

namespace qpf {

/// A graded quiver automorphism of monomial type: a vertex permutation, an
/// arrow permutation, and a nonzero scalar per arrow (arrow a maps to
/// scale[a] times arrow aperm[a]).
struct MonomialAutomorphism {
    std::vector<int> vperm;
    std::vector<int> aperm;
    std::vector<Scalar> ascale;

    bool is_identity() const;
    bool operator==(const MonomialAutomorphism& o) const = default;
};

MonomialAutomorphism identity_automorphism(const GradedQuiver& q, const Field& f);
MonomialAutomorphism compose(const MonomialAutomorphism& g, const MonomialAutomorphism& h);

AlgElement apply_automorphism(const GradedQuiver& q, const MonomialAutomorphism& g,
                              const AlgElement& x);

/// A finite group of monomial automorphisms acting on a presented algebra:
/// the closure of the generators, with composition/inverse tables and the
/// induced matrices on the canonical basis. All invariants (graded, ideal
/// stability, free vertex action) are verified on every element.
struct GroupAction {
    std::vector<MonomialAutomorphism> elements;  // [0] = identity
    std::vector<std::vector<int>> compose_table;
    std::vector<int> inverse;
    std::vector<Matrix> on_basis;  // column m = coordinates of g(m)

    int order() const { return static_cast<int>(elements.size()); }
    const MonomialAutomorphism& g(int k) const { return elements[k]; }
    Vec act(const Algebra&, int k, const Vec& x) const { return on_basis[k].apply(x); }
};

/// Closes the generators, verifying every group element: degree- and
/// endpoint-compatibility (InputError), ideal stability normal_form(g(r)) = 0
/// (InputError), free action on vertices (InputError), order cap (CapError).
GroupAction close_group(const AlgebraHandle& A, std::vector<MonomialAutomorphism> gens,
                        std::size_t order_cap = 1024);

/// A*G with basis (m, g), multiplication (a*g)(b*g') = a b^g * g g'.
struct SkewGroupAlgebra {
    Algebra alg;
    int base_dim = 0;
    int group_order = 0;
    int pair_index(int m, int g) const { return g * base_dim + m; }
};

SkewGroupAlgebra skew_group_algebra(const AlgebraHandle& A, const GroupAction& G);

/// The orbit algebra A/G: vertices are G-orbits with lexicographically least
/// representative, morphism spaces e_[i] L e_[j] = sum over g of e_i A e_{g(j)},
/// multiplication [a][b] = [a b^g] for the unique g with g(i(b)) = t(a).
struct OrbitAlgebra {
    Algebra alg;
    std::vector<int> reps;       // orbit ordinal -> representative vertex of A
    std::vector<int> orbit_ord;  // vertex of A -> orbit ordinal
    std::vector<int> g_to_rep;   // vertex v of A -> group element with g(rep) = v
    std::vector<int> basis_m;    // orbit-basis index -> base monomial index
    std::vector<int> basis_g;    // orbit-basis index -> group element index
    std::vector<int> index_of_m; // base monomial index -> orbit-basis index or -1
};

OrbitAlgebra orbit_algebra(const AlgebraHandle& A, const GroupAction& G);

/// The matrix of the covering functor pi: A -> Lambda on basis elements
/// (columns indexed by the basis of A, rows by the basis of Lambda).
Matrix covering_matrix(const AlgebraHandle& A, const GroupAction& G, const OrbitAlgebra& L);

struct CoveringCheck {
    bool ok = true;
    std::string witness;
};

/// Checks the two fiber-sum bijections of a covering functor on every
/// (vertex of A, vertex of Lambda, degree) triple by exact rank computation.
CoveringCheck verify_covering(const AlgebraHandle& A, const GroupAction& G,
                              const OrbitAlgebra& L);

/// A Nakayama form with (a^g, b^g) = (a, b), built by transporting the
/// default (B, h) choice along orbit representatives. Verifies invariance on
/// all basis pairs and nu(g(i)) = g(nu(i)).
BilinearForm g_invariant_form(const AlgebraHandle& A, const GroupAction& G, const PFReport& r,
                              const Classification& cls);

/// <[a],[b]> = (a, b^g) with g(i(b)) = t(a); verified to be a graded Nakayama
/// form on the orbit algebra with nu([i]) = [nu(i)], h([i]) = h_i.
BilinearForm pushdown_form(const AlgebraHandle& A, const GroupAction& G, const OrbitAlgebra& L,
                           const BilinearForm& f);

/// The pulled-back form (a, b) = <pi(a), pi(b)>, zero between mismatched
/// middle vertices; verified to be a graded Nakayama form on A.
BilinearForm lift_form(const AlgebraHandle& A, const GroupAction& G, const OrbitAlgebra& L,
                       const BilinearForm& f_lam);

/// End-to-end verification of the PF transfer along A -> A*G -> Lambda.
struct TransferReport {
    bool a_is_pf = false;
    bool orbit_is_pf = false;
    bool flags_agree = false;
    int skew_dim = 0;
    int skew_radical_dim = 0;
    bool skew_radical_matches = false;   // rad(A*G) = J*G, exactly
    bool skew_quotient_semisimple = false;
    bool covering_ok = false;
    bool invariant_form_ok = false;      // (a^g, b^g) = (a,b) on all basis pairs
    bool pushdown_ok = false;
    bool lift_ok = false;
    bool eta_commutes = false;           // eta o g = g o eta
    bool eta_descends = false;           // eta-bar([x]) = [eta(x)]
    std::vector<std::string> notes;
};

TransferReport verify_transfer(const AlgebraHandle& A, const GroupAction& G);

}  // namespace qpf
