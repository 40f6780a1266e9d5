#include "qpf/structure.hpp"

#include <algorithm>

namespace qpf {

namespace {

bool is_commutative(const Algebra& a) {
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j)
            if (a.mul(a.unit_vec(i), a.unit_vec(j)) != a.mul(a.unit_vec(j), a.unit_vec(i)))
                return false;
    return true;
}

/// Kernel of the associative trace form tr(L_x L_y); contains the radical
/// over any field, equals it in characteristic zero.
SubspaceFamily trace_form_kernel(const Algebra& a) {
    const int n = a.dim();
    std::vector<Matrix> L;
    L.reserve(n);
    for (int i = 0; i < n; ++i) L.push_back(a.left_mult_matrix(a.unit_vec(i)));
    Matrix gram(a.field(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar t = Scalar::zero(a.field());
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) t += L[i].at(r, c) * L[j].at(c, r);
            gram.at(i, j) = t;
        }
    return SubspaceFamily::from_vectors(a, gram.kernel_basis());
}

/// Nilpotent part of a commutative algebra over GF(p): the kernel of the
/// iterated (linear) Frobenius map x -> x^p.
SubspaceFamily frobenius_kernel(const Algebra& a) {
    const int n = a.dim();
    Matrix frob(a.field(), n, n);
    for (int j = 0; j < n; ++j) {
        Vec x = a.unit_vec(j);
        Vec p = x;
        for (unsigned long k = 1; k < a.field().p(); ++k) p = a.mul(p, x);
        for (int i = 0; i < n; ++i) frob.at(i, j) = p[i];
    }
    Matrix power = frob;
    // p^m >= n guarantees x^{p^m} = 0 for every nilpotent x.
    for (long cover = static_cast<long>(a.field().p()); cover < n;
         cover *= static_cast<long>(a.field().p()))
        power = frob.mul(power);
    return SubspaceFamily::from_vectors(a, power.kernel_basis());
}

void certify_radical(const Algebra& a, const SubspaceFamily& J, const char* who) {
    if (!J.is_two_sided_ideal(a))
        throw InvariantError(std::string(who) + ": candidate radical is not an ideal");
    if (!J.is_nilpotent(a))
        throw InvariantError(std::string(who) + ": candidate radical is not nilpotent");
}

}  // namespace

SubspaceFamily radical_bruteforce(const Algebra& a) {
    SubspaceFamily T = trace_form_kernel(a);
    if (T.empty()) return T;
    if (T.is_nilpotent(a)) {
        // A nilpotent ideal containing the radical is the radical.
        certify_radical(a, T, "radical_bruteforce");
        return T;
    }
    if (a.field().kind() == FieldKind::rationals)
        throw InvariantError("radical_bruteforce: trace kernel not nilpotent over Q");
    if (!is_commutative(a))
        throw InvariantError(
            "radical_bruteforce: degenerate trace form on a noncommutative GF(p) algebra "
            "is outside the supported scope");
    SubspaceFamily N = frobenius_kernel(a);
    certify_radical(a, N, "radical_bruteforce(frobenius)");
    return N;
}

SubspaceFamily radical_arrow_image(const AlgebraHandle& h) {
    SubspaceFamily J;
    for (std::size_t k = 0; k < h.monomials.size(); ++k)
        if (h.monomials[k].length() >= 1) J.add_piece_vector(h.alg, h.alg.unit_vec((int)k));
    if (J.is_nilpotent(h.alg)) return J;
    // Mixed-length relations can make the arrow ideal non-nilpotent.
    return radical_by_criterion(h.alg);
}

SubspaceFamily radical_by_criterion(const Algebra& a) {
    const Field& F = a.field();
    const Degree z = zero_degree(a.grading_rank());

    // Radicals of the degree-0 corner algebras, in corner coordinates.
    std::vector<Algebra> corners;
    std::vector<SubspaceFamily> corner_rad;
    for (int v = 0; v < a.num_vertices(); ++v) {
        corners.push_back(corner_algebra(a, v));
        corner_rad.push_back(radical_bruteforce(corners.back()));
    }
    auto corner_coords = [&](int v, const Vec& global) {
        const auto& piece = a.piece(v, v, z);
        Vec local = zero_vec(F, piece.size());
        for (std::size_t k = 0; k < piece.size(); ++k) local[k] = global[piece[k]];
        return local;
    };

    SubspaceFamily J;
    for (const auto& [key, idxs] : a.pieces()) {
        const int i = key.src, j = key.tgt;
        const auto& opp = a.piece(j, i, negate_degree(key.deg));
        // x in J iff y*x lies in rad(e_jA_0e_j) for every y in e_jA_{-h}e_i.
        std::vector<Vec> rows;  // conditions, indexed by (y, corner coordinate)
        for (int y : opp) {
            std::vector<Vec> prods;
            for (int m : idxs)
                prods.push_back(corner_rad[j].reduce(corners[j],
                                                     corner_coords(j, a.mul(a.unit_vec(y),
                                                                            a.unit_vec(m)))));
            const std::size_t cdim = corners[j].dim();
            for (std::size_t c = 0; c < cdim; ++c) {
                Vec row = zero_vec(F, idxs.size());
                bool nonzero = false;
                for (std::size_t k = 0; k < idxs.size(); ++k) {
                    row[k] = prods[k][c];
                    nonzero = nonzero || !row[k].is_zero();
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
        Matrix cond = Matrix::from_rows(F, rows, idxs.size());
        for (const Vec& t : cond.kernel_basis()) {
            Vec global = zero_vec(F, a.dim());
            for (std::size_t k = 0; k < idxs.size(); ++k) global[idxs[k]] = t[k];
            J.add_piece_vector(a, global);
        }
    }

    certify_radical(a, J, "radical_by_criterion");
    if (!radical_bruteforce(quotient_algebra(a, J)).empty())
        throw InvariantError("radical_by_criterion: quotient still has radical");

    // Re-verify the invertibility form of the criterion on all basis pairs.
    for (const Vec& x : J.global_vectors(a)) {
        int lead = 0;
        while (x[lead].is_zero()) ++lead;
        int j = a.basis_elem(lead).tgt;
        Degree mh = negate_degree(a.basis_elem(lead).deg);
        int i = a.basis_elem(lead).src;
        for (int y : a.piece(j, i, mh)) {
            Vec yx = corner_coords(j, a.mul(a.unit_vec(y), x));
            Vec e = corners[j].idempotent_vec(0);
            Vec test = sub(e, yx);
            if (!corners[j].left_mult_matrix(test).invertible())
                throw InvariantError("radical_by_criterion: e_j - yx not invertible for a "
                                     "radical element");
        }
    }
    return J;
}

SubspaceFamily socle(const Algebra& a, const SubspaceFamily& J, Side side) {
    std::vector<Vec> jvecs = J.global_vectors(a);
    SubspaceFamily soc;
    for (const auto& [key, idxs] : a.pieces()) {
        std::vector<Vec> rows;  // conditions on coefficients over this piece
        for (const Vec& u : jvecs) {
            std::vector<Vec> prods;
            for (int m : idxs)
                prods.push_back(side == Side::right ? a.mul(a.unit_vec(m), u)
                                                    : a.mul(u, a.unit_vec(m)));
            for (int c = 0; c < a.dim(); ++c) {
                Vec row = zero_vec(a.field(), idxs.size());
                bool nonzero = false;
                for (std::size_t k = 0; k < idxs.size(); ++k) {
                    row[k] = prods[k][c];
                    nonzero = nonzero || !row[k].is_zero();
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
        Matrix cond = Matrix::from_rows(a.field(), rows, idxs.size());
        for (const Vec& t : cond.kernel_basis()) {
            Vec global = zero_vec(a.field(), a.dim());
            for (std::size_t k = 0; k < idxs.size(); ++k) global[idxs[k]] = t[k];
            soc.add_piece_vector(a, global);
        }
    }
    return soc;
}

Classification classify(const Algebra& a, const SubspaceFamily& J) {
    Classification cls;
    const Degree z = zero_degree(a.grading_rank());
    bool all_local = true, all_split = true;

    for (int v = 0; v < a.num_vertices(); ++v) {
        Algebra C = corner_algebra(a, v);
        SubspaceFamily R = radical_bruteforce(C);
        cls.local_dim.push_back(C.dim());
        cls.local_rad_dim.push_back(R.dim());
        int ddim = C.dim() - R.dim();
        // When the non-idempotent basis elements span an ideal N (true for
        // every corner of a presented, skew or orbit algebra), N is a maximal
        // ideal with C/N = K, so C is local iff N is nilpotent iff N equals
        // the certified radical. A radical of codimension > 1 then rules
        // locality out with no further work.
        bool n_is_ideal = true;
        int ev = C.idempotent(0);
        for (int i = 0; i < C.dim() && n_is_ideal; ++i)
            for (int j = 0; j < C.dim() && n_is_ideal; ++j) {
                if (i == ev && j == ev) continue;
                for (const auto& [k, c] : C.mul_basis(i, j))
                    if (k == ev && !c.is_zero()) n_is_ideal = false;
            }
        bool local;
        if (ddim == 1) {
            local = true;
        } else if (n_is_ideal) {
            local = false;
        } else if (a.field().kind() == FieldKind::prime) {
            // Wedderburn: a finite division ring is a field, so the quotient
            // must be commutative with a one-dimensional Frobenius-fixed part.
            Algebra D = quotient_algebra(C, R);
            if (!is_commutative(D)) {
                local = false;
            } else {
                const int n = D.dim();
                Matrix fix(a.field(), n, n);
                for (int j = 0; j < n; ++j) {
                    Vec x = D.unit_vec(j);
                    Vec p = x;
                    for (unsigned long k = 1; k < a.field().p(); ++k) p = D.mul(p, x);
                    for (int i2 = 0; i2 < n; ++i2)
                        fix.at(i2, j) = p[i2] - (i2 == j ? Scalar::one(a.field())
                                                         : Scalar::zero(a.field()));
                }
                local = fix.kernel_basis().size() == 1;
            }
        } else {
            throw PreconditionError(
                "classify: division-algebra test over Q beyond dimension 1 is out of scope "
                "(vertex " + a.vertex_name(v) + ")");
        }
        if (!local) {
            all_local = false;
            cls.notes.push_back("e_" + a.vertex_name(v) + "A_0e_" + a.vertex_name(v) +
                                " is not local");
        }
        if (ddim != 1) all_split = false;
    }

    bool offdiag_in_J = true;
    bool diag_in_J = true;
    for (const auto& [key, idxs] : a.pieces()) {
        if (key.src != key.tgt) {
            for (int m : idxs)
                if (!J.contains(a, a.unit_vec(m))) {
                    offdiag_in_J = false;
                    cls.notes.push_back("e_" + a.vertex_name(key.src) + "Ae_" +
                                        a.vertex_name(key.tgt) + " not inside the radical");
                    break;
                }
        } else if (!(key.deg == z)) {
            for (int m : idxs)
                if (!J.contains(a, a.unit_vec(m))) {
                    diag_in_J = false;
                    cls.notes.push_back("e_" + a.vertex_name(key.src) + "A_" +
                                        degree_str(key.deg) + "e_" + a.vertex_name(key.tgt) +
                                        " not inside the radical");
                    break;
                }
        }
    }

    cls.weakly_basic = all_local && offdiag_in_J;
    cls.basic = cls.weakly_basic && diag_in_J;
    cls.split = all_split;

    // Connectivity of the underlying graph on nonzero pieces.
    const int nv = a.num_vertices();
    std::vector<std::vector<int>> adj(nv);
    for (const auto& [key, idxs] : a.pieces()) {
        if (key.src != key.tgt && !idxs.empty()) {
            adj[key.src].push_back(key.tgt);
            adj[key.tgt].push_back(key.src);
        }
    }
    std::vector<bool> seen(nv, false);
    std::vector<int> stack{0};
    if (nv > 0) seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    cls.connected = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    if (!cls.connected && nv > 1) cls.notes.push_back("algebra is not connected");
    return cls;
}

Presentation extract_presentation(const Algebra& a, const SubspaceFamily& J,
                                  const Classification& cls) {
    if (!cls.split || !cls.basic)
        throw PreconditionError("extract_presentation: algebra is not split basic");

    SubspaceFamily J2 = J.product(a, J);

    // Arrows: canonical lifts of a basis of J/J^2, per piece.
    struct ArrowLift {
        PieceKey key;
        Vec lift;
    };
    std::vector<ArrowLift> lifts;
    for (const auto& [key, block] : J.blocks()) {
        SubspaceFamily picked;  // J2-part plus lifts chosen so far
        auto j2 = J2.blocks().find(key);
        Matrix acc = j2 != J2.blocks().end()
                         ? j2->second
                         : Matrix(a.field(), 0, block.cols());
        const auto& piece = a.piece(key.src, key.tgt, key.deg);
        for (std::size_t r = 0; r < block.rows(); ++r) {
            Matrix trial(a.field(), acc.rows() + 1, block.cols());
            for (std::size_t rr = 0; rr < acc.rows(); ++rr)
                for (std::size_t c = 0; c < block.cols(); ++c) trial.at(rr, c) = acc.at(rr, c);
            for (std::size_t c = 0; c < block.cols(); ++c)
                trial.at(acc.rows(), c) = block.at(r, c);
            if (trial.rank() == acc.rank()) continue;  // already spanned
            acc = trial;
            Vec global = zero_vec(a.field(), a.dim());
            for (std::size_t c = 0; c < block.cols(); ++c) global[piece[c]] = block.at(r, c);
            lifts.push_back(ArrowLift{key, std::move(global)});
        }
    }

    std::vector<Arrow> arrows;
    std::vector<Vec> arrow_image;
    for (std::size_t k = 0; k < lifts.size(); ++k) {
        arrows.push_back(Arrow{"x" + std::to_string(k + 1), lifts[k].key.src,
                               lifts[k].key.tgt, lifts[k].key.deg});
        arrow_image.push_back(lifts[k].lift);
    }
    GradedQuiver Q(a.grading_rank(), a.vertex_names(), arrows);

    int nilpotency = 0;
    if (!J.is_nilpotent(a, &nilpotency))
        throw InvariantError("extract_presentation: radical not nilpotent");

    // Relations: canonical kernel basis of path |-> product of arrow images,
    // per (i, j, h) piece, over all paths of length 1..nilpotency. Length-1
    // support must cancel out (arrow images are independent mod J^2).
    std::vector<Path> paths = enumerate_paths(Q, nilpotency);
    std::map<PieceKey, std::vector<Path>> by_piece;
    for (const Path& p : paths) {
        if (p.length() < 1) continue;
        by_piece[PieceKey{p.source(), p.target(Q), path_degree(Q, p)}].push_back(p);
    }
    auto image_of_path = [&](const Path& p) {
        Vec v = a.idempotent_vec(p.source());
        for (int ar : p.arrows) v = a.mul(v, arrow_image[ar]);
        return v;
    };

    std::vector<AlgElement> relations;
    for (const auto& [key, ps] : by_piece) {
        Matrix m(a.field(), a.dim(), ps.size());
        for (std::size_t c = 0; c < ps.size(); ++c) {
            Vec img = image_of_path(ps[c]);
            for (int r = 0; r < a.dim(); ++r) m.at(r, c) = img[r];
        }
        for (const Vec& k : m.kernel_basis()) {
            AlgElement rel(a.field());
            for (std::size_t c = 0; c < ps.size(); ++c) rel.add_term(ps[c], k[c]);
            if (rel.is_zero()) continue;
            for (const auto& [pp, cc] : rel.terms())
                if (pp.length() < 2)
                    throw InvariantError("extract_presentation: kernel met a short path");
            relations.push_back(std::move(rel));
        }
    }
    return Presentation(std::move(Q), a.field(), std::move(relations));
}

}  // namespace qpf
