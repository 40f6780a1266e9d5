#include "qpf/covering.hpp"

#include <algorithm>

namespace qpf {

bool MonomialAutomorphism::is_identity() const {
    for (std::size_t v = 0; v < vperm.size(); ++v)
        if (vperm[v] != static_cast<int>(v)) return false;
    for (std::size_t a = 0; a < aperm.size(); ++a)
        if (aperm[a] != static_cast<int>(a) || !ascale[a].is_one()) return false;
    return true;
}

MonomialAutomorphism identity_automorphism(const GradedQuiver& q, const Field& f) {
    MonomialAutomorphism g;
    for (int v = 0; v < q.num_vertices(); ++v) g.vperm.push_back(v);
    for (int a = 0; a < q.num_arrows(); ++a) {
        g.aperm.push_back(a);
        g.ascale.push_back(Scalar::one(f));
    }
    return g;
}

MonomialAutomorphism compose(const MonomialAutomorphism& g, const MonomialAutomorphism& h) {
    MonomialAutomorphism out;
    out.vperm.resize(g.vperm.size());
    out.aperm.resize(g.aperm.size());
    out.ascale.resize(g.ascale.size(), Scalar());
    for (std::size_t v = 0; v < g.vperm.size(); ++v) out.vperm[v] = g.vperm[h.vperm[v]];
    for (std::size_t a = 0; a < g.aperm.size(); ++a) {
        out.aperm[a] = g.aperm[h.aperm[a]];
        out.ascale[a] = h.ascale[a] * g.ascale[h.aperm[a]];
    }
    return out;
}

AlgElement apply_automorphism(const GradedQuiver&, const MonomialAutomorphism& g,
                              const AlgElement& x) {
    AlgElement out(x.field());
    for (const auto& [p, c] : x.terms()) {
        Path img;
        img.start = g.vperm[p.start];
        Scalar coeff = c;
        for (int a : p.arrows) {
            img.arrows.push_back(g.aperm[a]);
            coeff *= g.ascale[a];
        }
        out.add_term(img, coeff);
    }
    return out;
}

namespace {

void validate_automorphism(const GradedQuiver& q, const MonomialAutomorphism& g) {
    const int nv = q.num_vertices(), na = q.num_arrows();
    if ((int)g.vperm.size() != nv || (int)g.aperm.size() != na || (int)g.ascale.size() != na)
        throw InputError("automorphism: wrong arity");
    std::vector<bool> vs(nv, false), as(na, false);
    for (int v = 0; v < nv; ++v) {
        if (g.vperm[v] < 0 || g.vperm[v] >= nv || vs[g.vperm[v]])
            throw InputError("automorphism: vertex map is not a permutation");
        vs[g.vperm[v]] = true;
    }
    for (int a = 0; a < na; ++a) {
        if (g.aperm[a] < 0 || g.aperm[a] >= na || as[g.aperm[a]])
            throw InputError("automorphism: arrow map is not a permutation");
        as[g.aperm[a]] = true;
        if (g.ascale[a].is_zero())
            throw InputError("automorphism: zero scalar on arrow " + q.arrow(a).name);
        const Arrow& src = q.arrow(a);
        const Arrow& dst = q.arrow(g.aperm[a]);
        if (dst.src != g.vperm[src.src] || dst.tgt != g.vperm[src.tgt])
            throw InputError("automorphism: arrow " + src.name +
                             " maps incompatibly with the vertex permutation (not graded)");
        if (!(dst.deg == src.deg))
            throw InputError("automorphism: arrow " + src.name +
                             " maps to an arrow of different degree (not graded)");
    }
}

}  // namespace

GroupAction close_group(const AlgebraHandle& A, std::vector<MonomialAutomorphism> gens,
                        std::size_t order_cap) {
    const GradedQuiver& q = A.pres.quiver;
    const Field& F = A.pres.field;
    for (const auto& g : gens) validate_automorphism(q, g);

    GroupAction G;
    G.elements.push_back(identity_automorphism(q, F));
    std::vector<MonomialAutomorphism> frontier = G.elements;
    while (!frontier.empty()) {
        std::vector<MonomialAutomorphism> next;
        for (const auto& e : frontier)
            for (const auto& gen : gens) {
                MonomialAutomorphism c = compose(gen, e);
                if (std::find(G.elements.begin(), G.elements.end(), c) != G.elements.end())
                    continue;
                if (G.elements.size() >= order_cap)
                    throw CapError("group closure exceeded the order cap " +
                                   std::to_string(order_cap));
                G.elements.push_back(c);
                next.push_back(c);
            }
        frontier = std::move(next);
    }

    for (const auto& e : G.elements) {
        validate_automorphism(q, e);
        if (!e.is_identity()) {
            for (int v = 0; v < q.num_vertices(); ++v)
                if (e.vperm[v] == v)
                    throw InputError("group action is not free on vertices: a non-identity "
                                     "element fixes vertex " + q.vertex_name(v));
        }
        for (const auto& r : A.pres.relations)
            if (!A.gb.normal_form(q, apply_automorphism(q, e, r)).is_zero())
                throw InputError("group action does not stabilize the ideal: relation " +
                                 r.str(q) + " is moved outside");
    }

    const int n = G.order();
    G.compose_table.assign(n, std::vector<int>(n, -1));
    G.inverse.assign(n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MonomialAutomorphism c = compose(G.elements[i], G.elements[j]);
            auto it = std::find(G.elements.begin(), G.elements.end(), c);
            if (it == G.elements.end())
                throw InvariantError("group closure is not closed under composition");
            int k = static_cast<int>(it - G.elements.begin());
            G.compose_table[i][j] = k;
            if (k == 0) G.inverse[i] = j;
        }

    for (int k = 0; k < n; ++k) {
        Matrix m(F, A.alg.dim(), A.alg.dim());
        for (int c = 0; c < A.alg.dim(); ++c) {
            AlgElement img = apply_automorphism(
                q, G.elements[k], AlgElement::path_term(F, A.monomials[c]));
            Vec v = A.to_vec(img);
            for (int r = 0; r < A.alg.dim(); ++r) m.at(r, c) = v[r];
        }
        if (!m.invertible())
            throw InvariantError("group action is singular on the canonical basis");
        G.on_basis.push_back(std::move(m));
    }
    return G;
}

SkewGroupAlgebra skew_group_algebra(const AlgebraHandle& A, const GroupAction& G) {
    const Algebra& base = A.alg;
    const Field& F = base.field();
    const int n = base.dim(), ng = G.order();

    std::vector<Algebra::BasisElem> basis;
    for (int g = 0; g < ng; ++g)
        for (int m = 0; m < n; ++m) {
            Algebra::BasisElem e = base.basis_elem(m);
            e.tgt = G.g(G.inverse[g]).vperm[e.tgt];
            e.label = base.basis_elem(m).label + "*g" + std::to_string(g);
            basis.push_back(std::move(e));
        }
    std::vector<int> idem(base.num_vertices());
    for (int v = 0; v < base.num_vertices(); ++v) idem[v] = base.idempotent(v);

    std::vector<std::vector<SparseVec>> mult(n * ng, std::vector<SparseVec>(n * ng));
    for (int g1 = 0; g1 < ng; ++g1)
        for (int m1 = 0; m1 < n; ++m1)
            for (int g2 = 0; g2 < ng; ++g2)
                for (int m2 = 0; m2 < n; ++m2) {
                    Vec b = G.act(base, g1, base.unit_vec(m2));
                    Vec w = base.mul(base.unit_vec(m1), b);
                    SparseVec row;
                    int gg = G.compose_table[g1][g2];
                    for (int k = 0; k < n; ++k)
                        if (!w[k].is_zero()) row.emplace_back(gg * n + k, w[k]);
                    mult[g1 * n + m1][g2 * n + m2] = std::move(row);
                }

    Algebra alg(F, base.grading_rank(), base.vertex_names(), std::move(basis), std::move(idem),
                std::move(mult));
    return SkewGroupAlgebra{std::move(alg), n, ng};
}

namespace {

struct OrbitData {
    std::vector<int> reps;
    std::vector<int> orbit_ord;
    std::vector<int> g_to_rep;
};

OrbitData vertex_orbits(const GradedQuiver& q, const GroupAction& G) {
    const int nv = q.num_vertices();
    OrbitData d;
    d.orbit_ord.assign(nv, -1);
    d.g_to_rep.assign(nv, -1);
    std::vector<bool> seen(nv, false);
    // Orbit representative: lexicographically least vertex name.
    std::vector<int> by_name(nv);
    for (int v = 0; v < nv; ++v) by_name[v] = v;
    std::sort(by_name.begin(), by_name.end(),
              [&](int x, int y) { return q.vertex_name(x) < q.vertex_name(y); });
    for (int v : by_name) {
        if (seen[v]) continue;
        int ord = static_cast<int>(d.reps.size());
        d.reps.push_back(v);
        for (int g = 0; g < G.order(); ++g) {
            int w = G.g(g).vperm[v];
            if (!seen[w]) {
                seen[w] = true;
                d.orbit_ord[w] = ord;
                d.g_to_rep[w] = g;
            }
        }
    }
    return d;
}

}  // namespace

OrbitAlgebra orbit_algebra(const AlgebraHandle& A, const GroupAction& G) {
    const Algebra& base = A.alg;
    const Field& F = base.field();
    OrbitData od = vertex_orbits(A.pres.quiver, G);

    std::vector<std::string> vnames;
    for (int r : od.reps) vnames.push_back("[" + base.vertex_name(r) + "]");

    // Basis: monomials m starting at a representative; the group coordinate
    // is forced by the target (free action): g = g_to_rep[tgt(m)].
    std::vector<int> basis_m, basis_g;
    std::vector<int> index_of_m(base.dim(), -1);
    std::vector<Algebra::BasisElem> basis;
    for (int m = 0; m < base.dim(); ++m) {
        const auto& e = base.basis_elem(m);
        if (od.reps[od.orbit_ord[e.src]] != e.src) continue;
        int g = od.g_to_rep[e.tgt];
        index_of_m[m] = static_cast<int>(basis.size());
        basis_m.push_back(m);
        basis_g.push_back(g);
        basis.push_back(Algebra::BasisElem{od.orbit_ord[e.src], od.orbit_ord[e.tgt], e.deg,
                                           "[" + e.label + "]"});
    }
    std::vector<int> idem(od.reps.size());
    for (std::size_t o = 0; o < od.reps.size(); ++o) {
        int k = index_of_m[base.idempotent(od.reps[o])];
        if (k < 0) throw InvariantError("orbit algebra: missing idempotent");
        idem[o] = k;
    }

    const int nl = static_cast<int>(basis.size());
    std::vector<std::vector<SparseVec>> mult(nl, std::vector<SparseVec>(nl));
    for (int k1 = 0; k1 < nl; ++k1)
        for (int k2 = 0; k2 < nl; ++k2) {
            // [a][b] = [a b^g], g the unique element with g(i(b)) = t(a).
            int m1 = basis_m[k1], g1 = basis_g[k1];
            int m2 = basis_m[k2];
            if (od.orbit_ord[base.basis_elem(m2).src] != od.orbit_ord[base.basis_elem(m1).tgt])
                continue;
            Vec b = G.act(base, g1, base.unit_vec(m2));
            Vec w = base.mul(base.unit_vec(m1), b);
            SparseVec row;
            for (int k = 0; k < base.dim(); ++k) {
                if (w[k].is_zero()) continue;
                int lk = index_of_m[k];
                if (lk < 0) throw InvariantError("orbit algebra: product left the basis");
                row.emplace_back(lk, w[k]);
            }
            mult[k1][k2] = std::move(row);
        }

    OrbitAlgebra L{Algebra(F, base.grading_rank(), std::move(vnames), std::move(basis),
                           std::move(idem), std::move(mult)),
                   od.reps,
                   od.orbit_ord,
                   od.g_to_rep,
                   std::move(basis_m),
                   std::move(basis_g),
                   std::move(index_of_m)};

    // Graded dimensions must match the weak skeleton of A*G.
    SkewGroupAlgebra S = skew_group_algebra(A, G);
    for (const auto& [key, idxs] : L.alg.pieces()) {
        int skew_dim = 0;
        for (const auto& [skey, sidxs] : S.alg.pieces())
            if (skey.src == L.reps[key.src] && skey.tgt == L.reps[key.tgt] &&
                skey.deg == key.deg)
                skew_dim += static_cast<int>(sidxs.size());
        if (skew_dim != static_cast<int>(idxs.size()))
            throw InvariantError("orbit algebra: graded dimensions differ from the weak "
                                 "skeleton of A*G");
    }
    return L;
}

Matrix covering_matrix(const AlgebraHandle& A, const GroupAction& G, const OrbitAlgebra& L) {
    const Algebra& base = A.alg;
    Matrix P(base.field(), L.alg.dim(), base.dim());
    for (int m = 0; m < base.dim(); ++m) {
        // pi(a) for a in e_{g0(i0)} A e_j: a^{g0^{-1}} * (g0^{-1} applied later
        // to the forced group coordinate). Transport a back to the orbit
        // representative of its source and read off the orbit basis element.
        int src = base.basis_elem(m).src;
        int g0 = L.g_to_rep[src];
        Vec back = G.act(base, G.inverse[g0], base.unit_vec(m));
        for (int k = 0; k < base.dim(); ++k) {
            if (back[k].is_zero()) continue;
            int lk = L.index_of_m[k];
            if (lk < 0) throw InvariantError("covering matrix: image outside the orbit basis");
            P.at(lk, m) = back[k];
        }
    }
    return P;
}

CoveringCheck verify_covering(const AlgebraHandle& A, const GroupAction& G,
                              const OrbitAlgebra& L) {
    const Algebra& base = A.alg;

    // Degrees occurring anywhere.
    std::vector<Degree> degs;
    for (const auto& [key, idxs] : L.alg.pieces())
        if (std::find(degs.begin(), degs.end(), key.deg) == degs.end())
            degs.push_back(key.deg);
    for (const auto& [key, idxs] : base.pieces())
        if (std::find(degs.begin(), degs.end(), key.deg) == degs.end())
            degs.push_back(key.deg);

    // Dimension pass first: a damaged orbit algebra must be reported as a
    // mismatch before the functor matrix (whose bookkeeping assumes an intact
    // codomain) is assembled.
    for (int pass = 0; pass < 2; ++pass) {
        Matrix P(base.field(), 0, 0);
        if (pass == 1) P = covering_matrix(A, G, L);
        for (int i = 0; i < base.num_vertices(); ++i) {
            for (std::size_t jo = 0; jo < L.reps.size(); ++jo) {
                for (const Degree& h : degs) {
                    for (int side = 0; side < 2; ++side) {
                        // Fiber of [j]: the orbit of its representative.
                        std::vector<int> domain;
                        for (int g = 0; g < G.order(); ++g) {
                            int jprime = G.g(g).vperm[L.reps[jo]];
                            const auto& piece = side == 0 ? base.piece(i, jprime, h)
                                                          : base.piece(jprime, i, h);
                            domain.insert(domain.end(), piece.begin(), piece.end());
                        }
                        const auto& codomain =
                            side == 0 ? L.alg.piece(L.orbit_ord[i], static_cast<int>(jo), h)
                                      : L.alg.piece(static_cast<int>(jo), L.orbit_ord[i], h);
                        if (pass == 0) {
                            if (domain.size() != codomain.size())
                                return CoveringCheck{false,
                                                     "fiber-sum dimension mismatch at (e_" +
                                                         base.vertex_name(i) + ", [" +
                                                         base.vertex_name(L.reps[jo]) + "], " +
                                                         degree_str(h) + ")"};
                            continue;
                        }
                        if (domain.empty()) continue;
                        Matrix m(base.field(), codomain.size(), domain.size());
                        for (std::size_t c = 0; c < domain.size(); ++c)
                            for (std::size_t r = 0; r < codomain.size(); ++r)
                                m.at(r, c) = P.at(codomain[r], domain[c]);
                        if (!m.invertible())
                            return CoveringCheck{false,
                                                 "fiber-sum map not bijective at (e_" +
                                                     base.vertex_name(i) + ", [" +
                                                     base.vertex_name(L.reps[jo]) + "], " +
                                                     degree_str(h) + ")"};
                    }
                }
            }
        }
    }
    return CoveringCheck{};
}

BilinearForm g_invariant_form(const AlgebraHandle& A, const GroupAction& G, const PFReport& r,
                              const Classification& cls) {
    const Algebra& base = A.alg;
    if (!r.is_pf) throw PreconditionError("g_invariant_form: algebra is not PF");
    if (!cls.split) throw PreconditionError("g_invariant_form: algebra is not split");
    OrbitData od = vertex_orbits(A.pres.quiver, G);

    // nu commutes with the action: g maps e_iSoc e_{nu(i)} onto
    // e_{g(i)}Soc e_{g(nu(i))}, so nu(g(i)) = g(nu(i)) by uniqueness.
    for (int g = 0; g < G.order(); ++g)
        for (int v = 0; v < base.num_vertices(); ++v)
            if (r.nu[G.g(g).vperm[v]] != G.g(g).vperm[r.nu[v]])
                throw InvariantError("g_invariant_form: nu does not commute with the action");

    FormBasis fb = default_form_basis(base, r);
    FormBasis transported;
    transported.h.resize(base.num_vertices());
    transported.bases.resize(base.num_vertices());
    for (int v = 0; v < base.num_vertices(); ++v) {
        int rep = od.reps[od.orbit_ord[v]];
        int g = od.g_to_rep[v];
        if (!(r.h[rep] == r.h[v]))
            throw InvariantError("g_invariant_form: socle support degree varies on an orbit");
        transported.h[v] = r.h[rep];
        for (const Vec& b : fb.bases[rep]) transported.bases[v].push_back(G.act(base, g, b));
    }
    BilinearForm f = nakayama_form_from_basis(base, r, cls, transported);

    for (int g = 0; g < G.order(); ++g)
        for (int x = 0; x < base.dim(); ++x)
            for (int y = 0; y < base.dim(); ++y) {
                Scalar lhs = f.eval(base, G.act(base, g, base.unit_vec(x)),
                                    G.act(base, g, base.unit_vec(y)));
                if (!(lhs == f.eval(base, base.unit_vec(x), base.unit_vec(y))))
                    throw InvariantError("g_invariant_form: form is not G-invariant");
            }
    return f;
}

BilinearForm pushdown_form(const AlgebraHandle& A, const GroupAction& G, const OrbitAlgebra& L,
                           const BilinearForm& f) {
    const Algebra& base = A.alg;
    BilinearForm out;
    out.nu.resize(L.reps.size());
    out.h.resize(L.reps.size());
    for (std::size_t o = 0; o < L.reps.size(); ++o) {
        out.nu[o] = L.orbit_ord[f.nu[L.reps[o]]];
        out.h[o] = f.h[L.reps[o]];
    }

    for (const auto& [key, rows_idx] : L.alg.pieces()) {
        const auto& cols_idx = L.alg.piece(key.tgt, out.nu[key.src],
                                           add_degree(out.h[key.src], negate_degree(key.deg)));
        Matrix block(base.field(), rows_idx.size(), cols_idx.size());
        for (std::size_t rr = 0; rr < rows_idx.size(); ++rr)
            for (std::size_t cc = 0; cc < cols_idx.size(); ++cc) {
                int m1 = L.basis_m[rows_idx[rr]], g1 = L.basis_g[rows_idx[rr]];
                int m2 = L.basis_m[cols_idx[cc]];
                // <[a],[b]> = (a, b^g), g the unique element with g(i(b)) = t(a).
                block.at(rr, cc) =
                    f.eval(base, base.unit_vec(m1), G.act(base, g1, base.unit_vec(m2)));
            }
        out.blocks.emplace(key, std::move(block));
    }
    // The blocks must reproduce the defining formula on every basis pair,
    // including the prescribed zeros.
    for (int k1 = 0; k1 < L.alg.dim(); ++k1)
        for (int k2 = 0; k2 < L.alg.dim(); ++k2) {
            int m1 = L.basis_m[k1], g1 = L.basis_g[k1];
            int m2 = L.basis_m[k2];
            Scalar rhs = Scalar::zero(base.field());
            if (L.orbit_ord[base.basis_elem(m2).src] == L.orbit_ord[base.basis_elem(m1).tgt])
                rhs = f.eval(base, base.unit_vec(m1), G.act(base, g1, base.unit_vec(m2)));
            if (!(out.eval(L.alg, L.alg.unit_vec(k1), L.alg.unit_vec(k2)) == rhs))
                throw InvariantError("pushdown_form: block form disagrees with <[a],[b]> = (a,b^g)");
        }
    verify_nakayama_form(L.alg, out, "pushdown_form");
    return out;
}

BilinearForm lift_form(const AlgebraHandle& A, const GroupAction& G, const OrbitAlgebra& L,
                       const BilinearForm& f_lam) {
    const Algebra& base = A.alg;
    Matrix P = covering_matrix(A, G, L);
    auto pi = [&](int m) {
        Vec v = zero_vec(base.field(), L.alg.dim());
        for (int r = 0; r < L.alg.dim(); ++r) v[r] = P.at(r, m);
        return v;
    };

    BilinearForm out;
    out.h.resize(base.num_vertices());
    out.nu.assign(base.num_vertices(), -1);
    for (int v = 0; v < base.num_vertices(); ++v) out.h[v] = f_lam.h[L.orbit_ord[v]];

    // mu(i): the unique vertex with e_i Soc_{h_i} e_{mu(i)} != 0. Derived from
    // the lifted pairing: mu(i) = the target vertex whose blocks are nonzero.
    for (int i = 0; i < base.num_vertices(); ++i) {
        for (int l = 0; l < base.num_vertices() && out.nu[i] < 0; ++l) {
            if (L.orbit_ord[l] != f_lam.nu[L.orbit_ord[i]]) continue;
            // candidate: check a nonzero pairing (e_iA e_j) x (e_jA e_l) exists
            for (const auto& [key, idxs] : base.pieces()) {
                if (key.src != i) continue;
                const auto& cols =
                    base.piece(key.tgt, l, add_degree(out.h[i], negate_degree(key.deg)));
                for (int m1 : idxs)
                    for (int m2 : cols)
                        if (!f_lam.eval(L.alg, pi(m1), pi(m2)).is_zero()) {
                            out.nu[i] = l;
                            goto found;
                        }
            }
        found:;
        }
        if (out.nu[i] < 0)
            throw InvariantError("lift_form: no pairing partner for vertex " +
                                 base.vertex_name(i));
    }

    for (const auto& [key, rows_idx] : base.pieces()) {
        const auto& cols_idx = base.piece(key.tgt, out.nu[key.src],
                                          add_degree(out.h[key.src], negate_degree(key.deg)));
        Matrix block(base.field(), rows_idx.size(), cols_idx.size());
        for (std::size_t rr = 0; rr < rows_idx.size(); ++rr)
            for (std::size_t cc = 0; cc < cols_idx.size(); ++cc)
                block.at(rr, cc) = f_lam.eval(L.alg, pi(rows_idx[rr]), pi(cols_idx[cc]));
        out.blocks.emplace(key, std::move(block));
    }
    // The blocks must reproduce <pi(a), pi(b)> with zero between mismatched
    // middle vertices, on every basis pair.
    for (int m1 = 0; m1 < base.dim(); ++m1)
        for (int m2 = 0; m2 < base.dim(); ++m2) {
            Scalar rhs = Scalar::zero(base.field());
            if (base.basis_elem(m1).tgt == base.basis_elem(m2).src)
                rhs = f_lam.eval(L.alg, pi(m1), pi(m2));
            if (!(out.eval(base, base.unit_vec(m1), base.unit_vec(m2)) == rhs))
                throw InvariantError("lift_form: block form disagrees with <pi(a), pi(b)>");
        }
    verify_nakayama_form(base, out, "lift_form");
    return out;
}

TransferReport verify_transfer(const AlgebraHandle& A, const GroupAction& G) {
    TransferReport rep;
    const Algebra& base = A.alg;

    SubspaceFamily J = radical_arrow_image(A);
    Classification cls = classify(base, J);
    if (!cls.weakly_basic || !cls.split)
        throw PreconditionError("verify_transfer: algebra is not split weakly basic");
    PFReport pa = pf_check(base, J, cls);
    rep.a_is_pf = pa.is_pf;

    // Skew group algebra and its radical (Lemma-level checks).
    SkewGroupAlgebra S = skew_group_algebra(A, G);
    rep.skew_dim = S.alg.dim();
    if (S.alg.dim() != base.dim() * G.order())
        throw InvariantError("verify_transfer: skew dimension mismatch");
    SubspaceFamily JG;
    for (const Vec& u : J.global_vectors(base))
        for (int g = 0; g < G.order(); ++g) {
            Vec v = zero_vec(base.field(), S.alg.dim());
            for (int m = 0; m < base.dim(); ++m) v[S.pair_index(m, g)] = u[m];
            JG.add_piece_vector(S.alg, v);
        }
    SubspaceFamily radS = radical_bruteforce(S.alg);
    rep.skew_radical_dim = radS.dim();
    rep.skew_radical_matches = radS == JG;
    rep.skew_quotient_semisimple = radical_bruteforce(quotient_algebra(S.alg, radS)).empty();

    OrbitAlgebra L = orbit_algebra(A, G);
    SubspaceFamily JL = radical_by_criterion(L.alg);
    Classification clsL = classify(L.alg, JL);
    PFReport pl = pf_check(L.alg, JL, clsL);
    rep.orbit_is_pf = pl.is_pf;
    rep.flags_agree = (pa.is_pf == pl.is_pf);
    if (!rep.flags_agree)
        throw InvariantError("verify_transfer: PF flags of A and A/G disagree");

    rep.covering_ok = verify_covering(A, G, L).ok;

    if (pa.is_pf) {
        BilinearForm f = g_invariant_form(A, G, pa, cls);
        rep.invariant_form_ok = true;  // g_invariant_form verifies or throws

        BilinearForm fl = pushdown_form(A, G, L, f);
        for (std::size_t o = 0; o < L.reps.size(); ++o) {
            if (fl.nu[o] != L.orbit_ord[pa.nu[L.reps[o]]])
                throw InvariantError("verify_transfer: pushdown permutation is not [nu(i)]");
            if (!(fl.h[o] == pa.h[L.reps[o]]))
                throw InvariantError("verify_transfer: pushdown degree map is not h_i");
        }
        rep.pushdown_ok = true;

        BilinearForm fa = lift_form(A, G, L, fl);
        rep.lift_ok = true;
        for (int v = 0; v < base.num_vertices(); ++v)
            if (fa.nu[v] != pa.nu[v])
                throw InvariantError("verify_transfer: lifted form has a different Nakayama "
                                     "permutation");

        AlgebraAutomorphism eta = nakayama_automorphism(base, f);
        rep.eta_commutes = true;
        for (int g = 0; g < G.order(); ++g) {
            Matrix lhs = G.on_basis[g].mul(eta.matrix);
            Matrix rhs = eta.matrix.mul(G.on_basis[g]);
            if (!(lhs == rhs)) {
                rep.eta_commutes = false;
                throw InvariantError("verify_transfer: eta does not commute with the action");
            }
        }

        AlgebraAutomorphism etaL = nakayama_automorphism(L.alg, fl);
        Matrix P = covering_matrix(A, G, L);
        rep.eta_descends = etaL.matrix.mul(P) == P.mul(eta.matrix);
        if (!rep.eta_descends)
            throw InvariantError("verify_transfer: eta-bar([x]) != [eta(x)]");
    }
    return rep;
}

}  // namespace qpf
