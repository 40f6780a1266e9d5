#include "qpf/algebra.hpp"

#include <algorithm>

namespace qpf {

Algebra::Algebra(Field f, int grading_rank, std::vector<std::string> vertex_names,
                 std::vector<BasisElem> basis, std::vector<int> idempotent_index,
                 std::vector<std::vector<SparseVec>> mult)
    : field_(f),
      rank_(grading_rank),
      vertex_names_(std::move(vertex_names)),
      basis_(std::move(basis)),
      idem_(std::move(idempotent_index)),
      mult_(std::move(mult)) {
    if (idem_.size() != vertex_names_.size())
        throw InvariantError("algebra: idempotent list does not match vertex list");
    if (mult_.size() != basis_.size())
        throw InvariantError("algebra: multiplication table has wrong shape");
    for (int k = 0; k < dim(); ++k)
        pieces_[piece_of(k)].push_back(k);
}

PieceKey Algebra::piece_of(int k) const {
    const BasisElem& b = basis_[k];
    return PieceKey{b.src, b.tgt, b.deg};
}

const std::vector<int>& Algebra::piece(int src, int tgt, const Degree& h) const {
    auto it = pieces_.find(PieceKey{src, tgt, h});
    return it == pieces_.end() ? empty_ : it->second;
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
    Vec r = zero_vec(field_, dim());
    for (int i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (const auto& [k, ck] : mult_[i][j]) r[k] += c * ck;
        }
    }
    return r;
}

Vec Algebra::unit_vec(int k) const {
    Vec v = zero_vec(field_, dim());
    v[k] = Scalar::one(field_);
    return v;
}

Matrix Algebra::left_mult_matrix(const Vec& x) const {
    Matrix m(field_, dim(), dim());
    for (int j = 0; j < dim(); ++j) {
        for (int i = 0; i < dim(); ++i) {
            if (x[i].is_zero()) continue;
            for (const auto& [k, ck] : mult_[i][j]) m.at(k, j) += x[i] * ck;
        }
    }
    return m;
}

Matrix Algebra::right_mult_matrix(const Vec& x) const {
    Matrix m(field_, dim(), dim());
    for (int i = 0; i < dim(); ++i) {
        for (int j = 0; j < dim(); ++j) {
            if (x[j].is_zero()) continue;
            for (const auto& [k, ck] : mult_[i][j]) m.at(k, i) += x[j] * ck;
        }
    }
    return m;
}

std::string Algebra::elem_str(const Vec& x) const {
    std::string s;
    for (int i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (!x[i].is_one()) s += x[i].str() + "*";
        s += basis_[i].label;
    }
    return s.empty() ? "0" : s;
}

AlgElement AlgebraHandle::to_element(const Vec& v) const {
    AlgElement x(pres.field);
    for (std::size_t k = 0; k < monomials.size(); ++k)
        if (!v[k].is_zero()) x.add_term(monomials[k], v[k]);
    return x;
}

Vec AlgebraHandle::to_vec(const AlgElement& x) const {
    AlgElement nf = gb.normal_form(pres.quiver, x);
    Vec v = zero_vec(pres.field, alg.dim());
    for (const auto& [p, c] : nf.terms()) {
        auto it = index_of.find(p);
        if (it == index_of.end())
            throw InvariantError("normal form left the canonical basis: " + path_str(pres.quiver, p));
        v[it->second] = c;
    }
    return v;
}

AlgebraHandle build_algebra(const Presentation& p, std::size_t length_cap) {
    GroebnerBasis gb = complete(p, length_cap);
    std::vector<Path> monos = normal_monomials(p, gb, length_cap);
    const GradedQuiver& q = p.quiver;

    std::map<Path, int, PathLess> index;
    std::vector<Algebra::BasisElem> basis;
    for (std::size_t k = 0; k < monos.size(); ++k) {
        index.emplace(monos[k], static_cast<int>(k));
        basis.push_back(Algebra::BasisElem{monos[k].source(), monos[k].target(q),
                                           path_degree(q, monos[k]), path_str(q, monos[k])});
    }
    std::vector<int> idem(q.num_vertices());
    for (int v = 0; v < q.num_vertices(); ++v) {
        auto it = index.find(stationary_path(v));
        if (it == index.end()) throw InvariantError("stationary path missing from basis");
        idem[v] = it->second;
    }

    const int n = static_cast<int>(monos.size());
    std::vector<std::vector<SparseVec>> mult(n, std::vector<SparseVec>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            auto composed = compose(q, monos[i], monos[j]);
            if (!composed) continue;
            AlgElement nf = gb.normal_form(q, AlgElement::path_term(p.field, *composed));
            SparseVec row;
            for (const auto& [path, c] : nf.terms()) {
                auto it = index.find(path);
                if (it == index.end())
                    throw InvariantError("irreducible path missing from basis: " +
                                         path_str(q, path));
                row.emplace_back(it->second, c);
            }
            mult[i][j] = std::move(row);
        }
    }

    Algebra alg(p.field, q.grading_rank(), q.vertices(), std::move(basis), std::move(idem),
                std::move(mult));
    return AlgebraHandle{p, std::move(gb), std::move(monos), std::move(index), std::move(alg)};
}

Algebra subalgebra(const Algebra& a, const std::vector<int>& basis_indices,
                   bool trivially_graded) {
    std::vector<int> pos(a.dim(), -1);
    for (std::size_t k = 0; k < basis_indices.size(); ++k) pos[basis_indices[k]] = (int)k;

    // Vertices of the subalgebra: those whose idempotent was selected.
    std::vector<std::string> vnames;
    std::vector<int> old_vertex;
    std::vector<int> new_vertex_of(a.num_vertices(), -1);
    for (int v = 0; v < a.num_vertices(); ++v) {
        if (pos[a.idempotent(v)] < 0) continue;
        new_vertex_of[v] = static_cast<int>(vnames.size());
        vnames.push_back(a.vertex_name(v));
        old_vertex.push_back(v);
    }

    std::vector<Algebra::BasisElem> basis;
    for (int bi : basis_indices) {
        Algebra::BasisElem e = a.basis_elem(bi);
        if (new_vertex_of[e.src] < 0 || new_vertex_of[e.tgt] < 0)
            throw InvariantError("subalgebra: basis element without its idempotents");
        e.src = new_vertex_of[e.src];
        e.tgt = new_vertex_of[e.tgt];
        if (trivially_graded) e.deg = Degree{};
        basis.push_back(std::move(e));
    }
    std::vector<int> idem(vnames.size());
    for (std::size_t v = 0; v < vnames.size(); ++v) idem[v] = pos[a.idempotent(old_vertex[v])];

    const int n = static_cast<int>(basis_indices.size());
    std::vector<std::vector<SparseVec>> mult(n, std::vector<SparseVec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (const auto& [k, c] : a.mul_basis(basis_indices[i], basis_indices[j])) {
                if (pos[k] < 0)
                    throw InvariantError("subalgebra: not closed under multiplication");
                mult[i][j].emplace_back(pos[k], c);
            }
        }
    return Algebra(a.field(), trivially_graded ? 0 : a.grading_rank(), std::move(vnames),
                   std::move(basis), std::move(idem), std::move(mult));
}

Algebra corner_algebra(const Algebra& a, int v) {
    return subalgebra(a, a.piece(v, v, zero_degree(a.grading_rank())), true);
}

Algebra degree_zero_part(const Algebra& a) {
    std::vector<int> picks;
    Degree z = zero_degree(a.grading_rank());
    for (const auto& [key, idxs] : a.pieces())
        if (key.deg == z) picks.insert(picks.end(), idxs.begin(), idxs.end());
    std::sort(picks.begin(), picks.end());
    return subalgebra(a, picks, true);
}

}  // namespace qpf
