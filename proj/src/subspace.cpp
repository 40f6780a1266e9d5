#include "qpf/subspace.hpp"

#include <algorithm>

namespace qpf {

namespace {

Vec slice(const Algebra& a, const Vec& global, const std::vector<int>& piece) {
    Vec v = zero_vec(a.field(), piece.size());
    for (std::size_t k = 0; k < piece.size(); ++k) v[k] = global[piece[k]];
    return v;
}

Vec unslice(const Algebra& a, const Vec& local, const std::vector<int>& piece) {
    Vec v = zero_vec(a.field(), a.dim());
    for (std::size_t k = 0; k < piece.size(); ++k) v[piece[k]] = local[k];
    return v;
}

Matrix append_row_rref(const Matrix& block, const Vec& row) {
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < block.rows(); ++r) rows.push_back(block.row(r));
    rows.push_back(row);
    Matrix m = Matrix::from_rows(block.field(), rows, block.cols());
    auto rr = m.rref();
    std::vector<Vec> keep;
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) keep.push_back(rr.mat.row(r));
    return Matrix::from_rows(block.field(), keep, block.cols());
}

}  // namespace

void SubspaceFamily::add_piece_vector(const Algebra& a, const Vec& v) {
    int support = -1;
    for (int k = 0; k < a.dim(); ++k) {
        if (v[k].is_zero()) continue;
        if (support < 0)
            support = k;
        else if (a.piece_of(k) != a.piece_of(support))
            throw InvariantError("add_piece_vector: vector spans several pieces");
    }
    if (support < 0) return;
    PieceKey key = a.piece_of(support);
    const auto& piece = a.piece(key.src, key.tgt, key.deg);
    Vec local = slice(a, v, piece);
    auto it = blocks_.find(key);
    if (it == blocks_.end()) {
        Matrix m = Matrix::from_rows(a.field(), {local}, piece.size());
        auto rr = m.rref();
        if (!rr.pivots.empty()) blocks_.emplace(key, rr.mat);
    } else {
        it->second = append_row_rref(it->second, local);
    }
}

void SubspaceFamily::add_split_vector(const Algebra& a, const Vec& v) {
    std::map<PieceKey, Vec> parts;
    for (int k = 0; k < a.dim(); ++k) {
        if (v[k].is_zero()) continue;
        auto [it, fresh] = parts.emplace(a.piece_of(k), zero_vec(a.field(), a.dim()));
        it->second[k] = v[k];
    }
    for (auto& [key, part] : parts) add_piece_vector(a, part);
}

int SubspaceFamily::dim() const {
    int d = 0;
    for (const auto& [k, m] : blocks_) d += static_cast<int>(m.rows());
    return d;
}

int SubspaceFamily::block_dim(const PieceKey& k) const {
    auto it = blocks_.find(k);
    return it == blocks_.end() ? 0 : static_cast<int>(it->second.rows());
}

std::vector<Vec> SubspaceFamily::global_vectors(const Algebra& a) const {
    std::vector<Vec> out;
    for (const auto& [key, m] : blocks_) {
        const auto& piece = a.piece(key.src, key.tgt, key.deg);
        for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(unslice(a, m.row(r), piece));
    }
    return out;
}

Vec SubspaceFamily::reduce(const Algebra& a, const Vec& v) const {
    // Eliminate pivot coordinates piecewise; rref blocks make this canonical.
    Vec out = v;
    for (const auto& [key, m] : blocks_) {
        const auto& piece = a.piece(key.src, key.tgt, key.deg);
        auto rrp = m.rref();  // already rref; recompute pivots cheaply
        for (std::size_t r = 0; r < rrp.pivots.size(); ++r) {
            int pivot_global = piece[rrp.pivots[r]];
            if (out[pivot_global].is_zero()) continue;
            Scalar c = out[pivot_global];
            for (std::size_t k = 0; k < piece.size(); ++k)
                out[piece[k]] -= c * m.at(r, k);
        }
    }
    return out;
}

bool SubspaceFamily::contains(const Algebra& a, const Vec& v) const {
    return is_zero_vec(reduce(a, v));
}

bool SubspaceFamily::contains_family(const Algebra& a, const SubspaceFamily& other) const {
    for (const Vec& v : other.global_vectors(a))
        if (!contains(a, v)) return false;
    return true;
}

SubspaceFamily SubspaceFamily::sum(const Algebra& a, const SubspaceFamily& o) const {
    SubspaceFamily s = *this;
    for (const Vec& v : o.global_vectors(a)) s.add_piece_vector(a, v);
    return s;
}

SubspaceFamily SubspaceFamily::product(const Algebra& a, const SubspaceFamily& o) const {
    SubspaceFamily p;
    std::vector<Vec> left = global_vectors(a);
    std::vector<Vec> right = o.global_vectors(a);
    for (const Vec& x : left)
        for (const Vec& y : right) {
            Vec xy = a.mul(x, y);
            if (!is_zero_vec(xy)) p.add_piece_vector(a, xy);
        }
    return p;
}

bool SubspaceFamily::is_nilpotent(const Algebra& a, int* index) const {
    SubspaceFamily power = *this;
    for (int k = 1; k <= a.dim() + 1; ++k) {
        if (power.empty()) {
            if (index) *index = k;
            return true;
        }
        SubspaceFamily next = power.product(a, *this);
        if (next.dim() >= power.dim() && next == power) break;  // stabilized nonzero
        power = std::move(next);
    }
    // Powers of a subspace descend once it stabilizes; nonzero fixpoint.
    return false;
}

bool SubspaceFamily::is_two_sided_ideal(const Algebra& a) const {
    std::vector<Vec> vs = global_vectors(a);
    for (const Vec& v : vs) {
        for (int b = 0; b < a.dim(); ++b) {
            if (!contains(a, a.mul(a.unit_vec(b), v))) return false;
            if (!contains(a, a.mul(v, a.unit_vec(b)))) return false;
        }
    }
    return true;
}

SubspaceFamily SubspaceFamily::whole_algebra(const Algebra& a) {
    SubspaceFamily f;
    for (int k = 0; k < a.dim(); ++k) f.add_piece_vector(a, a.unit_vec(k));
    return f;
}

SubspaceFamily SubspaceFamily::from_vectors(const Algebra& a, const std::vector<Vec>& vs,
                                            bool split) {
    SubspaceFamily f;
    for (const Vec& v : vs)
        split ? f.add_split_vector(a, v) : f.add_piece_vector(a, v);
    return f;
}

Algebra quotient_algebra(const Algebra& a, const SubspaceFamily& ideal) {
    // Representatives: piece-basis coordinates away from the ideal's pivots.
    std::vector<int> reps;
    std::vector<int> rep_pos(a.dim(), -1);
    for (const auto& [key, idxs] : a.pieces()) {
        std::vector<bool> is_pivot(idxs.size(), false);
        auto bit = ideal.blocks().find(key);
        if (bit != ideal.blocks().end())
            for (auto c : bit->second.rref().pivots) is_pivot[c] = true;
        for (std::size_t k = 0; k < idxs.size(); ++k)
            if (!is_pivot[k]) reps.push_back(idxs[k]);
    }
    std::sort(reps.begin(), reps.end());
    for (std::size_t k = 0; k < reps.size(); ++k) rep_pos[reps[k]] = static_cast<int>(k);

    std::vector<Algebra::BasisElem> basis;
    for (int r : reps) {
        auto e = a.basis_elem(r);
        e.label = "[" + e.label + "]";
        basis.push_back(std::move(e));
    }
    std::vector<int> idem(a.num_vertices(), -1);
    for (int v = 0; v < a.num_vertices(); ++v) {
        int iv = a.idempotent(v);
        Vec red = ideal.reduce(a, a.unit_vec(iv));
        if (is_zero_vec(red)) throw InvariantError("quotient kills an idempotent");
        if (rep_pos[iv] < 0 || !red[iv].is_one())
            throw InvariantError("quotient: idempotent is not a representative");
        idem[v] = rep_pos[iv];
    }

    auto project = [&](const Vec& v) {
        Vec red = ideal.reduce(a, v);
        SparseVec sv;
        for (int k = 0; k < a.dim(); ++k) {
            if (red[k].is_zero()) continue;
            if (rep_pos[k] < 0) throw InvariantError("quotient reduction left the complement");
            sv.emplace_back(rep_pos[k], red[k]);
        }
        return sv;
    };

    const int n = static_cast<int>(reps.size());
    std::vector<std::vector<SparseVec>> mult(n, std::vector<SparseVec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mult[i][j] = project(a.mul(a.unit_vec(reps[i]), a.unit_vec(reps[j])));

    return Algebra(a.field(), a.grading_rank(), a.vertex_names(), std::move(basis),
                   std::move(idem), std::move(mult));
}

}  // namespace qpf
