#include "qpf/matrix.hpp"

namespace qpf {

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec add(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Scalar& c, const Vec& v) {
    Vec r(v);
    for (auto& x : r) x *= c;
    return r;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InvariantError("from_rows: ragged row");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Vec Matrix::row(std::size_t r) const {
    return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::mul(const Matrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix product: dimension mismatch");
    Matrix p(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(r, k).is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                p.at(r, c) += at(r, k) * o.at(k, c);
        }
    return p;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw InputError("matrix apply: dimension mismatch");
    Vec r = zero_vec(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(i, c).is_zero()) r[i] += at(i, c) * v[c];
    return r;
}

Matrix::Rref Matrix::rref() const {
    Rref out{*this, {}};
    Matrix& m = out.mat;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pr = r;
        while (pr < rows_ && m.at(pr, c).is_zero()) ++pr;
        if (pr == rows_) continue;
        if (pr != r)
            for (std::size_t k = 0; k < cols_; ++k) std::swap(m.at(pr, k), m.at(r, k));
        Scalar inv = m.at(r, c).inverse();
        for (std::size_t k = c; k < cols_; ++k) m.at(r, k) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (std::size_t k = c; k < cols_; ++k) m.at(i, k) -= f * m.at(r, k);
        }
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

std::vector<Vec> Matrix::kernel_basis() const {
    Rref rr = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : rr.pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Vec v = zero_vec(field_, cols_);
        v[f] = Scalar::one(field_);
        for (std::size_t r = 0; r < rr.pivots.size(); ++r)
            v[rr.pivots[r]] = -rr.mat.at(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> Matrix::solve(const Vec& rhs) const {
    if (rhs.size() != rows_) throw InputError("solve: rhs length mismatch");
    Matrix aug(field_, rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_) = rhs[r];
    }
    Rref rr = aug.rref();
    for (auto c : rr.pivots)
        if (c == cols_) return std::nullopt;  // pivot in the rhs column: inconsistent
    Vec x = zero_vec(field_, cols_);
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) x[rr.pivots[r]] = rr.mat.at(r, cols_);
    return x;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw Error("inverse of non-square matrix");
    Matrix aug(field_, rows_, 2 * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = Scalar::one(field_);
    }
    Rref rr = aug.rref();
    if (rr.pivots.size() != rows_ || rr.pivots.back() >= cols_)
        throw Error("inverse of singular matrix");
    Matrix inv(field_, rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) inv.at(r, c) = rr.mat.at(r, cols_ + c);
    return inv;
}

}  // namespace qpf
