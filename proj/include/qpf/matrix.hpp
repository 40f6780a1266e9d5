#pragma once

#include <optional>
#include <vector>

#include "qpf/field.hpp"

namespace qpf {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
bool is_zero_vec(const Vec& v);

/// Dense exact matrix over a fixed field, row major.
class Matrix {
  public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}
    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Matrix transpose() const;
    Matrix mul(const Matrix& o) const;
    Vec apply(const Vec& v) const;  // matrix * column vector

    bool operator==(const Matrix& o) const = default;

    struct Rref;
    /// Reduced row-echelon form; rank = pivots.size().
    Rref rref() const;
    std::size_t rank() const;

    /// Basis of the right null space, one column vector per free column,
    /// ordered by free-column index. Empty iff full column rank.
    std::vector<Vec> kernel_basis() const;

    /// One solution x of (*this) x = rhs, or nullopt when inconsistent.
    /// Throws InputError on a dimension mismatch.
    std::optional<Vec> solve(const Vec& rhs) const;

    bool invertible() const { return rows_ == cols_ && rank() == rows_; }
    Matrix inverse() const;  // throws Error when singular

  private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

struct Matrix::Rref {
    Matrix mat;
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

inline std::size_t Matrix::rank() const { return rref().pivots.size(); }

}  // namespace qpf
