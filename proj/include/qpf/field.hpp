#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "qpf/error.hpp"

namespace qpf {

enum class FieldKind { rationals, prime };

/// A coefficient field: the rationals, or GF(p) for a prime p.
class Field {
  public:
    static Field rationals() { return Field(FieldKind::rationals, 0); }
    static Field prime(unsigned long p);  // validates that p is prime

    FieldKind kind() const { return kind_; }
    unsigned long p() const { return p_; }
    unsigned long characteristic() const { return kind_ == FieldKind::prime ? p_ : 0; }

    bool operator==(const Field&) const = default;

    std::string name() const {
        return kind_ == FieldKind::rationals ? "Q" : "GF(" + std::to_string(p_) + ")";
    }

  private:
    Field(FieldKind k, unsigned long p) : kind_(k), p_(p) {}
    FieldKind kind_;
    unsigned long p_;
};

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator; GF(p) residues are kept in [0, p).
class Scalar {
  public:
    Scalar() : field_(Field::rationals()), v_(0) {}
    static Scalar zero(const Field& f) { return Scalar(f, 0); }
    static Scalar one(const Field& f) { return Scalar(f, 1); }
    static Scalar of_int(const Field& f, long n) { return Scalar(f, n); }
    static Scalar of_mpz(const Field& f, const mpz_class& n);
    /// num/den; den must be nonzero (and invertible mod p over GF(p)).
    static Scalar fraction(const Field& f, const mpz_class& num, const mpz_class& den);

    const Field& field() const { return field_; }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on division by zero
    Scalar inverse() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const { return field_ == o.field_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /// Total order used only for canonical serialization, not algebra.
    bool operator<(const Scalar& o) const { return cmp(v_, o.v_) < 0; }

    /// Exact decimal string: "3", "-1/2"; a GF(p) residue prints as its integer.
    std::string str() const;

    const mpq_class& raw() const { return v_; }

  private:
    Scalar(const Field& f, long n);
    Scalar(const Field& f, mpq_class v) : field_(f), v_(std::move(v)) {}
    void check_same(const Scalar& o) const;
    mpz_class mod_p(const mpz_class& z) const;

    Field field_;
    mpq_class v_;  // for GF(p): an integer residue in [0, p)
};

}  // namespace qpf
