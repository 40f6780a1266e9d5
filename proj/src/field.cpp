#include "qpf/field.hpp"

namespace qpf {

Field Field::prime(unsigned long p) {
    mpz_class z(p);
    // 2 = certainly prime, 1 = almost certainly (fine at word size), 0 = composite.
    if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
        throw InputError("field GF(" + std::to_string(p) + "): modulus is not prime");
    return Field(FieldKind::prime, p);
}

Scalar::Scalar(const Field& f, long n) : field_(f), v_(n) {
    if (field_.kind() == FieldKind::prime) v_ = mpq_class(mod_p(mpz_class(n)));
}

Scalar Scalar::of_mpz(const Field& f, const mpz_class& n) {
    Scalar s = Scalar::zero(f);
    s.v_ = f.kind() == FieldKind::prime ? mpq_class(s.mod_p(n)) : mpq_class(n);
    return s;
}

Scalar Scalar::fraction(const Field& f, const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw InputError("coefficient with zero denominator");
    if (f.kind() == FieldKind::rationals) {
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(f, q);
    }
    Scalar d = Scalar::of_mpz(f, den);
    if (d.is_zero())
        throw InputError("coefficient denominator " + den.get_str() +
                         " is not invertible in " + f.name());
    return Scalar::of_mpz(f, num) / d;
}

mpz_class Scalar::mod_p(const mpz_class& z) const {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), z.get_mpz_t(), mpz_class(field_.p()).get_mpz_t());
    return r;  // mpz_mod returns a nonnegative residue
}

void Scalar::check_same(const Scalar& o) const {
    if (field_ != o.field_) throw InvariantError("mixed-field scalar arithmetic");
}

Scalar Scalar::operator-() const {
    if (field_.kind() == FieldKind::rationals) return Scalar(field_, mpq_class(-v_));
    return Scalar(field_, mpq_class(mod_p(-v_.get_num())));
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    if (field_.kind() == FieldKind::rationals) return Scalar(field_, mpq_class(v_ + o.v_));
    return Scalar(field_, mpq_class(mod_p(v_.get_num() + o.v_.get_num())));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    if (field_.kind() == FieldKind::rationals) return Scalar(field_, mpq_class(v_ * o.v_));
    return Scalar(field_, mpq_class(mod_p(v_.get_num() * o.v_.get_num())));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    if (field_.kind() == FieldKind::rationals) return Scalar(field_, mpq_class(1 / v_));
    mpz_class r;
    if (!mpz_invert(r.get_mpz_t(), v_.get_num().get_mpz_t(),
                    mpz_class(field_.p()).get_mpz_t()))
        throw Error("non-invertible residue mod " + std::to_string(field_.p()));
    return Scalar(field_, mpq_class(r));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

std::string Scalar::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace qpf
