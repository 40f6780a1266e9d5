#include <doctest.h>

#include <random>

#include "qpf/field.hpp"

using namespace qpf;

TEST_SUITE("field") {

TEST_CASE("rationals stay in lowest terms with positive denominator") {
    Field Q = Field::rationals();
    CHECK(Scalar::fraction(Q, 2, 4).str() == "1/2");
    CHECK(Scalar::fraction(Q, 1, -2).str() == "-1/2");
    CHECK(Scalar::fraction(Q, -6, -3).str() == "2");
    CHECK(Scalar::fraction(Q, 0, 7).is_zero());
}

TEST_CASE("GF(p) residues live in [0, p)") {
    Field F7 = Field::prime(7);
    CHECK(Scalar::of_int(F7, -3) == Scalar::of_int(F7, 4));
    CHECK(Scalar::of_int(F7, 7).is_zero());
    CHECK(Scalar::of_int(F7, 3).inverse() == Scalar::of_int(F7, 5));
    CHECK(Scalar::fraction(F7, 1, 3) == Scalar::of_int(F7, 5));
}

TEST_CASE("prime modulus is validated") {
    CHECK_THROWS_AS(Field::prime(4), InputError);
    CHECK_THROWS_AS(Field::prime(1), InputError);
    CHECK_THROWS_AS(Field::prime(0), InputError);
    CHECK_NOTHROW(Field::prime(2));
    CHECK_NOTHROW(Field::prime(97));
}

TEST_CASE("division by zero is rejected") {
    Field Q = Field::rationals();
    CHECK_THROWS_AS(Scalar::zero(Q).inverse(), Error);
    CHECK_THROWS_AS(Scalar::one(Q) / Scalar::zero(Q), Error);
}

TEST_CASE("field axioms hold under exact arithmetic") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    for (Field f : {Field::rationals(), Field::prime(5), Field::prime(2)}) {
        auto draw = [&] {
            for (;;) {
                int d = den(rng);
                if (f.kind() == FieldKind::rationals || !Scalar::of_int(f, d).is_zero())
                    return Scalar::fraction(f, num(rng), d);
            }
        };
        for (int t = 0; t < 200; ++t) {
            Scalar a = draw();
            Scalar b = draw();
            Scalar c = draw();
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a + Scalar::zero(f) == a);
            CHECK(a * Scalar::one(f) == a);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == Scalar::one(f));
                CHECK((a / a) == Scalar::one(f));
            }
        }
    }
}

}  // TEST_SUITE
