#include <doctest.h>

#include "rank2/scalar.hpp"
#include "test_support.hpp"

using namespace rank2;
using testsupport::Rng;
using testsupport::random_nonzero_scalar;
using testsupport::random_scalar;

namespace {
Scalar q(long long n, long long d = 1) {
    return Scalar::of_ratio(FieldSpec::rationals(), BigInt(n), BigInt(d));
}
Scalar gf(std::uint64_t p, long long v) { return Scalar::of_int(FieldSpec::prime_field(p), v); }
}  // namespace

TEST_CASE("field spec construction") {
    CHECK(FieldSpec::rationals().characteristic() == 0);
    CHECK(FieldSpec::prime_field(7).characteristic() == 7);
    CHECK(FieldSpec::prime_field(2).modulus() == 2);
    CHECK(FieldSpec::prime_field(7919).modulus() == 7919);
    CHECK_THROWS_AS(FieldSpec::prime_field(0), NonPrimeModulus);
    CHECK_THROWS_AS(FieldSpec::prime_field(1), NonPrimeModulus);
    CHECK_THROWS_AS(FieldSpec::prime_field(4), NonPrimeModulus);
    CHECK_THROWS_AS(FieldSpec::prime_field(91), NonPrimeModulus);  // 7 * 13
    CHECK(FieldSpec::rationals().to_string() == "Q");
    CHECK(FieldSpec::prime_field(5).to_string() == "GF(5)");
}

TEST_CASE("addition") {
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK(gf(7, 5) + gf(7, 4) == gf(7, 2));

    Rng rng(1);
    for (int i = 0; i < 50; ++i) {
        Scalar a = random_scalar(rng, FieldSpec::rationals(), -100, 100);
        CHECK(a + Scalar::zero(a.field()) == a);
    }
    CHECK_THROWS_AS(q(1) + gf(7, 1), FieldMismatch);
    CHECK_THROWS_AS(gf(5, 1) + gf(7, 1), FieldMismatch);
}

TEST_CASE("multiplication") {
    CHECK(q(2, 3) * q(3, 4) == q(1, 2));
    CHECK(gf(7, 3) * gf(7, 5) == gf(7, 1));

    Rng rng(2);
    for (int i = 0; i < 50; ++i) {
        Scalar a = random_scalar(rng, FieldSpec::prime_field(101), 0, 100);
        CHECK(a * Scalar::one(a.field()) == a);
    }
}

TEST_CASE("inverse") {
    CHECK(q(3, 5).inverse() == q(5, 3));
    CHECK(gf(7, 3).inverse() == gf(7, 5));
    CHECK_THROWS_AS(q(0).inverse(), DivisionByZero);
    CHECK_THROWS_AS(gf(7, 0).inverse(), DivisionByZero);
    CHECK_THROWS_AS(Scalar::of_ratio(FieldSpec::rationals(), BigInt(1), BigInt(0)),
                    DivisionByZero);
}

TEST_CASE("canonical form") {
    // stored rationals are always reduced with positive denominator
    CHECK(Scalar::of_ratio(FieldSpec::rationals(), BigInt(2), BigInt(-4)) == q(-1, 2));
    CHECK(Scalar::of_ratio(FieldSpec::rationals(), BigInt(6), BigInt(4)) == q(3, 2));
    CHECK(q(0, 5) == Scalar::zero(FieldSpec::rationals()));
    CHECK(q(-3).to_string() == "-3");
    CHECK(q(-1, 2).to_string() == "-1/2");
    CHECK(gf(7, -3) == gf(7, 4));
    CHECK(gf(7, 4).to_string() == "4");
    // in GF(p), a/b is a * b^{-1}
    CHECK(Scalar::of_ratio(FieldSpec::prime_field(7), BigInt(1), BigInt(3)) == gf(7, 5));
}

TEST_CASE("field axioms on random triples") {
    for (FieldSpec field : {FieldSpec::rationals(), FieldSpec::prime_field(5),
                            FieldSpec::prime_field(2147483647)}) {
        Rng rng(3);
        for (int i = 0; i < 500; ++i) {
            Scalar a = random_scalar(rng, field, -20, 20);
            Scalar b = random_scalar(rng, field, -20, 20);
            Scalar c = random_scalar(rng, field, -20, 20);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == Scalar::zero(field));
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(field));
        }
    }
}

TEST_CASE("characteristic times one is zero") {
    for (std::uint64_t p : {2ull, 5ull, 13ull}) {
        FieldSpec field = FieldSpec::prime_field(p);
        Scalar acc = Scalar::zero(field);
        for (std::uint64_t i = 0; i < p; ++i) acc = acc + Scalar::one(field);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("subtraction and division") {
    CHECK(q(1, 2) - q(1, 3) == q(1, 6));
    CHECK(q(7, 2) / q(7) == q(1, 2));
    Rng rng(4);
    for (int i = 0; i < 50; ++i) {
        Scalar a = random_nonzero_scalar(rng, FieldSpec::prime_field(13), 0, 12);
        CHECK(a / a == Scalar::one(a.field()));
    }
}
