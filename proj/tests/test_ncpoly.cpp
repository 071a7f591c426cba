#include <doctest.h>

#include "rank2/ncpoly.hpp"
#include "test_support.hpp"

using namespace rank2;
using testsupport::Rng;
using testsupport::random_monic_u_free;
using testsupport::random_ncpoly;
using testsupport::random_nonzero_ncpoly;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const Alphabet XY({"x", "y"});
const Alphabet XYZ({"x", "y", "z"});

NcPoly gen(const Alphabet& a, std::size_t i) { return NcPoly::generator(Q, a, i); }
NcPoly c(const Alphabet& a, long long v) { return NcPoly::constant(Q, a, Scalar::of_int(Q, v)); }
}  // namespace

TEST_CASE("addition") {
    NcPoly x = gen(XY, 0), y = gen(XY, 1);
    CHECK((x + y) + (x - y) == x.scaled(Scalar::of_int(Q, 2)));
    Rng rng(7);
    NcPoly f = random_ncpoly(rng, Q, XY, 4);
    CHECK(f + NcPoly::zero(Q, XY) == f);
    CHECK((f + (-f)).is_zero());
    CHECK_THROWS_AS(x + gen(XYZ, 0), AlgebraMismatch);
}

TEST_CASE("multiplication is noncommutative word concatenation") {
    NcPoly x = gen(XY, 0), y = gen(XY, 1);
    NcPoly xy = x * y, yx = y * x;
    CHECK(xy != yx);
    CHECK(xy.coefficient(Word({0, 1})).is_one());
    CHECK(yx.coefficient(Word({1, 0})).is_one());

    NcPoly sq = (x + y) * (x + y);
    CHECK(sq.terms().size() == 4);
    for (auto w : {Word({0, 0}), Word({0, 1}), Word({1, 0}), Word({1, 1})})
        CHECK(sq.coefficient(w).is_one());
}

TEST_CASE("degree additivity of products") {
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        NcPoly f = random_nonzero_ncpoly(rng, Q, XY, 6);
        NcPoly g = random_nonzero_ncpoly(rng, Q, XY, 6);
        NcPoly fg = f * g;
        REQUIRE(!fg.is_zero());
        CHECK(*fg.degree() == *f.degree() + *g.degree());
    }
    // degree-6 operands give a degree-12 product
    Rng rng2(12);
    NcPoly f = random_monic_u_free(rng2, Q, XY, 6);
    NcPoly g = random_monic_u_free(rng2, Q, XY, 6);
    CHECK(*(f * g).degree() == 12);
}

TEST_CASE("commutator") {
    NcPoly x = gen(XY, 0), y = gen(XY, 1);
    CHECK(commutator(x, y) == x * y - y * x);
    Rng rng(13);
    NcPoly f = random_ncpoly(rng, Q, XY, 3);
    CHECK(commutator(f, f).is_zero());
    NcPoly s = x + y;
    CHECK(commutator(s, s * s).is_zero());
}

TEST_CASE("commutator identities") {
    Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        NcPoly f = random_ncpoly(rng, Q, XY, 3, 4);
        NcPoly g = random_ncpoly(rng, Q, XY, 3, 4);
        NcPoly h = random_ncpoly(rng, Q, XY, 3, 4);
        CHECK(commutator(f, g) == -commutator(g, f));
        CHECK(commutator(f + g, h) == commutator(f, h) + commutator(g, h));
        NcPoly jacobi = commutator(f, commutator(g, h)) + commutator(g, commutator(h, f)) +
                        commutator(h, commutator(f, g));
        CHECK(jacobi.is_zero());
    }
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(19);
    for (const Alphabet& a : {XY, XYZ}) {
        for (int i = 0; i < 250; ++i) {
            NcPoly f = random_ncpoly(rng, Q, a, 4, 4);
            NcPoly g = random_ncpoly(rng, Q, a, 4, 4);
            NcPoly h = random_ncpoly(rng, Q, a, 4, 4);
            CHECK((f * g) * h == f * (g * h));
            CHECK(f * (g + h) == f * g + f * h);
            CHECK((f + g) * h == f * h + g * h);
        }
    }
}

TEST_CASE("domain property") {
    Rng rng(23);
    for (int i = 0; i < 200; ++i) {
        NcPoly f = random_nonzero_ncpoly(rng, Q, XY, 4);
        NcPoly g = random_nonzero_ncpoly(rng, Q, XY, 4);
        NcPoly fg = f * g;
        CHECK(!fg.is_zero());
        CHECK(*fg.degree() == *f.degree() + *g.degree());
    }
}

TEST_CASE("substitution") {
    NcPoly x = gen(XY, 0), y = gen(XY, 1);
    NcPoly f = x * y + x;
    CHECK(substitute(f, {x, NcPoly::zero(Q, XY)}) == x);
    CHECK(substitute(f, {x, y}) == f);

    // endomorphism law
    Rng rng(29);
    for (int i = 0; i < 100; ++i) {
        NcPoly f1 = random_ncpoly(rng, Q, XY, 3, 4);
        NcPoly g1 = random_ncpoly(rng, Q, XY, 3, 4);
        std::vector<NcPoly> images{random_ncpoly(rng, Q, XY, 2, 3),
                                   random_ncpoly(rng, Q, XY, 2, 3)};
        CHECK(substitute(f1 * g1, images) == substitute(f1, images) * substitute(g1, images));
        CHECK(substitute(f1 + g1, images) == substitute(f1, images) + substitute(g1, images));
    }

    // the empty word passes through as the constant term
    NcPoly k = c(XY, 5);
    CHECK(substitute(k, {y, x}) == k);
}

TEST_CASE("z split") {
    NcPoly x = gen(XYZ, 0), z = gen(XYZ, 2);
    NcPoly u = x + z * x + z * z;
    ZSplit s = z_split(u, 2);
    CHECK(s.u0 == x);
    CHECK(s.u1 == z * x + z * z);
    CHECK(s.u0 + s.u1 == u);

    NcPoly noz = x * x + x;
    ZSplit s2 = z_split(noz, 2);
    CHECK(s2.u0 == noz);
    CHECK(s2.u1.is_zero());

    ZSplit s3 = z_split(z, 2);
    CHECK(s3.u0.is_zero());
    CHECK(s3.u1 == z);

    CHECK_THROWS_AS(z_split(u, 9), UnknownGenerator);

    // substitute z -> 0 agrees with the z-free part
    Rng rng(31);
    for (int i = 0; i < 50; ++i) {
        NcPoly f = random_ncpoly(rng, Q, XYZ, 4);
        std::vector<NcPoly> images{gen(XYZ, 0), gen(XYZ, 1), NcPoly::zero(Q, XYZ)};
        CHECK(substitute(f, images) == z_split(f, 2).u0);
        CHECK(kill_generator(f, 2) == z_split(f, 2).u0);
    }
}

TEST_CASE("power") {
    NcPoly x = gen(XY, 0), y = gen(XY, 1);
    CHECK(x.power(3) == x * x * x);
    CHECK(x.power(3).coefficient(Word({0, 0, 0})).is_one());
    Rng rng(37);
    CHECK(random_ncpoly(rng, Q, XY, 3).power(0) == NcPoly::one(Q, XY));
    CHECK((x + y).power(2) == (x + y) * (x + y));
}

TEST_CASE("coefficient vectors") {
    NcPoly f = c(XY, 2) + gen(XY, 1).scaled(Scalar::of_int(Q, 3));  // 2 + 3y
    auto v = f.coefficient_vector(1);
    REQUIRE(v.size() == 3);  // basis (1, x, y)
    CHECK(v[0] == Scalar::of_int(Q, 2));
    CHECK(v[1].is_zero());
    CHECK(v[2] == Scalar::of_int(Q, 3));

    NcPoly xy = gen(XY, 0) * gen(XY, 1);
    auto v2 = xy.coefficient_vector(2);
    REQUIRE(v2.size() == 7);
    for (std::size_t i = 0; i < v2.size(); ++i)
        CHECK(v2[i].is_zero() == (i != word_basis_index(Word({0, 1}), 2)));

    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        NcPoly g = random_ncpoly(rng, Q, XY, 4);
        CHECK(NcPoly::from_vector(Q, XY, g.coefficient_vector(5), 5) == g);
    }

    CHECK_THROWS_AS((gen(XY, 0) * gen(XY, 0)).coefficient_vector(1), DegreeTooLarge);
}

TEST_CASE("degree of the zero polynomial is distinguished") {
    CHECK(!NcPoly::zero(Q, XY).degree().has_value());
    CHECK(*c(XY, 3).degree() == 0);
    CHECK(*gen(XY, 0).degree() == 1);
}
