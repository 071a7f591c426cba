#include <doctest.h>

#include "rank2/centralizer.hpp"
#include "test_support.hpp"

using namespace rank2;
using testsupport::Rng;
using testsupport::random_h;
using testsupport::random_monic_u_comm;
using testsupport::random_monic_u_free;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const Alphabet XY({"x", "y"});

NcPoly ncgen(std::size_t i) { return NcPoly::generator(Q, XY, i); }
CPoly cgen(std::size_t i) { return CPoly::generator(Q, XY, i); }

Decomposition coeffs(std::vector<long long> v) {
    std::vector<Scalar> c;
    for (long long x : v) c.push_back(Scalar::of_int(Q, x));
    return Decomposition{std::move(c)};
}
}  // namespace

TEST_CASE("decompose fixtures") {
    NcPoly x = ncgen(0), y = ncgen(1);
    CHECK(decompose(x * x, x) == Decomposition(coeffs({0, 0, 1})));

    NcPoly u = x + y;
    NcPoly f = u * u * u + u.scaled(Scalar::of_int(Q, 2));
    CHECK(decompose(f, u) == Decomposition(coeffs({0, 2, 0, 1})));

    CHECK(!decompose(x * y, x).has_value());
    CHECK(!decompose(x * x + y, x).has_value());
    CHECK_THROWS_AS(decompose(x, NcPoly::one(Q, XY)), ConstantU);

    // constants and zero
    CHECK(decompose(NcPoly::zero(Q, XY), x) == Decomposition(coeffs({})));
    CHECK(decompose(NcPoly::constant(Q, XY, Scalar::of_int(Q, 7)), x) ==
          Decomposition(coeffs({7})));

    // degree divisibility gate
    CHECK(!decompose(x * x * x, x * x).has_value());
}

TEST_CASE("decompose and evaluate are inverse") {
    Rng rng(41);
    for (int i = 0; i < 50; ++i) {
        std::uniform_int_distribution<std::size_t> du(1, 3);
        NcPoly u = random_monic_u_free(rng, Q, XY, du(rng));
        Decomposition h = random_h(rng, Q, 1, 3);
        NcPoly f = evaluate_decomposition(h, u);
        auto d = decompose(f, u);
        REQUIRE(d.has_value());
        CHECK(*d == h);
        CHECK(evaluate_decomposition(*d, u) == f);
    }
    for (int i = 0; i < 50; ++i) {
        std::uniform_int_distribution<std::size_t> du(1, 3);
        CPoly u = random_monic_u_comm(rng, Q, XY, du(rng));
        Decomposition h = random_h(rng, Q, 1, 3);
        CPoly f = evaluate_decomposition(h, u);
        auto d = decompose(f, u);
        REQUIRE(d.has_value());
        CHECK(*d == h);
        CHECK(evaluate_decomposition(*d, u) == f);
    }
}

TEST_CASE("free centralizer root fixtures") {
    NcPoly x = ncgen(0), y = ncgen(1);

    auto r1 = centralizer_root_free(x * x);
    CHECK(r1.u == x);
    CHECK(r1.kernel_dimension == 3);  // 1, x, x^2

    NcPoly u2 = x + y;
    auto r2 = centralizer_root_free(u2 * u2 * u2 + u2.scaled(Scalar::of_int(Q, 2)));
    CHECK(r2.u == u2);
    CHECK(decompose(u2 * u2 * u2 + u2.scaled(Scalar::of_int(Q, 2)), r2.u) ==
          Decomposition(coeffs({0, 2, 0, 1})));

    NcPoly u3 = x * y + x;
    auto r3 = centralizer_root_free(u3 * u3 + u3.scaled(Scalar::of_int(Q, 3)));
    CHECK(r3.u == u3);

    CHECK_THROWS_AS(centralizer_root_free(NcPoly::one(Q, XY)), ConstantInput);
    CHECK_THROWS_AS(centralizer_root_free(NcPoly::zero(Q, XY)), ConstantInput);
}

TEST_CASE("free centralizer root over a prime field") {
    FieldSpec gf5 = FieldSpec::prime_field(5);
    NcPoly x = NcPoly::generator(gf5, XY, 0), y = NcPoly::generator(gf5, XY, 1);
    NcPoly u = x * y + x.scaled(Scalar::of_int(gf5, 2));
    NcPoly f = u * u + u.scaled(Scalar::of_int(gf5, 3));
    auto r = centralizer_root_free(f);
    CHECK(r.u == u.scaled(u.leading_coeff().inverse()));
    CHECK(r.kernel_dimension == 3);
}

TEST_CASE("commutative centralizer root fixtures") {
    CPoly x = cgen(0), y = cgen(1);

    auto r1 = centralizer_root_comm(x * x);
    CHECK(r1.u == x);

    CPoly f = x * x * x * x * y * y;  // (x^2 y)^2
    auto r2 = centralizer_root_comm(f);
    CHECK(r2.u == x * x * y);
    CHECK(decompose(f, r2.u) == Decomposition(coeffs({0, 0, 1})));
    CHECK(r2.kernel_dimension == 3);

    auto r3 = centralizer_root_comm(x + y);
    CHECK(r3.u == x + y);

    CHECK_THROWS_AS(centralizer_root_comm(CPoly::one(Q, XY)), ConstantInput);
    FieldSpec gf5 = FieldSpec::prime_field(5);
    CHECK_THROWS_AS(centralizer_root_comm(CPoly::generator(gf5, XY, 0)),
                    CharacteristicNotZero);
}

TEST_CASE("root recovery on random compositions") {
    Rng rng(43);
    int done = 0;
    while (done < 25) {
        std::uniform_int_distribution<std::size_t> du(1, 3);
        NcPoly u = random_monic_u_free(rng, Q, XY, du(rng));
        if (centralizer_root_free(u).u != u) continue;  // keep primitive u only
        Decomposition h = random_h(rng, Q, 2, 3);
        NcPoly f = evaluate_decomposition(h, u);
        auto r = centralizer_root_free(f);
        CHECK(r.u == u);
        CHECK(decompose(f, r.u).has_value());
        CHECK(decompose(u, r.u).has_value());
        CHECK(r.kernel_dimension == 1 + *f.degree() / *u.degree());
        ++done;
    }
}

TEST_CASE("root recovery on random commutative compositions") {
    Rng rng(47);
    int done = 0;
    while (done < 25) {
        std::uniform_int_distribution<std::size_t> du(1, 3);
        CPoly u = random_monic_u_comm(rng, Q, XY, du(rng));
        if (centralizer_root_comm(u).u != u) continue;
        Decomposition h = random_h(rng, Q, 2, 3);
        CPoly f = evaluate_decomposition(h, u);
        auto r = centralizer_root_comm(f);
        CHECK(r.u == u);
        CHECK(r.kernel_dimension == 1 + *f.degree() / *u.degree());
        ++done;
    }
}

namespace {

// univariate composition h(alpha*t + beta) as a coefficient list
Decomposition compose_affine(const Decomposition& h, const Scalar& alpha, const Scalar& beta) {
    const FieldSpec& field = alpha.field();
    std::vector<Scalar> acc{Scalar::zero(field)};
    std::vector<Scalar> pow{Scalar::one(field)};  // (alpha*t + beta)^k
    for (std::size_t k = 0; k < h.coefficients.size(); ++k) {
        if (acc.size() < pow.size()) acc.resize(pow.size(), Scalar::zero(field));
        for (std::size_t i = 0; i < pow.size(); ++i)
            acc[i] = acc[i] + h.coefficients[k] * pow[i];
        // multiply pow by (alpha*t + beta)
        std::vector<Scalar> next(pow.size() + 1, Scalar::zero(field));
        for (std::size_t i = 0; i < pow.size(); ++i) {
            next[i] = next[i] + pow[i] * beta;
            next[i + 1] = next[i + 1] + pow[i] * alpha;
        }
        pow = std::move(next);
    }
    while (!acc.empty() && acc.back().is_zero()) acc.pop_back();
    return Decomposition{std::move(acc)};
}

}  // namespace

TEST_CASE("affine invariance of the normalized root") {
    Rng rng(53);
    int done = 0;
    while (done < 10) {
        std::uniform_int_distribution<std::size_t> du(1, 2);
        NcPoly u = random_monic_u_free(rng, Q, XY, du(rng));
        if (centralizer_root_free(u).u != u) continue;
        Decomposition h = random_h(rng, Q, 2, 3);
        Scalar alpha = testsupport::random_nonzero_scalar(rng, Q);
        Scalar beta = testsupport::random_scalar(rng, Q);

        // both construction routes agree: h(alpha*u + beta) = h'(u)
        NcPoly au_b = u.scaled(alpha) + NcPoly::constant(Q, XY, beta);
        NcPoly lhs = evaluate_decomposition(h, au_b);
        NcPoly rhs = evaluate_decomposition(compose_affine(h, alpha, beta), u);
        CHECK(lhs == rhs);

        // and the normalized root ignores the affine change entirely
        auto r_moved = centralizer_root_free(lhs);
        auto r_plain = centralizer_root_free(evaluate_decomposition(h, u));
        CHECK(r_moved.u == r_plain.u);
        CHECK(r_moved.u == u);
        ++done;
    }
}

TEST_CASE("normalization idempotence") {
    Rng rng(59);
    for (int i = 0; i < 20; ++i) {
        std::uniform_int_distribution<std::size_t> du(1, 3);
        NcPoly u = random_monic_u_free(rng, Q, XY, du(rng));
        Decomposition h = random_h(rng, Q, 2, 2);
        NcPoly f = evaluate_decomposition(h, u);
        auto r = centralizer_root_free(f);
        // already monic with zero constant term; re-normalizing changes nothing
        CHECK(r.u.leading_coeff().is_one());
        CHECK(r.u.constant_term().is_zero());
        NcPoly renorm = r.u + NcPoly::constant(Q, XY, -r.u.constant_term());
        renorm = renorm.scaled(renorm.leading_coeff().inverse());
        CHECK(renorm == r.u);
    }
}
