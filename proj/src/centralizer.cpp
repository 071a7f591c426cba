#include "rank2/centralizer.hpp"

#include <algorithm>
#include <set>

#include "rank2/commutant.hpp"
#include "rank2/linalg.hpp"

namespace rank2 {

namespace {

template <class P>
std::optional<Decomposition> decompose_impl(const P& f, const P& u) {
    if (u.is_constant()) throw ConstantU("decomposition root must be nonconstant");
    if (f.field() != u.field() || f.alphabet() != u.alphabet())
        throw AlgebraMismatch("f and u live in different algebras");

    if (f.is_zero()) return Decomposition{{}};
    if (f.is_constant()) return Decomposition{{f.constant_term()}};

    const std::size_t df = *f.degree();
    const std::size_t du = *u.degree();
    if (df % du != 0) return std::nullopt;
    const std::size_t m = df / du;

    std::vector<P> powers;
    powers.reserve(m + 1);
    powers.push_back(P::one(f.field(), f.alphabet()));
    for (std::size_t k = 1; k <= m; ++k) powers.push_back(powers.back() * u);

    // Row space: monomials occurring in f or any power of u. Rows absent from
    // all of them are identically zero on both sides and impose nothing.
    using Key = typename P::TermMap::key_type;
    using Less = typename P::TermMap::key_compare;
    std::set<Key, Less> support;
    for (const auto& [k, c] : f.terms()) support.insert(k);
    for (const P& p : powers)
        for (const auto& [k, c] : p.terms()) support.insert(k);

    MatrixK a(f.field(), support.size(), m + 1);
    std::vector<Scalar> b;
    b.reserve(support.size());
    std::size_t r = 0;
    for (const auto& key : support) {
        for (std::size_t k = 0; k <= m; ++k) a.at(r, k) = powers[k].coefficient(key);
        b.push_back(f.coefficient(key));
        ++r;
    }
    auto x = solve(a, b);
    if (!x) return std::nullopt;
    return Decomposition{std::move(*x)};
}

template <class P>
P evaluate_impl(const Decomposition& h, const P& u) {
    P acc = P::zero(u.field(), u.alphabet());
    for (std::size_t k = h.coefficients.size(); k-- > 0;) {
        acc = acc * u;
        acc = acc + P::constant(u.field(), u.alphabet(), h.coefficients[k]);
    }
    return acc;
}

// Select and normalize the minimal-positive-degree kernel element. Basis
// positions are sorted by degree first, and every canonical vector has its
// last nonzero coordinate at its own free column, so the vector at the
// smallest nonzero free column realizes the minimal positive degree present
// in the kernel. It is normalized at that coordinate, which need not be the
// deglex-leading one, hence the explicit rescale below.
template <class P, class Rebuild>
P root_from_kernel(const CommutantBasis& basis, const Rebuild& rebuild) {
    for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
        if (basis.free_cols[i] == 0) continue;
        P u = rebuild(basis.vectors[i]);
        u = u + P::constant(u.field(), u.alphabet(), -u.constant_term());
        if (!u.leading_coeff().is_one()) u = u.scaled(u.leading_coeff().inverse());
        return u;
    }
    throw InternalVerificationFailure(
        "centralizer kernel contains no nonconstant element; the input itself should be one");
}

}  // namespace

std::optional<Decomposition> decompose(const NcPoly& f, const NcPoly& u) {
    return decompose_impl(f, u);
}
std::optional<Decomposition> decompose(const CPoly& f, const CPoly& u) {
    return decompose_impl(f, u);
}

NcPoly evaluate_decomposition(const Decomposition& h, const NcPoly& u) {
    return evaluate_impl(h, u);
}
CPoly evaluate_decomposition(const Decomposition& h, const CPoly& u) {
    return evaluate_impl(h, u);
}

FreeRootResult centralizer_root_free(const NcPoly& f) {
    if (f.is_constant()) throw ConstantInput("centralizer root requires a nonconstant input");
    const std::size_t d = *f.degree();
    CommutantBasis basis = commutant_basis(f, d);
    NcPoly u = root_from_kernel<NcPoly>(basis, [&](const std::vector<Scalar>& v) {
        return NcPoly::from_vector(f.field(), f.alphabet(), v, d);
    });
    if (!decompose(f, u))
        throw InternalVerificationFailure("input does not decompose over its centralizer root");
    return FreeRootResult{std::move(u), RootNormalization{}, basis.dimension()};
}

CommRootResult centralizer_root_comm(const CPoly& f) {
    if (f.field().characteristic() != 0)
        throw CharacteristicNotZero("commutative centralizer roots need characteristic zero");
    if (f.is_constant()) throw ConstantInput("centralizer root requires a nonconstant input");
    const std::size_t d = *f.degree();
    CommutantBasis basis = commutant_basis(f, d);
    CPoly u = root_from_kernel<CPoly>(basis, [&](const std::vector<Scalar>& v) {
        return CPoly::from_vector(f.field(), f.alphabet(), v, d);
    });
    if (!decompose(f, u))
        throw InternalVerificationFailure("input does not decompose over its centralizer root");
    return CommRootResult{std::move(u), RootNormalization{}, basis.dimension()};
}

}  // namespace rank2
