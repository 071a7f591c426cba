#include "rank2/dependence.hpp"

#include <set>

namespace rank2 {

namespace {

template <class P>
void require_same_algebra(const P& f, const P& g) {
    if (f.field() != g.field() || f.alphabet() != g.alphabet())
        throw AlgebraMismatch("f and g live in different algebras");
}

Alphabet st_alphabet() { return Alphabet({"s", "t"}); }

// Monomial box (i <= a, j <= b) in the basis order of K[s,t]: total degree
// ascending, higher s-power first within a degree.
std::vector<std::pair<std::uint32_t, std::uint32_t>> box_monomials(std::size_t a, std::size_t b) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> box;
    for (std::size_t deg = 0; deg <= a + b; ++deg)
        for (std::size_t i = std::min(deg, a) + 1; i-- > 0;) {
            std::size_t j = deg - i;
            if (j > b) continue;
            box.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
        }
    return box;
}

template <class P>
std::optional<Annihilator> oracle_impl(const P& f, const P& g, std::size_t a, std::size_t b,
                                       std::size_t entry_cap) {
    require_same_algebra(f, g);
    const FieldSpec& field = f.field();

    auto box = box_monomials(a, b);

    std::vector<P> f_pow{P::one(field, f.alphabet())};
    for (std::size_t i = 1; i <= a; ++i) f_pow.push_back(f_pow.back() * f);
    std::vector<P> g_pow{P::one(field, f.alphabet())};
    for (std::size_t j = 1; j <= b; ++j) g_pow.push_back(g_pow.back() * g);

    std::vector<P> products;
    products.reserve(box.size());
    for (auto [i, j] : box) products.push_back(f_pow[i] * g_pow[j]);

    using Key = typename P::TermMap::key_type;
    using Less = typename P::TermMap::key_compare;
    std::set<Key, Less> support;
    for (const P& p : products)
        for (const auto& [k, c] : p.terms()) support.insert(k);

    MatrixK m(field, support.size(), box.size(), entry_cap);
    std::size_t r = 0;
    for (const auto& key : support) {
        for (std::size_t c = 0; c < products.size(); ++c) m.at(r, c) = products[c].coefficient(key);
        ++r;
    }

    auto kernel = kernel_basis(m);
    if (kernel.empty()) return std::nullopt;

    CPoly p(field, st_alphabet());
    for (std::size_t c = 0; c < box.size(); ++c)
        p.add_term(ExpVec({box[c].first, box[c].second}), kernel.front()[c]);
    return Annihilator{std::move(p), a, b};
}

template <class P>
P apply_impl(const CPoly& p, const P& f, const P& g) {
    require_same_algebra(f, g);
    P acc = P::zero(f.field(), f.alphabet());
    for (const auto& [e, c] : p.terms()) {
        P term = P::constant(f.field(), f.alphabet(), c);
        term = term * f.power(e[0]);
        term = term * g.power(e[1]);
        acc = acc + term;
    }
    return acc;
}

}  // namespace

FreeDependenceVerdict dep_free(const NcPoly& f, const NcPoly& g) {
    require_same_algebra(f, g);
    NcPoly c = commutator(f, g);
    bool dep = c.is_zero();
    return FreeDependenceVerdict{dep, std::move(c)};
}

CommDependenceVerdict dep_comm(const CPoly& f, const CPoly& g) {
    require_same_algebra(f, g);
    if (f.field().characteristic() != 0)
        throw CharacteristicNotZero("the Jacobian criterion requires characteristic zero");
    std::vector<CPoly> ws;
    bool dep = true;
    const std::size_t n = f.alphabet().size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            ws.push_back(jacobian_det(f, g, i, j));
            if (!ws.back().is_zero()) dep = false;
        }
    return CommDependenceVerdict{dep, std::move(ws)};
}

std::optional<Annihilator> annihilator_oracle(const NcPoly& f, const NcPoly& g, std::size_t a,
                                              std::size_t b, std::size_t entry_cap) {
    require_same_algebra(f, g);
    if (!commutator(f, g).is_zero())
        throw NonCommutingPair("free-case annihilator search requires [f,g] = 0");
    return oracle_impl(f, g, a, b, entry_cap);
}

std::optional<Annihilator> annihilator_oracle(const CPoly& f, const CPoly& g, std::size_t a,
                                              std::size_t b, std::size_t entry_cap) {
    return oracle_impl(f, g, a, b, entry_cap);
}

NcPoly annihilator_apply(const CPoly& p, const NcPoly& f, const NcPoly& g) {
    return apply_impl(p, f, g);
}
CPoly annihilator_apply(const CPoly& p, const CPoly& f, const CPoly& g) {
    return apply_impl(p, f, g);
}

}  // namespace rank2
