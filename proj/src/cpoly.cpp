#include "rank2/cpoly.hpp"

#include <algorithm>
#include <numeric>

namespace rank2 {

std::size_t ExpVec::total_degree() const noexcept {
    return std::accumulate(exps_.begin(), exps_.end(), std::size_t{0});
}

ExpVec ExpVec::plus(const ExpVec& o) const {
    std::vector<std::uint32_t> out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) out[i] = exps_[i] + o.exps_[i];
    return ExpVec(std::move(out));
}

ExpVec ExpVec::with(std::size_t i, std::uint32_t v) const {
    std::vector<std::uint32_t> out = exps_;
    out.at(i) = v;
    return ExpVec(std::move(out));
}

bool ExpVecDeglexLess::operator()(const ExpVec& a, const ExpVec& b) const noexcept {
    std::size_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(),
                                        b.exponents().begin(), b.exponents().end());
}

namespace {

// Monomials of degree exactly k in n variables, capped.
unsigned __int128 layer_count(std::size_t n, std::size_t k) {
    // C(k+n-1, n-1), computed incrementally
    unsigned __int128 c = 1;
    for (std::size_t i = 1; i < n; ++i) {
        c = c * (k + i) / i;
    }
    return c;
}

}  // namespace

std::size_t monomial_basis_size(std::size_t n_vars, std::size_t degree_bound, std::size_t cap) {
    if (n_vars == 0) return 1;
    unsigned __int128 total = 0;
    for (std::size_t k = 0; k <= degree_bound; ++k) {
        total += layer_count(n_vars, k);
        if (total > cap)
            throw DegreeTooLarge("monomial basis up to degree " + std::to_string(degree_bound) +
                                 " exceeds the enumeration cap");
    }
    return static_cast<std::size_t>(total);
}

std::size_t monomial_basis_index(const ExpVec& e) {
    const std::size_t n = e.size();
    if (n == 0) return 0;
    const std::size_t deg = e.total_degree();
    unsigned __int128 index = 0;
    for (std::size_t k = 0; k < deg; ++k) index += layer_count(n, k);
    // rank within the degree layer, lexicographic descending
    std::size_t rem = deg;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        // monomials whose i-th exponent is larger come first
        for (std::size_t v = rem; v > e[i]; --v) index += layer_count(n - i - 1, rem - v);
        rem -= e[i];
    }
    return static_cast<std::size_t>(index);
}

ExpVec monomial_at_basis_index(std::size_t index, std::size_t n_vars) {
    if (n_vars == 0) return ExpVec();
    unsigned __int128 idx = index;
    std::size_t deg = 0;
    while (idx >= layer_count(n_vars, deg)) {
        idx -= layer_count(n_vars, deg);
        ++deg;
    }
    std::vector<std::uint32_t> exps(n_vars, 0);
    std::size_t rem = deg;
    for (std::size_t i = 0; i + 1 < n_vars; ++i) {
        std::size_t v = rem;
        for (;; --v) {
            unsigned __int128 block = layer_count(n_vars - i - 1, rem - v);
            if (idx < block) break;
            idx -= block;
        }
        exps[i] = static_cast<std::uint32_t>(v);
        rem -= v;
    }
    exps[n_vars - 1] = static_cast<std::uint32_t>(rem);
    return ExpVec(std::move(exps));
}

CPoly CPoly::constant(const FieldSpec& f, const Alphabet& a, const Scalar& c) {
    CPoly p(f, a);
    p.add_term(ExpVec::unit(a.size()), c);
    return p;
}

CPoly CPoly::generator(const FieldSpec& f, const Alphabet& a, std::size_t index) {
    if (index >= a.size()) throw UnknownGenerator("generator index out of range");
    CPoly p(f, a);
    p.add_term(ExpVec::unit(a.size()).with(index, 1), Scalar::one(f));
    return p;
}

CPoly CPoly::monomial(const FieldSpec& f, const Alphabet& a, ExpVec e, const Scalar& c) {
    if (e.size() != a.size()) throw AlgebraMismatch("exponent vector length mismatch");
    CPoly p(f, a);
    p.add_term(e, c);
    return p;
}

bool CPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Scalar CPoly::constant_term() const { return coefficient(ExpVec::unit(alphabet_.size())); }

Scalar CPoly::coefficient(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::optional<std::size_t> CPoly::degree() const noexcept {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.total_degree();
}

const ExpVec& CPoly::leading_monomial() const { return terms_.rbegin()->first; }
const Scalar& CPoly::leading_coeff() const { return terms_.rbegin()->second; }

void CPoly::add_term(const ExpVec& e, const Scalar& c) {
    if (c.is_zero()) return;
    if (c.field() != field_) throw FieldMismatch("coefficient field differs from polynomial field");
    if (e.size() != alphabet_.size()) throw AlgebraMismatch("exponent vector length mismatch");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void CPoly::require_same_algebra(const CPoly& o) const {
    if (field_ != o.field_ || alphabet_ != o.alphabet_)
        throw AlgebraMismatch("operands live in different polynomial rings");
}

CPoly CPoly::operator+(const CPoly& o) const {
    require_same_algebra(o);
    CPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

CPoly CPoly::operator-() const {
    CPoly out(field_, alphabet_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

CPoly CPoly::operator-(const CPoly& o) const { return *this + (-o); }

CPoly CPoly::operator*(const CPoly& o) const {
    require_same_algebra(o);
    CPoly out(field_, alphabet_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) out.add_term(ea.plus(eb), ca * cb);
    return out;
}

CPoly CPoly::scaled(const Scalar& c) const {
    CPoly out(field_, alphabet_);
    if (c.is_zero()) return out;
    for (const auto& [e, coeff] : terms_) out.add_term(e, coeff * c);
    return out;
}

CPoly CPoly::power(std::size_t k) const {
    CPoly out = one(field_, alphabet_);
    for (std::size_t i = 0; i < k; ++i) out = out * *this;
    return out;
}

bool CPoly::operator==(const CPoly& o) const noexcept {
    return field_ == o.field_ && alphabet_ == o.alphabet_ && terms_ == o.terms_;
}

std::vector<Scalar> CPoly::coefficient_vector(std::size_t degree_bound, std::size_t cap) const {
    if (degree() && *degree() > degree_bound)
        throw DegreeTooLarge("polynomial degree exceeds the requested bound");
    std::size_t n = monomial_basis_size(alphabet_.size(), degree_bound, cap);
    std::vector<Scalar> out(n, Scalar::zero(field_));
    for (const auto& [e, c] : terms_) out[monomial_basis_index(e)] = c;
    return out;
}

CPoly CPoly::from_vector(const FieldSpec& f, const Alphabet& a,
                         const std::vector<Scalar>& coords, std::size_t degree_bound) {
    if (coords.size() != monomial_basis_size(a.size(), degree_bound))
        throw DimensionMismatch("coordinate vector length does not match the basis size");
    CPoly out(f, a);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) out.add_term(monomial_at_basis_index(i, a.size()), coords[i]);
    return out;
}

CPoly partial_derivative(const CPoly& f, std::size_t var_index) {
    if (var_index >= f.alphabet().size()) throw UnknownGenerator("variable index out of range");
    CPoly out(f.field(), f.alphabet());
    for (const auto& [e, c] : f.terms()) {
        std::uint32_t k = e[var_index];
        if (k == 0) continue;
        out.add_term(e.with(var_index, k - 1), c * Scalar::of_int(f.field(), k));
    }
    return out;
}

CPoly jacobian_det(const CPoly& f, const CPoly& g, std::size_t i, std::size_t j) {
    if (f.field() != g.field() || f.alphabet() != g.alphabet())
        throw AlgebraMismatch("operands live in different polynomial rings");
    if (i >= j || j >= f.alphabet().size())
        throw BadIndexPair("need variable indices i < j within the alphabet");
    return partial_derivative(f, i) * partial_derivative(g, j) -
           partial_derivative(f, j) * partial_derivative(g, i);
}

CPoly substitute(const CPoly& f, const std::vector<CPoly>& images) {
    if (images.size() != f.alphabet().size())
        throw AlgebraMismatch("one image per variable is required");
    for (const auto& img : images)
        if (img.field() != f.field() || img.alphabet() != images.front().alphabet())
            throw AlgebraMismatch("images must share one target ring over the same field");
    const FieldSpec& field = f.field();
    const Alphabet& target = images.empty() ? f.alphabet() : images.front().alphabet();
    CPoly out(field, target);
    for (const auto& [e, c] : f.terms()) {
        CPoly prod = CPoly::constant(field, target, c);
        for (std::size_t v = 0; v < e.size() && !prod.is_zero(); ++v)
            if (e[v] > 0) prod = prod * images[v].power(e[v]);
        out = out + prod;
    }
    return out;
}

CPoly kill_variable(const CPoly& f, std::size_t z_index) { return z_split(f, z_index).u0; }

CZSplit z_split(const CPoly& u, std::size_t z_index) {
    if (z_index >= u.alphabet().size())
        throw UnknownGenerator("designated variable is not in the alphabet");
    CZSplit out{CPoly(u.field(), u.alphabet()), CPoly(u.field(), u.alphabet())};
    for (const auto& [e, c] : u.terms())
        (e[z_index] > 0 ? out.u1 : out.u0).add_term(e, c);
    return out;
}

}  // namespace rank2
