#include "rank2/ncpoly.hpp"

namespace rank2 {

NcPoly NcPoly::constant(const FieldSpec& f, const Alphabet& a, const Scalar& c) {
    NcPoly p(f, a);
    p.add_term(Word::unit(), c);
    return p;
}

NcPoly NcPoly::generator(const FieldSpec& f, const Alphabet& a, std::size_t index) {
    if (index >= a.size()) throw UnknownGenerator("generator index out of range");
    NcPoly p(f, a);
    p.add_term(Word::single(static_cast<std::uint32_t>(index)), Scalar::one(f));
    return p;
}

NcPoly NcPoly::monomial(const FieldSpec& f, const Alphabet& a, Word w, const Scalar& c) {
    NcPoly p(f, a);
    p.add_term(w, c);
    return p;
}

bool NcPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar NcPoly::constant_term() const { return coefficient(Word::unit()); }

Scalar NcPoly::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::optional<std::size_t> NcPoly::degree() const noexcept {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
}

const Word& NcPoly::leading_word() const { return terms_.rbegin()->first; }
const Scalar& NcPoly::leading_coeff() const { return terms_.rbegin()->second; }

void NcPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    if (c.field() != field_) throw FieldMismatch("coefficient field differs from polynomial field");
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void NcPoly::require_same_algebra(const NcPoly& o) const {
    if (field_ != o.field_ || alphabet_ != o.alphabet_)
        throw AlgebraMismatch("operands live in different free algebras");
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
    require_same_algebra(o);
    NcPoly out = *this;
    for (const auto& [w, c] : o.terms_) out.add_term(w, c);
    return out;
}

NcPoly NcPoly::operator-() const {
    NcPoly out(field_, alphabet_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

NcPoly NcPoly::operator-(const NcPoly& o) const { return *this + (-o); }

NcPoly NcPoly::operator*(const NcPoly& o) const {
    require_same_algebra(o);
    NcPoly out(field_, alphabet_);
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) out.add_term(wa.concat(wb), ca * cb);
    return out;
}

NcPoly NcPoly::scaled(const Scalar& c) const {
    NcPoly out(field_, alphabet_);
    if (c.is_zero()) return out;
    for (const auto& [w, coeff] : terms_) out.add_term(w, coeff * c);
    return out;
}

NcPoly NcPoly::power(std::size_t k) const {
    NcPoly out = one(field_, alphabet_);
    for (std::size_t i = 0; i < k; ++i) out = out * *this;
    return out;
}

bool NcPoly::operator==(const NcPoly& o) const noexcept {
    return field_ == o.field_ && alphabet_ == o.alphabet_ && terms_ == o.terms_;
}

std::vector<Scalar> NcPoly::coefficient_vector(std::size_t degree_bound, std::size_t cap) const {
    if (degree() && *degree() > degree_bound)
        throw DegreeTooLarge("polynomial degree exceeds the requested bound");
    std::size_t n = word_basis_size(alphabet_.size(), degree_bound, cap);
    std::vector<Scalar> out(n, Scalar::zero(field_));
    for (const auto& [w, c] : terms_) out[word_basis_index(w, alphabet_.size())] = c;
    return out;
}

NcPoly NcPoly::from_vector(const FieldSpec& f, const Alphabet& a,
                           const std::vector<Scalar>& coords, std::size_t degree_bound) {
    if (coords.size() != word_basis_size(a.size(), degree_bound))
        throw DimensionMismatch("coordinate vector length does not match the basis size");
    NcPoly out(f, a);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) out.add_term(word_at_basis_index(i, a.size()), coords[i]);
    return out;
}

NcPoly commutator(const NcPoly& f, const NcPoly& g) { return f * g - g * f; }

NcPoly substitute(const NcPoly& f, const std::vector<NcPoly>& images) {
    if (images.size() != f.alphabet().size())
        throw AlgebraMismatch("one image per generator is required");
    for (const auto& img : images)
        if (img.field() != f.field() || img.alphabet() != images.front().alphabet())
            throw AlgebraMismatch("images must share one target algebra over the same field");
    const FieldSpec& field = f.field();
    const Alphabet& target =
        images.empty() ? f.alphabet() : images.front().alphabet();
    NcPoly out(field, target);
    for (const auto& [w, c] : f.terms()) {
        NcPoly prod = NcPoly::constant(field, target, c);
        for (std::uint32_t letter : w.letters()) {
            prod = prod * images[letter];
            if (prod.is_zero()) break;
        }
        out = out + prod;
    }
    return out;
}

NcPoly kill_generator(const NcPoly& f, std::size_t z_index) {
    return z_split(f, z_index).u0;
}

ZSplit z_split(const NcPoly& u, std::size_t z_index) {
    if (z_index >= u.alphabet().size())
        throw UnknownGenerator("designated generator is not in the alphabet");
    ZSplit out{NcPoly(u.field(), u.alphabet()), NcPoly(u.field(), u.alphabet())};
    for (const auto& [w, c] : u.terms())
        (w.contains(static_cast<std::uint32_t>(z_index)) ? out.u1 : out.u0).add_term(w, c);
    return out;
}

}  // namespace rank2
