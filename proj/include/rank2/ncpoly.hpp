#pragma once

// Sparse polynomials of the free associative algebra K<x_1,...,x_n>.
// Canonical form: no zero coefficients are stored; term maps are ordered by
// deglex, so structural equality is polynomial equality.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rank2/scalar.hpp"
#include "rank2/word.hpp"

namespace rank2 {

class NcPoly {
public:
    using TermMap = std::map<Word, Scalar, WordDeglexLess>;

    NcPoly(FieldSpec field, Alphabet alphabet)
        : field_(std::move(field)), alphabet_(std::move(alphabet)) {}

    static NcPoly zero(const FieldSpec& f, const Alphabet& a) { return NcPoly(f, a); }
    static NcPoly constant(const FieldSpec& f, const Alphabet& a, const Scalar& c);
    static NcPoly one(const FieldSpec& f, const Alphabet& a) { return constant(f, a, Scalar::one(f)); }
    static NcPoly generator(const FieldSpec& f, const Alphabet& a, std::size_t index);
    static NcPoly monomial(const FieldSpec& f, const Alphabet& a, Word w, const Scalar& c);

    const FieldSpec& field() const noexcept { return field_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const TermMap& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;          // zero or a single empty-word term
    Scalar constant_term() const;               // coefficient of the empty word
    Scalar coefficient(const Word& w) const;    // zero if absent

    // nullopt is the degree of the zero polynomial ("minus infinity").
    std::optional<std::size_t> degree() const noexcept;
    const Word& leading_word() const;    // deglex-maximal term; poly must be nonzero
    const Scalar& leading_coeff() const;

    NcPoly operator+(const NcPoly& o) const;
    NcPoly operator-(const NcPoly& o) const;
    NcPoly operator-() const;
    NcPoly operator*(const NcPoly& o) const;
    NcPoly scaled(const Scalar& c) const;
    NcPoly power(std::size_t k) const;

    bool operator==(const NcPoly& o) const noexcept;
    bool operator!=(const NcPoly& o) const noexcept { return !(*this == o); }

    // Adds c at word w, dropping the term if the sum cancels.
    void add_term(const Word& w, const Scalar& c);

    std::vector<Scalar> coefficient_vector(std::size_t degree_bound,
                                           std::size_t cap = kDefaultBasisCap) const;
    static NcPoly from_vector(const FieldSpec& f, const Alphabet& a,
                              const std::vector<Scalar>& coords, std::size_t degree_bound);

private:
    void require_same_algebra(const NcPoly& o) const;

    FieldSpec field_;
    Alphabet alphabet_;
    TermMap terms_;
};

NcPoly commutator(const NcPoly& f, const NcPoly& g);  // fg - gf

// The algebra endomorphism sending generator i to images[i]; all images must
// live in one common target algebra over the same field.
NcPoly substitute(const NcPoly& f, const std::vector<NcPoly>& images);

// Convenience: the endomorphism fixing every generator except z -> 0.
NcPoly kill_generator(const NcPoly& f, std::size_t z_index);

struct ZSplit {
    NcPoly u0;  // terms free of the designated generator
    NcPoly u1;  // terms containing it at least once
};

ZSplit z_split(const NcPoly& u, std::size_t z_index);

}  // namespace rank2
