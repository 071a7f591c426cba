#pragma once

// Sparse polynomials of the commutative ring K[x_1,...,x_n], with formal
// partial derivatives and the 2x2 Jacobian determinants.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rank2/scalar.hpp"
#include "rank2/word.hpp"

namespace rank2 {

class ExpVec {
public:
    ExpVec() = default;
    explicit ExpVec(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
    static ExpVec unit(std::size_t n_vars) { return ExpVec(std::vector<std::uint32_t>(n_vars, 0)); }

    std::size_t size() const noexcept { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_.at(i); }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
    std::size_t total_degree() const noexcept;
    bool is_unit() const noexcept { return total_degree() == 0; }

    ExpVec plus(const ExpVec& o) const;              // monomial product
    ExpVec with(std::size_t i, std::uint32_t v) const;

    bool operator==(const ExpVec& o) const noexcept { return exps_ == o.exps_; }
    bool operator!=(const ExpVec& o) const noexcept { return !(*this == o); }

private:
    std::vector<std::uint32_t> exps_;
};

// Deglex: total degree first, ties by plain lexicographic comparison of the
// exponent vectors (so x^2 > x*y > y^2 when x precedes y).
struct ExpVecDeglexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const noexcept;
};

// Basis enumeration mirroring the free algebra: total degree ascending, and
// within a degree exponent vectors in lexicographic descending order.
std::size_t monomial_basis_size(std::size_t n_vars, std::size_t degree_bound,
                                std::size_t cap = kDefaultBasisCap);
std::size_t monomial_basis_index(const ExpVec& e);
ExpVec monomial_at_basis_index(std::size_t index, std::size_t n_vars);

class CPoly {
public:
    using TermMap = std::map<ExpVec, Scalar, ExpVecDeglexLess>;

    CPoly(FieldSpec field, Alphabet alphabet)
        : field_(std::move(field)), alphabet_(std::move(alphabet)) {}

    static CPoly zero(const FieldSpec& f, const Alphabet& a) { return CPoly(f, a); }
    static CPoly constant(const FieldSpec& f, const Alphabet& a, const Scalar& c);
    static CPoly one(const FieldSpec& f, const Alphabet& a) { return constant(f, a, Scalar::one(f)); }
    static CPoly generator(const FieldSpec& f, const Alphabet& a, std::size_t index);
    static CPoly monomial(const FieldSpec& f, const Alphabet& a, ExpVec e, const Scalar& c);

    const FieldSpec& field() const noexcept { return field_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const TermMap& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    Scalar constant_term() const;
    Scalar coefficient(const ExpVec& e) const;

    std::optional<std::size_t> degree() const noexcept;  // nullopt for the zero polynomial
    const ExpVec& leading_monomial() const;
    const Scalar& leading_coeff() const;

    CPoly operator+(const CPoly& o) const;
    CPoly operator-(const CPoly& o) const;
    CPoly operator-() const;
    CPoly operator*(const CPoly& o) const;
    CPoly scaled(const Scalar& c) const;
    CPoly power(std::size_t k) const;

    bool operator==(const CPoly& o) const noexcept;
    bool operator!=(const CPoly& o) const noexcept { return !(*this == o); }

    void add_term(const ExpVec& e, const Scalar& c);

    std::vector<Scalar> coefficient_vector(std::size_t degree_bound,
                                           std::size_t cap = kDefaultBasisCap) const;
    static CPoly from_vector(const FieldSpec& f, const Alphabet& a,
                             const std::vector<Scalar>& coords, std::size_t degree_bound);

private:
    void require_same_algebra(const CPoly& o) const;

    FieldSpec field_;
    Alphabet alphabet_;
    TermMap terms_;
};

CPoly partial_derivative(const CPoly& f, std::size_t var_index);

// J_{x_i,x_j}(f,g) = df/dx_i dg/dx_j - df/dx_j dg/dx_i, for i < j.
CPoly jacobian_det(const CPoly& f, const CPoly& g, std::size_t i, std::size_t j);

CPoly substitute(const CPoly& f, const std::vector<CPoly>& images);
CPoly kill_variable(const CPoly& f, std::size_t z_index);  // z -> 0

struct CZSplit {
    CPoly u0;  // terms with zero exponent on the designated variable
    CPoly u1;
};

CZSplit z_split(const CPoly& u, std::size_t z_index);

}  // namespace rank2
