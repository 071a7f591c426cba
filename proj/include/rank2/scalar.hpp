#pragma once

// Exact coefficient arithmetic over Q and over prime fields GF(p).
// Scalars are immutable canonical values: rationals are always gcd-reduced
// with positive denominator, residues always lie in [0, p).

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "rank2/errors.hpp"

namespace rank2 {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, PrimeField };

class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
    // Throws NonPrimeModulus unless p is prime (trial division; desk-scale moduli).
    static FieldSpec prime_field(std::uint64_t p);

    FieldKind kind() const noexcept { return kind_; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    std::uint64_t characteristic() const noexcept { return modulus_; }
    bool is_rationals() const noexcept { return kind_ == FieldKind::Rationals; }

    bool operator==(const FieldSpec& o) const noexcept {
        return kind_ == o.kind_ && modulus_ == o.modulus_;
    }
    bool operator!=(const FieldSpec& o) const noexcept { return !(*this == o); }

    std::string to_string() const;  // "Q" or "GF(p)"

private:
    FieldSpec(FieldKind k, std::uint64_t m) : kind_(k), modulus_(m) {}
    FieldKind kind_;
    std::uint64_t modulus_;
};

class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()) {}  // zero of Q; containers need this

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar of_int(const FieldSpec& f, long long v);
    static Scalar of_big(const FieldSpec& f, const BigInt& v);
    // num/den as a field element; in GF(p) this is num * den^{-1}.
    static Scalar of_ratio(const FieldSpec& f, const BigInt& num, const BigInt& den);

    const FieldSpec& field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;  // DivisionByZero on zero
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    bool operator==(const Scalar& o) const noexcept;
    bool operator!=(const Scalar& o) const noexcept { return !(*this == o); }
    // Arbitrary total order (field, then value); lets Scalar key ordered containers.
    bool operator<(const Scalar& o) const;

    // Rationals payload; only meaningful when field().is_rationals().
    const BigRat& rational_value() const { return q_; }
    // PrimeField payload; only meaningful for GF(p).
    std::uint64_t residue() const noexcept { return r_; }

    std::string to_string() const;  // "a", "a/b", or decimal residue

private:
    Scalar(const FieldSpec& f, BigRat q) : field_(f), q_(std::move(q)) {}
    Scalar(const FieldSpec& f, std::uint64_t r) : field_(f), r_(r) {}
    void require_same_field(const Scalar& o) const;

    FieldSpec field_;
    BigRat q_;
    std::uint64_t r_ = 0;
};

// Modular helpers shared with the centralizer's kernel search.
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p);  // DivisionByZero if a == 0 (mod p)
bool is_prime_u64(std::uint64_t n);

}  // namespace rank2
