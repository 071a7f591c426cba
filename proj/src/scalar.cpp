#include "rank2/scalar.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace rank2 {

namespace {

std::uint64_t reduce_mod(const BigInt& v, std::uint64_t p) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return static_cast<std::uint64_t>(r);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n && d < (1u << 21); ++d)
        if (n % d == 0) return n == d;
    // d*d may overflow only for n near 2^64; the cap above keeps the loop honest
    // for desk-scale moduli and we finish the range explicitly.
    for (std::uint64_t d = (1u << 21) | 1;; d += 2) {
        unsigned __int128 sq = static_cast<unsigned __int128>(d) * d;
        if (sq > n) break;
        if (n % d == 0) return false;
    }
    return true;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw DivisionByZero("no inverse of 0 in GF(" + std::to_string(p) + ")");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::uint64_t r = p, new_r = a;
    while (new_r != 0) {
        std::uint64_t q = r / new_r;
        std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * new_t;
        t = new_t;
        new_t = tmp_t;
        std::uint64_t tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1) throw DivisionByZero("modulus is not prime");
    return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(p)) : static_cast<std::uint64_t>(t);
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p))
        throw NonPrimeModulus("modulus " + std::to_string(p) + " is not prime");
    return FieldSpec(FieldKind::PrimeField, p);
}

std::string FieldSpec::to_string() const {
    return is_rationals() ? "Q" : "GF(" + std::to_string(modulus_) + ")";
}

Scalar Scalar::zero(const FieldSpec& f) {
    return f.is_rationals() ? Scalar(f, BigRat(0)) : Scalar(f, std::uint64_t{0});
}

Scalar Scalar::one(const FieldSpec& f) {
    return f.is_rationals() ? Scalar(f, BigRat(1)) : Scalar(f, std::uint64_t{1} % f.modulus());
}

Scalar Scalar::of_int(const FieldSpec& f, long long v) { return of_big(f, BigInt(v)); }

Scalar Scalar::of_big(const FieldSpec& f, const BigInt& v) {
    if (f.is_rationals()) return Scalar(f, BigRat(v));
    return Scalar(f, reduce_mod(v, f.modulus()));
}

Scalar Scalar::of_ratio(const FieldSpec& f, const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("zero denominator");
    if (f.is_rationals()) return Scalar(f, BigRat(num, den));  // cpp_rational canonicalizes
    std::uint64_t d = reduce_mod(den, f.modulus());
    return Scalar(f, mulmod_u64(reduce_mod(num, f.modulus()), invmod_u64(d, f.modulus()), f.modulus()));
}

bool Scalar::is_zero() const noexcept {
    return field_.is_rationals() ? q_.is_zero() : r_ == 0;
}

bool Scalar::is_one() const noexcept {
    return field_.is_rationals() ? q_ == 1 : r_ == 1 % field_.modulus();
}

void Scalar::require_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw FieldMismatch(field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    if (field_.is_rationals()) return Scalar(field_, q_ + o.q_);
    const std::uint64_t p = field_.modulus();
    unsigned __int128 s = static_cast<unsigned __int128>(r_) + o.r_;
    return Scalar(field_, static_cast<std::uint64_t>(s % p));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    if (field_.is_rationals()) return Scalar(field_, -q_);
    std::uint64_t p = field_.modulus();
    return Scalar(field_, r_ == 0 ? 0 : p - r_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    if (field_.is_rationals()) return Scalar(field_, q_ * o.q_);
    return Scalar(field_, mulmod_u64(r_, o.r_, field_.modulus()));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (field_.is_rationals()) return Scalar(field_, 1 / q_);
    return Scalar(field_, invmod_u64(r_, field_.modulus()));
}

bool Scalar::operator==(const Scalar& o) const noexcept {
    if (field_ != o.field_) return false;
    return field_.is_rationals() ? q_ == o.q_ : r_ == o.r_;
}

bool Scalar::operator<(const Scalar& o) const {
    if (field_.kind() != o.field_.kind()) return field_.kind() < o.field_.kind();
    if (field_.modulus() != o.field_.modulus()) return field_.modulus() < o.field_.modulus();
    return field_.is_rationals() ? q_ < o.q_ : r_ < o.r_;
}

std::string Scalar::to_string() const {
    if (!field_.is_rationals()) return std::to_string(r_);
    const BigInt num = boost::multiprecision::numerator(q_);
    const BigInt den = boost::multiprecision::denominator(q_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace rank2
