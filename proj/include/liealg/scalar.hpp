#ifndef LIEALG_SCALAR_HPP
#define LIEALG_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace liealg {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Coefficient domain: the rationals, a prime field F_p, or (bracket-only)
/// a residue ring Z/nZ with composite n.
class FieldDesc {
public:
    enum class Kind { Rationals, PrimeField, ResidueRing };

    /// Q.
    FieldDesc() = default;

    static FieldDesc rationals() { return FieldDesc{}; }
    /// Throws InvalidInput unless p is prime.
    static FieldDesc prime(std::uint64_t p);
    /// Z/nZ for n >= 2; returns the prime field when n is prime.
    static FieldDesc residues(std::uint64_t n);

    Kind kind() const { return kind_; }
    /// Modulus, 0 for Q.
    std::uint64_t modulus() const { return modulus_; }
    bool is_field() const { return kind_ != Kind::ResidueRing; }
    bool is_rationals() const { return kind_ == Kind::Rationals; }

    /// "Q", "F7" or "Z/6".
    std::string name() const;

    friend bool operator==(const FieldDesc&, const FieldDesc&) = default;

private:
    FieldDesc(Kind k, std::uint64_t m) : kind_(k), modulus_(m) {}

    Kind kind_ = Kind::Rationals;
    std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact element of a FieldDesc. Rationals are kept in lowest terms with a
/// positive denominator, residues in [0, modulus).
class Scalar {
public:
    /// Zero of Q.
    Scalar() = default;
    Scalar(const FieldDesc& field, std::int64_t value);
    Scalar(const FieldDesc& field, const Rational& value);
    Scalar(const FieldDesc& field, std::int64_t num, std::int64_t den);

    static Scalar zero(const FieldDesc& field) { return Scalar(field, 0); }
    static Scalar one(const FieldDesc& field) { return Scalar(field, 1); }

    /// Parses the canonical text form (see to_string). Throws InvalidInput on
    /// anything that is not canonical.
    static Scalar parse(const FieldDesc& field, std::string_view text);

    const FieldDesc& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Rational value; only valid over Q.
    const Rational& rational() const;
    /// Residue in [0, modulus); only valid over F_p or Z/n.
    std::uint64_t residue() const;

    /// Canonical text: "-3/4", "5", "0" over Q; decimal residue otherwise.
    std::string to_string() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    /// Throws Error on division by zero or by a non-unit.
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Same field and same value.
    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    void check_same(const Scalar& o) const;

    FieldDesc field_;
    Rational q_;
    std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace liealg

#endif // LIEALG_SCALAR_HPP
