#include "liealg/scalar.hpp"

#include "liealg/errors.hpp"

#include <charconv>
#include <ostream>

namespace liealg {

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d <= n / d; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldDesc FieldDesc::prime(std::uint64_t p)
{
    if (!is_prime(p))
        throw InvalidInput("prime field requires a prime modulus, got " + std::to_string(p));
    return FieldDesc(Kind::PrimeField, p);
}

FieldDesc FieldDesc::residues(std::uint64_t n)
{
    if (n < 2) throw InvalidInput("residue ring modulus must be at least 2");
    if (is_prime(n)) return FieldDesc(Kind::PrimeField, n);
    return FieldDesc(Kind::ResidueRing, n);
}

std::string FieldDesc::name() const
{
    switch (kind_) {
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "F" + std::to_string(modulus_);
    case Kind::ResidueRing: return "Z/" + std::to_string(modulus_);
    }
    return "?";
}

namespace {

std::uint64_t reduce(const Rational& value, std::uint64_t m)
{
    Integer mod(m);
    Integer num = boost::multiprecision::numerator(value) % mod;
    if (num < 0) num += mod;
    Integer den = boost::multiprecision::denominator(value) % mod;
    auto n = num.convert_to<std::uint64_t>();
    auto d = den.convert_to<std::uint64_t>();
    if (d == 1) return n;
    // invert d modulo m by the extended Euclidean algorithm
    __int128 t = 0, new_t = 1, r = static_cast<__int128>(m), new_r = d;
    while (new_r != 0) {
        __int128 q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw Error("denominator is not invertible modulo " + std::to_string(m));
    if (t < 0) t += m;
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(n) * static_cast<std::uint64_t>(t)) % m);
}

bool is_decimal(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return s.size() == 1 || s.front() != '0';
}

} // namespace

Scalar::Scalar(const FieldDesc& field, std::int64_t value) : field_(field)
{
    if (field_.is_rationals()) {
        q_ = value;
    } else {
        auto m = static_cast<std::int64_t>(field_.modulus());
        std::int64_t r = value % m;
        if (r < 0) r += m;
        r_ = static_cast<std::uint64_t>(r);
    }
}

Scalar::Scalar(const FieldDesc& field, const Rational& value) : field_(field)
{
    if (field_.is_rationals())
        q_ = value;
    else
        r_ = reduce(value, field_.modulus());
}

Scalar::Scalar(const FieldDesc& field, std::int64_t num, std::int64_t den)
    : Scalar(field, [&] {
          if (den == 0) throw Error("zero denominator");
          return Rational(Integer(num), Integer(den));
      }())
{
}

Scalar Scalar::parse(const FieldDesc& field, std::string_view text)
{
    auto bad = [&] { return InvalidInput("non-canonical scalar '" + std::string(text) + "' for field " + field.name()); };
    if (!field.is_rationals()) {
        if (!is_decimal(text)) throw bad();
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || ptr != text.data() + text.size() || v >= field.modulus()) throw bad();
        Scalar s(field, 0);
        s.r_ = v;
        return s;
    }
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    if (!is_decimal(num)) throw bad();
    Integer n{std::string(num)};
    Integer d(1);
    if (slash != std::string_view::npos) {
        std::string_view den = body.substr(slash + 1);
        if (!is_decimal(den) || den == "0" || den == "1") throw bad();
        d = Integer(std::string(den));
        if (boost::multiprecision::gcd(n, d) != 1) throw bad();
    }
    if (n == 0 && (negative || slash != std::string_view::npos)) throw bad();
    Rational q(n, d);
    if (negative) q = -q;
    return Scalar(field, q);
}

bool Scalar::is_zero() const { return field_.is_rationals() ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rationals() ? q_ == 1 : r_ == 1; }

const Rational& Scalar::rational() const
{
    if (!field_.is_rationals()) throw FieldMismatch("rational() requested over " + field_.name());
    return q_;
}

std::uint64_t Scalar::residue() const
{
    if (field_.is_rationals()) throw FieldMismatch("residue() requested over Q");
    return r_;
}

std::string Scalar::to_string() const
{
    if (field_.is_rationals()) return q_.str();
    return std::to_string(r_);
}

void Scalar::check_same(const Scalar& o) const
{
    if (!(field_ == o.field_))
        throw FieldMismatch("scalar field mismatch: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator-() const
{
    Scalar s = *this;
    if (field_.is_rationals())
        s.q_ = -q_;
    else if (r_ != 0)
        s.r_ = field_.modulus() - r_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    check_same(o);
    if (field_.is_rationals()) {
        q_ += o.q_;
    } else {
        unsigned __int128 s = static_cast<unsigned __int128>(r_) + o.r_;
        r_ = static_cast<std::uint64_t>(s % field_.modulus());
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o)
{
    check_same(o);
    if (field_.is_rationals())
        q_ *= o.q_;
    else
        r_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r_) * o.r_) % field_.modulus());
    return *this;
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw Error("division by zero");
    if (field_.is_rationals()) return Scalar(field_, Rational(1) / q_);
    return Scalar(field_, Rational(Integer(1), Integer(r_)));
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    check_same(o);
    if (field_.is_rationals()) {
        if (o.q_ == 0) throw Error("division by zero");
        q_ /= o.q_;
        return *this;
    }
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_rationals() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

} // namespace liealg
