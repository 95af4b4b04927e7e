#pragma once

// Exact scalars: arbitrary-precision rationals and elements of F_p.

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rbo/error.hpp"

namespace rbo {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always reduced with a positive denominator.
/// Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "n", "-n", "n/d" (d nonzero). Surrounding whitespace allowed.
    static Rational parse(std::string_view text);

    BigInt numerator() const;
    BigInt denominator() const;

    bool is_zero() const { return q_.is_zero(); }
    bool is_one() const { return q_ == 1; }
    int sign() const { return q_.sign(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);
    Rational inv() const;

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// Image in F_p, or nullopt when p divides the denominator.
    std::optional<std::uint32_t> mod(std::uint32_t p) const;

    /// "num/den", den omitted when 1.
    std::string to_string() const;

private:
    boost::multiprecision::cpp_rational q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

bool is_prime(std::uint64_t n);

/// Primes accepted by the finite-field oracle. Characteristics 2, 3 and 5 are
/// excluded because the hand eliminations behind the families divide by them.
inline constexpr std::uint32_t kOraclePrimes[] = {7, 11, 13};
bool is_oracle_prime(std::uint64_t p);
/// Throws UnsupportedPrime unless is_oracle_prime(p).
void require_oracle_prime(std::uint64_t p);

/// Element of the prime field F_p. The modulus travels with the value; mixing
/// moduli raises ModulusMismatch.
class ModP {
public:
    ModP(long long value, std::uint32_t p);

    std::uint32_t value() const { return value_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    ModP operator-() const;
    ModP& operator+=(const ModP& o);
    ModP& operator-=(const ModP& o);
    ModP& operator*=(const ModP& o);
    ModP& operator/=(const ModP& o);
    ModP inv() const;
    ModP pow(std::uint64_t e) const;

    friend ModP operator+(ModP a, const ModP& b) { return a += b; }
    friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
    friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
    friend ModP operator/(ModP a, const ModP& b) { return a /= b; }

    friend bool operator==(const ModP& a, const ModP& b) = default;
    friend auto operator<=>(const ModP& a, const ModP& b) = default;

    std::string to_string() const { return std::to_string(value_); }

private:
    void check(const ModP& o) const;

    std::uint32_t value_;
    std::uint32_t p_;
};

std::ostream& operator<<(std::ostream& os, const ModP& x);

/// All s in F_p with s^2 = q, ascending. Empty for nonresidues, {0} for q = 0.
/// Full residue scan; intended for the small primes used by the oracle.
std::vector<ModP> sqrt_modp(const ModP& q);

// Field descriptors: Polynomial<K> carries one so that zero polynomials over
// different prime fields still compare as different fields.

struct RationalField {
    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational from(const Rational& r) const { return r; }
    std::string name() const { return "Q"; }
    friend bool operator==(const RationalField&, const RationalField&) = default;
};

struct PrimeField {
    std::uint32_t p = 0;

    ModP zero() const { return ModP(0, p); }
    ModP one() const { return ModP(1, p); }
    /// Reduction of a rational whose denominator is prime to p.
    ModP from(const Rational& r) const;
    std::string name() const { return "F_" + std::to_string(p); }
    friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

inline RationalField field_of(const Rational&) { return {}; }
inline PrimeField field_of(const ModP& x) { return {x.modulus()}; }

template <class K>
struct FieldFor;
template <>
struct FieldFor<Rational> {
    using type = RationalField;
};
template <>
struct FieldFor<ModP> {
    using type = PrimeField;
};
template <class K>
using FieldFor_t = typename FieldFor<K>::type;

}  // namespace rbo
