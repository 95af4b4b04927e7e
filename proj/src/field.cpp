#include "rbo/field.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <utility>

namespace rbo {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
    s = trim(s);
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("not a rational: '" + std::string(whole) + "'");
    BigInt v{std::string(s)};
    return neg ? BigInt(-v) : v;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    // Boost 1.74 rejects a negative denominator here.
    q_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::parse(std::string_view text) {
    const auto t = trim(text);
    const auto slash = t.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(t, text), BigInt(1));
    return Rational(parse_integer(t.substr(0, slash), text), parse_integer(t.substr(slash + 1), text));
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(q_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(q_); }

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}
Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}
Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inv() const { return Rational(1) / *this; }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.q_ < b.q_) return std::strong_ordering::less;
    if (b.q_ < a.q_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::optional<std::uint32_t> Rational::mod(std::uint32_t p) const {
    const BigInt bp(p);
    BigInt num = numerator() % bp;
    if (num < 0) num += bp;
    BigInt den = denominator() % bp;
    if (den == 0) return std::nullopt;
    const ModP n(static_cast<long long>(num), p);
    const ModP d(static_cast<long long>(den), p);
    return (n / d).value();
}

std::string Rational::to_string() const {
    const BigInt d = denominator();
    if (d == 1) return numerator().str();
    return numerator().str() + "/" + d.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_oracle_prime(std::uint64_t p) {
    return std::find(std::begin(kOraclePrimes), std::end(kOraclePrimes), p) != std::end(kOraclePrimes);
}

void require_oracle_prime(std::uint64_t p) {
    if (!is_oracle_prime(p)) throw UnsupportedPrime("prime must be one of 7, 11, 13; got " + std::to_string(p));
}

ModP::ModP(long long value, std::uint32_t p) : p_(p) {
    if (p < 2) throw UnsupportedPrime("modulus must be prime, got " + std::to_string(p));
    long long r = value % static_cast<long long>(p);
    if (r < 0) r += p;
    value_ = static_cast<std::uint32_t>(r);
}

void ModP::check(const ModP& o) const {
    if (p_ != o.p_)
        throw ModulusMismatch("F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
}

ModP ModP::operator-() const { return ModP(value_ == 0 ? 0 : p_ - value_, p_); }

ModP& ModP::operator+=(const ModP& o) {
    check(o);
    value_ = static_cast<std::uint32_t>((std::uint64_t{value_} + o.value_) % p_);
    return *this;
}
ModP& ModP::operator-=(const ModP& o) {
    check(o);
    value_ = static_cast<std::uint32_t>((std::uint64_t{value_} + p_ - o.value_) % p_);
    return *this;
}
ModP& ModP::operator*=(const ModP& o) {
    check(o);
    value_ = static_cast<std::uint32_t>((std::uint64_t{value_} * o.value_) % p_);
    return *this;
}
ModP& ModP::operator/=(const ModP& o) {
    check(o);
    return *this *= o.inv();
}

ModP ModP::pow(std::uint64_t e) const {
    ModP result(1, p_);
    ModP base = *this;
    while (e) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

ModP ModP::inv() const {
    if (value_ == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(p_));
    // Extended Euclid; valid for any modulus coprime to the value.
    long long t = 0, new_t = 1, r = p_, new_r = value_;
    while (new_r != 0) {
        const long long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw DivisionByZero(std::to_string(value_) + " not invertible mod " + std::to_string(p_));
    return ModP(t, p_);
}

std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << x.value(); }

std::vector<ModP> sqrt_modp(const ModP& q) {
    std::vector<ModP> roots;
    const auto p = q.modulus();
    for (std::uint32_t s = 0; s < p; ++s) {
        if ((std::uint64_t{s} * s) % p == q.value()) roots.emplace_back(s, p);
    }
    return roots;
}

ModP PrimeField::from(const Rational& r) const {
    const auto v = r.mod(p);
    if (!v) throw DivisionByZero("denominator of " + r.to_string() + " vanishes mod " + std::to_string(p));
    return ModP(*v, p);
}

}  // namespace rbo
