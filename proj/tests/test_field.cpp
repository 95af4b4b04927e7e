#include <numeric>
#include <random>

#include "doctest.h"
#include "rbo/field.hpp"

using namespace rbo;

namespace {

// Reference reduced fraction on machine integers, independent of Boost.
std::pair<long long, long long> reduced(long long n, long long d) {
    if (d < 0) n = -n, d = -d;
    const long long g = std::gcd(n, d);
    return {n / g, d / g};
}

}  // namespace

TEST_CASE("rational parsing and normal form") {
    CHECK(Rational::parse("6/-4") == Rational(-3, 2));
    CHECK(Rational::parse(" -10/4 ").to_string() == "-5/2");
    CHECK(Rational::parse("7").to_string() == "7");
    CHECK(Rational::parse("0/5").to_string() == "0");
    CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
    CHECK(Rational(3, 4).denominator() == 4);
    CHECK(Rational(-3, 4).numerator() == -3);
}

TEST_CASE("rational arithmetic agrees with machine fractions") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> dist(-40, 40);
    for (int trial = 0; trial < 500; ++trial) {
        long long a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
        if (b == 0) b = 1;
        if (d == 0) d = -1;
        const Rational x(a, b), y(c, d);
        auto [sn, sd] = reduced(a * d + b * c, b * d);
        CHECK(x + y == Rational(sn, sd));
        auto [pn, pd] = reduced(a * c, b * d);
        CHECK(x * y == Rational(pn, pd));
        CHECK(x - x == Rational(0));
        if (c != 0) CHECK((x / y) * y == x);
        CHECK(((x < y) == (static_cast<long double>(a) / b < static_cast<long double>(c) / d)));
    }
    CHECK_THROWS_AS(Rational(0).inv(), DivisionByZero);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
}

TEST_CASE("rational reduction into F_p") {
    CHECK(Rational(1, 2).mod(7) == 4u);
    CHECK(Rational(-1).mod(7) == 6u);
    CHECK(Rational(3, 14).mod(7) == std::nullopt);
    CHECK(PrimeField{7}.from(Rational(-5, 3)) == ModP(-5, 7) / ModP(3, 7));
    CHECK_THROWS_AS(PrimeField{7}.from(Rational(1, 7)), DivisionByZero);
}

TEST_CASE("oracle primes") {
    for (std::uint32_t p : {7u, 11u, 13u}) CHECK_NOTHROW(require_oracle_prime(p));
    for (std::uint32_t p : {2u, 3u, 5u, 9u, 17u}) CHECK_THROWS_AS(require_oracle_prime(p), UnsupportedPrime);
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("F_p is a field") {
    for (std::uint32_t p : kOraclePrimes) {
        for (std::uint32_t a = 0; a < p; ++a) {
            const ModP x(a, p);
            CHECK((x + (-x)).is_zero());
            if (a == 0) {
                CHECK_THROWS_AS(x.inv(), DivisionByZero);
                continue;
            }
            CHECK((x * x.inv()).is_one());
            CHECK(x.pow(p - 1).is_one());  // Fermat
            for (std::uint32_t b = 0; b < p; ++b) {
                const ModP y(b, p);
                CHECK((x * y).value() == (a * b) % p);
                CHECK((x - y + y) == x);
            }
        }
    }
    CHECK(ModP(-1, 7).value() == 6);
    CHECK(ModP(15, 7).value() == 1);
    CHECK_THROWS_AS(ModP(1, 7) + ModP(1, 11), ModulusMismatch);
}

TEST_CASE("square roots mod p") {
    auto values = [](const std::vector<ModP>& v) {
        std::vector<std::uint32_t> out;
        for (const auto& x : v) out.push_back(x.value());
        return out;
    };
    CHECK(values(sqrt_modp(ModP(2, 7))) == std::vector<std::uint32_t>{3, 4});
    CHECK(sqrt_modp(ModP(3, 7)).empty());
    CHECK(values(sqrt_modp(ModP(0, 11))) == std::vector<std::uint32_t>{0});
    // Exactly (p - 1) / 2 nonzero residues, each with two roots.
    for (std::uint32_t p : kOraclePrimes) {
        std::size_t residues = 0;
        for (std::uint32_t q = 1; q < p; ++q) {
            const auto roots = sqrt_modp(ModP(q, p));
            if (roots.empty()) continue;
            ++residues;
            REQUIRE(roots.size() == 2);
            for (const auto& s : roots) CHECK(s * s == ModP(q, p));
            CHECK(roots[0] + roots[1] == ModP(0, p));
        }
        CHECK(residues == (p - 1) / 2);
    }
}
