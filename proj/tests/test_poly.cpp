#include <random>

#include "doctest.h"
#include "rbo/poly.hpp"

using namespace rbo;

namespace {

QPoly c(int i, int j) { return QPoly::variable(VariableId::coeff(i, j)); }
QPoly par(const char* name) { return QPoly::variable(VariableId::param(name)); }
QPoly num(long long v) { return QPoly::constant(Rational(v)); }

QPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-3, 3), idx(1, 2), exp(0, 2), terms(0, 4);
    QPoly f;
    for (int t = terms(rng); t-- > 0;) {
        Monomial m;
        for (int k = 0; k < 2; ++k)
            if (int e = exp(rng)) m = m * Monomial(VariableId::coeff(idx(rng), idx(rng)), e);
        if (int e = exp(rng)) m = m * Monomial(VariableId::param("a"), e);
        f.add_term(m, Rational(coef(rng)));
    }
    return f;
}

}  // namespace

TEST_CASE("canonical form is independent of construction order") {
    const QPoly lhs = (c(1, 1) + c(1, 2)).pow(2) - num(2) * c(1, 1) * (c(1, 1) + c(1, 2));
    const QPoly rhs = c(1, 2) * c(1, 2) - c(1, 1) * c(1, 1);
    CHECK(lhs == rhs);
    CHECK(lhs.to_string() == "-c11^2 + c12^2");
    CHECK((c(1, 2) * c(1, 1)).to_string() == "c11*c12");
    CHECK((par("b") * c(2, 1) + par("a")).to_string() == "c21*b + a");
    CHECK((c(1, 1) - c(1, 1)).is_zero());
    CHECK(QPoly().degree() == -1);
    CHECK((c(1, 1) * par("a") * par("a")).degree() == 3);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const QPoly f = random_poly(rng), g = random_poly(rng), h = random_poly(rng);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f + g) + h == f + (g + h));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f - f == QPoly());
        CHECK(f * num(1) == f);
        if (!g.is_zero()) {
            auto q = (f * g).divide_exact(g);
            REQUIRE(q.has_value());
            CHECK(*q == f);
        }
    }
}

TEST_CASE("exact division") {
    CHECK_FALSE((c(1, 1) + num(1)).divide_exact(c(1, 2)).has_value());
    CHECK(*(par("a") * par("a") - par("b") * par("b")).divide_exact(par("a") - par("b")) == par("a") + par("b"));
    CHECK_THROWS_AS(c(1, 1).divide_exact(QPoly()), DivisionByZero);
}

TEST_CASE("fields do not mix") {
    const PPoly x7 = PPoly::variable(VariableId::coeff(1, 1), PrimeField{7});
    const PPoly x11 = PPoly::variable(VariableId::coeff(1, 1), PrimeField{11});
    CHECK_THROWS_AS(x7 + x11, FieldMismatch);
    CHECK_FALSE(PPoly(PrimeField{7}) == PPoly(PrimeField{11}));
    CHECK(reduce_modp(num(-1) * c(1, 1) + QPoly::constant(Rational(1, 2)), 7).to_string() == "6*c11 + 4");
    CHECK_THROWS_AS(reduce_modp(QPoly::constant(Rational(1, 7)), 7), DivisionByZero);
}

TEST_CASE("parser") {
    const auto f = parse_polynomial("2(a-b) - c12^2*c11 + 3");
    CHECK(f == num(2) * (par("a") - par("b")) - c(1, 2) * c(1, 2) * c(1, 1) + num(3));
    CHECK(parse_polynomial("-(b+c)^2") == -(par("b") + par("c")).pow(2));
    const auto r = parse_rational_function("a*c/F", {"F"});
    CHECK(r.denominator() == QPoly::variable(VariableId::aux("F")));
    CHECK(classify_identifier("c23", {}) == VariableId::coeff(2, 3));
    CHECK(classify_identifier("s", {"s"}) == VariableId::aux("s"));
    CHECK(classify_identifier("e", {"s"}) == VariableId::param("e"));
    CHECK_THROWS_AS(parse_polynomial("a/b"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("(a+"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("a^-1"), ParseError);
    CHECK_THROWS_AS(parse_rational_function("a/0"), DivisionByZero);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const QPoly g = random_poly(rng);
        CHECK(parse_polynomial(g.to_string()) == g);
        CHECK(poly_from_json(poly_to_json(g)) == g);
    }
}

TEST_CASE("rational functions") {
    const QRatFun a = parse_rational_function("1/b"), b = parse_rational_function("1/b^2");
    const QRatFun s = a + b;
    CHECK(s.denominator() == par("b").pow(2));  // lcm of monomial denominators
    CHECK(s.numerator() == par("b") + num(1));
    CHECK((a * b).denominator() == par("b").pow(3));
    CHECK_THROWS_AS(a / QRatFun(QPoly()), DivisionByZero);
}

TEST_CASE("reduction modulo aux relations") {
    const VariableId s = VariableId::aux("s");
    const AlgebraicRelation<Rational> rel{s, -par("a") * par("b")};
    const QPoly sv = QPoly::variable(s);
    CHECK(reduce_mod_relations(sv * sv, {rel}) == -par("a") * par("b"));
    CHECK(reduce_mod_relations(sv.pow(3) + sv, {rel}) == sv * (num(1) - par("a") * par("b")));
    CHECK(reduce_mod_relations(sv * sv + par("a") * par("b"), {rel}).is_zero());
}

TEST_CASE("substitution then evaluation equals evaluation at the composed point") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> d(-5, 5);
    const QPoly f = parse_polynomial("c11^2*c12 - 3*c21*c22 + c12 + a");
    for (int trial = 0; trial < 50; ++trial) {
        const int bv = d(rng);
        const Rational a(d(rng)), b(bv == 0 ? 1 : bv);
        Bindings<Rational> bind;
        bind[VariableId::coeff(1, 1)] = parse_rational_function("a+b");
        bind[VariableId::coeff(1, 2)] = parse_rational_function("a/b");
        bind[VariableId::coeff(2, 1)] = parse_rational_function("b");
        bind[VariableId::coeff(2, 2)] = parse_rational_function("-a^2");
        const QRatFun r = substitute(f, bind);
        std::map<VariableId, Rational> ab{{VariableId::param("a"), a}, {VariableId::param("b"), b}};
        const Rational composed = evaluate(r.numerator(), ab) / evaluate(r.denominator(), ab);
        std::map<VariableId, Rational> point{{VariableId::coeff(1, 1), a + b},
                                             {VariableId::coeff(1, 2), a / b},
                                             {VariableId::coeff(2, 1), b},
                                             {VariableId::coeff(2, 2), -(a * a)},
                                             {VariableId::param("a"), a}};
        CHECK(composed == evaluate(f, point));
    }
    CHECK_THROWS_AS(substitute(f, Bindings<Rational>{}), UnboundVariable);
    CHECK_THROWS_AS(evaluate(f, std::map<VariableId, Rational>{}), UnboundVariable);
}
