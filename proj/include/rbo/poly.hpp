#pragma once

// Exact multivariate polynomials and unreduced rational functions over a
// field K (Rational or ModP), in three kinds of variables: operator-matrix
// coefficients c_ij, free family parameters, and auxiliary square roots.

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rbo/error.hpp"
#include "rbo/field.hpp"

namespace rbo {

struct VariableId {
    enum class Kind { Coeff = 0, Param = 1, Aux = 2 };

    Kind kind = Kind::Param;
    int i = 0;  // Coeff only, 1-based
    int j = 0;
    std::string name;  // Param / Aux only

    static VariableId coeff(int i, int j) { return {Kind::Coeff, i, j, {}}; }
    static VariableId param(std::string name) { return {Kind::Param, 0, 0, std::move(name)}; }
    static VariableId aux(std::string name) { return {Kind::Aux, 0, 0, std::move(name)}; }

    bool is_coeff() const { return kind == Kind::Coeff; }
    bool is_param() const { return kind == Kind::Param; }
    bool is_aux() const { return kind == Kind::Aux; }

    /// "c12" (or "c10_3" once an index exceeds 9), otherwise the name.
    std::string to_string() const;

    friend bool operator==(const VariableId&, const VariableId&) = default;
    /// Coeff(1,1) < Coeff(1,2) < ... < Params by name < Aux by name.
    friend std::strong_ordering operator<=>(const VariableId& a, const VariableId& b);
};

/// Power product as (variable, exponent > 0) pairs, sorted by variable.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(const VariableId& v, unsigned exp = 1);

    const std::vector<std::pair<VariableId, unsigned>>& factors() const { return factors_; }
    unsigned degree() const;
    unsigned exponent(const VariableId& v) const;
    bool is_one() const { return factors_.empty(); }

    Monomial operator*(const Monomial& o) const;
    /// nullopt unless o divides *this.
    std::optional<Monomial> divide(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    /// Copy with v removed.
    Monomial without(const VariableId& v) const;

    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::pair<VariableId, unsigned>> factors_;
};

/// Graded lexicographic order, descending: higher degree first, then larger
/// exponent on the smallest variable first. Terms are stored and printed in
/// this order, so c11^2 precedes c11*c12 precedes c12^2.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

template <class K>
class Polynomial {
public:
    using Field = FieldFor_t<K>;
    using TermMap = std::map<Monomial, K, GrlexDescending>;

    Polynomial() = default;
    explicit Polynomial(Field f) : field_(f) {}

    static Polynomial constant(const K& c) {
        Polynomial p(field_of(c));
        p.add_term(Monomial{}, c);
        return p;
    }
    static Polynomial variable(const VariableId& v, Field f = {}) {
        Polynomial p(f);
        p.add_term(Monomial(v), f.one());
        return p;
    }
    static Polynomial term(const K& c, const Monomial& m) {
        Polynomial p(field_of(c));
        p.add_term(m, c);
        return p;
    }

    const Field& field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Constant value when the polynomial has degree <= 0.
    std::optional<K> as_constant() const {
        if (terms_.empty()) return field_.zero();
        if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
        return std::nullopt;
    }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
        return d;
    }

    void add_term(const Monomial& m, const K& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::set<VariableId> variables() const {
        std::set<VariableId> vs;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.factors()) vs.insert(v);
        return vs;
    }

    Polynomial operator-() const {
        Polynomial r(field_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        Polynomial r(a.field_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial scaled(const K& s) const {
        Polynomial r(field_);
        for (const auto& [m, c] : terms_) r.add_term(m, c * s);
        return r;
    }
    Polynomial pow(unsigned e) const {
        Polynomial r = constant(field_.one());
        for (unsigned k = 0; k < e; ++k) r *= *this;
        return r;
    }

    /// Exact quotient by g, or nullopt when g does not divide *this.
    std::optional<Polynomial> divide_exact(const Polynomial& g) const {
        check(g);
        if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
        const auto& [lm, lc] = *g.terms_.begin();
        Polynomial rest = *this;
        Polynomial q(field_);
        while (!rest.is_zero()) {
            const auto& [m, c] = *rest.terms_.begin();
            auto qm = m.divide(lm);
            if (!qm) return std::nullopt;
            const K qc = c / lc;
            q.add_term(*qm, qc);
            rest -= g * term(qc, *qm);
        }
        return q;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.field_ == b.field_ && a.terms_ == b.terms_;
    }

    /// Readable form, e.g. "c11^2 + 2*c12*c21 - a*b".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            auto [negative, magnitude] = split_sign(c);
            if (first)
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            first = false;
            if (m.is_one()) {
                out += magnitude;
            } else {
                if (magnitude != "1") out += magnitude + "*";
                out += m.to_string();
            }
        }
        return out;
    }

private:
    void check(const Polynomial& o) const {
        if (!(field_ == o.field_)) throw FieldMismatch(field_.name() + " vs " + o.field_.name());
    }

    static std::pair<bool, std::string> split_sign(const K& c) {
        if constexpr (std::is_same_v<K, Rational>) {
            if (c.sign() < 0) return {true, (-c).to_string()};
            return {false, c.to_string()};
        } else {
            return {false, c.to_string()};
        }
    }

    Field field_{};
    TermMap terms_;
};

using QPoly = Polynomial<Rational>;
using PPoly = Polynomial<ModP>;

/// numerator / denominator, deliberately not reduced to lowest terms.
template <class K>
class RationalFunction {
public:
    using Poly = Polynomial<K>;

    RationalFunction() : num_(), den_(Poly::constant(typename Poly::Field{}.one())) {}
    RationalFunction(Poly num)  // NOLINT(google-explicit-constructor)
        : num_(std::move(num)), den_(Poly::constant(num_.field().one())) {}
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    }

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }
    bool is_polynomial() const { return den_.as_constant().has_value(); }

    /// The polynomial value when the denominator is a constant.
    std::optional<Poly> as_polynomial() const {
        auto c = den_.as_constant();
        if (!c) return std::nullopt;
        return num_.scaled(c->inv());
    }

    RationalFunction operator-() const { return {-num_, den_}; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        if (a.den_.size() == 1 && b.den_.size() == 1) {
            // Monomial denominators: share their lcm instead of the product.
            const auto& [ma, ca] = *a.den_.terms().begin();
            const auto& [mb, cb] = *b.den_.terms().begin();
            const Monomial l = Monomial::lcm(ma, mb);
            const K one = a.num_.field().one();
            Poly na = a.num_ * Poly::term(one / ca, *l.divide(ma));
            Poly nb = b.num_ * Poly::term(one / cb, *l.divide(mb));
            return {na + nb, Poly::term(one, l)};
        }
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.num_.is_zero()) throw DivisionByZero("rational function division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    RationalFunction pow(unsigned e) const { return {num_.pow(e), den_.pow(e)}; }

    std::string to_string() const {
        if (auto p = as_polynomial()) return p->to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    Poly num_;
    Poly den_;
};

using QRatFun = RationalFunction<Rational>;

/// aux^2 = radicand, with the radicand free of Coeff and Aux variables.
template <class K>
struct AlgebraicRelation {
    VariableId aux;
    Polynomial<K> radicand;
};

/// Replaces aux^2 by its radicand until every aux variable has degree <= 1.
/// Relations must name distinct aux variables.
template <class K>
Polynomial<K> reduce_mod_relations(const Polynomial<K>& f, const std::vector<AlgebraicRelation<K>>& rels) {
    Polynomial<K> out(f.field());
    for (const auto& [m, c] : f.terms()) {
        Polynomial<K> t = Polynomial<K>::term(c, Monomial{});
        Monomial rest = m;
        for (const auto& rel : rels) {
            const unsigned e = rest.exponent(rel.aux);
            if (e < 2) continue;
            rest = rest.without(rel.aux);
            if (e % 2) rest = rest * Monomial(rel.aux);
            t *= rel.radicand.pow(e / 2);
        }
        out += t * Polynomial<K>::term(f.field().one(), rest);
    }
    return out;
}

template <class K>
using Bindings = std::map<VariableId, RationalFunction<K>>;

/// Replaces bound variables by their images. Unbound Param/Aux variables are
/// kept; an unbound Coeff variable raises UnboundVariable.
template <class K>
RationalFunction<K> substitute(const Polynomial<K>& f, const Bindings<K>& bindings) {
    const auto field = f.field();
    RationalFunction<K> acc{Polynomial<K>(field)};
    for (const auto& [m, c] : f.terms()) {
        RationalFunction<K> t{Polynomial<K>::term(c, Monomial{})};
        Monomial kept;
        for (const auto& [v, e] : m.factors()) {
            auto it = bindings.find(v);
            if (it == bindings.end()) {
                if (v.is_coeff()) throw UnboundVariable("no binding for " + v.to_string());
                kept = kept * Monomial(v, e);
            } else {
                t = t * it->second.pow(e);
            }
        }
        if (!kept.is_one()) t = t * RationalFunction<K>{Polynomial<K>::term(field.one(), kept)};
        acc = acc + t;
    }
    return acc;
}

/// (numerator, denominator) of r; common factors are not cancelled.
template <class K>
std::pair<Polynomial<K>, Polynomial<K>> clear_denominators(const RationalFunction<K>& r) {
    return {r.numerator(), r.denominator()};
}

template <class K>
K evaluate(const Polynomial<K>& f, const std::map<VariableId, K>& point) {
    K acc = f.field().zero();
    for (const auto& [m, c] : f.terms()) {
        K t = c;
        for (const auto& [v, e] : m.factors()) {
            auto it = point.find(v);
            if (it == point.end()) throw UnboundVariable("no value for " + v.to_string());
            K x = it->second;
            for (unsigned k = 0; k < e; ++k) t *= x;
        }
        acc += t;
    }
    return acc;
}

/// Reduces every coefficient into F_p; throws DivisionByZero when p divides
/// a coefficient denominator.
PPoly reduce_modp(const QPoly& f, std::uint32_t p);

// ---------------------------------------------------------------------------
// Text and JSON forms

/// Identifiers of the form cIJ (or cI_J) name Coeff variables; names listed
/// in `aux_names` are Aux; any other identifier is a Param.
VariableId classify_identifier(std::string_view ident, const std::set<std::string>& aux_names);

/// Parses + - * / ^ (nonnegative integer exponents), parentheses, integers and
/// identifiers. Juxtaposition such as "2(a-b)" multiplies.
QRatFun parse_rational_function(std::string_view text, const std::set<std::string>& aux_names = {});

/// As parse_rational_function, but the denominator must be a nonzero constant.
QPoly parse_polynomial(std::string_view text, const std::set<std::string>& aux_names = {});

nlohmann::json poly_to_json(const QPoly& f);
QPoly poly_from_json(const nlohmann::json& j);

}  // namespace rbo
