#include "rbo/poly.hpp"

#include <algorithm>
#include <cctype>

namespace rbo {

std::string VariableId::to_string() const {
    if (kind != Kind::Coeff) return name;
    if (i < 10 && j < 10) return "c" + std::to_string(i) + std::to_string(j);
    return "c" + std::to_string(i) + "_" + std::to_string(j);
}

std::strong_ordering operator<=>(const VariableId& a, const VariableId& b) {
    if (auto c = static_cast<int>(a.kind) <=> static_cast<int>(b.kind); c != 0) return c;
    if (a.kind == VariableId::Kind::Coeff) {
        if (auto c = a.i <=> b.i; c != 0) return c;
        return a.j <=> b.j;
    }
    return a.name <=> b.name;
}

Monomial::Monomial(const VariableId& v, unsigned exp) {
    if (exp > 0) factors_.emplace_back(v, exp);
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

unsigned Monomial::exponent(const VariableId& v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            r.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            r.factors_.push_back(*b++);
        } else {
            r.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
    Monomial r;
    auto a = factors_.begin();
    for (const auto& [v, e] : o.factors_) {
        while (a != factors_.end() && a->first < v) r.factors_.push_back(*a++);
        if (a == factors_.end() || !(a->first == v) || a->second < e) return std::nullopt;
        if (a->second > e) r.factors_.emplace_back(v, a->second - e);
        ++a;
    }
    r.factors_.insert(r.factors_.end(), a, factors_.end());
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a * b;
    for (auto& [v, e] : r.factors_) e = std::max(a.exponent(v), b.exponent(v));
    return r;
}

Monomial Monomial::without(const VariableId& v) const {
    Monomial r;
    for (const auto& f : factors_)
        if (!(f.first == v)) r.factors_.push_back(f);
    return r;
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : factors_) {
        if (!out.empty()) out += '*';
        out += v.to_string();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t k = 0;
    for (; k < fa.size() && k < fb.size(); ++k) {
        if (fa[k].first < fb[k].first) return true;  // b lacks this smaller variable
        if (fb[k].first < fa[k].first) return false;
        if (fa[k].second != fb[k].second) return fa[k].second > fb[k].second;
    }
    return k < fa.size() && k == fb.size();
}

PPoly reduce_modp(const QPoly& f, std::uint32_t p) {
    const PrimeField field{p};
    PPoly out(field);
    for (const auto& [m, c] : f.terms()) out.add_term(m, field.from(c));
    return out;
}

VariableId classify_identifier(std::string_view ident, const std::set<std::string>& aux_names) {
    if (aux_names.count(std::string(ident))) return VariableId::aux(std::string(ident));
    auto all_digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
    };
    if (ident.size() >= 3 && ident[0] == 'c') {
        const auto body = ident.substr(1);
        if (const auto us = body.find('_'); us != std::string_view::npos) {
            const auto a = body.substr(0, us), b = body.substr(us + 1);
            if (all_digits(a) && all_digits(b)) return VariableId::coeff(std::stoi(std::string(a)), std::stoi(std::string(b)));
        } else if (body.size() == 2 && all_digits(body) && body[0] != '0' && body[1] != '0') {
            return VariableId::coeff(body[0] - '0', body[1] - '0');
        }
    }
    return VariableId::param(std::string(ident));
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::set<std::string>& aux) : s_(text), aux_(aux) {}

    QRatFun parse() {
        QRatFun r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    QRatFun expr() {
        QRatFun acc = term();
        while (true) {
            const char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    QRatFun term() {
        QRatFun acc = unary();
        while (true) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * unary();
            } else if (c == '/') {
                ++pos_;
                QRatFun d = unary();
                if (d.numerator().is_zero())
                    throw DivisionByZero("division by zero at offset " + std::to_string(pos_) + " in '" +
                                         std::string(s_) + "'");
                acc = acc / d;
            } else if (c == '(' || ident_start(c) || std::isdigit(static_cast<unsigned char>(c))) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    QRatFun unary() {
        const char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    QRatFun power() {
        QRatFun base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
        }
        return base;
    }

    QRatFun atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            QRatFun r = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return QRatFun{QPoly::constant(Rational::parse(s_.substr(start, pos_ - start)))};
        }
        if (ident_start(c)) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
            return QRatFun{QPoly::variable(classify_identifier(s_.substr(start, pos_ - start), aux_))};
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    const std::set<std::string>& aux_;
    std::size_t pos_ = 0;
};

std::string kind_name(VariableId::Kind k) {
    switch (k) {
        case VariableId::Kind::Coeff:
            return "coeff";
        case VariableId::Kind::Param:
            return "param";
        case VariableId::Kind::Aux:
            return "aux";
    }
    return "param";
}

}  // namespace

QRatFun parse_rational_function(std::string_view text, const std::set<std::string>& aux_names) {
    return Parser(text, aux_names).parse();
}

QPoly parse_polynomial(std::string_view text, const std::set<std::string>& aux_names) {
    auto r = parse_rational_function(text, aux_names);
    auto p = r.as_polynomial();
    if (!p) throw ParseError("not a polynomial: '" + std::string(text) + "'");
    return *p;
}

nlohmann::json poly_to_json(const QPoly& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : f.terms()) {
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& [v, e] : m.factors()) {
            nlohmann::json jv = {{"kind", kind_name(v.kind)}, {"exp", e}};
            if (v.is_coeff()) {
                jv["i"] = v.i;
                jv["j"] = v.j;
            } else {
                jv["name"] = v.name;
            }
            factors.push_back(std::move(jv));
        }
        terms.push_back({{"coef", c.to_string()}, {"monomial", std::move(factors)}});
    }
    return terms;
}

QPoly poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("polynomial JSON must be a term array");
    QPoly f;
    try {
        for (const auto& t : j) {
            Monomial m;
            for (const auto& jv : t.at("monomial")) {
                const auto kind = jv.at("kind").get<std::string>();
                VariableId v;
                if (kind == "coeff")
                    v = VariableId::coeff(jv.at("i").get<int>(), jv.at("j").get<int>());
                else if (kind == "param")
                    v = VariableId::param(jv.at("name").get<std::string>());
                else if (kind == "aux")
                    v = VariableId::aux(jv.at("name").get<std::string>());
                else
                    throw ParseError("unknown variable kind '" + kind + "'");
                m = m * Monomial(v, jv.at("exp").get<unsigned>());
            }
            f.add_term(m, Rational::parse(t.at("coef").get<std::string>()));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
    }
    return f;
}

}  // namespace rbo
