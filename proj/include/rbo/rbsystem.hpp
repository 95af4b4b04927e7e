#pragma once

// The defining polynomial system of Rota-Baxter operators of weight lambda on
// a semigroup algebra k[S], and a direct check of the operator identity
// P(x)P(y) = P(x P(y)) + P(P(x) y) + lambda P(xy) that does not go through it.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rbo/error.hpp"
#include "rbo/field.hpp"
#include "rbo/poly.hpp"
#include "rbo/semigroup.hpp"

namespace rbo {

/// Matrix of a linear operator in the semigroup basis, row convention:
/// P(e_i) = sum_j at(i, j) e_j.
template <class K>
class OperatorMatrix {
public:
    OperatorMatrix(std::size_t n, std::vector<K> row_major) : n_(n), c_(std::move(row_major)) {
        if (c_.size() != n_ * n_) throw DimensionMismatch("operator matrix needs n*n entries");
    }
    static OperatorMatrix zero(std::size_t n, const FieldFor_t<K>& f = {}) {
        return OperatorMatrix(n, std::vector<K>(n * n, f.zero()));
    }

    std::size_t order() const { return n_; }
    const K& at(std::size_t i, std::size_t j) const { return c_[(i - 1) * n_ + (j - 1)]; }
    K& at(std::size_t i, std::size_t j) { return c_[(i - 1) * n_ + (j - 1)]; }
    const std::vector<K>& entries() const { return c_; }

    OperatorMatrix scaled(const K& s) const {
        auto c = c_;
        for (auto& x : c) x *= s;
        return OperatorMatrix(n_, std::move(c));
    }

    friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;

private:
    std::size_t n_;
    std::vector<K> c_;
};

using QMatrix = OperatorMatrix<Rational>;
using PMatrix = OperatorMatrix<ModP>;

/// Transport along a basis permutation: result.at(pi(i), pi(j)) = C.at(i, j),
/// i.e. Pi C Pi^-1 for the permutation matrix of pi.
template <class K>
OperatorMatrix<K> conjugate(const OperatorMatrix<K>& c, const Permutation& pi) {
    const std::size_t n = c.order();
    if (pi.size() != n) throw DimensionMismatch("permutation size differs from matrix order");
    std::vector<K> out(c.entries());
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) out[(pi[i - 1] - 1) * n + (pi[j - 1] - 1)] = c.at(i, j);
    return OperatorMatrix<K>(n, std::move(out));
}

struct RboEquation {
    int i, j, m;  // 1-based, printed E[i,j,m]
    QPoly poly;   // LHS - RHS

    friend bool operator==(const RboEquation&, const RboEquation&) = default;
};

struct RboSystem {
    std::string semigroup;  // catalog id, or empty for a user table
    CayleyTable table;
    Rational weight;
    std::vector<RboEquation> equations;  // (i, j, m) lexicographic

    std::size_t order() const { return table.order(); }
    const QPoly& equation(int i, int j, int m) const;

    friend bool operator==(const RboSystem&, const RboSystem&) = default;
};

/// Equation (i, j, m) is
///   sum_{k,l} r^m_{kl} c_ik c_jl
///     - sum_{k,l} (r^l_{kj} c_ik + r^l_{ik} c_jk) c_lm - weight * sum_l r^l_{ij} c_lm.
/// Throws NotAssociative.
RboSystem generate_system(const CayleyTable& t, const Rational& weight = Rational(0), std::string semigroup_id = {});

namespace detail {

template <class K>
std::vector<K> apply(const OperatorMatrix<K>& c, const std::vector<K>& v) {
    const std::size_t n = c.order();
    std::vector<K> out(n, v[0] - v[0]);
    for (std::size_t i = 1; i <= n; ++i) {
        if (v[i - 1].is_zero()) continue;
        for (std::size_t j = 1; j <= n; ++j) out[j - 1] += v[i - 1] * c.at(i, j);
    }
    return out;
}

template <class K>
std::vector<K> multiply(const CayleyTable& t, const std::vector<K>& u, const std::vector<K>& v) {
    const std::size_t n = t.order();
    std::vector<K> out(n, u[0] - u[0]);
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t l = 1; l <= n; ++l) out[t.at(k, l) - 1] += u[k - 1] * v[l - 1];
    return out;
}

}  // namespace detail

/// defect[(i-1)*n + (j-1)] holds the coordinates of
///   P(e_i)P(e_j) - P(P(e_i) e_j + e_i P(e_j) + weight e_i e_j),
/// computed by multiplying in k[S] directly.
template <class K>
std::vector<std::vector<K>> rb_defect(const CayleyTable& t, const OperatorMatrix<K>& c, const K& weight) {
    const std::size_t n = t.order();
    if (c.order() != n)
        throw DimensionMismatch("matrix order " + std::to_string(c.order()) + " vs semigroup order " + std::to_string(n));
    const K zero = weight - weight;
    const K one = field_of(weight).one();
    std::vector<std::vector<K>> out;
    out.reserve(n * n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            std::vector<K> ei(n, zero), ej(n, zero);
            ei[i - 1] = one;
            ej[j - 1] = one;
            const auto pi = detail::apply(c, ei);
            const auto pj = detail::apply(c, ej);
            auto lhs = detail::multiply(t, pi, pj);
            auto inner = detail::multiply(t, pi, ej);
            const auto right = detail::multiply(t, ei, pj);
            const auto prod = detail::multiply(t, ei, ej);
            for (std::size_t k = 0; k < n; ++k) inner[k] += right[k] + weight * prod[k];
            const auto rhs = detail::apply(c, inner);
            for (std::size_t k = 0; k < n; ++k) lhs[k] -= rhs[k];
            out.push_back(std::move(lhs));
        }
    }
    return out;
}

template <class K>
bool is_rbo(const CayleyTable& t, const OperatorMatrix<K>& c, const K& weight) {
    for (const auto& d : rb_defect(t, c, weight))
        for (const auto& x : d)
            if (!x.is_zero()) return false;
    return true;
}

/// True when every equation of `s` vanishes at `c` (coefficients mapped into K).
template <class K>
bool system_vanishes(const RboSystem& s, const OperatorMatrix<K>& c) {
    const std::size_t n = s.order();
    if (c.order() != n) throw DimensionMismatch("matrix order differs from system order");
    const auto field = field_of(c.at(1, 1));
    std::map<VariableId, K> point;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            point.emplace(VariableId::coeff(static_cast<int>(i), static_cast<int>(j)), c.at(i, j));
    for (const auto& eq : s.equations) {
        K acc = field.zero();
        for (const auto& [m, coef] : eq.poly.terms()) {
            K term = field.from(coef);
            for (const auto& [v, e] : m.factors())
                for (unsigned k = 0; k < e; ++k) term *= point.at(v);
            acc += term;
        }
        if (!acc.is_zero()) return false;
    }
    return true;
}

enum class ExportFormat { Text, Json, Latex, Cas };

/// "text" | "json" | "latex" | "cas"; throws UnsupportedFormat.
ExportFormat parse_export_format(std::string_view name);

std::string export_system(const RboSystem& s, ExportFormat format);
nlohmann::json system_to_json(const RboSystem& s);
RboSystem system_from_json(const nlohmann::json& j);

/// LaTeX rendering in c_{ij} notation.
std::string poly_to_latex(const QPoly& f);

/// {"n": 2, "c": [["1","-1"],["2","-2"]]}; entries may be rational strings or
/// integers. Throws ParseError / DimensionMismatch.
QMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const QMatrix& c);

}  // namespace rbo
