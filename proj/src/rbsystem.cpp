#include "rbo/rbsystem.hpp"

#include <sstream>

namespace rbo {

const QPoly& RboSystem::equation(int i, int j, int m) const {
    const int n = static_cast<int>(order());
    if (i < 1 || j < 1 || m < 1 || i > n || j > n || m > n)
        throw DimensionMismatch("equation index out of range");
    return equations[static_cast<std::size_t>(((i - 1) * n + (j - 1)) * n + (m - 1))].poly;
}

RboSystem generate_system(const CayleyTable& t, const Rational& weight, std::string semigroup_id) {
    if (!check_associativity(t)) throw NotAssociative("table " + t.to_string() + " is not associative");
    const int n = static_cast<int>(t.order());
    const StructureConstants r(t);
    auto c = [](int i, int j) { return QPoly::variable(VariableId::coeff(i, j)); };

    RboSystem sys{std::move(semigroup_id), t, weight, {}};
    sys.equations.reserve(static_cast<std::size_t>(n * n * n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            for (int m = 1; m <= n; ++m) {
                QPoly eq;
                for (int k = 1; k <= n; ++k)
                    for (int l = 1; l <= n; ++l)
                        if (r(k, l, m)) eq += c(i, k) * c(j, l);
                for (int l = 1; l <= n; ++l) {
                    for (int k = 1; k <= n; ++k) {
                        if (r(k, j, l)) eq -= c(i, k) * c(l, m);
                        if (r(i, k, l)) eq -= c(j, k) * c(l, m);
                    }
                    if (!weight.is_zero() && r(i, j, l)) eq -= c(l, m).scaled(weight);
                }
                sys.equations.push_back({i, j, m, std::move(eq)});
            }
        }
    }
    return sys;
}

ExportFormat parse_export_format(std::string_view name) {
    if (name == "text") return ExportFormat::Text;
    if (name == "json") return ExportFormat::Json;
    if (name == "latex") return ExportFormat::Latex;
    if (name == "cas") return ExportFormat::Cas;
    throw UnsupportedFormat("unsupported format '" + std::string(name) + "'");
}

std::string poly_to_latex(const QPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        first = false;
        std::string coef;
        if (mag.denominator() != 1)
            coef = "\\frac{" + mag.numerator().str() + "}{" + mag.denominator().str() + "}";
        else if (!mag.is_one() || m.is_one())
            coef = mag.to_string();
        out += coef;
        for (const auto& [v, e] : m.factors()) {
            if (v.is_coeff())
                out += "c_{" + std::to_string(v.i) + (v.i < 10 && v.j < 10 ? "" : ",") + std::to_string(v.j) + "}";
            else
                out += v.name;
            if (e > 1) out += "^{" + std::to_string(e) + "}";
        }
    }
    return out;
}

nlohmann::json system_to_json(const RboSystem& s) {
    nlohmann::json eqs = nlohmann::json::array();
    for (const auto& e : s.equations)
        eqs.push_back({{"index", {e.i, e.j, e.m}}, {"text", e.poly.to_string()}, {"terms", poly_to_json(e.poly)}});
    return {{"semigroup", s.semigroup},
            {"n", s.order()},
            {"table", s.table.rows()},
            {"weight", s.weight.to_string()},
            {"equations", std::move(eqs)}};
}

RboSystem system_from_json(const nlohmann::json& j) {
    try {
        RboSystem s;
        s.semigroup = j.at("semigroup").get<std::string>();
        s.table = table_from_json(j);
        s.weight = Rational::parse(j.at("weight").get<std::string>());
        for (const auto& e : j.at("equations")) {
            const auto idx = e.at("index").get<std::vector<int>>();
            if (idx.size() != 3) throw ParseError("equation index must have three entries");
            s.equations.push_back({idx[0], idx[1], idx[2], poly_from_json(e.at("terms"))});
        }
        const std::size_t n = s.order();
        if (s.equations.size() != n * n * n) throw ParseError("system must contain n^3 equations");
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed system JSON: ") + e.what());
    }
}

std::string export_system(const RboSystem& s, ExportFormat format) {
    std::ostringstream os;
    const std::string label = s.semigroup.empty() ? s.table.to_string() : s.semigroup;
    switch (format) {
        case ExportFormat::Text:
            for (const auto& e : s.equations)
                os << "E[" << e.i << ',' << e.j << ',' << e.m << "]: " << e.poly.to_string() << '\n';
            break;
        case ExportFormat::Json:
            os << system_to_json(s).dump(2) << '\n';
            break;
        case ExportFormat::Latex:
            os << "% Rota-Baxter system for " << label << ", weight " << s.weight.to_string() << '\n';
            for (const auto& e : s.equations)
                os << "\\begin{equation*}\n  " << poly_to_latex(e.poly) << " = 0 \\tag{$E_{" << e.i << ',' << e.j
                   << ',' << e.m << "}$}\n\\end{equation*}\n";
            break;
        case ExportFormat::Cas: {
            const std::size_t n = s.order();
            os << "vars := [";
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t jj = 1; jj <= n; ++jj)
                    os << ((i == 1 && jj == 1) ? "" : ", ")
                       << VariableId::coeff(static_cast<int>(i), static_cast<int>(jj)).to_string();
            os << "];\neqs := [\n";
            for (std::size_t k = 0; k < s.equations.size(); ++k)
                os << "  " << s.equations[k].poly.to_string() << (k + 1 < s.equations.size() ? ",\n" : "\n");
            os << "];\n";
            break;
        }
    }
    return os.str();
}

QMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("c") || !j["c"].is_array())
        throw ParseError("matrix JSON must be an object with a \"c\" array");
    const auto& rows = j["c"];
    const std::size_t n = rows.size();
    if (j.contains("n") && (!j["n"].is_number_integer() || j["n"].get<long long>() != static_cast<long long>(n)))
        throw DimensionMismatch("\"n\" does not match the number of rows");
    std::vector<Rational> entries;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n) throw DimensionMismatch("matrix is not square");
        for (const auto& x : row) {
            if (x.is_string())
                entries.push_back(Rational::parse(x.get<std::string>()));
            else if (x.is_number_integer())
                entries.emplace_back(x.get<long long>());
            else
                throw ParseError("matrix entries must be integers or rational strings");
        }
    }
    if (n == 0) throw DimensionMismatch("empty matrix");
    return QMatrix(n, std::move(entries));
}

nlohmann::json matrix_to_json(const QMatrix& c) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 1; i <= c.order(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 1; j <= c.order(); ++j) row.push_back(c.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return {{"n", c.order()}, {"c", std::move(rows)}};
}

}  // namespace rbo
