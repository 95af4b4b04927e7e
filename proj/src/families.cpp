#include "rbo/families.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "rbo/semigroup.hpp"

namespace rbo {

std::string_view embedded_families_json();  // generated at configure time

namespace {

std::string as_string(const nlohmann::json& j, const char* what) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw InvalidFamily(std::string(what) + " must be a string");
}

/// Strips the nonvanishing factors from d; true when only a constant remains.
bool covered_by(QPoly d, const std::vector<QPoly>& nonvanishing) {
    bool progress = true;
    while (!d.as_constant() && progress) {
        progress = false;
        for (const auto& g : nonvanishing) {
            if (g.as_constant()) continue;
            if (auto q = d.divide_exact(g)) {
                d = std::move(*q);
                progress = true;
            }
        }
    }
    return d.as_constant().has_value();
}

}  // namespace

std::vector<VariableId> ParametricFamily::parameters() const {
    std::set<VariableId> vs;
    auto collect = [&](const QPoly& p) {
        for (const auto& v : p.variables())
            if (v.is_param()) vs.insert(v);
    };
    for (const auto& e : entries) {
        collect(e.numerator());
        collect(e.denominator());
    }
    for (const auto& r : relations) collect(r.radicand);
    for (const auto& g : nonvanishing) collect(g);
    return {vs.begin(), vs.end()};
}

std::set<std::string> ParametricFamily::aux_names() const {
    std::set<std::string> names;
    for (const auto& r : relations) names.insert(r.aux.name);
    return names;
}

ParametricFamily family_from_json(const nlohmann::json& j) {
    ParametricFamily f;
    try {
        f.id = j.at("id").get<std::string>();
        f.semigroup = j.at("semigroup").get<std::string>();
        f.paper_row = j.value("paper_row", std::string{});
        f.notes = j.value("notes", std::string{});
    } catch (const nlohmann::json::exception& e) {
        throw InvalidFamily(std::string("family JSON: ") + e.what());
    }
    const std::string where = "family " + f.id + ": ";
    try {
        f.n = catalog_entry(f.semigroup).table.order();
    } catch (const UnknownSemigroup&) {
        throw InvalidFamily(where + "unknown semigroup '" + f.semigroup + "'");
    }

    std::set<std::string> aux;
    if (j.contains("relations")) {
        for (const auto& r : j.at("relations")) {
            const auto name = as_string(r.at("aux"), "aux");
            if (!aux.insert(name).second) throw InvalidFamily(where + "aux '" + name + "' has more than one relation");
        }
        for (const auto& r : j.at("relations")) {
            const auto name = as_string(r.at("aux"), "aux");
            const auto text = as_string(r.at("radicand"), "radicand");
            QPoly radicand;
            try {
                radicand = parse_polynomial(text, aux);
            } catch (const ParseError& e) {
                throw InvalidFamily(where + e.what());
            }
            for (const auto& v : radicand.variables())
                if (!v.is_param())
                    throw InvalidFamily(where + "radicand of " + name + " mentions " + v.to_string() +
                                        " (nested radicals and matrix coefficients are not allowed)");
            f.relations.push_back({VariableId::aux(name), std::move(radicand)});
            f.radicand_text.push_back(text);
        }
    }

    const auto& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != f.n) throw InvalidFamily(where + "entries must have one row per basis element");
    std::set<std::string> used_aux;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != f.n) throw InvalidFamily(where + "entries must be square");
        for (const auto& x : row) {
            const auto text = as_string(x, "entry");
            QRatFun r;
            try {
                r = parse_rational_function(text, aux);
            } catch (const Error& e) {
                throw InvalidFamily(where + e.what());
            }
            for (const auto* p : {&r.numerator(), &r.denominator()})
                for (const auto& v : p->variables()) {
                    if (v.is_coeff()) throw InvalidFamily(where + "entry '" + text + "' mentions " + v.to_string());
                    if (v.is_aux()) used_aux.insert(v.name);
                }
            f.entries.push_back(std::move(r));
            f.entry_text.push_back(text);
        }
    }

    if (j.contains("nonvanishing")) {
        for (const auto& g : j.at("nonvanishing")) {
            const auto text = as_string(g, "nonvanishing");
            try {
                f.nonvanishing.push_back(parse_polynomial(text, aux));
            } catch (const ParseError& e) {
                throw InvalidFamily(where + e.what());
            }
            f.nonvanishing_text.push_back(text);
        }
    }

    for (const auto& name : used_aux)
        if (!aux.count(name)) throw InvalidFamily(where + "aux '" + name + "' has no relation");
    for (std::size_t k = 0; k < f.entries.size(); ++k)
        if (!covered_by(f.entries[k].denominator(), f.nonvanishing))
            throw InvalidFamily(where + "denominator of '" + f.entry_text[k] +
                                "' is not a product of declared nonvanishing polynomials");
    return f;
}

nlohmann::json family_to_json(const ParametricFamily& f) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < f.n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < f.n; ++j) row.push_back(f.entry_text[i * f.n + j]);
        rows.push_back(std::move(row));
    }
    nlohmann::json rels = nlohmann::json::array();
    for (std::size_t k = 0; k < f.relations.size(); ++k)
        rels.push_back({{"aux", f.relations[k].aux.name}, {"radicand", f.radicand_text[k]}});
    nlohmann::json j = {{"id", f.id},
                        {"semigroup", f.semigroup},
                        {"entries", std::move(rows)},
                        {"relations", std::move(rels)},
                        {"nonvanishing", f.nonvanishing_text},
                        {"paper_row", f.paper_row}};
    if (!f.notes.empty()) j["notes"] = f.notes;
    return j;
}

std::vector<ParametricFamily> load_families(const nlohmann::json& j) {
    const nlohmann::json* list = &j;
    if (j.is_object()) {
        if (!j.contains("families")) throw InvalidFamily("family file needs a \"families\" array");
        list = &j.at("families");
    }
    if (!list->is_array()) throw InvalidFamily("families must be an array");
    std::vector<ParametricFamily> out;
    for (const auto& f : *list) out.push_back(family_from_json(f));
    return out;
}

std::vector<ParametricFamily> load_families_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return load_families(j);
}

const std::vector<ParametricFamily>& family_catalog() {
    static const std::vector<ParametricFamily> families =
        load_families(nlohmann::json::parse(embedded_families_json()));
    return families;
}

std::vector<ParametricFamily> families_for(std::string_view semigroup, const std::vector<ParametricFamily>& families) {
    std::vector<ParametricFamily> out;
    for (const auto& f : families)
        if (f.semigroup == semigroup) out.push_back(f);
    return out;
}

std::vector<EquationResidual> VerificationReport::failures() const {
    std::vector<EquationResidual> out;
    for (const auto& r : residuals)
        if (!r.residual.is_zero()) out.push_back(r);
    return out;
}

VerificationReport verify_family(const ParametricFamily& f) {
    const auto& entry = catalog_entry(f.semigroup);
    const RboSystem sys = generate_system(entry.table, Rational(0), entry.id);
    Bindings<Rational> bindings;
    for (std::size_t i = 1; i <= f.n; ++i)
        for (std::size_t j = 1; j <= f.n; ++j)
            bindings.emplace(VariableId::coeff(static_cast<int>(i), static_cast<int>(j)), f.entry(i, j));

    VerificationReport report{f.id, {}, true};
    for (const auto& eq : sys.equations) {
        const auto [num, den] = clear_denominators(substitute(eq.poly, bindings));
        QPoly residual = reduce_mod_relations(num, f.relations);
        if (!residual.is_zero()) report.pass = false;
        report.residuals.push_back({eq.i, eq.j, eq.m, std::move(residual)});
    }
    return report;
}

namespace {

/// A polynomial mod p over a dense slot array of variable values.
struct CompiledPoly {
    struct Term {
        std::uint32_t coef;
        std::vector<std::pair<std::size_t, unsigned>> powers;
    };
    std::vector<Term> terms;

    CompiledPoly(const QPoly& f, const std::map<VariableId, std::size_t>& slots, std::uint32_t p) {
        for (const auto& [m, c] : f.terms()) {
            Term t{PrimeField{p}.from(c).value(), {}};
            for (const auto& [v, e] : m.factors()) t.powers.emplace_back(slots.at(v), e);
            terms.push_back(std::move(t));
        }
    }

    std::uint32_t eval(const std::vector<std::uint32_t>& x, std::uint32_t p) const {
        std::uint64_t acc = 0;
        for (const auto& t : terms) {
            std::uint64_t v = t.coef;
            for (const auto& [slot, e] : t.powers)
                for (unsigned k = 0; k < e; ++k) v = v * x[slot] % p;
            acc = (acc + v) % p;
        }
        return static_cast<std::uint32_t>(acc);
    }
};

}  // namespace

MatrixSet instances_modp(const ParametricFamily& f, std::uint32_t p) {
    require_oracle_prime(p);
    const auto params = f.parameters();
    std::map<VariableId, std::size_t> slots;
    for (const auto& v : params) slots.emplace(v, slots.size());
    for (const auto& r : f.relations) slots.emplace(r.aux, slots.size());

    std::vector<CompiledPoly> radicands, guards, nums, dens;
    for (const auto& r : f.relations) radicands.emplace_back(r.radicand, slots, p);
    for (const auto& g : f.nonvanishing) guards.emplace_back(g, slots, p);
    for (const auto& e : f.entries) {
        nums.emplace_back(e.numerator(), slots, p);
        dens.emplace_back(e.denominator(), slots, p);
    }

    std::vector<std::vector<std::uint32_t>> roots_of(p);
    for (std::uint32_t s = 0; s < p; ++s) roots_of[s * s % p].push_back(s);

    const std::size_t np = params.size(), na = f.relations.size(), cells = f.n * f.n;
    std::vector<std::uint32_t> x(slots.size(), 0);
    std::vector<std::uint32_t> values(cells);
    std::vector<std::uint64_t> keys;

    // Odometer over parameter assignments, then over square-root choices.
    while (true) {
        std::vector<const std::vector<std::uint32_t>*> roots(na);
        bool solvable = true;
        for (std::size_t a = 0; a < na && solvable; ++a) {
            roots[a] = &roots_of[radicands[a].eval(x, p)];
            solvable = !roots[a]->empty();
        }
        if (solvable) {
            std::vector<std::size_t> pick(na, 0);
            while (true) {
                for (std::size_t a = 0; a < na; ++a) x[np + a] = (*roots[a])[pick[a]];
                bool admissible = true;
                for (const auto& g : guards)
                    if (g.eval(x, p) == 0) {
                        admissible = false;
                        break;
                    }
                if (admissible) {
                    for (std::size_t k = 0; k < cells; ++k) {
                        const std::uint32_t d = dens[k].eval(x, p);
                        if (d == 0)
                            throw InvalidFamily("family " + f.id + ": denominator of '" + f.entry_text[k] +
                                                "' vanishes on an admissible assignment");
                        values[k] = static_cast<std::uint32_t>(
                            std::uint64_t{nums[k].eval(x, p)} * ModP(d, p).inv().value() % p);
                    }
                    keys.push_back(MatrixSet::pack(values));
                }
                std::size_t a = 0;
                while (a < na && ++pick[a] == roots[a]->size()) pick[a++] = 0;
                if (a == na) break;
            }
        }
        std::size_t k = 0;
        while (k < np && ++x[k] == p) x[k++] = 0;
        if (k == np) break;
    }
    return MatrixSet(f.n, p, std::move(keys));
}

MatrixSet union_instances(std::string_view semigroup, std::uint32_t p, const std::vector<ParametricFamily>& families) {
    const auto& entry = catalog_entry(semigroup);
    MatrixSet out(entry.table.order(), p);
    for (const auto& f : families)
        if (f.semigroup == semigroup) out.insert_all(instances_modp(f, p));
    return out;
}

}  // namespace rbo
