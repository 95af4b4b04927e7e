// Command-line front end: catalog listing, system export, operator checks,
// family verification and the finite-field completeness oracle.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "rbo/families.hpp"
#include "rbo/oracle.hpp"
#include "rbo/rbsystem.hpp"
#include "rbo/semigroup.hpp"

namespace {

using namespace rbo;

enum Exit : int { kOk = 0, kFail = 1, kNotAssociative = 2, kBadInput = 3, kUnsupported = 4 };

struct RunConfig {
    std::string command;
    std::string selector;  // positional id / "all"
    std::string sg;
    std::string table_path;
    std::string matrix_path;
    std::string families_path;
    std::uint32_t prime = 7;
    std::string weight = "0";
    std::string format = "text";
    std::string out;
    unsigned jobs = 1;
    std::size_t order = 3;
};

struct Source {
    std::string label;  // catalog id or file path
    std::string id;     // catalog id, empty for user tables
    CayleyTable table;
};

nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

/// Exactly one of positional id, --sg, --table.
Source resolve_one(const RunConfig& cfg) {
    const int given = !cfg.selector.empty() + !cfg.sg.empty() + !cfg.table_path.empty();
    if (given != 1) throw ParseError("give exactly one semigroup: an id, --sg <id>, or --table <path>");
    if (!cfg.table_path.empty()) return {cfg.table_path, {}, table_from_json(read_json(cfg.table_path))};
    const auto& e = catalog_entry(cfg.selector.empty() ? cfg.sg : cfg.selector);
    return {e.id, e.id, e.table};
}

/// Catalog ids selected by positional id / --sg, or all of them.
std::vector<std::string> resolve_ids(const RunConfig& cfg) {
    if (!cfg.selector.empty() && !cfg.sg.empty()) throw ParseError("give the semigroup once");
    const std::string s = cfg.selector.empty() ? cfg.sg : cfg.selector;
    std::vector<std::string> ids;
    if (s.empty() || s == "all") {
        for (const auto& e : catalog()) ids.push_back(e.id);
    } else {
        ids.push_back(catalog_entry(s).id);
    }
    return ids;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ParseError("cannot write " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

const std::vector<ParametricFamily>& families_from(const RunConfig& cfg) {
    static std::optional<std::vector<ParametricFamily>> user;
    if (cfg.families_path.empty()) return family_catalog();
    if (!user) user = load_families_file(cfg.families_path);
    return *user;
}

int cmd_catalog(const RunConfig& cfg) {
    Output out(cfg.out);
    for (const auto& e : catalog())
        out.stream() << e.id << " order=" << e.table.order() << ' '
                     << (e.commutative ? "commutative" : "noncommutative")
                     << " families=" << families_for(e.id).size() << '\n';
    return kOk;
}

int cmd_equations(const RunConfig& cfg) {
    const auto src = resolve_one(cfg);
    const auto format = parse_export_format(cfg.format);
    const auto sys = generate_system(src.table, Rational::parse(cfg.weight), src.id);
    Output out(cfg.out);
    out.stream() << export_system(sys, format);
    return kOk;
}

int cmd_verify_matrix(const RunConfig& cfg) {
    const auto src = resolve_one(cfg);
    if (cfg.matrix_path.empty()) throw ParseError("verify-matrix needs --matrix <path>");
    const QMatrix c = matrix_from_json(read_json(cfg.matrix_path));
    const Rational weight = Rational::parse(cfg.weight);
    const auto defects = rb_defect(src.table, c, weight);
    const std::size_t n = src.table.order();
    Output out(cfg.out);
    bool ok = true;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            const auto& d = defects[(i - 1) * n + (j - 1)];
            bool zero = true;
            std::string coords;
            for (std::size_t k = 0; k < d.size(); ++k) {
                coords += (k ? ", " : "") + d[k].to_string();
                zero = zero && d[k].is_zero();
            }
            ok = ok && zero;
            out.stream() << "defect(" << i << ',' << j << ") = [" << coords << "] " << (zero ? "ok" : "NONZERO") << '\n';
        }
    }
    out.stream() << src.label << ": " << (ok ? "Rota-Baxter operator" : "not a Rota-Baxter operator") << '\n';
    return ok ? kOk : kFail;
}

int cmd_verify_families(const RunConfig& cfg) {
    const auto& families = families_from(cfg);
    std::optional<std::string> only;
    if (!cfg.sg.empty() || !cfg.selector.empty()) only = resolve_ids(cfg).front();
    Output out(cfg.out);
    std::size_t total = 0, passed = 0;
    for (const auto& f : families) {
        if (only && f.semigroup != *only) continue;
        const auto report = verify_family(f);
        ++total;
        passed += report.pass;
        out.stream() << f.id << ' ' << f.semigroup << ' ' << (report.pass ? "pass" : "FAIL") << '\n';
        for (const auto& r : report.failures())
            out.stream() << "  E[" << r.i << ',' << r.j << ',' << r.m << "] residual: " << r.residual.to_string()
                         << '\n';
    }
    out.stream() << passed << '/' << total << " pass\n";
    return passed == total ? kOk : kFail;
}

int cmd_solve_modp(const RunConfig& cfg) {
    require_oracle_prime(cfg.prime);
    const auto src = resolve_one(cfg);
    const auto sols = brute_force_modp(src.table, cfg.prime, {cfg.jobs, {}});
    Output out(cfg.out);
    if (cfg.format == "json") {
        nlohmann::json list = nlohmann::json::array();
        for (auto k : sols.keys()) list.push_back(pmatrix_to_json(sols.unpack(k)));
        out.stream() << nlohmann::json{{"semigroup", src.label}, {"p", cfg.prime}, {"count", sols.size()},
                                       {"solutions", std::move(list)}}
                            .dump(2)
                     << '\n';
    } else if (cfg.format == "text") {
        out.stream() << src.label << " p=" << cfg.prime << " solutions=" << sols.size() << '\n';
        for (auto k : sols.keys()) {
            const auto c = sols.unpack(k);
            std::string row;
            for (std::size_t i = 1; i <= c.order(); ++i) {
                row += i > 1 ? "; " : "";
                for (std::size_t j = 1; j <= c.order(); ++j) row += (j > 1 ? " " : "") + c.at(i, j).to_string();
            }
            out.stream() << '[' << row << "]\n";
        }
    } else {
        throw UnsupportedFormat("solve-modp supports text and json");
    }
    return kOk;
}

int cmd_check(const RunConfig& cfg) {
    require_oracle_prime(cfg.prime);
    const auto& families = families_from(cfg);
    const auto ids = resolve_ids(cfg);
    nlohmann::json reports = nlohmann::json::array();
    nlohmann::json meta = nlohmann::json::array();
    std::ostringstream table;
    table << std::left << std::setw(8) << "id" << std::right << std::setw(4) << "p" << std::setw(12) << "solutions"
          << std::setw(12) << "families" << std::setw(9) << "missing" << std::setw(10) << "spurious" << "  verdict\n";
    std::size_t passed = 0;
    for (const auto& id : ids) {
        const auto r = completeness_check(id, cfg.prime, families, cfg.jobs);
        passed += r.pass();
        reports.push_back(r.to_json());
        meta.push_back({{"semigroup", id}, {"seconds", r.seconds}});
        table << std::left << std::setw(8) << id << std::right << std::setw(4) << r.p << std::setw(12)
              << r.bruteforce_count << std::setw(12) << r.family_union_count << std::setw(9) << r.missing.size()
              << std::setw(10) << r.spurious.size() << "  " << (r.pass() ? "pass" : "FAIL") << '\n';
    }
    table << "summary: " << passed << '/' << ids.size() << " pass\n";

    if (cfg.format == "json" && cfg.out.empty()) {
        std::cout << reports.dump(2) << '\n';
        std::cerr << table.str();
    } else {
        std::cout << table.str();
        if (!cfg.out.empty()) {
            Output out(cfg.out);
            out.stream() << reports.dump(2) << '\n';
            Output side(cfg.out + ".meta.json");
            const auto now = std::chrono::system_clock::now().time_since_epoch();
            side.stream() << nlohmann::json{{"generated_unix", std::chrono::duration_cast<std::chrono::seconds>(now).count()},
                                            {"jobs", cfg.jobs},
                                            {"timings", meta}}
                                 .dump(2)
                          << '\n';
        }
    }
    return passed == ids.size() ? kOk : kFail;
}

int cmd_enumerate(const RunConfig& cfg) {
    const auto tables = enumerate_semigroups(cfg.order);
    const auto iso = classify(tables, Equivalence::Iso);
    const auto both = classify(tables, Equivalence::IsoAndAnti);
    Output out(cfg.out);
    out.stream() << "order " << cfg.order << '\n'
                 << "associative tables: " << tables.size() << '\n'
                 << "classes up to isomorphism: " << iso.size() << '\n'
                 << "classes up to isomorphism and anti-isomorphism: " << both.size() << '\n';
    for (const auto& rep : both) {
        std::string match = "-";
        for (const auto& e : catalog()) {
            if (e.table.order() != rep.order()) continue;
            if (find_isomorphism(rep, e.table) || find_anti_isomorphism(rep, e.table)) {
                match = e.id;
                break;
            }
        }
        out.stream() << rep.to_string() << " ~ " << match << '\n';
    }
    return kOk;
}

int dispatch(const RunConfig& cfg) {
    if (cfg.command == "catalog") return cmd_catalog(cfg);
    if (cfg.command == "equations") return cmd_equations(cfg);
    if (cfg.command == "verify-matrix") return cmd_verify_matrix(cfg);
    if (cfg.command == "verify-families") return cmd_verify_families(cfg);
    if (cfg.command == "solve-modp") return cmd_solve_modp(cfg);
    if (cfg.command == "check") return cmd_check(cfg);
    if (cfg.command == "enumerate") return cmd_enumerate(cfg);
    throw ParseError("unknown command " + cfg.command);
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Rota-Baxter operators on semigroup algebras"};
    app.require_subcommand(1);

    auto add_semigroup = [&](CLI::App* sub) {
        sub->add_option("semigroup", cfg.selector, "catalog id (or \"all\" where accepted)");
        sub->add_option("--sg", cfg.sg, "catalog id");
    };
    auto add_table = [&](CLI::App* sub) { sub->add_option("--table", cfg.table_path, "Cayley table JSON file"); };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out, "write primary output to a file"); };
    auto add_prime = [&](CLI::App* sub) { sub->add_option("--prime", cfg.prime, "7, 11 or 13"); };
    auto add_jobs = [&](CLI::App* sub) {
        sub->add_option("--jobs", cfg.jobs, "parallel oracle workers")->check(CLI::PositiveNumber);
    };

    auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in semigroups");
    add_out(catalog_cmd);

    auto* equations = app.add_subcommand("equations", "export the defining polynomial system");
    add_semigroup(equations);
    add_table(equations);
    equations->add_option("--weight", cfg.weight, "weight lambda (rational)");
    equations->add_option("--format", cfg.format, "text | json | latex | cas");
    add_out(equations);

    auto* verify_matrix = app.add_subcommand("verify-matrix", "check an operator matrix against the identity");
    add_semigroup(verify_matrix);
    add_table(verify_matrix);
    verify_matrix->add_option("--matrix", cfg.matrix_path, "operator matrix JSON file")->required();
    verify_matrix->add_option("--weight", cfg.weight, "weight lambda (rational)");
    add_out(verify_matrix);

    auto* verify_families = app.add_subcommand("verify-families", "symbolically verify solution families");
    add_semigroup(verify_families);
    verify_families->add_option("--families", cfg.families_path, "family JSON file instead of the catalog");
    add_out(verify_families);

    auto* solve = app.add_subcommand("solve-modp", "list all solutions over F_p by exhaustive search");
    add_semigroup(solve);
    add_table(solve);
    add_prime(solve);
    add_jobs(solve);
    solve->add_option("--format", cfg.format, "text | json");
    add_out(solve);

    auto* check = app.add_subcommand("check", "compare exhaustive solutions with the families");
    add_semigroup(check);
    add_prime(check);
    add_jobs(check);
    check->add_option("--families", cfg.families_path, "family JSON file instead of the catalog");
    check->add_option("--format", cfg.format, "text | json");
    add_out(check);

    auto* enumerate = app.add_subcommand("enumerate", "census of semigroups of small order");
    enumerate->add_option("--order,order", cfg.order, "order n <= 3");
    add_out(enumerate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        return dispatch(cfg);
    } catch (const NotAssociative& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNotAssociative;
    } catch (const UnsupportedPrime& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUnsupported;
    } catch (const UnsupportedFormat& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUnsupported;
    } catch (const Error& e) {
        // Bad tables, matrices, ids, family files, orders.
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
}
