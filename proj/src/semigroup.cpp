#include "rbo/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rbo/error.hpp"

namespace rbo {

CayleyTable::CayleyTable(std::size_t n, std::vector<int> row_major) : n_(n), entries_(std::move(row_major)) {
    if (n_ == 0) throw ClosureViolation("empty table");
    if (entries_.size() != n_ * n_)
        throw ClosureViolation("table of order " + std::to_string(n_) + " needs " + std::to_string(n_ * n_) +
                               " entries, got " + std::to_string(entries_.size()));
    for (int e : entries_)
        if (e < 1 || e > static_cast<int>(n_))
            throw ClosureViolation("entry " + std::to_string(e) + " outside 1.." + std::to_string(n_));
}

CayleyTable::CayleyTable(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<int>> r;
    for (const auto& row : rows) r.emplace_back(row);
    *this = from_rows(r);
}

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> flat;
    for (const auto& row : rows) {
        if (row.size() != rows.size()) throw ClosureViolation("table is not square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return CayleyTable(rows.size(), std::move(flat));
}

std::vector<std::vector<int>> CayleyTable::rows() const {
    std::vector<std::vector<int>> out(n_);
    for (std::size_t k = 0; k < n_; ++k) out[k].assign(entries_.begin() + k * n_, entries_.begin() + (k + 1) * n_);
    return out;
}

std::strong_ordering operator<=>(const CayleyTable& a, const CayleyTable& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.entries_ <=> b.entries_;
}

std::string CayleyTable::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 1; k <= n_; ++k) {
        os << (k > 1 ? ",[" : "[");
        for (std::size_t l = 1; l <= n_; ++l) os << (l > 1 ? "," : "") << at(k, l);
        os << ']';
    }
    os << ']';
    return os.str();
}

StructureConstants::StructureConstants(const CayleyTable& t) : n_(t.order()), r_(n_ * n_ * n_, 0) {
    for (std::size_t k = 1; k <= n_; ++k)
        for (std::size_t l = 1; l <= n_; ++l) r_[((k - 1) * n_ + (l - 1)) * n_ + (t.at(k, l) - 1)] = 1;
}

bool check_associativity(const CayleyTable& t) {
    const std::size_t n = t.order();
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = 1; b <= n; ++b)
            for (std::size_t c = 1; c <= n; ++c)
                if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c))) return false;
    return true;
}

bool is_commutative(const CayleyTable& t) {
    for (std::size_t k = 1; k <= t.order(); ++k)
        for (std::size_t l = k + 1; l <= t.order(); ++l)
            if (t.at(k, l) != t.at(l, k)) return false;
    return true;
}

StructureConstants structure_constants(const CayleyTable& t) { return StructureConstants(t); }

CayleyTable opposite(const CayleyTable& t) {
    const std::size_t n = t.order();
    std::vector<int> e(n * n);
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t l = 1; l <= n; ++l) e[(k - 1) * n + (l - 1)] = t.at(l, k);
    return CayleyTable(n, std::move(e));
}

Permutation identity_permutation(std::size_t n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

CayleyTable permute(const CayleyTable& t, const Permutation& perm) {
    const std::size_t n = t.order();
    if (perm.size() != n) throw OrderMismatch("permutation size differs from table order");
    std::vector<int> e(n * n);
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t l = 1; l <= n; ++l)
            e[(perm[k - 1] - 1) * n + (perm[l - 1] - 1)] = perm[t.at(k, l) - 1];
    return CayleyTable(n, std::move(e));
}

std::optional<Permutation> find_isomorphism(const CayleyTable& t1, const CayleyTable& t2) {
    const std::size_t n = t1.order();
    if (t2.order() != n)
        throw OrderMismatch("orders " + std::to_string(n) + " and " + std::to_string(t2.order()));
    Permutation pi = identity_permutation(n);
    do {
        bool ok = true;
        for (std::size_t x = 1; x <= n && ok; ++x)
            for (std::size_t y = 1; y <= n && ok; ++y)
                ok = pi[t1.at(x, y) - 1] == t2.at(pi[x - 1], pi[y - 1]);
        if (ok) return pi;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return std::nullopt;
}

std::optional<Permutation> find_anti_isomorphism(const CayleyTable& t1, const CayleyTable& t2) {
    if (t1.order() != t2.order())
        throw OrderMismatch("orders " + std::to_string(t1.order()) + " and " + std::to_string(t2.order()));
    return find_isomorphism(t1, opposite(t2));
}

std::vector<CayleyTable> enumerate_semigroups(std::size_t n) {
    if (n < 1 || n > 3) throw UnsupportedOrder("enumeration supports orders 1..3, got " + std::to_string(n));
    const std::size_t cells = n * n;
    std::vector<int> e(cells, 1);
    std::vector<CayleyTable> out;
    // Odometer over all n^(n*n) tables; last cell varies fastest, so the
    // output is already lexicographic.
    while (true) {
        CayleyTable t(n, e);
        if (check_associativity(t)) out.push_back(std::move(t));
        std::size_t i = cells;
        while (i > 0 && e[i - 1] == static_cast<int>(n)) e[--i] = 1;
        if (i == 0) break;
        ++e[i - 1];
    }
    return out;
}

std::vector<CayleyTable> classify(std::span<const CayleyTable> tables, Equivalence mode) {
    std::vector<CayleyTable> reps;
    for (const auto& t : tables) {
        bool placed = false;
        for (auto& r : reps) {
            if (r.order() != t.order()) continue;
            const bool same = find_isomorphism(t, r).has_value() ||
                              (mode == Equivalence::IsoAndAnti && find_anti_isomorphism(t, r).has_value());
            if (same) {
                if (t < r) r = t;
                placed = true;
                break;
            }
        }
        if (!placed) reps.push_back(t);
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

namespace {

std::vector<CatalogEntry> build_catalog() {
    struct Raw {
        const char* id;
        CayleyTable t;
    };
    const std::vector<Raw> raw = {
        {"N2", {{1, 1}, {1, 1}}},
        {"Y2", {{1, 1}, {1, 2}}},
        {"Z2", {{1, 2}, {2, 1}}},
        {"L2", {{1, 1}, {2, 2}}},
        {"CS(1)", {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}},
        {"CS(2)", {{1, 1, 1}, {1, 1, 1}, {1, 1, 2}}},
        {"CS(3)", {{1, 1, 1}, {1, 2, 1}, {1, 1, 1}}},
        {"CS(4)", {{1, 1, 1}, {1, 2, 1}, {1, 1, 3}}},
        {"CS(5)", {{1, 1, 1}, {1, 2, 2}, {1, 2, 2}}},
        {"CS(6)", {{1, 1, 1}, {1, 2, 2}, {1, 2, 3}}},
        {"CS(7)", {{1, 1, 1}, {1, 2, 3}, {1, 3, 1}}},
        {"CS(8)", {{1, 1, 1}, {1, 2, 3}, {1, 3, 2}}},
        {"CS(9)", {{1, 1, 3}, {1, 1, 3}, {3, 3, 1}}},
        {"CS(10)", {{1, 1, 3}, {1, 2, 3}, {3, 3, 1}}},
        {"CS(11)", {{1, 2, 2}, {2, 1, 1}, {2, 1, 1}}},
        {"CS(12)", {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}},
        {"NCS(1)", {{1, 1, 1}, {1, 2, 1}, {1, 3, 1}}},
        {"NCS(2)", {{1, 1, 1}, {1, 2, 1}, {3, 3, 3}}},
        {"NCS(3)", {{1, 1, 1}, {1, 2, 2}, {1, 3, 3}}},
        {"NCS(4)", {{1, 1, 1}, {2, 2, 2}, {1, 1, 1}}},
        {"NCS(5)", {{1, 1, 1}, {2, 2, 2}, {3, 3, 3}}},
        {"NCS(6)", {{1, 1, 1}, {1, 2, 3}, {3, 3, 3}}},
    };
    std::vector<CatalogEntry> out;
    out.reserve(raw.size());
    for (const auto& r : raw) out.push_back({r.id, r.t, is_commutative(r.t)});
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& catalog_entry(std::string_view id) {
    for (const auto& e : catalog())
        if (e.id == id) return e;
    throw UnknownSemigroup("unknown semigroup id '" + std::string(id) + "'");
}

nlohmann::json table_to_json(const CayleyTable& t) { return {{"n", t.order()}, {"table", t.rows()}}; }

CayleyTable table_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("table") || !j["table"].is_array())
        throw ParseError("table JSON must be an object with a \"table\" array");
    std::vector<std::vector<int>> rows;
    try {
        rows = j["table"].get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("table entries must be integers: ") + e.what());
    }
    if (j.contains("n")) {
        if (!j["n"].is_number_integer() || j["n"].get<long long>() != static_cast<long long>(rows.size()))
            throw ParseError("\"n\" does not match the number of table rows");
    }
    return CayleyTable::from_rows(rows);
}

}  // namespace rbo
