#pragma once

// Finite semigroups given by Cayley tables over 1-based basis indices.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace rbo {

/// n x n multiplication table: at(k, l) = m means e_k * e_l = e_m.
/// Indices are 1-based. Entries are validated to lie in 1..n on construction.
class CayleyTable {
public:
    CayleyTable() = default;
    CayleyTable(std::size_t n, std::vector<int> row_major);
    CayleyTable(std::initializer_list<std::initializer_list<int>> rows);
    static CayleyTable from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t order() const { return n_; }
    int at(std::size_t k, std::size_t l) const { return entries_[(k - 1) * n_ + (l - 1)]; }
    const std::vector<int>& entries() const { return entries_; }
    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const CayleyTable&, const CayleyTable&) = default;
    /// Order first, then lexicographic on the row-major entries.
    friend std::strong_ordering operator<=>(const CayleyTable& a, const CayleyTable& b);

    std::string to_string() const;

private:
    std::size_t n_ = 0;
    std::vector<int> entries_;
};

/// 0/1 indicators r(k, l, m) with e_k e_l = sum_m r(k, l, m) e_m.
class StructureConstants {
public:
    explicit StructureConstants(const CayleyTable& t);

    std::size_t order() const { return n_; }
    int operator()(std::size_t k, std::size_t l, std::size_t m) const {
        return r_[((k - 1) * n_ + (l - 1)) * n_ + (m - 1)];
    }

private:
    std::size_t n_;
    std::vector<int> r_;
};

bool check_associativity(const CayleyTable& t);
bool is_commutative(const CayleyTable& t);
StructureConstants structure_constants(const CayleyTable& t);

/// x o y = y * x.
CayleyTable opposite(const CayleyTable& t);

/// perm[k-1] is the image of e_k, 1-based.
using Permutation = std::vector<int>;

Permutation identity_permutation(std::size_t n);

/// The table transported along perm: result.at(perm(k), perm(l)) = perm(t.at(k, l)).
CayleyTable permute(const CayleyTable& t, const Permutation& perm);

/// Some pi with pi(x y) = pi(x) pi(y), searching all n! bijections in
/// lexicographic order. Throws OrderMismatch for different orders.
std::optional<Permutation> find_isomorphism(const CayleyTable& t1, const CayleyTable& t2);
std::optional<Permutation> find_anti_isomorphism(const CayleyTable& t1, const CayleyTable& t2);

/// All associative tables of order n (n <= 3), lexicographic order.
std::vector<CayleyTable> enumerate_semigroups(std::size_t n);

enum class Equivalence { Iso, IsoAndAnti };

/// One representative per equivalence class: the lexicographically smallest
/// member of the class present in `tables`. Output sorted.
std::vector<CayleyTable> classify(std::span<const CayleyTable> tables, Equivalence mode);

struct CatalogEntry {
    std::string id;
    CayleyTable table;
    bool commutative;
};

/// The 22 named semigroups: N2 Y2 Z2 L2, CS(1)..CS(12), NCS(1)..NCS(6).
const std::vector<CatalogEntry>& catalog();
/// Throws UnknownSemigroup.
const CatalogEntry& catalog_entry(std::string_view id);

nlohmann::json table_to_json(const CayleyTable& t);
/// Validates {"n": n, "table": [[...]]}; throws ParseError or ClosureViolation.
CayleyTable table_from_json(const nlohmann::json& j);

}  // namespace rbo
