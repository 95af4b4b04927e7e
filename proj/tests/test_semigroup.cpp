#include <algorithm>
#include <set>

#include "doctest.h"
#include "rbo/error.hpp"
#include "rbo/semigroup.hpp"

using namespace rbo;

namespace {

// Associativity straight from the definition, for cross-checking.
bool associative_by_definition(const CayleyTable& t) {
    const std::size_t n = t.order();
    for (std::size_t x = 1; x <= n; ++x)
        for (std::size_t y = 1; y <= n; ++y)
            for (std::size_t z = 1; z <= n; ++z)
                if (t.at(t.at(x, y), z) != t.at(x, t.at(y, z))) return false;
    return true;
}

const CayleyTable& table(const char* id) { return catalog_entry(id).table; }

}  // namespace

TEST_CASE("cayley table construction") {
    CayleyTable t{{1, 1}, {1, 2}};
    CHECK(t.order() == 2);
    CHECK(t.at(2, 2) == 2);
    CHECK(t.to_string() == "[[1,1],[1,2]]");
    CHECK_THROWS_AS((CayleyTable{{1, 3}, {1, 1}}), ClosureViolation);
    CHECK_THROWS_AS((CayleyTable{{1, 0}, {1, 1}}), ClosureViolation);
    CHECK_THROWS_AS(CayleyTable(2, {1, 1, 1}), ClosureViolation);
}

TEST_CASE("associativity") {
    CHECK_FALSE(check_associativity(CayleyTable{{2, 2}, {1, 1}}));
    CHECK(check_associativity(CayleyTable{{1, 1}, {1, 1}}));
    for (const auto& e : catalog()) {
        CHECK(check_associativity(e.table));
        CHECK(is_commutative(e.table) == e.commutative);
    }
}

TEST_CASE("structure constants are the table's indicators") {
    const auto& t = table("NCS(5)");
    const StructureConstants r(t);
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t l = 1; l <= 3; ++l)
            for (std::size_t m = 1; m <= 3; ++m) CHECK(r(k, l, m) == (t.at(k, l) == static_cast<int>(m) ? 1 : 0));
}

TEST_CASE("opposite and isomorphism") {
    const auto& l2 = table("L2");
    const CayleyTable r2 = opposite(l2);
    CHECK(opposite(r2) == l2);
    CHECK_FALSE(find_isomorphism(l2, r2).has_value());
    CHECK(find_anti_isomorphism(l2, r2).has_value());
    CHECK_FALSE(find_isomorphism(table("Y2"), table("Z2")).has_value());
    CHECK_FALSE(find_anti_isomorphism(table("Y2"), table("L2")).has_value());
    CHECK_THROWS_AS(find_isomorphism(l2, table("CS(1)")), OrderMismatch);

    // permute() yields a table isomorphic to the original via that permutation.
    const Permutation pi{2, 3, 1};
    const auto& t = table("NCS(4)");
    const CayleyTable moved = permute(t, pi);
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t l = 1; l <= 3; ++l) CHECK(moved.at(pi[k - 1], pi[l - 1]) == pi[t.at(k, l) - 1]);
    auto found = find_isomorphism(t, moved);
    REQUIRE(found.has_value());
    CHECK(permute(t, *found) == moved);
    CHECK(permute(t, identity_permutation(3)) == t);
}

TEST_CASE("enumeration matches a definitional filter") {
    for (std::size_t n : {1u, 2u, 3u}) {
        std::size_t cells = n * n, total = 1;
        for (std::size_t k = 0; k < cells; ++k) total *= n;
        std::size_t count = 0;
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<int> e(cells);
            std::size_t c = code;
            for (std::size_t k = cells; k-- > 0;) e[k] = static_cast<int>(c % n) + 1, c /= n;
            count += associative_by_definition(CayleyTable(n, e));
        }
        const auto all = enumerate_semigroups(n);
        CHECK(all.size() == count);
        CHECK(std::is_sorted(all.begin(), all.end()));
    }
    CHECK(enumerate_semigroups(2).size() == 8);
    CHECK(enumerate_semigroups(3).size() == 113);
    CHECK_THROWS_AS(enumerate_semigroups(4), UnsupportedOrder);
    CHECK_THROWS_AS(enumerate_semigroups(0), UnsupportedOrder);
}

TEST_CASE("census of small semigroups") {
    const auto two = enumerate_semigroups(2);
    CHECK(classify(two, Equivalence::Iso).size() == 5);
    CHECK(classify(two, Equivalence::IsoAndAnti).size() == 4);
    const auto three = enumerate_semigroups(3);
    CHECK(classify(three, Equivalence::Iso).size() == 24);
    const auto reps = classify(three, Equivalence::IsoAndAnti);
    REQUIRE(reps.size() == 18);

    // Each class contains exactly one catalog entry.
    for (const auto& rep : reps) {
        int hits = 0;
        for (const auto& e : catalog()) {
            if (e.table.order() != 3) continue;
            if (find_isomorphism(rep, e.table) || find_anti_isomorphism(rep, e.table)) ++hits;
        }
        CHECK(hits == 1);
    }
}

TEST_CASE("catalog") {
    CHECK(catalog().size() == 22);
    std::set<std::string> ids;
    for (const auto& e : catalog()) ids.insert(e.id);
    CHECK(ids.size() == 22);
    CHECK(table("N2") == CayleyTable{{1, 1}, {1, 1}});
    CHECK_THROWS_AS(catalog_entry("CS(13)"), UnknownSemigroup);
}

TEST_CASE("table json") {
    const auto& t = table("NCS(6)");
    CHECK(table_from_json(table_to_json(t)) == t);
    CHECK_THROWS_AS(table_from_json(nlohmann::json{{"n", 2}, {"table", {{1, 5}, {1, 1}}}}), ClosureViolation);
    CHECK_THROWS_AS(table_from_json(nlohmann::json{{"n", 2}}), ParseError);
}
