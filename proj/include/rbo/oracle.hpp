#pragma once

// Exhaustive search over F_p for the weight-zero Rota-Baxter system, and the
// comparison of its solution set with the curated families.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rbo/families.hpp"
#include "rbo/matrix_set.hpp"
#include "rbo/semigroup.hpp"

namespace rbo {

struct BruteForceOptions {
    unsigned jobs = 1;
    /// Order in which equations are tested at each search depth; empty means
    /// system order. Must be a permutation of 0..n^3-1 when given.
    std::vector<std::size_t> equation_order;
};

/// All C in F_p^{n x n} at which every equation of the weight-zero system
/// vanishes. Candidates are visited in row-major lexicographic order; each
/// equation is tested as soon as its last variable is assigned and a branch is
/// abandoned at the first nonzero value. Throws UnsupportedPrime (p not in
/// {7, 11, 13}) and UnsupportedOrder (n > 3).
MatrixSet brute_force_modp(const CayleyTable& t, std::uint32_t p, const BruteForceOptions& options = {});

struct ClassificationReport {
    std::string semigroup;
    std::uint32_t p;
    std::size_t bruteforce_count = 0;
    std::size_t family_union_count = 0;
    MatrixSet missing;   // solutions in no family
    MatrixSet spurious;  // family instances that are not solutions
    double seconds = 0;  // wall time; reported only in metadata

    bool pass() const { return missing.empty() && spurious.empty(); }
    /// Counts, pass flag and witness lists; no timing.
    nlohmann::json to_json() const;
};

ClassificationReport completeness_check(std::string_view semigroup, std::uint32_t p,
                                        const std::vector<ParametricFamily>& families = family_catalog(),
                                        unsigned jobs = 1);

struct PropertyResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct PropertyReport {
    std::vector<PropertyResult> results;
    bool pass() const;
};

/// Draws `samples` solutions from the brute-force set and checks scaling
/// closure, opposite-semigroup invariance and transport along a random
/// basis permutation (membership and full solution-set equality).
PropertyReport property_suite(const CayleyTable& t, std::uint32_t p, std::size_t samples, std::uint64_t seed = 1,
                              unsigned jobs = 1);

/// Number of random matrices (half of them drawn from the solution set when
/// it is nontrivial) on which rb_defect and the generated system disagree.
std::size_t cross_check_disagreements(const CayleyTable& t, std::uint32_t p, std::size_t count, std::uint64_t seed,
                                      const MatrixSet* solutions = nullptr);

}  // namespace rbo
