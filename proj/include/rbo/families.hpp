#pragma once

// Curated parametric solution families and their verification, both
// symbolic (zero residuals) and by instantiation over F_p.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rbo/matrix_set.hpp"
#include "rbo/poly.hpp"
#include "rbo/rbsystem.hpp"

namespace rbo {

struct ParametricFamily {
    std::string id;         // e.g. "N_{5,1}"
    std::string semigroup;  // catalog id
    std::size_t n = 0;
    std::vector<QRatFun> entries;  // row-major, in Params and Aux only
    std::vector<AlgebraicRelation<Rational>> relations;
    std::vector<QPoly> nonvanishing;
    std::string paper_row;
    std::string notes;

    // Source strings, kept so the JSON form round-trips verbatim.
    std::vector<std::string> entry_text;
    std::vector<std::string> nonvanishing_text;
    std::vector<std::string> radicand_text;

    const QRatFun& entry(std::size_t i, std::size_t j) const { return entries[(i - 1) * n + (j - 1)]; }
    /// Free parameters, sorted.
    std::vector<VariableId> parameters() const;
    std::set<std::string> aux_names() const;
};

/// Parses and validates one family object. Rejects (InvalidFamily) unknown
/// semigroups, aux symbols without exactly one relation, radicands that
/// mention Coeff or Aux variables, and denominators that are not products of
/// declared nonvanishing polynomials.
ParametricFamily family_from_json(const nlohmann::json& j);
nlohmann::json family_to_json(const ParametricFamily& f);

/// {"families": [...]} or a bare array.
std::vector<ParametricFamily> load_families(const nlohmann::json& j);
std::vector<ParametricFamily> load_families_file(const std::string& path);

/// The shipped catalog (79 families).
const std::vector<ParametricFamily>& family_catalog();
std::vector<ParametricFamily> families_for(std::string_view semigroup,
                                           const std::vector<ParametricFamily>& families = family_catalog());

struct EquationResidual {
    int i, j, m;
    QPoly residual;
};

struct VerificationReport {
    std::string family;
    std::vector<EquationResidual> residuals;  // one per equation, in system order
    bool pass = false;

    std::vector<EquationResidual> failures() const;
};

/// Substitutes the family into the weight-zero system of its semigroup,
/// clears denominators and reduces modulo the aux relations.
VerificationReport verify_family(const ParametricFamily& f);

/// Every matrix over F_p obtained from a parameter assignment satisfying all
/// nonvanishing constraints, with every square-root choice for each aux.
MatrixSet instances_modp(const ParametricFamily& f, std::uint32_t p);

/// Union of instances_modp over the families of one semigroup. Throws
/// UnknownSemigroup for ids outside the catalog.
MatrixSet union_instances(std::string_view semigroup, std::uint32_t p,
                          const std::vector<ParametricFamily>& families = family_catalog());

}  // namespace rbo
